# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import pi

import numpy as np
from numpy.typing import NDArray

from .constants import MIN_PERIODOGRAM_LENGTH
from .exceptions import DomainError, SeriesTooShortError
from .utils import ArrayLike


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Periodogram:
    n: int
    frequencies: NDArray[np.float64] = field(repr=False)
    ordinates: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        size = self.n // 2
        if len(self.frequencies) != size or len(self.ordinates) != size:
            raise DomainError(
                f"Periodogram of a length-{self.n} series must hold {size} frequencies and ordinates, "
                f"got {len(self.frequencies)} and {len(self.ordinates)}"
            )
        if np.any(self.ordinates < 0):
            raise DomainError("Periodogram ordinates must be nonnegative")
        if size and (self.frequencies[0] <= 0 or self.frequencies[-1] > pi or np.any(np.diff(self.frequencies) <= 0)):
            raise DomainError("Periodogram frequencies must be strictly increasing in (0, pi]")

    def __len__(self) -> int:
        return len(self.ordinates)

    @classmethod
    def fourier_frequencies(cls, n: int) -> NDArray[np.float64]:
        """lambda_j = 2 pi j / n for j = 1..floor(n/2)"""
        return 2 * pi * np.arange(1, n // 2 + 1) / n


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


@lru_cache()
def _bit_reversal_permutation(n: int) -> NDArray[np.int64]:
    levels = n.bit_length() - 1
    indices = np.arange(n)
    reversed_indices = np.zeros(n, dtype=np.int64)
    for bit in range(levels):
        reversed_indices |= ((indices >> bit) & 1) << (levels - 1 - bit)
    reversed_indices.flags.writeable = False
    return reversed_indices


@lru_cache()
def _twiddles(n: int) -> NDArray[np.complex128]:
    twiddles = np.exp(-2j * pi * np.arange(n // 2) / n)
    twiddles.flags.writeable = False
    return twiddles


@lru_cache()
def _chirp(n: int) -> NDArray[np.complex128]:
    # k^2 mod 2n keeps the phase argument small for long inputs
    k = np.arange(n, dtype=np.int64)
    chirp = np.exp(-1j * pi * ((k * k) % (2 * n)) / n)
    chirp.flags.writeable = False
    return chirp


def _fft_radix2(values: NDArray[np.complex128]) -> NDArray[np.complex128]:
    n = values.size
    result = values[_bit_reversal_permutation(n)]
    twiddles = _twiddles(n)
    size = 2
    while size <= n:
        half = size // 2
        factors = twiddles[:: n // size]
        blocks = result.reshape(-1, size)
        even = blocks[:, :half]
        odd = blocks[:, half:] * factors
        result = np.concatenate((even + odd, even - odd), axis=1).reshape(n)
        size *= 2
    return result


def _fft_bluestein(values: NDArray[np.complex128]) -> NDArray[np.complex128]:
    n = values.size
    m = 1 << (2 * n - 1).bit_length()
    chirp = _chirp(n)

    a = np.zeros(m, dtype=np.complex128)
    a[:n] = values * chirp

    b = np.zeros(m, dtype=np.complex128)
    b[:n] = np.conj(chirp)
    b[m - n + 1 :] = np.conj(chirp[1:])[::-1]

    convolution = _ifft_radix2(_fft_radix2(a) * _fft_radix2(b))
    return chirp * convolution[:n]


def _ifft_radix2(values: NDArray[np.complex128]) -> NDArray[np.complex128]:
    return np.conj(_fft_radix2(np.conj(values))) / values.size


def _transform(values: NDArray[np.complex128]) -> NDArray[np.complex128]:
    if _is_power_of_two(values.size):
        return _fft_radix2(values)
    return _fft_bluestein(values)


def _as_complex_signal(signal: ArrayLike) -> NDArray[np.complex128]:
    values = np.asarray(signal)
    if values.ndim != 1:
        raise DomainError(f"DFT input must be one-dimensional, got shape {values.shape}")
    if values.size < 2:
        raise SeriesTooShortError(f"DFT needs at least 2 samples, got {values.size}")
    values = values.astype(np.complex128)
    if not np.all(np.isfinite(values)):
        raise DomainError("DFT input contains non-finite values")
    return values


def dft(signal: ArrayLike) -> NDArray[np.complex128]:
    """
    X[j] = sum_t y_t exp(-2 pi i j t / n), j = 0..n-1.

    Radix-2 Cooley-Tukey for power-of-two lengths, Bluestein's chirp-z algorithm otherwise.
    """
    return _transform(_as_complex_signal(signal))


def idft(spectrum: ArrayLike) -> NDArray[np.complex128]:
    values = _as_complex_signal(spectrum)
    return np.conj(_transform(np.conj(values))) / values.size


def periodogram(signal: ArrayLike) -> Periodogram:
    """
    Unnormalized periodogram I(lambda_j) = |X[j]|^2 for j = 1..floor(n/2).

    The sample mean is not removed here.
    """
    values = np.asarray(signal, dtype=np.float64)
    if values.ndim == 1 and values.size < MIN_PERIODOGRAM_LENGTH:
        raise SeriesTooShortError(f"Periodogram needs at least {MIN_PERIODOGRAM_LENGTH} samples, got {values.size}")

    spectrum = dft(values)
    n = values.size
    ordinates = np.abs(spectrum[1 : n // 2 + 1]) ** 2
    return Periodogram(n=n, frequencies=Periodogram.fourier_frequencies(n), ordinates=ordinates)

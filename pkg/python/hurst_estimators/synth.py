# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

import logging
from dataclasses import dataclass
from enum import Enum
from math import isfinite
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from numpy.typing import NDArray

from .constants import EMBEDDING_EIGENVALUE_TOLERANCE
from .exceptions import ConfigurationError, DomainError, EmbeddingError
from .series import Series, SeriesKind, path_from_increments
from .spectral import HurstParam, fgn_autocovariance
from .transform import dft, idft


logger = logging.getLogger(__name__)

StreamIndex = Union[int, Sequence[int]]

_MAX_SEED = 2**64


class DataModel(str, Enum):
    FGN = "fgn"
    FBM = "fbm"
    ARFIMA = "arfima"


@dataclass(frozen=True)
class GenSpec:
    model: DataModel = DataModel.FGN
    H: float = 0.5
    n: int = 1024
    seed: int = 0
    sigma: float = 1.0

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "model", DataModel(self.model))
        except ValueError:
            raise ConfigurationError(
                f"Unknown data model {self.model!r}, expected one of {[model.value for model in DataModel]}"
            )
        HurstParam(self.H)
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)) or self.n < 2:
            raise ConfigurationError(f"Series length must be an integer >= 2, got {self.n!r}")
        valid_seed = isinstance(self.seed, (int, np.integer)) and not isinstance(self.seed, bool)
        if not valid_seed or not 0 <= self.seed < _MAX_SEED:
            raise ConfigurationError(f"Seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if not isfinite(self.sigma) or self.sigma <= 0:
            raise ConfigurationError(f"sigma must be positive, got {self.sigma!r}")

    @property
    def d(self) -> float:
        return self.H - 0.5

    def meta(self) -> dict:
        return {"H": self.H, "model": self.model.value, "seed": self.seed}


def gaussian_rng(seed: int, stream_index: StreamIndex = ()) -> np.random.Generator:
    """
    Independent reproducible generator for a (seed, stream index) pair.

    PCG64 seeded through SeedSequence with the stream index as spawn key; `standard_normal` uses the ziggurat method.
    """
    if isinstance(stream_index, (int, np.integer)):
        stream_index = (stream_index,)
    spawn_key: Tuple[int, ...] = tuple(int(index) for index in stream_index)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=spawn_key)))


def _circulant_eigenvalues(hurst: HurstParam, n: int) -> NDArray[np.float64]:
    gamma = fgn_autocovariance(hurst, n)
    # [g(0), g(1), ..., g(n-1), g(n), g(n-1), ..., g(1)]
    row = np.concatenate((gamma, gamma[-2:0:-1]))
    eigenvalues = dft(row).real

    largest = eigenvalues.max()
    smallest = eigenvalues.min()
    logger.debug(f"Circulant embedding H={hurst.H}, n={n}: eigenvalues in [{smallest:.3e}, {largest:.3e}]")
    if smallest < -EMBEDDING_EIGENVALUE_TOLERANCE * largest:
        raise EmbeddingError(float(smallest), float(largest))
    if smallest < 0:
        logger.warning(f"Clipping negative circulant eigenvalue {smallest:.3e} to zero (H={hurst.H}, n={n})")
        eigenvalues = np.maximum(eigenvalues, 0.0)
    return eigenvalues


def generate_fgn_davies_harte(spec: GenSpec, stream_index: StreamIndex = ()) -> Series:
    """
    Exact fractional Gaussian noise by circulant embedding of the autocovariance in dimension 2n.
    """
    n = spec.n
    eigenvalues = _circulant_eigenvalues(HurstParam(spec.H), n)
    normals = gaussian_rng(spec.seed, stream_index).standard_normal(2 * n)

    amplitudes = np.empty(2 * n, dtype=np.complex128)
    # real Gaussians at frequencies 0 and n, complex pairs with Hermitian symmetry elsewhere
    amplitudes[0] = np.sqrt(eigenvalues[0] / (2 * n)) * normals[0]
    amplitudes[n] = np.sqrt(eigenvalues[n] / (2 * n)) * normals[n]
    scale = np.sqrt(eigenvalues[1:n] / (4 * n))
    amplitudes[1:n] = scale * (normals[1:n] + 1j * normals[n + 1 :])
    amplitudes[n + 1 :] = np.conj(amplitudes[1:n])[::-1]

    values = dft(amplitudes)[:n].real
    return Series(values, SeriesKind.INCREMENTS, spec.meta()).scaled(spec.sigma)


def arfima_ma_coefficients(d: float, count: int) -> NDArray[np.float64]:
    """psi_0..psi_count of (1 - B)^(-d): psi_0 = 1, psi_j = psi_(j-1) (j - 1 + d) / j."""
    j = np.arange(1, count + 1, dtype=np.float64)
    return np.concatenate(([1.0], np.cumprod((j - 1 + d) / j)))


def _convolve(signal: NDArray[np.float64], kernel: NDArray[np.float64]) -> NDArray[np.float64]:
    size = signal.size + kernel.size - 1
    padded = 1 << (size - 1).bit_length()
    a = np.zeros(padded)
    a[: signal.size] = signal
    b = np.zeros(padded)
    b[: kernel.size] = kernel
    return idft(dft(a) * dft(b)).real[: signal.size]


def generate_arfima(spec: GenSpec, trunc: Optional[int] = None, stream_index: StreamIndex = ()) -> Series:
    """
    ARFIMA(0, d, 0) with d = H - 1/2 through its truncated MA representation.

    `trunc` coefficients are kept (default n) and as many leading samples are discarded as burn-in.
    """
    d = spec.d
    if not abs(d) < 0.5:
        raise DomainError(f"fractional order d = H - 0.5 must satisfy |d| < 0.5, got {d!r}")
    trunc = spec.n if trunc is None else trunc
    if isinstance(trunc, bool) or not isinstance(trunc, (int, np.integer)) or trunc < 0:
        raise ConfigurationError(f"trunc must be a nonnegative integer, got {trunc!r}")

    noise = gaussian_rng(spec.seed, stream_index).standard_normal(spec.n + trunc)
    if d == 0:
        values = noise[trunc:]
    else:
        values = _convolve(noise, arfima_ma_coefficients(d, trunc))[trunc:]

    return Series(values, SeriesKind.INCREMENTS, spec.meta()).scaled(spec.sigma)


def generate(spec: GenSpec, stream_index: StreamIndex = (), prepend_zero: bool = False) -> Series:
    """A series of the requested model: fgn and arfima give increments, fbm a path of n levels."""
    if spec.model is DataModel.ARFIMA:
        return generate_arfima(spec, stream_index=stream_index)
    increments = generate_fgn_davies_harte(spec, stream_index)
    if spec.model is DataModel.FBM:
        return path_from_increments(increments, prepend_zero)
    return increments

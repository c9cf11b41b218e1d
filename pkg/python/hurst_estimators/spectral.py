# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

"""
Special functions and theoretical spectral densities of fractional Gaussian noise (fGn) and ARFIMA(0, d, 0).

The fGn density is an infinite sum over aliased frequencies,

    f_H(lambda) = sigma2 / pi * Gamma(s) * sin(pi * H) * (1 - cos(lambda)) * sum_k |2 pi k + lambda|^(-s),  s = 2H + 1,

and the sum is evaluated by one of four strategies selected with `SpectrumModel`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import factorial, isfinite, pi, sin
from typing import Optional, Union

import numpy as np
from numpy.typing import NDArray

from .constants import (
    DEFAULT_PAXSON_K,
    DEFAULT_SIGMA2,
    DEFAULT_TRUNCATION_K,
    HURWITZ_DIRECT_TERMS,
    LOG_GAMMA_ROOT_RADIUS,
    LOG_GAMMA_ROOT_TERMS,
)
from .exceptions import ConfigurationError, DomainError
from .utils import ArrayLike


logger = logging.getLogger(__name__)

_TWO_PI = 2 * pi
_HALF_LOG_TWO_PI = 0.5 * np.log(2 * pi)

# Lanczos approximation, g = 7, n = 9
_LANCZOS_G = 7.0
_LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# B_2, B_4, ..., B_12 divided by (2k)!
_BERNOULLI_OVER_FACTORIAL = tuple(
    b / factorial(2 * k)
    for k, b in enumerate((1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730), start=1)
)


class SpectrumKind(str, Enum):
    TRUNCATION = "truncation"
    PAXSON = "paxson"
    HURWITZ = "hurwitz"
    TAYLOR = "taylor"
    ARFIMA = "arfima"


_KINDS_WITH_K = (SpectrumKind.TRUNCATION, SpectrumKind.PAXSON)
_DEFAULT_K = {SpectrumKind.TRUNCATION: DEFAULT_TRUNCATION_K, SpectrumKind.PAXSON: DEFAULT_PAXSON_K}


@dataclass(frozen=True)
class HurstParam:
    H: float

    def __post_init__(self) -> None:
        if not isinstance(self.H, (int, float, np.floating)) or not isfinite(self.H) or not 0 < self.H < 1:
            raise DomainError(f"Hurst exponent must lie in the open interval (0, 1), got {self.H!r}")
        object.__setattr__(self, "H", float(self.H))

    @property
    def s(self) -> float:
        return 2 * self.H + 1

    @classmethod
    def coerce(cls, value: Union[float, "HurstParam"]) -> "HurstParam":
        return value if isinstance(value, HurstParam) else cls(value)


@dataclass(frozen=True)
class SpectrumModel:
    kind: SpectrumKind = SpectrumKind.PAXSON
    K: Optional[int] = None

    def __post_init__(self) -> None:
        try:
            kind = SpectrumKind(self.kind)
        except ValueError:
            raise ConfigurationError(
                f"Unknown spectrum {self.kind!r}, expected one of {[kind.value for kind in SpectrumKind]}"
            )
        object.__setattr__(self, "kind", kind)

        if kind not in _KINDS_WITH_K:
            if self.K is not None:
                raise ConfigurationError(f"[ SpectrumModel ] `K` is not used by the {kind.value} spectrum")
            return

        K = _DEFAULT_K[kind] if self.K is None else self.K
        if isinstance(K, bool) or not isinstance(K, (int, np.integer)) or K < 1:
            raise ConfigurationError(f"[ SpectrumModel ] `K` must be a positive integer, got {K!r}")
        object.__setattr__(self, "K", int(K))

    def __str__(self) -> str:
        return self.kind.value if self.K is None else f"{self.kind.value},K={self.K}"

    @classmethod
    def truncation(cls, K: int = DEFAULT_TRUNCATION_K) -> "SpectrumModel":
        return cls(SpectrumKind.TRUNCATION, K)

    @classmethod
    def paxson(cls, K: int = DEFAULT_PAXSON_K) -> "SpectrumModel":
        return cls(SpectrumKind.PAXSON, K)

    @classmethod
    def hurwitz(cls) -> "SpectrumModel":
        return cls(SpectrumKind.HURWITZ)

    @classmethod
    def taylor(cls) -> "SpectrumModel":
        return cls(SpectrumKind.TAYLOR)

    @classmethod
    def arfima(cls) -> "SpectrumModel":
        return cls(SpectrumKind.ARFIMA)

    @classmethod
    def from_name(cls, name: str, K: Optional[int] = None) -> "SpectrumModel":
        try:
            kind = SpectrumKind(name.strip().lower())
        except ValueError:
            raise ConfigurationError(
                f"Unknown spectrum {name!r}, expected one of {[kind.value for kind in SpectrumKind]}"
            )
        if kind not in _KINDS_WITH_K:
            K = None
        return cls(kind, K)

    @property
    def is_fgn(self) -> bool:
        return self.kind is not SpectrumKind.ARFIMA

    def density(
        self, hurst: Union[float, HurstParam], lambdas: ArrayLike, sigma2: float = DEFAULT_SIGMA2
    ) -> NDArray[np.float64]:
        if self.is_fgn:
            return fgn_spectral_density(hurst, lambdas, sigma2, self)
        return arfima_spectral_density(hurst, lambdas, sigma2)


def log_gamma(x: ArrayLike) -> Union[float, NDArray[np.float64]]:
    """
    Natural logarithm of the Gamma function for x > 0.

    Uses the Lanczos approximation for x >= 1/2 and the reflection formula below it. Around the roots x = 1 and
    x = 2 the Taylor series of log Gamma(1 + z) keeps the relative accuracy that Lanczos loses there.
    """
    values = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(values)) or np.any(values <= 0):
        raise DomainError(f"log_gamma is defined here for finite x > 0, got {x!r}")

    flat = np.atleast_1d(values)
    result = np.empty_like(flat)
    upper = flat >= 0.5
    result[upper] = _log_gamma_upper(flat[upper])
    lower = flat[~upper]
    # Gamma(x) Gamma(1 - x) = pi / sin(pi x)
    result[~upper] = np.log(pi / np.sin(pi * lower)) - _log_gamma_upper(1 - lower)

    return float(result[0]) if values.ndim == 0 else result.reshape(values.shape)


def _log_gamma_lanczos(x: NDArray[np.float64]) -> NDArray[np.float64]:
    z = x - 1
    series = np.full_like(z, _LANCZOS_COEFFICIENTS[0])
    for i, coefficient in enumerate(_LANCZOS_COEFFICIENTS[1:], start=1):
        series += coefficient / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * np.log(t) - t + np.log(series)


@lru_cache()
def _log_gamma_root_coefficients() -> NDArray[np.float64]:
    # log Gamma(1 + z) = -euler_gamma * z + sum_{k >= 2} (-1)^k zeta(k) z^k / k
    coefficients = np.zeros(LOG_GAMMA_ROOT_TERMS + 1)
    coefficients[1] = -np.euler_gamma
    for k in range(2, LOG_GAMMA_ROOT_TERMS + 1):
        coefficients[k] = (-1) ** k * hurwitz_zeta(float(k), 1.0) / k
    return coefficients


def _log_gamma_upper(x: NDArray[np.float64]) -> NDArray[np.float64]:
    result = _log_gamma_lanczos(x)
    coefficients = _log_gamma_root_coefficients()
    near_one = np.abs(x - 1) < LOG_GAMMA_ROOT_RADIUS
    result[near_one] = np.polynomial.polynomial.polyval(x[near_one] - 1, coefficients)
    near_two = np.abs(x - 2) < LOG_GAMMA_ROOT_RADIUS
    z = x[near_two] - 2
    # Gamma(2 + z) = (1 + z) Gamma(1 + z)
    result[near_two] = np.log1p(z) + np.polynomial.polynomial.polyval(z, coefficients)
    return result


def hurwitz_zeta(s: float, q: ArrayLike) -> Union[float, NDArray[np.float64]]:
    """
    Hurwitz zeta function zeta(s, q) = sum_{j >= 0} (j + q)^(-s) for real s > 1 and q > 0.

    The first HURWITZ_DIRECT_TERMS terms are summed explicitly and the tail is replaced by its Euler-Maclaurin
    expansion with Bernoulli corrections through B_12. Accurate to 1e-10 relative for s in (1, 4].
    """
    if not isfinite(s) or s <= 1:
        raise DomainError(f"Hurwitz zeta diverges for s <= 1, got s={s!r}")
    q_values = np.asarray(q, dtype=np.float64)
    if not np.all(np.isfinite(q_values)) or np.any(q_values <= 0):
        raise DomainError(f"Hurwitz zeta requires q > 0, got {q!r}")

    total = np.zeros_like(q_values)
    for j in range(HURWITZ_DIRECT_TERMS):
        total += (q_values + j) ** -s

    w = q_values + HURWITZ_DIRECT_TERMS
    total += w ** (1 - s) / (s - 1) + 0.5 * w**-s

    # rising factorial s (s + 1) ... (s + 2k - 2)
    rising = s
    power = w ** (-s - 1)
    w_squared = w * w
    for k, coefficient in enumerate(_BERNOULLI_OVER_FACTORIAL, start=1):
        total += coefficient * rising * power
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        power = power / w_squared

    return float(total) if total.ndim == 0 else total


def _check_frequencies(lambdas: ArrayLike) -> NDArray[np.float64]:
    values = np.atleast_1d(np.asarray(lambdas, dtype=np.float64))
    if values.ndim != 1 or not np.all(np.isfinite(values)):
        raise DomainError("frequencies must be a finite one-dimensional vector")
    if np.any(values <= 0):
        raise DomainError("spectral density is evaluated on (0, pi] only, lambda = 0 is rejected")
    if np.any(values > pi * (1 + 1e-12)):
        raise DomainError(f"frequencies must not exceed pi, got max {values.max()!r}")
    return values


def _check_sigma2(sigma2: float) -> float:
    if not isfinite(sigma2) or sigma2 <= 0:
        raise DomainError(f"sigma2 must be a positive finite number, got {sigma2!r}")
    return float(sigma2)


def _truncated_sum(s: float, lambdas: NDArray, K: int) -> NDArray:
    total = lambdas**-s
    for k in range(1, K + 1):
        total += (_TWO_PI * k + lambdas) ** -s + (_TWO_PI * k - lambdas) ** -s
    return total


def _paxson_tail(hurst: HurstParam, lambdas: NDArray, K: int) -> NDArray:
    def a(k: int) -> NDArray:
        exponent = 1 - hurst.s
        return ((_TWO_PI * k + lambdas) ** exponent + (_TWO_PI * k - lambdas) ** exponent) / (4 * pi * hurst.H)

    return 0.5 * (a(K) + a(K + 1))


def _hurwitz_sum(s: float, lambdas: NDArray) -> NDArray:
    q = lambdas / _TWO_PI
    return (hurwitz_zeta(s, 1 - q) + hurwitz_zeta(s, q)) / _TWO_PI**s


def fgn_spectral_density(
    hurst: Union[float, HurstParam],
    lambdas: ArrayLike,
    sigma2: float = DEFAULT_SIGMA2,
    model: Optional[SpectrumModel] = None,
) -> NDArray[np.float64]:
    hurst = HurstParam.coerce(hurst)
    lambdas = _check_frequencies(lambdas)
    sigma2 = _check_sigma2(sigma2)
    model = SpectrumModel.paxson() if model is None else model
    if not model.is_fgn:
        raise ConfigurationError(f"{model} is not an fGn spectrum")

    s = hurst.s
    constant = sigma2 / pi * np.exp(log_gamma(s)) * sin(pi * hurst.H)

    if model.kind is SpectrumKind.TAYLOR:
        # small-frequency asymptote of the exact density (1 - cos(lambda) ~ lambda^2 / 2)
        return 0.5 * constant * lambdas ** (1 - 2 * hurst.H)

    if model.kind is SpectrumKind.TRUNCATION:
        aliased = _truncated_sum(s, lambdas, model.K)
    elif model.kind is SpectrumKind.PAXSON:
        aliased = _truncated_sum(s, lambdas, model.K) + _paxson_tail(hurst, lambdas, model.K)
    else:
        aliased = _hurwitz_sum(s, lambdas)

    one_minus_cos = 2 * np.sin(lambdas / 2) ** 2
    return constant * one_minus_cos * aliased


def arfima_spectral_density(
    hurst: Union[float, HurstParam], lambdas: ArrayLike, sigma2: float = DEFAULT_SIGMA2
) -> NDArray[np.float64]:
    """Spectral density of ARFIMA(0, H - 1/2, 0): sigma2 / (2 pi) * (2 sin(lambda / 2))^(1 - 2H)."""
    hurst = HurstParam.coerce(hurst)
    lambdas = _check_frequencies(lambdas)
    sigma2 = _check_sigma2(sigma2)
    return sigma2 / _TWO_PI * (2 * np.sin(lambdas / 2)) ** (1 - 2 * hurst.H)


def normalize_by_geometric_mean(values: ArrayLike) -> NDArray[np.float64]:
    values = np.asarray(values, dtype=np.float64)
    if values.size == 0 or not np.all(np.isfinite(values)) or np.any(values <= 0):
        raise DomainError("geometric-mean normalization needs a non-empty vector of positive finite values")
    log_values = np.log(values)
    return np.exp(log_values - log_values.mean())


def fgn_autocovariance(
    hurst: Union[float, HurstParam], max_lag: int, sigma2: float = DEFAULT_SIGMA2
) -> NDArray[np.float64]:
    """Autocovariance gamma(0..max_lag) of unit-step fGn increments."""
    hurst = HurstParam.coerce(hurst)
    if isinstance(max_lag, bool) or not isinstance(max_lag, (int, np.integer)) or max_lag < 0:
        raise DomainError(f"max_lag must be a nonnegative integer, got {max_lag!r}")
    sigma2 = _check_sigma2(sigma2)

    two_h = 2 * hurst.H
    lags = np.arange(max_lag + 1, dtype=np.float64)
    return 0.5 * sigma2 * (np.abs(lags + 1) ** two_h - 2 * lags**two_h + np.abs(lags - 1) ** two_h)

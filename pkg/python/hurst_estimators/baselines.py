# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

"""
Classical Hurst estimators: rescaled range, Higuchi's fractal dimension, detrended fluctuation analysis and
the madogram. Each one ends in a least-squares slope on a log-log scale.

The `*_fit` functions return the raw slope-derived value together with the regression, `estimate_*` return the
value clamped to [0, 1].
"""

import logging
from typing import NamedTuple, Sequence, Tuple, Union

import numpy as np
from numpy.typing import NDArray

from .constants import (
    DFA_MIN_LENGTH,
    DFA_MIN_WINDOW,
    HIGUCHI_KMAX,
    RS_MIN_CHUNK,
    RS_MIN_LENGTH,
    VARIOGRAM_LAGS,
    VARIOGRAM_MIN_LENGTH,
    VARIOGRAM_ORDER,
)
from .exceptions import ConfigurationError, DegenerateSeriesError, DomainError, SeriesTooShortError
from .series import Series, SeriesKind, as_increments, as_path
from .utils import ArrayLike, as_float_array, check_not_degenerate, clamp_unit, geometric_grid


logger = logging.getLogger(__name__)


class RegressionFit(NamedTuple):
    slope: float
    intercept: float
    r2: float


class BaselineResult(NamedTuple):
    estimate: float
    raw: float
    fit: RegressionFit


def fit_loglog(scales: ArrayLike, values: ArrayLike) -> RegressionFit:
    """Least-squares line through (log scale, log value)."""
    x = np.log(as_float_array(scales, "scales"))
    y = np.log(as_float_array(values, "values"))
    if x.size != y.size:
        raise DomainError(f"scales and values differ in length: {x.size} != {y.size}")
    if np.unique(x).size < 2:
        raise SeriesTooShortError("log-log regression needs at least 2 distinct scales")

    design = np.vstack([np.ones_like(x), x]).T
    (intercept, slope), *_ = np.linalg.lstsq(design, y, rcond=None)
    residuals = y - (intercept + slope * x)
    total = np.sum((y - y.mean()) ** 2)
    r2 = 1.0 - np.sum(residuals**2) / total if total > 0 else 1.0
    return RegressionFit(float(slope), float(intercept), float(min(max(r2, 0.0), 1.0)))


def _split(series: Union[ArrayLike, Series], input_kind: SeriesKind) -> Tuple[NDArray, NDArray]:
    """(path, increments) of the input."""
    series = Series.coerce(series, input_kind)
    return as_path(series), as_increments(series)


def _check_length(size: int, minimum: int, method: str) -> None:
    if size < minimum:
        raise SeriesTooShortError(f"{method} needs a series of length >= {minimum}, got {size}")


def rs_fit(
    series: Union[ArrayLike, Series], min_chunk: int = RS_MIN_CHUNK, input_kind: SeriesKind = SeriesKind.PATH
) -> BaselineResult:
    path, increments = _split(series, input_kind)
    _check_length(path.size, RS_MIN_LENGTH, "R/S analysis")
    if min_chunk < 2:
        raise ConfigurationError(f"min_chunk must be at least 2, got {min_chunk}")

    chunk_sizes, ratios = [], []
    for size in geometric_grid(min_chunk, increments.size):
        count = increments.size // size
        chunks = increments[: count * size].reshape(count, size)
        deviations = np.cumsum(chunks - chunks.mean(axis=1, keepdims=True), axis=1)
        ranges = deviations.max(axis=1) - deviations.min(axis=1)
        stds = chunks.std(axis=1)
        valid = stds > 0
        if not np.any(valid):
            continue
        chunk_sizes.append(size)
        ratios.append(np.mean(ranges[valid] / stds[valid]))

    if not chunk_sizes:
        raise DegenerateSeriesError("every R/S chunk has zero standard deviation")
    if any(ratio <= 0 for ratio in ratios):
        raise DegenerateSeriesError("R/S range vanishes")
    fit = fit_loglog(chunk_sizes, ratios)
    return BaselineResult(clamp_unit(fit.slope, "R/S"), fit.slope, fit)


def higuchi_fit(
    series: Union[ArrayLike, Series], kmax: int = HIGUCHI_KMAX, input_kind: SeriesKind = SeriesKind.PATH
) -> BaselineResult:
    path, _ = _split(series, input_kind)
    if kmax < 2:
        raise ConfigurationError(f"kmax must be at least 2, got {kmax}")
    _check_length(path.size, 10 * kmax, f"Higuchi's method with kmax={kmax}")

    n = path.size
    ks = np.arange(1, kmax + 1)
    lengths = np.empty(kmax)
    for k in ks:
        curve_lengths = np.empty(k)
        for m in range(k):
            subsampled = path[m::k]
            intervals = subsampled.size - 1
            normalization = (n - 1) / (intervals * k)
            curve_lengths[m] = np.abs(np.diff(subsampled)).sum() * normalization / k
        lengths[k - 1] = curve_lengths.mean()

    if np.any(lengths <= 0):
        raise DegenerateSeriesError("Higuchi curve length vanishes")
    fit = fit_loglog(1.0 / ks, lengths)
    dimension = fit.slope
    raw = 2.0 - dimension
    return BaselineResult(clamp_unit(raw, "Higuchi"), raw, fit)


def dfa_fit(
    series: Union[ArrayLike, Series], min_window: int = DFA_MIN_WINDOW, input_kind: SeriesKind = SeriesKind.PATH
) -> BaselineResult:
    path, increments = _split(series, input_kind)
    _check_length(path.size, DFA_MIN_LENGTH, "DFA")
    if min_window < 3:
        raise ConfigurationError(f"min_window must be at least 3, got {min_window}")
    check_not_degenerate(increments)

    profile = np.concatenate(([0.0], np.cumsum(increments - increments.mean())))
    windows = geometric_grid(min_window, profile.size // 4)
    fluctuations = np.empty(windows.size)
    for i, size in enumerate(windows):
        count = profile.size // size
        segments = profile[: count * size].reshape(count, size)
        t = np.arange(size, dtype=np.float64)
        slope, intercept = np.polyfit(t, segments.T, 1)
        trend = np.outer(slope, t) + intercept[:, None]
        fluctuations[i] = np.sqrt(np.mean((segments - trend) ** 2))

    # relative to the profile scale, a perfectly detrended profile leaves only rounding
    if np.any(fluctuations <= 64 * np.finfo(np.float64).eps * np.max(np.abs(profile))):
        raise DegenerateSeriesError("detrended fluctuation vanishes")
    fit = fit_loglog(windows, fluctuations)
    return BaselineResult(clamp_unit(fit.slope, "DFA"), fit.slope, fit)


def variogram_fit(
    series: Union[ArrayLike, Series],
    p: float = VARIOGRAM_ORDER,
    lags: Sequence[int] = VARIOGRAM_LAGS,
    input_kind: SeriesKind = SeriesKind.PATH,
) -> BaselineResult:
    path, _ = _split(series, input_kind)
    _check_length(path.size, VARIOGRAM_MIN_LENGTH, "the variogram estimator")
    if not p > 0:
        raise ConfigurationError(f"variogram order p must be positive, got {p}")
    lags = sorted({int(lag) for lag in lags})
    if len(lags) < 2 or lags[0] < 1 or lags[-1] >= path.size:
        raise ConfigurationError(f"variogram needs at least 2 distinct lags in [1, {path.size - 1}], got {lags}")

    variogram = np.array([np.mean(np.abs(path[lag:] - path[:-lag]) ** p) for lag in lags])
    if np.any(variogram <= 0):
        raise DegenerateSeriesError("variogram vanishes at some lag")
    fit = fit_loglog(lags, variogram)
    raw = fit.slope / p
    return BaselineResult(clamp_unit(raw, "variogram"), raw, fit)


def estimate_rs(series: Union[ArrayLike, Series], min_chunk: int = RS_MIN_CHUNK, **kwargs) -> float:
    return rs_fit(series, min_chunk, **kwargs).estimate


def estimate_higuchi(series: Union[ArrayLike, Series], kmax: int = HIGUCHI_KMAX, **kwargs) -> float:
    return higuchi_fit(series, kmax, **kwargs).estimate


def estimate_dfa(series: Union[ArrayLike, Series], min_window: int = DFA_MIN_WINDOW, **kwargs) -> float:
    return dfa_fit(series, min_window, **kwargs).estimate


def estimate_variogram(
    series: Union[ArrayLike, Series], p: float = VARIOGRAM_ORDER, lags: Sequence[int] = VARIOGRAM_LAGS, **kwargs
) -> float:
    return variogram_fit(series, p, lags, **kwargs).estimate

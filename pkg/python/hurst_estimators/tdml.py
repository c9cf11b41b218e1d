# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

import logging
from dataclasses import dataclass, field
from math import log, nan
from typing import Iterator, NamedTuple, Union

import numpy as np
from numpy.typing import NDArray

from .exceptions import ConfigurationError, DegenerateSeriesError, NumericalBreakdownError, SeriesTooShortError
from .optimize import ScalarSearchOptions, minimize_scalar_bounded
from .series import Series, SeriesKind
from .spectral import HurstParam, fgn_autocovariance
from .utils import ArrayLike, as_float_array
from .whittle import prepare_increments


logger = logging.getLogger(__name__)


class DlState(NamedTuple):
    """
    Order-t state of the Durbin-Levinson recursion.

    `phi` holds phi_{t,1..t} and is a view into a buffer that the next step overwrites.
    """

    t: int
    phi: NDArray[np.float64]
    v: float


def durbin_levinson(gamma: ArrayLike, hurst: float = nan) -> Iterator[DlState]:
    """
    Yields the states of orders 0..len(gamma)-1 for the autocovariance sequence gamma(0), gamma(1), ...

    Order 0 is the unconditional predictor: no coefficients and v_0 = gamma(0).
    """
    gamma = as_float_array(gamma, "autocovariance")
    n = gamma.size
    phi = np.zeros(max(n - 1, 0))
    v = float(gamma[0])
    if v <= 0:
        raise NumericalBreakdownError(0, hurst, v)
    yield DlState(0, phi[:0], v)

    for t in range(1, n):
        previous = phi[: t - 1].copy()
        k = (gamma[t] - previous @ gamma[t - 1 : 0 : -1]) / v
        phi[: t - 1] = previous - k * previous[::-1]
        phi[t - 1] = k
        v = v * (1.0 - k * k)
        if not v > 0:
            raise NumericalBreakdownError(t, hurst, v)
        yield DlState(t, phi[:t], v)


def durbin_levinson_nll(hurst: Union[float, HurstParam], y: ArrayLike) -> float:
    """
    Negative Gaussian log-likelihood of demeaned fGn increments with the innovation scale profiled out:

        1/2 [ sum_t log v_t + n log( 1/n sum_t (y_t - eta_t)^2 / v_t ) ]

    where eta_t and v_t are the one-step predictors and prediction variances for unit-variance fGn.
    """
    hurst = HurstParam.coerce(hurst)
    y = as_float_array(y)
    n = y.size
    if n < 2:
        raise SeriesTooShortError(f"Durbin-Levinson likelihood needs at least 2 observations, got {n}")

    gamma = fgn_autocovariance(hurst, n - 1)
    log_v = 0.0
    scaled_residuals = 0.0
    for state in durbin_levinson(gamma, hurst.H):
        t = state.t
        eta = state.phi @ y[t - 1 :: -1] if t else 0.0
        residual = y[t] - eta
        log_v += log(state.v)
        scaled_residuals += residual * residual / state.v

    if not scaled_residuals > 0:
        raise DegenerateSeriesError("prediction errors vanish")
    return 0.5 * (log_v + n * log(scaled_residuals / n))


@dataclass(frozen=True)
class TdmlOptions:
    search: ScalarSearchOptions = field(default_factory=ScalarSearchOptions)
    input_kind: SeriesKind = SeriesKind.PATH

    def __post_init__(self) -> None:
        if not 0 < self.search.lo < self.search.hi < 1:
            raise ConfigurationError(
                f"Hurst search bounds must lie inside (0, 1), got [{self.search.lo}, {self.search.hi}]"
            )
        try:
            object.__setattr__(self, "input_kind", SeriesKind(self.input_kind))
        except ValueError:
            raise ConfigurationError(f"Unknown input kind {self.input_kind!r}, expected 'increments' or 'path'")


def estimate_hurst_tdml(series: Union[ArrayLike, Series], options: TdmlOptions = TdmlOptions()) -> float:
    """Exact Gaussian maximum likelihood estimate of H, O(n^2) per likelihood evaluation."""
    increments = prepare_increments(series, options.input_kind)
    result = minimize_scalar_bounded(lambda h: durbin_levinson_nll(h, increments), options.search)
    logger.debug(f"TDML n={increments.size}: H={result.x:.6f} ({result.evals} likelihood evaluations)")
    return result.x

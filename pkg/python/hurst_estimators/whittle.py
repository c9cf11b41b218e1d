# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

"""
Whittle's approximate likelihood estimator of the Hurst exponent.

The estimate minimizes sum_j I(lambda_j) / f*_H(lambda_j) over H, where I is the periodogram of the demeaned
increments and f* is the model spectral density divided by its geometric mean over the Fourier frequencies.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

import numpy as np
from numpy.typing import NDArray

from .constants import MIN_INCREMENTS
from .exceptions import ConfigurationError, SeriesTooShortError
from .optimize import ScalarSearchOptions, minimize_scalar_bounded
from .series import Series, SeriesKind, as_increments
from .spectral import HurstParam, SpectrumModel, normalize_by_geometric_mean
from .transform import Periodogram, periodogram
from .utils import ArrayLike, check_not_degenerate


logger = logging.getLogger(__name__)

SpectrumCallback = Callable[[HurstParam, NDArray[np.float64]], NDArray[np.float64]]


@dataclass(frozen=True)
class WhittleOptions:
    model: SpectrumModel = field(default_factory=SpectrumModel.paxson)
    search: ScalarSearchOptions = field(default_factory=ScalarSearchOptions)
    input_kind: SeriesKind = SeriesKind.PATH
    # replaces `model` when set, the result is still normalized by its geometric mean
    spectrum_callback: Optional[SpectrumCallback] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 0 < self.search.lo < self.search.hi < 1:
            raise ConfigurationError(
                f"Hurst search bounds must lie inside (0, 1), got [{self.search.lo}, {self.search.hi}]"
            )
        try:
            object.__setattr__(self, "input_kind", SeriesKind(self.input_kind))
        except ValueError:
            raise ConfigurationError(f"Unknown input kind {self.input_kind!r}, expected 'increments' or 'path'")
        if self.spectrum_callback is not None and not callable(self.spectrum_callback):
            raise ConfigurationError("spectrum_callback must be callable")


def prepare_increments(
    series: Union[ArrayLike, Series], input_kind: SeriesKind = SeriesKind.PATH
) -> NDArray[np.float64]:
    """
    Demeaned increments ready for a likelihood estimator.

    A `Series` carries its own kind; plain vectors are interpreted with `input_kind`.
    """
    increments = as_increments(Series.coerce(series, input_kind))
    if increments.size < MIN_INCREMENTS:
        raise SeriesTooShortError(f"Need at least {MIN_INCREMENTS} increments, got {increments.size}")
    check_not_degenerate(increments)
    return increments - increments.mean()


def whittle_objective(
    hurst: Union[float, HurstParam],
    pg: Periodogram,
    model: Optional[SpectrumModel] = None,
    spectrum_callback: Optional[SpectrumCallback] = None,
) -> float:
    hurst = HurstParam.coerce(hurst)
    if spectrum_callback is not None:
        density = np.asarray(spectrum_callback(hurst, pg.frequencies), dtype=np.float64)
    else:
        model = SpectrumModel.paxson() if model is None else model
        density = model.density(hurst, pg.frequencies)
    return float(np.sum(pg.ordinates / normalize_by_geometric_mean(density)))


def estimate_hurst_whittle(
    series: Union[ArrayLike, Series], options: WhittleOptions = WhittleOptions()
) -> float:
    increments = prepare_increments(series, options.input_kind)
    pg = periodogram(increments)

    def objective(h: float) -> float:
        return whittle_objective(h, pg, options.model, options.spectrum_callback)

    result = minimize_scalar_bounded(objective, options.search)
    logger.debug(
        f"Whittle[{options.model}] n={increments.size}: H={result.x:.6f} ({result.evals} objective evaluations)"
    )
    return result.x

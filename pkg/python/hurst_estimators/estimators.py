# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .baselines import estimate_dfa, estimate_higuchi, estimate_rs, estimate_variogram
from .exceptions import ConfigurationError
from .series import Series, SeriesKind
from .spectral import SpectrumModel
from .tdml import TdmlOptions, estimate_hurst_tdml
from .utils import ArrayLike
from .whittle import WhittleOptions, estimate_hurst_whittle


logger = logging.getLogger(__name__)


class Method(str, Enum):
    WHITTLE = "whittle"
    TDML = "tdml"
    RS = "rs"
    HIGUCHI = "higuchi"
    DFA = "dfa"
    VARIOGRAM = "variogram"


_BASELINES = {
    Method.RS: estimate_rs,
    Method.HIGUCHI: estimate_higuchi,
    Method.DFA: estimate_dfa,
    Method.VARIOGRAM: estimate_variogram,
}


@dataclass(frozen=True)
class EstimatorSpec:
    """
    One configured estimator. Only Whittle takes a spectrum model, Paxson's with K=10 when omitted.

    Textual form `method[:spectrum[:K]]`, e.g. `whittle:hurwitz`, `whittle:paxson:8`, `dfa`.
    """

    method: Method = Method.WHITTLE
    spectrum: Optional[SpectrumModel] = None

    def __post_init__(self) -> None:
        try:
            method = Method(self.method)
        except ValueError:
            raise ConfigurationError(
                f"Unknown estimator {self.method!r}, expected one of {[method.value for method in Method]}"
            )
        object.__setattr__(self, "method", method)

        if method is Method.WHITTLE:
            if self.spectrum is None:
                object.__setattr__(self, "spectrum", SpectrumModel.paxson())
        elif self.spectrum is not None:
            raise ConfigurationError(f"[ EstimatorSpec ] {method.value} does not take a spectrum model")

    def __str__(self) -> str:
        if self.spectrum is None:
            return self.method.value
        return f"{self.method.value}[{self.spectrum}]"

    @classmethod
    def from_string(cls, text: str) -> "EstimatorSpec":
        parts = [part.strip() for part in text.strip().lower().split(":")]
        if not parts[0] or len(parts) > 3:
            raise ConfigurationError(f"Cannot parse estimator {text!r}, expected `method[:spectrum[:K]]`")
        method = parts[0]
        if len(parts) == 1:
            return cls(method)
        if method != Method.WHITTLE.value:
            raise ConfigurationError(f"[ EstimatorSpec ] {method} does not take a spectrum model: {text!r}")

        K = None
        if len(parts) == 3:
            try:
                K = int(parts[2])
            except ValueError:
                raise ConfigurationError(f"K must be an integer in {text!r}")
        return cls(method, SpectrumModel.from_name(parts[1], K))

    def estimate(self, series: Union[ArrayLike, Series], input_kind: SeriesKind = SeriesKind.PATH) -> float:
        if self.method is Method.WHITTLE:
            return estimate_hurst_whittle(series, WhittleOptions(model=self.spectrum, input_kind=input_kind))
        if self.method is Method.TDML:
            return estimate_hurst_tdml(series, TdmlOptions(input_kind=input_kind))
        return _BASELINES[self.method](series, input_kind=input_kind)

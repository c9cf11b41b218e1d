# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Any, Dict, TextIO, Union

import numpy as np
import pandas as pd
from numpy.typing import NDArray

from .constants import SERIES_COLUMN_NAME, SERIES_FLOAT_FORMAT
from .exceptions import ConfigurationError, DomainError, SeriesTooShortError
from .utils import ArrayLike, as_float_array


logger = logging.getLogger(__name__)


class SeriesKind(str, Enum):
    INCREMENTS = "increments"
    PATH = "path"


@dataclass(frozen=True)
class Series:
    """
    Real-valued time series tagged as increments (fGn-like) or a path (fBm-like).

    A path starts after one step: values[0] is the first partial sum of the increments
    unless the path was built with `prepend_zero=True`.
    """

    values: NDArray[np.float64] = field(repr=False)
    kind: SeriesKind = SeriesKind.INCREMENTS
    meta: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", as_float_array(self.values))
        try:
            object.__setattr__(self, "kind", SeriesKind(self.kind))
        except ValueError:
            raise ConfigurationError(f"Unknown series kind {self.kind!r}, expected 'increments' or 'path'")

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return f"Series(kind={self.kind.value}, n={len(self)})"

    @classmethod
    def increments(cls, values: ArrayLike, **meta: Any) -> "Series":
        return cls(np.asarray(values), SeriesKind.INCREMENTS, meta)

    @classmethod
    def path(cls, values: ArrayLike, **meta: Any) -> "Series":
        return cls(np.asarray(values), SeriesKind.PATH, meta)

    @classmethod
    def coerce(cls, series: Union[ArrayLike, "Series"], kind: SeriesKind = SeriesKind.PATH) -> "Series":
        """A `Series` is kept with its own kind, a plain vector is tagged with `kind`."""
        return series if isinstance(series, Series) else cls(series, kind)

    def scaled(self, factor: float) -> "Series":
        return replace(self, values=self.values * factor)


def path_from_increments(series: Series, prepend_zero: bool = False) -> Series:
    if series.kind is not SeriesKind.INCREMENTS:
        raise DomainError(f"path_from_increments expects increments, got a {series.kind.value} series")
    values = np.cumsum(series.values)
    meta = dict(series.meta)
    if prepend_zero:
        values = np.concatenate(([0.0], values))
        meta["prepend_zero"] = True
    return Series(values, SeriesKind.PATH, meta)


def increments_from_path(series: Series) -> Series:
    if series.kind is not SeriesKind.PATH:
        raise DomainError(f"increments_from_path expects a path, got an {series.kind.value} series")
    # the first increment equals the first level: the path starts after one step
    values = np.diff(series.values, prepend=0.0)
    meta = dict(series.meta)
    if meta.pop("prepend_zero", False):
        values = values[1:]
    return Series(values, SeriesKind.INCREMENTS, meta)


def as_increments(series: Series) -> NDArray[np.float64]:
    """Increments of any series; a path loses its first level, which carries no increment information."""
    if series.kind is SeriesKind.INCREMENTS:
        return series.values
    return np.diff(series.values)


def as_path(series: Series) -> NDArray[np.float64]:
    if series.kind is SeriesKind.PATH:
        return series.values
    return np.cumsum(series.values)


def read_series_csv(path: Union[str, Path], kind: SeriesKind = SeriesKind.PATH) -> Series:
    """
    Read a single-column series file. A header row named `value` is optional.
    """
    path = Path(path)
    try:
        frame = pd.read_csv(path, header=None, skip_blank_lines=True, dtype=str)
    except pd.errors.EmptyDataError:
        raise SeriesTooShortError(f"{path} holds no values")
    if frame.shape[1] != 1:
        raise DomainError(f"{path} must contain a single column, found {frame.shape[1]}")
    column = frame.iloc[:, 0].str.strip()
    if len(column) and column.iloc[0] == SERIES_COLUMN_NAME:
        column = column.iloc[1:]
    numbers = pd.to_numeric(column, errors="coerce")
    if numbers.isna().any():
        bad = int(np.flatnonzero(numbers.isna().to_numpy())[0])
        raise DomainError(f"{path}: cannot parse {column.iloc[bad]!r} as a number")
    # to_numeric is not correctly rounded, float parsing of the validated text is
    values = column.astype(np.float64).to_numpy()
    logger.debug(f"Read {len(values)} values from {path}")
    return Series(values, kind, {"source": str(path)})


def write_series_csv(series: Series, target: Union[str, Path, TextIO], header: bool = True) -> None:
    """Write `series` to a file path or an open text stream, floats with 17 significant digits."""
    if isinstance(target, str):
        target = Path(target)
    frame = pd.DataFrame({SERIES_COLUMN_NAME: series.values})
    frame.to_csv(target, index=False, header=header, float_format=SERIES_FLOAT_FORMAT, lineterminator="\n")
    logger.info(f"Wrote {len(series)} values to {target}")

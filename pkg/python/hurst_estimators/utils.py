# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

import logging
from math import floor, log
from typing import Iterable, Union

import numpy as np
from numpy.typing import NDArray

from .exceptions import DegenerateSeriesError, DomainError


logger = logging.getLogger(__name__)

ArrayLike = Union[Iterable[float], NDArray]


def as_float_array(values: ArrayLike, name: str = "series") -> NDArray[np.float64]:
    """
    Convert any 1-D sequence of numbers to a contiguous float64 numpy array, rejecting NaN and infinities
    """
    array = np.ascontiguousarray(values, dtype=np.float64)
    if array.ndim != 1:
        raise DomainError(f"{name} must be one-dimensional, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        bad = int(np.flatnonzero(~np.isfinite(array))[0])
        raise DomainError(f"{name} contains a non-finite value at index {bad}: {array[bad]!r}")
    return array


def is_degenerate(values: NDArray) -> bool:
    if values.size < 2:
        return True
    spread = np.ptp(values)
    # constant up to rounding of the largest magnitude
    return bool(spread <= 64 * np.finfo(np.float64).eps * np.max(np.abs(values)))


def check_not_degenerate(values: NDArray, what: str = "increments") -> None:
    if is_degenerate(values):
        raise DegenerateSeriesError(f"{what} have zero variance")


def geometric_grid(start: int, stop: int, ratio: float = 2.0) -> NDArray[np.int64]:
    """Strictly increasing integers start, start*ratio, ... not exceeding stop."""
    if start < 1 or stop < start:
        return np.empty(0, dtype=np.int64)
    max_i = int(floor(log(stop / start) / log(ratio) + 1e-9))
    sizes = [start]
    for i in range(1, max_i + 1):
        size = int(floor(start * ratio**i))
        if sizes[-1] < size <= stop:
            sizes.append(size)
    return np.array(sizes, dtype=np.int64)


def clamp_unit(value: float, what: str) -> float:
    clamped = min(max(value, 0.0), 1.0)
    if clamped != value:
        logger.debug(f"{what} estimate {value:.6f} is outside [0, 1], clamped to {clamped}")
    return clamped

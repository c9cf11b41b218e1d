# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

import logging
from dataclasses import dataclass
from math import isfinite, sqrt
from typing import Callable, NamedTuple

import numpy as np

from .constants import DEFAULT_MAX_ITER, DEFAULT_XTOL, HURST_SEARCH_HI, HURST_SEARCH_LO
from .exceptions import ConfigurationError, ConvergenceError, ObjectiveError


logger = logging.getLogger(__name__)

GOLDEN = 0.3819660112501051  # (3 - sqrt(5)) / 2
SQRT_EPS = sqrt(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class ScalarSearchOptions:
    lo: float = HURST_SEARCH_LO
    hi: float = HURST_SEARCH_HI
    xtol: float = DEFAULT_XTOL
    max_iter: int = DEFAULT_MAX_ITER

    def __post_init__(self) -> None:
        if not (isfinite(self.lo) and isfinite(self.hi)) or self.lo >= self.hi:
            raise ConfigurationError(f"Search interval must satisfy lo < hi, got [{self.lo}, {self.hi}]")
        if not self.xtol > 0 or self.xtol >= self.hi - self.lo:
            raise ConfigurationError(
                f"xtol must be positive and smaller than the interval width {self.hi - self.lo}, got {self.xtol}"
            )
        if self.max_iter < 1:
            raise ConfigurationError(f"max_iter must be a positive integer, got {self.max_iter}")


class ScalarSearchResult(NamedTuple):
    x: float
    fun: float
    evals: int


def minimize_scalar_bounded(
    objective: Callable[[float], float],
    options: ScalarSearchOptions = ScalarSearchOptions(),
) -> ScalarSearchResult:
    """
    Brent's method on a closed interval: golden-section steps combined with successive parabolic interpolation.

    The objective is never evaluated outside [lo, hi]. A non-finite objective value raises ObjectiveError,
    exhausting max_iter evaluations raises ConvergenceError carrying the best point found so far.
    """
    a, b = options.lo, options.hi
    evals = 0

    def evaluate(point: float) -> float:
        nonlocal evals
        value = float(objective(point))
        evals += 1
        if not isfinite(value):
            raise ObjectiveError(point, value)
        return value

    x = a + GOLDEN * (b - a)
    fx = evaluate(x)
    # w and v are the second and third best points so far
    w, fw = x, fx
    v, fv = x, fx
    d, e = 0.0, 0.0

    while True:
        mid = 0.5 * (a + b)
        tol1 = SQRT_EPS * abs(x) + options.xtol / 5
        tol2 = 2.0 * tol1

        if abs(x - mid) <= tol2 - 0.5 * (b - a):
            break

        if evals >= options.max_iter:
            raise ConvergenceError(evals, x, fx)

        golden_step = True
        if abs(e) > tol1:
            r = (x - w) * (fx - fv)
            q = (x - v) * (fx - fw)
            p = (x - v) * q - (x - w) * r
            q = 2.0 * (q - r)
            if q > 0.0:
                p = -p
            q = abs(q)
            previous_e = e
            e = d

            if abs(p) < abs(0.5 * q * previous_e) and q * (a - x) < p < q * (b - x):
                # parabolic step
                d = p / q
                u = x + d
                if u - a < tol2 or b - u < tol2:
                    d = tol1 if x < mid else -tol1
                golden_step = False

        if golden_step:
            e = (b - x) if x < mid else (a - x)
            d = GOLDEN * e

        if abs(d) >= tol1:
            u = x + d
        else:
            u = x + tol1 if d > 0 else x - tol1
        u = min(max(u, options.lo), options.hi)
        fu = evaluate(u)

        if fu <= fx:
            if u >= x:
                a = x
            else:
                b = x
            v, fv = w, fw
            w, fw = x, fx
            x, fx = u, fu
        else:
            if u < x:
                a = u
            else:
                b = u
            if fu <= fw or w == x:
                v, fv = w, fw
                w, fw = u, fu
            elif fu <= fv or v == x or v == w:
                v, fv = u, fu

    logger.debug(f"Bounded search on [{options.lo}, {options.hi}] converged to x={x!r} after {evals} evaluations")
    return ScalarSearchResult(x, fx, evals)

# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0
from math import cos, pi

import numpy as np
import pytest
from hurst_estimators import (
    ConfigurationError,
    ConvergenceError,
    ObjectiveError,
    ScalarSearchOptions,
    minimize_scalar_bounded,
)
from scipy import optimize


@pytest.mark.parametrize(
    "objective, lo, hi, expected, tolerance",
    [
        (lambda x: (x - 0.3) ** 2, 0.0, 1.0, 0.3, 1e-6),
        (lambda x: x, 0.2, 0.9, 0.2, 1e-6),
        (cos, 0.0, 2 * pi, pi, 1e-6),
    ],
    ids=["quadratic", "monotone", "cosine"],
)
def test_minimize_scalar_bounded_examples(objective, lo, hi, expected, tolerance):
    result = minimize_scalar_bounded(objective, ScalarSearchOptions(lo, hi, xtol=1e-8))
    assert abs(result.x - expected) <= tolerance, f"argmin {result.x} != {expected}"
    assert result.fun == pytest.approx(objective(result.x))
    assert result.evals > 0


def test_default_tolerance_reaches_boundary():
    result = minimize_scalar_bounded(lambda x: x, ScalarSearchOptions(0.2, 0.9))
    assert 0.2 <= result.x <= 0.2 + 1e-6


@pytest.mark.parametrize("shift", [0.0, 5.0, -1e3])
@pytest.mark.parametrize("scale", [1.0, 2.0, 1e6])
def test_argmin_invariant_to_affine_objective_changes(shift, scale):
    options = ScalarSearchOptions()
    base = minimize_scalar_bounded(lambda x: (x - 0.7) ** 2 * (1 + x), options)
    transformed = minimize_scalar_bounded(lambda x: scale * (x - 0.7) ** 2 * (1 + x) + shift, options)
    assert transformed.x == pytest.approx(base.x, abs=2e-6)


@pytest.mark.parametrize("c", [-0.4, 3.0, 25.0])
def test_argmin_follows_shifted_bounds(c):
    options = ScalarSearchOptions(0.0, 1.0)
    shifted_options = ScalarSearchOptions(options.lo + c, options.hi + c)
    base = minimize_scalar_bounded(lambda x: (x - 0.7) ** 2 * (1 + x), options)
    shifted = minimize_scalar_bounded(lambda x: (x - c - 0.7) ** 2 * (1 + x - c), shifted_options)
    assert shifted.x - c == pytest.approx(base.x, abs=4 * options.xtol)


@pytest.mark.parametrize("center", [-0.5, 0.05, 0.5, 0.95, 1.5], ids=lambda center: f"center={center}")
def test_never_evaluates_outside_bounds(center):
    seen = []

    def objective(x):
        seen.append(x)
        return abs(x - center) ** 1.5

    options = ScalarSearchOptions(0.1, 0.9)
    result = minimize_scalar_bounded(objective, options)
    assert all(options.lo <= x <= options.hi for x in seen)
    assert abs(result.x - min(max(center, 0.1), 0.9)) < 1e-5


@pytest.mark.parametrize("target", [0.12, 0.31, 0.5, 0.77, 0.99], ids=lambda target: f"target={target}")
def test_agrees_with_reference_bounded_brent(target):
    def objective(x):
        return np.log1p((x - target) ** 2) - 0.1 * np.sin(3 * x)

    ours = minimize_scalar_bounded(objective, ScalarSearchOptions(1e-4, 1 - 1e-4, xtol=1e-8))
    reference = optimize.minimize_scalar(objective, bounds=(1e-4, 1 - 1e-4), method="bounded", options={"xatol": 1e-8})
    assert ours.x == pytest.approx(reference.x, abs=1e-6)


@pytest.mark.parametrize("bad", [np.nan, np.inf])
def test_non_finite_objective_raises(bad):
    def objective(x):
        return bad if x > 0.5 else (x - 0.8) ** 2

    with pytest.raises(ObjectiveError) as info:
        minimize_scalar_bounded(objective, ScalarSearchOptions(0.0, 1.0))
    assert info.value.x > 0.5


def test_iteration_limit_carries_best_point():
    with pytest.raises(ConvergenceError) as info:
        minimize_scalar_bounded(lambda x: (x - 0.3) ** 2, ScalarSearchOptions(0.0, 1.0, xtol=1e-12, max_iter=3))
    assert info.value.iterations == 3
    assert 0.0 <= info.value.best_x <= 1.0


@pytest.mark.parametrize(
    "kwargs",
    [{"lo": 0.5, "hi": 0.5}, {"lo": 0.9, "hi": 0.1}, {"xtol": 0.0}, {"xtol": 2.0}, {"max_iter": 0}],
    ids=["empty", "reversed", "zero_xtol", "huge_xtol", "zero_iterations"],
)
def test_options_validation(kwargs):
    with pytest.raises(ConfigurationError):
        ScalarSearchOptions(**kwargs)

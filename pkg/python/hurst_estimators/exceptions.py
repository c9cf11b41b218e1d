# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

from typing import Optional


class HurstEstimationError(Exception):
    """Base class for every error raised by hurst_estimators."""


class ConfigurationError(HurstEstimationError, ValueError):
    pass


class DomainError(HurstEstimationError, ValueError):
    """An argument lies outside the mathematical domain of the function."""


class SeriesTooShortError(HurstEstimationError, ValueError):
    pass


class DegenerateSeriesError(HurstEstimationError, ValueError):
    def __init__(self, detail: str = "") -> None:
        message = "degenerate series" + (f": {detail}" if detail else "")
        super().__init__(message)


class ObjectiveError(HurstEstimationError, ArithmeticError):
    def __init__(self, x: float, value: float) -> None:
        super().__init__(f"Objective returned non-finite value {value!r} at x={x!r}")
        self.x = x
        self.value = value


class ConvergenceError(HurstEstimationError, RuntimeError):
    def __init__(self, iterations: int, best_x: float, best_value: float) -> None:
        super().__init__(
            f"Bounded search did not converge in {iterations} evaluations, best point x={best_x!r} (f={best_value!r})"
        )
        self.iterations = iterations
        self.best_x = best_x
        self.best_value = best_value


class NumericalBreakdownError(HurstEstimationError, ArithmeticError):
    def __init__(self, step: int, hurst: float, variance: Optional[float] = None) -> None:
        detail = f", prediction variance {variance!r}" if variance is not None else ""
        super().__init__(f"Durbin-Levinson recursion broke down at t={step} for H={hurst!r}{detail}")
        self.step = step
        self.hurst = hurst


class EmbeddingError(HurstEstimationError, ArithmeticError):
    def __init__(self, min_eigenvalue: float, max_eigenvalue: float) -> None:
        super().__init__(
            "embedding not nonnegative-definite: "
            f"min eigenvalue {min_eigenvalue!r}, max eigenvalue {max_eigenvalue!r}"
        )
        self.min_eigenvalue = min_eigenvalue
        self.max_eigenvalue = max_eigenvalue

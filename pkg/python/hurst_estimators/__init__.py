# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0
from .__version__ import __version__
from .baselines import (
    BaselineResult,
    RegressionFit,
    dfa_fit,
    estimate_dfa,
    estimate_higuchi,
    estimate_rs,
    estimate_variogram,
    fit_loglog,
    higuchi_fit,
    rs_fit,
    variogram_fit,
)
from .bench import (
    BenchConfig,
    BenchReport,
    EstimateRecord,
    LocalMetrics,
    SlidingEstimate,
    apply_sliding,
    global_rmse,
    local_metrics,
    run_benchmark,
)
from .estimators import EstimatorSpec, Method
from .exceptions import (
    ConfigurationError,
    ConvergenceError,
    DegenerateSeriesError,
    DomainError,
    EmbeddingError,
    HurstEstimationError,
    NumericalBreakdownError,
    ObjectiveError,
    SeriesTooShortError,
)
from .optimize import ScalarSearchOptions, ScalarSearchResult, minimize_scalar_bounded
from .series import (
    Series,
    SeriesKind,
    increments_from_path,
    path_from_increments,
    read_series_csv,
    write_series_csv,
)
from .spectral import (
    HurstParam,
    SpectrumKind,
    SpectrumModel,
    arfima_spectral_density,
    fgn_autocovariance,
    fgn_spectral_density,
    hurwitz_zeta,
    log_gamma,
    normalize_by_geometric_mean,
)
from .synth import (
    DataModel,
    GenSpec,
    arfima_ma_coefficients,
    gaussian_rng,
    generate,
    generate_arfima,
    generate_fgn_davies_harte,
)
from .tdml import DlState, TdmlOptions, durbin_levinson, durbin_levinson_nll, estimate_hurst_tdml
from .transform import Periodogram, dft, idft, periodogram
from .whittle import WhittleOptions, estimate_hurst_whittle, whittle_objective

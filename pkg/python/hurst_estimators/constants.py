# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

DEFAULT_SIGMA2 = 1.0

DEFAULT_TRUNCATION_K = 200
DEFAULT_PAXSON_K = 10

HURWITZ_DIRECT_TERMS = 12
# log Gamma switches from Lanczos to its Taylor series within this distance of x = 1 and x = 2
LOG_GAMMA_ROOT_RADIUS = 0.25
LOG_GAMMA_ROOT_TERMS = 30

HURST_SEARCH_LO = 1e-4
HURST_SEARCH_HI = 1 - 1e-4
DEFAULT_XTOL = 1e-6
DEFAULT_MAX_ITER = 500

MIN_INCREMENTS = 16
MIN_PERIODOGRAM_LENGTH = 4

RS_MIN_CHUNK = 8
RS_MIN_LENGTH = 32
HIGUCHI_KMAX = 10
DFA_MIN_WINDOW = 8
DFA_MIN_LENGTH = 64
VARIOGRAM_ORDER = 1.0
VARIOGRAM_LAGS = (1, 2)
VARIOGRAM_MIN_LENGTH = 16

EMBEDDING_EIGENVALUE_TOLERANCE = 1e-9

DEFAULT_BENCH_LENGTHS = tuple(2**k for k in range(7, 16))
DEFAULT_BENCH_SAMPLES = 1000
DEFAULT_BENCH_SEED = 0
DEFAULT_BENCH_OUT_DIR = "bench_results"
LOCAL_WINDOW_HALF_WIDTH = 0.05
LOCAL_GRID_STEP = 0.001

SLIDING_WINDOW = 252
SLIDING_STRIDE = 63

GLOBAL_CSV_NAME = "global.csv"
LOCAL_CSV_NAME = "local.csv"
TIMINGS_CSV_NAME = "timings.csv"
ESTIMATES_CSV_NAME = "estimates.csv"

GLOBAL_COLUMNS = ("method", "n", "samples", "rmse", "failure_rate")
LOCAL_COLUMNS = ("method", "n", "h", "count", "rmse", "bias", "std")
TIMINGS_COLUMNS = ("method", "n", "samples", "workers", "total_seconds", "per_sequence_seconds")
ESTIMATES_COLUMNS = ("method", "n", "sample", "h_true", "h_est", "error")
SLIDING_COLUMNS = ("start", "h_est", "error")

SERIES_COLUMN_NAME = "value"
METRICS_FLOAT_FORMAT = "%.12g"
SERIES_FLOAT_FORMAT = "%.17g"

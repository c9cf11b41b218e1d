# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

"""
Monte-Carlo benchmark harness.

For every length bin n, `samples` pairs (H_i, series_i) are drawn with H_i ~ U(0, 1) and every configured estimator
runs on every series. The harness reports the global RMSE per (method, n), RMSE/bias/std in sliding windows
[h - dh, h + dh] over the grid h = 0, 0.001, ..., 1, and the per-sequence time t = w * T / m, where T is the summed
wall time of a method over a bin, w the number of workers and m the number of samples. Timings are meant to be
compared between methods measured by the same harness on the same machine.

The standard deviation uses the population convention, so rmse^2 = bias^2 + std^2.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import chain
from math import nan, sqrt
from pathlib import Path
from time import perf_counter
from typing import Dict, Iterable, Iterator, List, NamedTuple, Sequence, TextIO, Tuple, Union

import numpy as np
import pandas as pd

from .constants import (
    DEFAULT_BENCH_LENGTHS,
    DEFAULT_BENCH_OUT_DIR,
    DEFAULT_BENCH_SAMPLES,
    DEFAULT_BENCH_SEED,
    ESTIMATES_COLUMNS,
    ESTIMATES_CSV_NAME,
    GLOBAL_COLUMNS,
    GLOBAL_CSV_NAME,
    LOCAL_COLUMNS,
    LOCAL_CSV_NAME,
    LOCAL_GRID_STEP,
    LOCAL_WINDOW_HALF_WIDTH,
    METRICS_FLOAT_FORMAT,
    SLIDING_COLUMNS,
    TIMINGS_COLUMNS,
    TIMINGS_CSV_NAME,
)
from .estimators import EstimatorSpec
from .exceptions import ConfigurationError, DomainError, HurstEstimationError
from .series import Series, SeriesKind
from .synth import DataModel, GenSpec, gaussian_rng, generate
from .utils import ArrayLike, as_float_array


logger = logging.getLogger(__name__)


def _positive_int(value: int, name: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < minimum:
        raise ConfigurationError(f"[ BenchConfig ] `{name}` must be an integer >= {minimum}, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class BenchConfig:
    lengths: Tuple[int, ...] = DEFAULT_BENCH_LENGTHS
    samples: int = DEFAULT_BENCH_SAMPLES
    methods: Tuple[EstimatorSpec, ...] = (EstimatorSpec(),)
    workers: int = 1
    seed: int = DEFAULT_BENCH_SEED
    out_dir: Path = Path(DEFAULT_BENCH_OUT_DIR)
    data_model: DataModel = DataModel.FBM

    def __post_init__(self) -> None:
        # a generated series needs at least two points
        lengths = tuple(_positive_int(n, "lengths", minimum=2) for n in self.lengths)
        if not lengths:
            raise ConfigurationError("[ BenchConfig ] `lengths` must not be empty")
        if len(set(lengths)) != len(lengths):
            raise ConfigurationError(f"[ BenchConfig ] `lengths` contains duplicates: {lengths}")
        object.__setattr__(self, "lengths", lengths)

        methods = tuple(
            method if isinstance(method, EstimatorSpec) else EstimatorSpec.from_string(method)
            for method in self.methods
        )
        if not methods:
            raise ConfigurationError("[ BenchConfig ] `methods` must not be empty")
        if len({str(method) for method in methods}) != len(methods):
            raise ConfigurationError(f"[ BenchConfig ] `methods` contains duplicates: {[str(m) for m in methods]}")
        object.__setattr__(self, "methods", methods)

        object.__setattr__(self, "samples", _positive_int(self.samples, "samples"))
        object.__setattr__(self, "workers", _positive_int(self.workers, "workers"))
        if isinstance(self.seed, bool) or not isinstance(self.seed, (int, np.integer)) or self.seed < 0:
            raise ConfigurationError(f"[ BenchConfig ] `seed` must be a nonnegative integer, got {self.seed!r}")
        object.__setattr__(self, "out_dir", Path(self.out_dir))
        try:
            object.__setattr__(self, "data_model", DataModel(self.data_model))
        except ValueError:
            raise ConfigurationError(f"[ BenchConfig ] unknown data model {self.data_model!r}")


class EstimateRecord(NamedTuple):
    method: str
    n: int
    sample: int
    h_true: float
    h_est: float
    seconds: float
    error: str = ""

    @property
    def failed(self) -> bool:
        return not np.isfinite(self.h_est)


class LocalMetrics(NamedTuple):
    h: float
    lo: float
    hi: float
    count: int
    rmse: float
    bias: float
    std: float


class SlidingEstimate(NamedTuple):
    start: int
    h_est: float
    error: str = ""


class BenchReport(NamedTuple):
    records: List[EstimateRecord]
    global_table: pd.DataFrame
    local_table: pd.DataFrame
    timings_table: pd.DataFrame
    files: Dict[str, Path]


def error_tag(error: Exception) -> str:
    return f"{type(error).__name__}: {error}"


def _draw_hurst(seed: int, bin_index: int, sample: int) -> float:
    rng = gaussian_rng(seed, (bin_index, sample, 1))
    hurst = rng.uniform()
    while hurst == 0.0:
        hurst = rng.uniform()
    return float(hurst)


def _run_sample(
    task: Tuple[int, int, int],
    methods: Sequence[EstimatorSpec],
    data_model: DataModel,
    seed: int,
) -> List[EstimateRecord]:
    bin_index, n, sample = task
    hurst = _draw_hurst(seed, bin_index, sample)
    series = generate(GenSpec(data_model, hurst, n, seed), stream_index=(bin_index, sample, 0))

    records = []
    for method in methods:
        start = perf_counter()
        try:
            estimate, tag = method.estimate(series), ""
        except HurstEstimationError as error:
            estimate, tag = nan, error_tag(error)
        elapsed = perf_counter() - start
        if tag:
            logger.warning(f"{method} failed on n={n}, sample {sample} (H={hurst:.4f}): {tag}")
        records.append(EstimateRecord(str(method), n, sample, hurst, estimate, elapsed, tag))
    return records


def per_sequence_seconds(total_seconds: float, workers: int, samples: int) -> float:
    """t = w * T / m"""
    return workers * total_seconds / samples


def global_rmse(records: Iterable[EstimateRecord]) -> float:
    """RMSE of the successful estimates; NaN when every estimate failed."""
    records = list(records)
    if not records:
        raise DomainError("global RMSE of an empty record set")
    errors = np.array([r.h_est - r.h_true for r in records if not r.failed])
    if errors.size == 0:
        return nan
    return float(sqrt(np.mean(errors**2)))


def failure_rate(records: Sequence[EstimateRecord]) -> float:
    return sum(r.failed for r in records) / len(records) if records else nan


def local_grid(step: float = LOCAL_GRID_STEP) -> np.ndarray:
    points = int(round(1 / step)) + 1
    return np.linspace(0.0, 1.0, points)


def local_metrics(
    records: Iterable[EstimateRecord], dh: float = LOCAL_WINDOW_HALF_WIDTH, step: float = LOCAL_GRID_STEP
) -> List[LocalMetrics]:
    """
    RMSE, bias and population std of the errors of the records whose true H lies in [h - dh, h + dh].

    Windows without records get count 0 and NaN metrics.
    """
    if not dh > 0 or not 0 < step <= 1:
        raise ConfigurationError(f"local metrics need dh > 0 and a grid step in (0, 1], got dh={dh}, step={step}")
    valid = sorted((r.h_true, r.h_est - r.h_true) for r in records if not r.failed)
    truths = np.array([truth for truth, _ in valid])
    errors = np.array([error for _, error in valid])

    metrics = []
    for h in local_grid(step):
        lo, hi = h - dh, h + dh
        first = int(np.searchsorted(truths, lo, side="left"))
        last = int(np.searchsorted(truths, hi, side="right"))
        window = errors[first:last]
        if window.size == 0:
            metrics.append(LocalMetrics(float(h), lo, hi, 0, nan, nan, nan))
            continue
        metrics.append(
            LocalMetrics(
                h=float(h),
                lo=lo,
                hi=hi,
                count=int(window.size),
                rmse=float(np.sqrt(np.mean(window**2))),
                bias=float(np.mean(window)),
                std=float(np.std(window)),
            )
        )
    return metrics


def _tasks(cfg: BenchConfig) -> List[Tuple[int, int, int]]:
    return [(bin_index, n, sample) for bin_index, n in enumerate(cfg.lengths) for sample in range(cfg.samples)]


def _log_progress(
    tasks: Sequence[Tuple[int, int, int]], results: Iterable[List[EstimateRecord]]
) -> Iterator[List[EstimateRecord]]:
    current_bin = None
    for (bin_index, n, _), sample_records in zip(tasks, results):
        if bin_index != current_bin:
            logger.info(f"Length bin n={n} started")
            current_bin = bin_index
        yield sample_records


def collect_records(cfg: BenchConfig) -> List[EstimateRecord]:
    """Estimates ordered by (bin, sample, method) whatever the number of workers."""
    run = partial(_run_sample, methods=cfg.methods, data_model=cfg.data_model, seed=cfg.seed)
    tasks = _tasks(cfg)
    logger.info(
        f"Benchmark: {len(cfg.methods)} methods, lengths {list(cfg.lengths)}, {cfg.samples} samples per bin, "
        f"{cfg.workers} worker(s)"
    )

    if cfg.workers == 1:
        return list(chain.from_iterable(_log_progress(tasks, map(run, tasks))))

    chunksize = max(1, len(tasks) // (4 * cfg.workers))
    with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
        results = executor.map(run, tasks, chunksize=chunksize)
        return list(chain.from_iterable(_log_progress(tasks, results)))


def _group(records: Iterable[EstimateRecord]) -> Dict[Tuple[str, int], List[EstimateRecord]]:
    groups: Dict[Tuple[str, int], List[EstimateRecord]] = {}
    for record in records:
        groups.setdefault((record.method, record.n), []).append(record)
    return groups


def summarize(
    records: Sequence[EstimateRecord], cfg: BenchConfig
) -> Tuple[pd.DataFrame, pd.DataFrame, pd.DataFrame]:
    """global, local and timings tables ordered by (method, n)."""
    order = {str(method): i for i, method in enumerate(cfg.methods)}
    groups = sorted(_group(records).items(), key=lambda item: (order.get(item[0][0], len(order)), item[0][1]))

    global_rows, local_rows, timing_rows = [], [], []
    for (method, n), group in groups:
        global_rows.append((method, n, len(group), global_rmse(group), failure_rate(group)))
        local_rows.extend(
            (method, n, metric.h, metric.count, metric.rmse, metric.bias, metric.std)
            for metric in local_metrics(group)
        )
        # records time a single estimate each, their sum is spread over the workers
        total = float(sum(r.seconds for r in group)) / cfg.workers
        timing_rows.append(
            (method, n, len(group), cfg.workers, total, per_sequence_seconds(total, cfg.workers, len(group)))
        )

    return (
        pd.DataFrame(global_rows, columns=list(GLOBAL_COLUMNS)),
        pd.DataFrame(local_rows, columns=list(LOCAL_COLUMNS)),
        pd.DataFrame(timing_rows, columns=list(TIMINGS_COLUMNS)),
    )


def estimates_table(records: Sequence[EstimateRecord]) -> pd.DataFrame:
    return pd.DataFrame(
        [(r.method, r.n, r.sample, r.h_true, r.h_est, r.error) for r in records], columns=list(ESTIMATES_COLUMNS)
    )


def write_table(table: pd.DataFrame, target: Union[Path, TextIO]) -> Union[Path, TextIO]:
    table.to_csv(target, index=False, float_format=METRICS_FLOAT_FORMAT, na_rep="", lineterminator="\n")
    logger.info(f"Wrote {len(table)} rows to {target}")
    return target


def run_benchmark(cfg: BenchConfig) -> BenchReport:
    records = collect_records(cfg)
    global_table, local_table, timings_table = summarize(records, cfg)

    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    files = {
        "global": write_table(global_table, cfg.out_dir / GLOBAL_CSV_NAME),
        "local": write_table(local_table, cfg.out_dir / LOCAL_CSV_NAME),
        "timings": write_table(timings_table, cfg.out_dir / TIMINGS_CSV_NAME),
        "estimates": write_table(estimates_table(records), cfg.out_dir / ESTIMATES_CSV_NAME),
    }
    return BenchReport(records, global_table, local_table, timings_table, files)


def apply_sliding(
    series: Union[ArrayLike, Series],
    window_len: int,
    stride: int,
    method: Union[EstimatorSpec, str] = EstimatorSpec(),
    input_kind: SeriesKind = SeriesKind.PATH,
) -> List[SlidingEstimate]:
    """Estimates on every full window [i, i + window_len), i = 0, stride, 2 * stride, ..."""
    if isinstance(series, Series):
        values, kind = series.values, series.kind
    else:
        values, kind = as_float_array(series), SeriesKind(input_kind)
    method = method if isinstance(method, EstimatorSpec) else EstimatorSpec.from_string(method)
    if isinstance(stride, bool) or not isinstance(stride, (int, np.integer)) or stride < 1:
        raise ConfigurationError(f"stride must be a positive integer, got {stride!r}")
    if isinstance(window_len, bool) or not isinstance(window_len, (int, np.integer)) or window_len < 2:
        raise ConfigurationError(f"window length must be an integer >= 2, got {window_len!r}")
    if window_len > values.size:
        raise ConfigurationError(f"window length {window_len} exceeds the series length {values.size}")

    estimates = []
    for start in range(0, values.size - window_len + 1, stride):
        window = Series(values[start : start + window_len], kind)
        try:
            estimates.append(SlidingEstimate(start, method.estimate(window)))
        except HurstEstimationError as error:
            logger.warning(f"{method} failed on window starting at {start}: {error}")
            estimates.append(SlidingEstimate(start, nan, error_tag(error)))
    return estimates


def sliding_table(estimates: Sequence[SlidingEstimate]) -> pd.DataFrame:
    return pd.DataFrame([tuple(estimate) for estimate in estimates], columns=list(SLIDING_COLUMNS))

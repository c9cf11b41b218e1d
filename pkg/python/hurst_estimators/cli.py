# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0

import logging
import sys
from argparse import (
    SUPPRESS,
    Action,
    ArgumentDefaultsHelpFormatter,
    ArgumentError,
    ArgumentParser,
    ArgumentTypeError,
    Namespace,
)
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .bench import BenchConfig, apply_sliding, run_benchmark, sliding_table, write_table
from .constants import (
    DEFAULT_BENCH_LENGTHS,
    DEFAULT_BENCH_OUT_DIR,
    DEFAULT_BENCH_SAMPLES,
    DEFAULT_BENCH_SEED,
    DEFAULT_PAXSON_K,
    DEFAULT_TRUNCATION_K,
    METRICS_FLOAT_FORMAT,
    SLIDING_STRIDE,
    SLIDING_WINDOW,
)
from .estimators import EstimatorSpec, Method
from .exceptions import ConfigurationError, HurstEstimationError
from .series import SeriesKind, read_series_csv, write_series_csv
from .spectral import SpectrumKind, SpectrumModel
from .synth import DataModel, GenSpec, generate


logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def comma_separated_ints(text: str) -> Tuple[int, ...]:
    try:
        ints = tuple(int(value) for value in text.split(",") if value.strip())
    except ValueError:
        raise ArgumentTypeError(f"expected comma-separated integers, got: {text}")
    if not ints or any(value < 1 for value in ints):
        raise ArgumentTypeError(f"expected positive integers, got: {text}")
    return ints


def estimator_list(text: str) -> Tuple[EstimatorSpec, ...]:
    try:
        specs = tuple(EstimatorSpec.from_string(value) for value in text.split(",") if value.strip())
    except ConfigurationError as error:
        raise ArgumentTypeError(str(error))
    if not specs:
        raise ArgumentTypeError("at least one estimator is required")
    return specs


class PositiveIntAction(Action):
    def __call__(self, parser, namespace, values, option_string=None) -> None:
        if values.isnumeric() and int(values) > 0:
            setattr(namespace, self.dest, int(values))
            return
        raise ArgumentError(self, f"must be a positive integer, got: {values}")


def _add_common_arguments(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--log-level",
        "--log_level",
        choices=LOG_LEVELS,
        default="WARNING",
        help="Verbosity of the diagnostics printed to standard error",
    )


def _add_estimator_arguments(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--method",
        choices=[method.value for method in Method],
        default=Method.WHITTLE.value,
        help="Hurst exponent estimator",
    )
    parser.add_argument(
        "--spectrum",
        choices=[kind.value for kind in SpectrumKind],
        default=SpectrumKind.PAXSON.value,
        help="Spectral density fitted by the Whittle estimator, ignored by the other methods",
    )
    parser.add_argument(
        "--K",
        "-K",
        dest="K",
        action=PositiveIntAction,
        default=SUPPRESS,
        help=(
            f"Number of aliased terms of the truncation and Paxson spectra "
            f"(default: {DEFAULT_PAXSON_K} for paxson, {DEFAULT_TRUNCATION_K} for truncation)"
        ),
    )
    parser.add_argument(
        "--input-kind",
        "--input_kind",
        choices=[kind.value for kind in SeriesKind],
        default=SeriesKind.PATH.value,
        help="Whether the input holds path levels (differenced internally) or increments",
    )
    parser.add_argument("--input", "-i", type=Path, required=True, help="Series CSV with a single `value` column")


def get_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="hurst",
        description="Estimates Hurst exponents, generates fBm/fGn/ARFIMA series and runs Monte-Carlo benchmarks.",
        formatter_class=ArgumentDefaultsHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    generate_parser = subparsers.add_parser(
        "generate", help="Write a synthetic series to CSV", formatter_class=ArgumentDefaultsHelpFormatter
    )
    generate_parser.add_argument(
        "--model", choices=[model.value for model in DataModel], default=DataModel.FBM.value, help="Data model"
    )
    generate_parser.add_argument("--hurst", "-H", type=float, required=True, help="Hurst exponent in (0, 1)")
    generate_parser.add_argument("--n", "-n", action=PositiveIntAction, required=True, help="Series length")
    generate_parser.add_argument("--seed", type=int, default=DEFAULT_BENCH_SEED, help="Random seed")
    generate_parser.add_argument("--sigma", type=float, default=1.0, help="Standard deviation of the increments")
    generate_parser.add_argument(
        "--prepend-zero",
        "--prepend_zero",
        action="store_true",
        help="Start fbm paths with a zero level before the first increment",
    )
    generate_parser.add_argument(
        "--out", "-o", type=Path, default=None, help="Output CSV file, standard output if omitted"
    )
    _add_common_arguments(generate_parser)

    estimate_parser = subparsers.add_parser(
        "estimate", help="Estimate the Hurst exponent of a series", formatter_class=ArgumentDefaultsHelpFormatter
    )
    _add_estimator_arguments(estimate_parser)
    _add_common_arguments(estimate_parser)

    bench_parser = subparsers.add_parser(
        "bench", help="Run the Monte-Carlo benchmark", formatter_class=ArgumentDefaultsHelpFormatter
    )
    bench_parser.add_argument(
        "--lengths",
        type=comma_separated_ints,
        default=",".join(str(n) for n in DEFAULT_BENCH_LENGTHS),
        help="Comma-separated series lengths, one bin each",
    )
    bench_parser.add_argument(
        "--samples", "-m", action=PositiveIntAction, default=DEFAULT_BENCH_SAMPLES, help="Samples per length bin"
    )
    bench_parser.add_argument(
        "--methods",
        type=estimator_list,
        default=f"whittle:paxson:{DEFAULT_PAXSON_K}",
        help="Comma-separated estimators `method[:spectrum[:K]]`, e.g. whittle:hurwitz,whittle:paxson:8,tdml,dfa",
    )
    bench_parser.add_argument("--workers", "-w", action=PositiveIntAction, default=1, help="Worker processes")
    bench_parser.add_argument("--seed", type=int, default=DEFAULT_BENCH_SEED, help="Master random seed")
    bench_parser.add_argument(
        "--out", "-o", type=Path, default=Path(DEFAULT_BENCH_OUT_DIR), help="Output directory for the CSV tables"
    )
    bench_parser.add_argument(
        "--data-model",
        "--data_model",
        choices=[model.value for model in DataModel],
        default=DataModel.FBM.value,
        help="Synthetic data: fbm paths, fgn increments or ARFIMA(0, H - 0.5, 0) increments",
    )
    _add_common_arguments(bench_parser)

    sliding_parser = subparsers.add_parser(
        "sliding", help="Estimate on sliding windows of a series", formatter_class=ArgumentDefaultsHelpFormatter
    )
    sliding_parser.add_argument("--window", action=PositiveIntAction, default=SLIDING_WINDOW, help="Window length")
    sliding_parser.add_argument(
        "--stride", action=PositiveIntAction, default=SLIDING_STRIDE, help="Offset between window starts"
    )
    _add_estimator_arguments(sliding_parser)
    _add_common_arguments(sliding_parser)

    return parser


def _estimator_from_args(args: Namespace) -> EstimatorSpec:
    if args.method != Method.WHITTLE.value:
        return EstimatorSpec(Method(args.method))
    return EstimatorSpec(Method.WHITTLE, SpectrumModel.from_name(args.spectrum, getattr(args, "K", None)))


def _generate(args: Namespace) -> None:
    spec = GenSpec(DataModel(args.model), args.hurst, args.n, args.seed, args.sigma)
    series = generate(spec, prepend_zero=args.prepend_zero)
    write_series_csv(series, args.out if args.out is not None else sys.stdout)


def _estimate(args: Namespace, estimator: EstimatorSpec) -> None:
    series = read_series_csv(args.input, SeriesKind(args.input_kind))
    print(f"H_est={estimator.estimate(series)!r}")


def _bench(args: Namespace, config: BenchConfig) -> None:
    report = run_benchmark(config)
    write_table(report.global_table, sys.stdout)


def _sliding(args: Namespace, estimator: EstimatorSpec) -> None:
    series = read_series_csv(args.input, SeriesKind(args.input_kind))
    estimates = apply_sliding(series, args.window, args.stride, estimator)
    sliding_table(estimates).to_csv(
        sys.stdout, index=False, float_format=METRICS_FLOAT_FORMAT, na_rep="", lineterminator="\n"
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code if isinstance(stop.code, int) else 2

    logging.basicConfig(
        level=args.log_level, stream=sys.stderr, format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )

    # flag combinations are validated before any computation, invalid ones are usage errors
    try:
        if args.command == "generate":
            GenSpec(DataModel(args.model), args.hurst, args.n, args.seed, args.sigma)
        elif args.command == "bench":
            config = BenchConfig(
                lengths=args.lengths,
                samples=args.samples,
                methods=args.methods,
                workers=args.workers,
                seed=args.seed,
                out_dir=args.out,
                data_model=DataModel(args.data_model),
            )
        else:
            estimator = _estimator_from_args(args)
    except HurstEstimationError as error:
        try:
            parser.error(f"{args.command}: {error}")
        except SystemExit as stop:
            return stop.code

    try:
        if args.command == "generate":
            _generate(args)
        elif args.command == "estimate":
            _estimate(args, estimator)
        elif args.command == "bench":
            _bench(args, config)
        else:
            _sliding(args, estimator)
    except (HurstEstimationError, OSError) as error:
        print(f"hurst {args.command}: error: {error}", file=sys.stderr)
        return 1
    return 0


def run(argv: Optional[List[str]] = None) -> None:
    sys.exit(main(argv))

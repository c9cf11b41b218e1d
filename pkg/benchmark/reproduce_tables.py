import argparse
import logging
import os
from pathlib import Path
from typing import Dict, Tuple

import pandas as pd
from hurst_estimators import BenchConfig, BenchReport, run_benchmark
from tqdm.auto import tqdm


# RMSE of 100000-sample runs, keyed by (method, n)
REFERENCE_RMSE: Dict[Tuple[str, int], float] = {
    ("whittle[hurwitz]", 128): 57.363e-3,
    ("whittle[hurwitz]", 1024): 18.751e-3,
    ("whittle[hurwitz]", 8192): 6.4481e-3,
    ("whittle[paxson,K=8]", 1024): 18.751e-3,
    ("whittle[paxson,K=1]", 1024): 19.205e-3,
    ("whittle[truncation,K=200]", 1024): 21.723e-3,
    ("whittle[taylor]", 1024): 49.662e-3,
    ("whittle[taylor]", 8192): 45.1e-3,
    ("whittle[paxson,K=10]", 1024): 18.627e-3,
    ("tdml", 1024): 17.724e-3,
    ("higuchi", 1024): 29.092e-3,
    ("variogram", 1024): 38.186e-3,
    ("dfa", 1024): 47.543e-3,
    ("rs", 1024): 108.87e-3,
}

EXPERIMENTS = {
    "spectra": dict(
        lengths=(128, 1024, 8192),
        methods=(
            "whittle:hurwitz",
            "whittle:paxson:8",
            "whittle:paxson:1",
            "whittle:truncation:200",
            "whittle:taylor",
        ),
    ),
    "estimators": dict(
        lengths=(1024,),
        methods=("whittle:paxson:10", "tdml", "higuchi", "variogram", "dfa", "rs"),
    ),
    "speed": dict(
        lengths=(8192,),
        methods=("higuchi", "whittle:paxson:10", "tdml"),
    ),
}


def accuracy_table(report: BenchReport) -> pd.DataFrame:
    table = report.global_table.copy()
    keys = zip(table["method"], table["n"])
    table["reference"] = [REFERENCE_RMSE.get(key, float("nan")) for key in keys]
    table["rmse_x1e3"] = table["rmse"] * 1e3
    table["reference_x1e3"] = table["reference"] * 1e3
    table["relative_gap"] = table["rmse"] / table["reference"] - 1
    return table.pivot(index="method", columns="n", values=["rmse_x1e3", "reference_x1e3", "relative_gap"])


def speed_table(report: BenchReport) -> pd.DataFrame:
    table = report.timings_table.set_index("method")[["n", "samples", "workers", "per_sequence_seconds"]]
    fastest = table["per_sequence_seconds"].min()
    return table.assign(slowdown=table["per_sequence_seconds"] / fastest).sort_values("per_sequence_seconds")


def main(
    experiments: Tuple[str, ...],
    samples: int = 1000,
    speed_samples: int = 20,
    workers: int = 1,
    seed: int = 2024,
    out_dir: Path = Path("reproduced_tables"),
) -> None:
    for name in tqdm(experiments, desc="Experiments"):
        is_speed = name == "speed"
        cfg = BenchConfig(
            samples=speed_samples if is_speed else samples,
            # timings are compared within one process
            workers=1 if is_speed else workers,
            seed=seed,
            out_dir=out_dir / name,
            **EXPERIMENTS[name],
        )
        report = run_benchmark(cfg)
        print(f"\n{name}: {cfg.samples} samples per length, tables in {cfg.out_dir}")
        if is_speed:
            print(speed_table(report).to_string(float_format="{:.6f}".format))
        else:
            print(accuracy_table(report).to_string(float_format="{:.3f}".format))


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description="Reproduce the Hurst estimator accuracy and speed tables")
    parser.add_argument(
        "experiments",
        nargs="*",
        metavar="EXPERIMENT",
        help=f"Experiments to run out of {list(EXPERIMENTS)}, all of them by default.",
    )
    parser.add_argument("-m", "--samples", type=int, default=1000, help="Samples per length bin.")
    parser.add_argument(
        "--speed-samples",
        "--speed_samples",
        type=int,
        default=20,
        help="Samples per length bin of the speed experiment.",
    )
    parser.add_argument(
        "-w", "--workers", type=int, default=os.cpu_count() or 1, help="Worker processes of the accuracy runs."
    )
    parser.add_argument("--seed", type=int, default=2024, help="Master random seed.")
    parser.add_argument("-o", "--out", type=Path, default=Path("reproduced_tables"), help="Output directory.")
    parser.add_argument("--log-level", "--log_level", default="WARNING", help="Logging level.")

    args = parser.parse_args()
    unknown = [name for name in args.experiments if name not in EXPERIMENTS]
    if unknown:
        parser.error(f"unknown experiments {unknown}, expected some of {list(EXPERIMENTS)}")
    logging.basicConfig(level=args.log_level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    main(
        tuple(args.experiments) or tuple(EXPERIMENTS),
        args.samples,
        speed_samples=args.speed_samples,
        workers=args.workers,
        seed=args.seed,
        out_dir=args.out,
    )

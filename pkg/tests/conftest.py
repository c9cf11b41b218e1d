import numpy as np
import pytest
from hurst_estimators import GenSpec, Series, generate_fgn_davies_harte, path_from_increments


def pytest_addoption(parser):
    parser.addoption(
        "--run_slow",
        action="store_true",
        default=False,
        help="Run Monte-Carlo experiments reproducing the accuracy and timing tables",
    )


def pytest_collection_modifyitems(config: pytest.Config, items) -> None:
    if config.getoption("run_slow"):
        return
    skip_slow = pytest.mark.skip(reason="Monte-Carlo experiment, run with --run_slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def white_noise() -> np.ndarray:
    return np.random.default_rng(20240101).standard_normal(4096)


@pytest.fixture(scope="session")
def white_noise_path(white_noise) -> Series:
    return path_from_increments(Series.increments(white_noise))


@pytest.fixture(scope="session", params=[0.2, 0.5, 0.8], ids=lambda hurst: f"H={hurst}")
def fgn_sample(request) -> Series:
    return generate_fgn_davies_harte(GenSpec("fgn", request.param, 2048, seed=7))

# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0
import numpy as np
import pytest
from hurst_estimators import (
    ConfigurationError,
    DataModel,
    DomainError,
    GenSpec,
    HurstParam,
    SeriesKind,
    arfima_ma_coefficients,
    fgn_autocovariance,
    gaussian_rng,
    generate,
    generate_arfima,
    generate_fgn_davies_harte,
)
from hurst_estimators.synth import _circulant_eigenvalues


def sample_autocovariance(values, lag):
    centered = values - values.mean()
    return np.dot(centered[: values.size - lag], centered[lag:]) / values.size


@pytest.mark.parametrize("model", list(DataModel), ids=lambda model: model.value)
def test_generation_is_deterministic(model):
    spec = GenSpec(model, 0.7, 500, seed=123)
    np.testing.assert_array_equal(generate(spec).values, generate(spec).values)


def test_seeds_and_streams_give_different_series():
    base = generate_fgn_davies_harte(GenSpec("fgn", 0.6, 256, seed=1)).values
    other_seed = generate_fgn_davies_harte(GenSpec("fgn", 0.6, 256, seed=2)).values
    other_stream = generate_fgn_davies_harte(GenSpec("fgn", 0.6, 256, seed=1), stream_index=(0, 1)).values
    assert not np.array_equal(base, other_seed)
    assert not np.array_equal(base, other_stream)


def test_sigma_scales_output_exactly():
    unit = generate_fgn_davies_harte(GenSpec("fgn", 0.3, 1000, seed=9)).values
    scaled = generate_fgn_davies_harte(GenSpec("fgn", 0.3, 1000, seed=9, sigma=2.5)).values
    np.testing.assert_array_equal(scaled, 2.5 * unit)


@pytest.mark.parametrize("n", [2, 3, 100, 1024, 1000], ids=lambda n: f"n={n}")
def test_output_shape_and_kind(n):
    series = generate_fgn_davies_harte(GenSpec("fgn", 0.4, n, seed=0))
    assert len(series) == n
    assert series.kind is SeriesKind.INCREMENTS
    assert series.meta["H"] == 0.4
    assert np.all(np.isfinite(series.values))


@pytest.mark.parametrize("hurst", [0.01, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99], ids=lambda hurst: f"H={hurst}")
@pytest.mark.parametrize("n", [16, 1000, 4096], ids=lambda n: f"n={n}")
def test_circulant_embedding_is_nonnegative(hurst, n):
    eigenvalues = _circulant_eigenvalues(HurstParam(hurst), n)
    assert eigenvalues.size == 2 * n
    assert np.all(eigenvalues >= 0)


def test_white_noise_lag_one_correlation():
    n = 2**15
    values = generate_fgn_davies_harte(GenSpec("fgn", 0.5, n, seed=4)).values
    rho = sample_autocovariance(values, 1) / sample_autocovariance(values, 0)
    assert abs(rho) < 3 / np.sqrt(n)


def test_lag_one_autocovariance_matches_theory():
    values = generate_fgn_davies_harte(GenSpec("fgn", 0.7, 2**15, seed=4)).values
    assert sample_autocovariance(values, 1) == pytest.approx((2**1.4 - 2) / 2, abs=0.02)


@pytest.mark.parametrize("hurst", [0.1, 0.5, 0.9], ids=lambda hurst: f"H={hurst}")
def test_autocovariance_over_repetitions(hurst):
    n, m = 4096, 40
    paths = [generate_fgn_davies_harte(GenSpec("fgn", hurst, n, seed=17), i).values for i in range(m)]
    estimates = np.array([[sample_autocovariance(values, lag) for lag in range(4)] for values in paths])
    theory = fgn_autocovariance(hurst, 3)
    se = estimates.std(axis=0, ddof=1) / np.sqrt(m)
    # the sample mean biases long-memory autocovariances downwards by about n^(2H-2)
    bias = n ** (2 * hurst - 2)
    assert np.all(np.abs(estimates.mean(axis=0) - theory) <= 4 * se + bias), (estimates.mean(axis=0), theory)


def test_fbm_path_variance():
    n, m, hurst = 1024, 400, 0.3
    finals = np.array(
        [generate(GenSpec("fbm", hurst, n, seed=21), stream_index=i).values[-1] for i in range(m)]
    )
    expected = n ** (2 * hurst)
    se = expected * np.sqrt(2 / m)
    assert abs(np.mean(finals**2) - expected) < 3 * se


def test_fbm_path_convention():
    spec = GenSpec("fbm", 0.6, 64, seed=3)
    increments = generate_fgn_davies_harte(spec).values
    path = generate(spec)
    assert path.kind is SeriesKind.PATH
    assert len(path) == 64
    assert path.values[0] == increments[0]
    with_zero = generate(spec, prepend_zero=True)
    assert len(with_zero) == 65 and with_zero.values[0] == 0.0


def test_ma_coefficients():
    d = 0.3
    psi = arfima_ma_coefficients(d, 4)
    assert psi[0] == 1.0
    assert psi[1] == pytest.approx(d)
    assert psi[2] == pytest.approx(d * (1 + d) / 2)
    np.testing.assert_array_equal(arfima_ma_coefficients(0.0, 5)[1:], 0.0)


def test_arfima_white_noise_is_the_driving_noise():
    spec = GenSpec("arfima", 0.5, 300, seed=8)
    series = generate_arfima(spec, trunc=50)
    noise = gaussian_rng(8).standard_normal(350)
    np.testing.assert_array_equal(series.values, noise[50:])


def test_arfima_matches_direct_convolution():
    spec = GenSpec("arfima", 0.8, 200, seed=12)
    trunc = 64
    series = generate_arfima(spec, trunc=trunc)
    noise = gaussian_rng(12).standard_normal(spec.n + trunc)
    psi = arfima_ma_coefficients(spec.d, trunc)
    expected = np.convolve(noise, psi)[trunc : trunc + spec.n]
    np.testing.assert_allclose(series.values, expected, rtol=1e-9, atol=1e-10)


def test_arfima_long_memory_lag_one():
    d = 0.3
    values = generate_arfima(GenSpec("arfima", 0.5 + d, 2**14, seed=2)).values
    # rho(1) = d / (1 - d) for ARFIMA(0, d, 0)
    rho = sample_autocovariance(values, 1) / sample_autocovariance(values, 0)
    assert rho == pytest.approx(d / (1 - d), abs=0.05)


def test_rng_statistics():
    draws = gaussian_rng(2024, 0).standard_normal(10**6)
    assert abs(draws.mean()) < 0.004
    assert abs(draws.var() - 1) < 0.006


def test_rng_streams_are_reproducible_and_independent():
    np.testing.assert_array_equal(
        gaussian_rng(5, (3, 1)).standard_normal(10), gaussian_rng(5, [3, 1]).standard_normal(10)
    )
    first = gaussian_rng(5, 0).standard_normal(10**5)
    second = gaussian_rng(5, 1).standard_normal(10**5)
    assert abs(np.corrcoef(first, second)[0, 1]) < 0.01


@pytest.mark.parametrize(
    "kwargs, error",
    [
        ({"H": 1.0}, DomainError),
        ({"H": 0.0}, DomainError),
        ({"n": 1}, ConfigurationError),
        ({"n": 10.5}, ConfigurationError),
        ({"seed": -1}, ConfigurationError),
        ({"seed": 2**64}, ConfigurationError),
        ({"sigma": 0.0}, ConfigurationError),
        ({"model": "brownian"}, ConfigurationError),
    ],
    ids=["H_one", "H_zero", "n_one", "n_float", "seed_negative", "seed_large", "sigma_zero", "model"],
)
def test_genspec_validation(kwargs, error):
    with pytest.raises(error):
        GenSpec(**kwargs)


def test_arfima_trunc_validation():
    with pytest.raises(ConfigurationError):
        generate_arfima(GenSpec("arfima", 0.7, 32), trunc=-1)

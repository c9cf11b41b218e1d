# -*- coding: utf-8 -*-
# Copyright (C) 2024 hurst-estimators developers
# SPDX-License-Identifier: Apache-2.0
from math import pi

import numpy as np
import pytest
from hurst_estimators import (
    ConfigurationError,
    DomainError,
    HurstParam,
    Periodogram,
    SpectrumKind,
    SpectrumModel,
    arfima_spectral_density,
    fgn_autocovariance,
    fgn_spectral_density,
    hurwitz_zeta,
    log_gamma,
    normalize_by_geometric_mean,
)
from scipy import integrate, special


hurst_grid = [0.1, 0.3, 0.5, 0.7, 0.9]
frequency_grid = np.linspace(1e-3, pi, 257)


log_gamma_points = [0.01, 0.3, 0.5, 0.8, 0.99, 1.0, 1.2, 1.5, 1.8, 2.0, 2.2, 3.7, 10.0, 42.5, 170.0]
# log Gamma vanishes at 1 and 2, so only a relative tolerance catches cancellation there
log_gamma_roots = [1 - 1e-6, 1 + 1e-6, 2 - 1e-6, 2 + 1e-6, 1 - 1e-12, 2 + 1e-12]


@pytest.mark.parametrize("x", log_gamma_points + log_gamma_roots, ids=lambda x: f"x={x!r}")
def test_log_gamma_matches_reference(x):
    expected = special.gammaln(x)
    assert np.isclose(log_gamma(x), expected, rtol=1e-12, atol=0), f"{log_gamma(x)} != {expected}"


def test_log_gamma_vectorized():
    x = np.linspace(0.05, 30, 101)
    np.testing.assert_allclose(log_gamma(x), special.gammaln(x), rtol=1e-12)


def test_log_gamma_is_relative_accurate_around_roots():
    x = np.concatenate([np.linspace(0.7, 1.3, 61), np.linspace(1.7, 2.3, 61)])
    np.testing.assert_allclose(log_gamma(x), special.gammaln(x), rtol=1e-12)


@pytest.mark.parametrize("x", [0.0, -1.0, np.nan, np.inf])
def test_log_gamma_rejects_non_positive(x):
    with pytest.raises(DomainError):
        log_gamma(x)


@pytest.mark.parametrize("s", [1.05, 1.2, 1.6, 2.0, 2.8, 3.5, 4.0], ids=lambda s: f"s={s}")
def test_hurwitz_zeta_matches_reference(s):
    q = np.concatenate([np.geomspace(1e-4, 0.9, 40), [1.0, 1.5, 2.0, 7.3]])
    np.testing.assert_allclose(hurwitz_zeta(s, q), special.zeta(s, q), rtol=1e-10)


@pytest.mark.parametrize(
    "s, q, expected",
    [(2.0, 1.0, pi**2 / 6), (2.0, 0.5, pi**2 / 2), (1.5, 1.0, 2.6123753486854883)],
    ids=["zeta(2)", "zeta(2,1/2)", "zeta(3/2)"],
)
def test_hurwitz_zeta_closed_forms(s, q, expected):
    assert np.isclose(hurwitz_zeta(s, q), expected, rtol=1e-10)


@pytest.mark.parametrize("s", [1.2, 2.0, 3.8])
@pytest.mark.parametrize("q", [0.01, 0.25, 0.5, 0.99])
def test_hurwitz_zeta_recurrence(s, q):
    assert np.isclose(hurwitz_zeta(s, q), q**-s + hurwitz_zeta(s, q + 1), rtol=1e-12)


@pytest.mark.parametrize("s, q", [(1.0, 0.5), (0.5, 0.5), (2.0, 0.0), (2.0, -0.3)])
def test_hurwitz_zeta_domain(s, q):
    with pytest.raises(DomainError):
        hurwitz_zeta(s, q)


@pytest.mark.parametrize(
    "model",
    [SpectrumModel.hurwitz(), SpectrumModel.truncation(5000)],
    ids=lambda model: str(model),
)
def test_fgn_density_is_flat_for_white_noise(model):
    density = fgn_spectral_density(0.5, frequency_grid, model=model)
    np.testing.assert_allclose(density, 1 / (2 * pi), rtol=1e-8 if model.kind is SpectrumKind.HURWITZ else 1e-4)


@pytest.mark.parametrize("K, rtol", [(1, 0.06), (4, 2e-3), (10, 1e-4)], ids=lambda value: str(value))
def test_paxson_density_is_nearly_flat_for_white_noise(K, rtol):
    density = fgn_spectral_density(0.5, frequency_grid, model=SpectrumModel.paxson(K))
    np.testing.assert_allclose(density, 1 / (2 * pi), rtol=rtol)


@pytest.mark.parametrize("hurst", hurst_grid, ids=lambda hurst: f"H={hurst}")
def test_paxson_agrees_with_hurwitz(hurst):
    hurwitz = fgn_spectral_density(hurst, frequency_grid, model=SpectrumModel.hurwitz())
    paxson = fgn_spectral_density(hurst, frequency_grid, model=SpectrumModel.paxson(8))
    gap = np.max(np.abs(paxson / hurwitz - 1))
    assert gap < 1e-3, f"Paxson K=8 deviates from Hurwitz by {gap}"


@pytest.mark.parametrize("hurst", hurst_grid, ids=lambda hurst: f"H={hurst}")
def test_paxson_improves_truncation(hurst):
    hurwitz = fgn_spectral_density(hurst, frequency_grid, model=SpectrumModel.hurwitz())
    truncated = fgn_spectral_density(hurst, frequency_grid, model=SpectrumModel.truncation(10))
    paxson = fgn_spectral_density(hurst, frequency_grid, model=SpectrumModel.paxson(10))
    assert np.max(np.abs(paxson / hurwitz - 1)) < np.max(np.abs(truncated / hurwitz - 1))


@pytest.mark.parametrize("hurst", [0.2, 0.5, 0.8], ids=lambda hurst: f"H={hurst}")
def test_taylor_matches_hurwitz_at_low_frequency(hurst):
    low = np.array([1e-4])
    taylor = fgn_spectral_density(hurst, low, model=SpectrumModel.taylor())
    hurwitz = fgn_spectral_density(hurst, low, model=SpectrumModel.hurwitz())
    assert abs(taylor[0] / hurwitz[0] - 1) < 1e-3, f"{taylor} vs {hurwitz}"


@pytest.mark.parametrize("hurst", hurst_grid, ids=lambda hurst: f"H={hurst}")
def test_fgn_density_positive_and_scales_with_sigma2(hurst):
    unit = fgn_spectral_density(hurst, frequency_grid)
    scaled = fgn_spectral_density(hurst, frequency_grid, sigma2=3.0)
    assert np.all(unit > 0)
    np.testing.assert_allclose(scaled, 3.0 * unit, rtol=1e-14)


@pytest.mark.parametrize("hurst", [0.3, 0.7], ids=lambda hurst: f"H={hurst}")
def test_fgn_density_integrates_to_variance(hurst):
    # int_{-pi}^{pi} f = gamma(0) = sigma2
    half, _ = integrate.quad(
        lambda x: fgn_spectral_density(hurst, [x], model=SpectrumModel.hurwitz())[0], 0, pi, limit=200
    )
    assert np.isclose(2 * half, 1.0, rtol=1e-5), 2 * half


def test_paxson_gap_shrinks_with_K():
    hurwitz = fgn_spectral_density(0.3, frequency_grid, model=SpectrumModel.hurwitz())
    gaps = [
        np.max(np.abs(fgn_spectral_density(0.3, frequency_grid, model=SpectrumModel.paxson(K)) / hurwitz - 1))
        for K in (1, 2, 4, 8)
    ]
    assert all(later < earlier for earlier, later in zip(gaps, gaps[1:])), gaps


def test_paxson_single_frequency_accuracy():
    # the two-integral tail correction leaves an O(K^(-s-1)) residual
    hurwitz = fgn_spectral_density(0.7, [pi / 4], model=SpectrumModel.hurwitz())[0]
    paxson = fgn_spectral_density(0.7, [pi / 4], model=SpectrumModel.paxson(8))[0]
    assert abs(paxson / hurwitz - 1) < 1e-5


def test_long_memory_density_diverges_at_origin():
    density = fgn_spectral_density(0.8, [1e-3, 1e-2, 1e-1], model=SpectrumModel.hurwitz())
    assert density[0] > density[1] > density[2]


@pytest.mark.parametrize("lambdas", [[0.0, 1.0], [-0.5], [pi + 0.1], [np.nan]])
def test_fgn_density_rejects_frequencies_outside_domain(lambdas):
    with pytest.raises(DomainError):
        fgn_spectral_density(0.5, lambdas)


@pytest.mark.parametrize("hurst", [0.0, 1.0, -0.2, 1.5, np.nan])
def test_hurst_outside_open_interval_is_rejected(hurst):
    with pytest.raises(DomainError):
        fgn_spectral_density(hurst, [1.0])
    with pytest.raises(DomainError):
        HurstParam(hurst)


def test_arfima_density_closed_form():
    np.testing.assert_allclose(arfima_spectral_density(0.5, frequency_grid), 1 / (2 * pi), rtol=1e-15)
    value = arfima_spectral_density(0.8, [pi])[0]
    assert np.isclose(value, 2 ** (1 - 1.6) / (2 * pi), rtol=1e-14)


def test_arfima_density_is_self_normalized():
    n = 4096
    values = arfima_spectral_density(0.8, Periodogram.fourier_frequencies(n), sigma2=2 * pi)
    assert abs(np.exp(np.mean(np.log(values))) - 1) < 1e-2


@pytest.mark.parametrize(
    "values, expected",
    [([3.0, 3.0, 3.0], [1.0, 1.0, 1.0]), ([1.0, 4.0], [0.5, 2.0]), ([np.e, np.e**3], [1 / np.e, np.e])],
    ids=["constant", "pair", "exponentials"],
)
def test_geometric_mean_normalization_examples(values, expected):
    np.testing.assert_allclose(normalize_by_geometric_mean(values), expected, rtol=1e-13)


def test_geometric_mean_normalization():
    values = np.array([0.5, 2.0, 4.0, 1.0 / 4.0])
    normalized = normalize_by_geometric_mean(values)
    assert np.isclose(np.exp(np.mean(np.log(normalized))), 1.0, rtol=1e-14)
    np.testing.assert_allclose(normalize_by_geometric_mean(7.5 * values), normalized, rtol=1e-13)


@pytest.mark.parametrize("values", [[], [1.0, 0.0], [1.0, -2.0], [np.inf]])
def test_geometric_mean_normalization_rejects_invalid(values):
    with pytest.raises(DomainError):
        normalize_by_geometric_mean(values)


def test_fgn_autocovariance_values():
    gamma = fgn_autocovariance(0.75, 3)
    assert gamma[0] == 1.0
    assert np.isclose(gamma[1], 0.41421356, atol=1e-8)
    assert np.isclose(fgn_autocovariance(0.7, 1)[1], (2**1.4 - 2) / 2, rtol=1e-14)
    np.testing.assert_array_equal(fgn_autocovariance(0.5, 10)[1:], 0.0)
    assert np.all(fgn_autocovariance(0.3, 5)[1:] < 0)
    assert np.all(fgn_autocovariance(0.8, 5)[1:] > 0)


def test_fgn_autocovariance_sums_to_path_variance():
    n, hurst = 10, 0.3
    gamma = fgn_autocovariance(hurst, n - 1, sigma2=2.0)
    lags = np.arange(1, n)
    total = n * gamma[0] + 2 * np.sum((n - lags) * gamma[1:])
    assert np.isclose(total, 2.0 * n ** (2 * hurst), rtol=1e-12)


def test_spectrum_model_defaults_and_names():
    assert SpectrumModel().K == 10
    assert SpectrumModel.truncation().K == 200
    assert str(SpectrumModel.paxson()) == "paxson,K=10"
    assert str(SpectrumModel.hurwitz()) == "hurwitz"
    assert SpectrumModel.from_name("Paxson", 8) == SpectrumModel.paxson(8)
    assert SpectrumModel.from_name("arfima").kind is SpectrumKind.ARFIMA
    assert not SpectrumModel.arfima().is_fgn


@pytest.mark.parametrize(
    "build",
    [
        lambda: SpectrumModel.from_name("wavelet"),
        lambda: SpectrumModel(SpectrumKind.HURWITZ, 5),
        lambda: SpectrumModel.paxson(0),
        lambda: SpectrumModel.truncation(2.5),
    ],
    ids=["unknown", "hurwitz_with_K", "zero_K", "float_K"],
)
def test_spectrum_model_validation(build):
    with pytest.raises(ConfigurationError):
        build()


def test_arfima_model_is_not_an_fgn_spectrum():
    with pytest.raises(ConfigurationError):
        fgn_spectral_density(0.5, [1.0], model=SpectrumModel.arfima())

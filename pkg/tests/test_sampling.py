"""Seeded Monte Carlo engine: reproducibility and moment matching."""

import math
from fractions import Fraction

import numpy as np
import pytest

from ghkernel import (
    RngStream,
    chi_even_moment,
    chi_merge_samples,
    collect_stats,
    exact,
    flt,
    gh_eval,
    graczyk_lhs,
    inner_product_lhs_samples,
    inner_product_rhs_samples,
    ks_two_sample,
    matrix_trace_rhs_samples,
    matrix_trace_samples,
    moment_match,
    moment_match_exact,
    matrix_polarization,
    polarization_pair,
    sample_chi,
    sample_gaussian,
)

COUNT = 200_000


def test_streams_are_reproducible_and_independent():
    a = sample_gaussian(RngStream(7, 0), 1000)
    b = sample_gaussian(RngStream(7, 0), 1000)
    c = sample_gaussian(RngStream(7, 1), 1000)
    d = sample_gaussian(RngStream(8, 0), 1000)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert not np.array_equal(a, d)
    assert collect_stats(a) == collect_stats(b)


def test_gaussian_moments():
    samples = sample_gaussian(RngStream(123, 0), COUNT)
    stats = collect_stats(samples, order=4)
    verdicts = moment_match_exact(stats, {1: 0.0, 2: 1.0, 3: 0.0, 4: 3.0}, z=5.0)
    assert all(v.passed for v in verdicts)


def test_odd_sample_count_is_supported():
    samples = sample_gaussian(RngStream(5, 0), 12345)
    assert samples.shape == (12345,)


def test_chi_samples():
    k = 3
    samples = sample_chi(RngStream(9, 0), k, COUNT)
    assert (samples >= 0).all()
    stats = collect_stats(samples, order=4)
    want_2 = float(chi_even_moment(k, 1))
    want_4 = float(chi_even_moment(k, 2))
    verdicts = moment_match_exact(stats, {2: want_2, 4: want_4}, z=5.0)
    assert all(v.passed for v in verdicts)
    with pytest.raises(ValueError):
        sample_chi(RngStream(9, 0), 0, 10)


def test_chi_even_moments_integer_cases():
    # E chi_k^2 = k and E chi_k^4 = k (k + 2)
    for k in range(1, 10):
        assert chi_even_moment(k, 1) == Fraction(k)
        assert chi_even_moment(k, 2) == Fraction(k * (k + 2))
        assert chi_even_moment(k, 0) == 1


def test_inner_product_lhs_noise_free_case():
    samples = inner_product_lhs_samples([3, 4], [3, 4], 0.0, RngStream(1, 0), 100)
    assert np.allclose(samples, 25.0)


def test_inner_product_lhs_mean():
    samples = inner_product_lhs_samples([3, 4], [1, -2], 1.0, RngStream(2, 0), COUNT)
    stats = collect_stats(samples, order=1)
    verdicts = moment_match_exact(stats, {1: 3 - 8}, z=5.0)
    assert all(v.passed for v in verdicts)


def test_inner_product_lhs_scalar_second_moment():
    # n=1 oracle: E[((x+sqrt(p)N)(y+sqrt(p)M))^2] = (x^2+p)(y^2+p)
    x, y, p = 2.0, -1.5, 0.75
    samples = inner_product_lhs_samples([x], [y], p, RngStream(3, 0), COUNT)
    stats = collect_stats(samples, order=2)
    want = (x * x + p) * (y * y + p)
    verdicts = moment_match_exact(stats, {2: want}, z=5.0)
    assert all(v.passed for v in verdicts)


def test_inner_product_rejects_negative_p():
    with pytest.raises(ValueError):
        inner_product_lhs_samples([1], [1], -1.0, RngStream(0, 0), 10)
    pair = polarization_pair((flt(1),), (flt(1),))
    with pytest.raises(ValueError):
        inner_product_rhs_samples(pair, 1, -1.0, RngStream(0, 0), 10)


def test_inner_product_rhs_noise_free_case():
    pair = polarization_pair((flt(3), flt(4)), (flt(3), flt(4)))
    samples = inner_product_rhs_samples(pair, 2, 0.0, RngStream(4, 0), 100)
    assert np.allclose(samples, 25.0)


def test_inner_product_rhs_mean():
    # the polarization scalars preserve the inner product: x*y = 3*1 + 4*(-2)
    pair = polarization_pair((flt(3), flt(4)), (flt(1), flt(-2)))
    samples = inner_product_rhs_samples(pair, 2, 1.0, RngStream(6, 0), COUNT)
    stats = collect_stats(samples, order=1)
    verdicts = moment_match_exact(stats, {1: -5.0}, z=5.0)
    assert all(v.passed for v in verdicts)


def test_inner_product_distributional_match():
    xv, yv = (flt(3), flt(4)), (flt(3), flt(4))
    pair = polarization_pair(xv, yv)
    lhs = inner_product_lhs_samples([3, 4], [3, 4], 1.0, RngStream(7, 0), COUNT)
    rhs = inner_product_rhs_samples(pair, 2, 1.0, RngStream(7, 1), COUNT)
    verdicts = moment_match(collect_stats(lhs), collect_stats(rhs), order=4, z=5.0)
    assert all(v.passed for v in verdicts)


def test_moment_match_same_stream_always_passes():
    stats = collect_stats(sample_gaussian(RngStream(11, 0), 10_000))
    verdicts = moment_match(stats, stats, order=4, z=5.0)
    assert all(v.passed for v in verdicts)
    assert all(v.difference == 0.0 for v in verdicts)


def test_moment_match_detects_shifted_mean():
    a = sample_gaussian(RngStream(12, 0), COUNT)
    b = sample_gaussian(RngStream(12, 1), COUNT) + 1.0
    verdicts = moment_match(collect_stats(a), collect_stats(b), order=1, z=5.0)
    assert not verdicts[0].passed


def test_moment_match_order_validation():
    stats = collect_stats(sample_gaussian(RngStream(13, 0), 1000), order=2)
    with pytest.raises(ValueError):
        moment_match(stats, stats, order=4)


def test_matrix_trace_samples_mean_and_match():
    xm = [[3.0, 0.0], [0.0, 0.0]]
    ym = [[0.0, 4.0], [0.0, 0.0]]
    lhs = matrix_trace_samples(xm, ym, RngStream(21, 0), COUNT)
    stats = collect_stats(lhs, order=1)
    # E tr((x+N)^t (y+M)) = tr(x^t y) = 0 here
    verdicts = moment_match_exact(stats, {1: 0.0}, z=5.0)
    assert all(v.passed for v in verdicts)

    pair = matrix_polarization(
        ((flt(3), flt(0)), (flt(0), flt(0))),
        ((flt(0), flt(4)), (flt(0), flt(0))),
    )
    rhs = matrix_trace_rhs_samples(pair, 4, RngStream(21, 1), COUNT)
    verdicts = moment_match(collect_stats(lhs), collect_stats(rhs), order=4, z=5.0)
    assert all(v.passed for v in verdicts)


def test_matrix_trace_degenerate_one_by_one():
    lhs = matrix_trace_samples([[0.0]], [[0.0]], RngStream(31, 0), COUNT)
    pair = matrix_polarization(((flt(0),),), ((flt(0),),))
    rhs = matrix_trace_rhs_samples(pair, 1, RngStream(31, 1), COUNT)
    verdicts = moment_match(collect_stats(lhs), collect_stats(rhs), order=4, z=5.0)
    assert all(v.passed for v in verdicts)


def test_chi_merge_matches_direct_chi():
    a, b = 3, 4
    merged = chi_merge_samples(RngStream(41, 0), a, b, COUNT)
    direct = sample_chi(RngStream(41, 1), a + b, COUNT)
    verdicts = moment_match(collect_stats(merged), collect_stats(direct), order=4, z=5.0)
    assert all(v.passed for v in verdicts)
    stats = collect_stats(merged, order=4)
    exact_verdicts = moment_match_exact(
        stats,
        {2: float(chi_even_moment(a + b, 1)), 4: float(chi_even_moment(a + b, 2))},
        z=5.0,
    )
    assert all(v.passed for v in exact_verdicts)


def test_sampling_cross_validates_polynomial_values():
    """Empirical E (x + sqrt(2p) N)^m against the exact evaluation."""
    x = 1.5
    normals = sample_gaussian(RngStream(51, 0), COUNT)
    for p in (0.5, 1.0, 2.0):
        shifted = x + math.sqrt(2.0 * p) * normals
        stats = collect_stats(shifted, order=6)
        # Fraction(p) is exact for these dyadic p values.
        targets = {
            m: float(gh_eval(m, exact(Fraction(3, 2)), exact(Fraction(p))).re)
            for m in range(1, 7)
        }
        verdicts = moment_match_exact(stats, targets, z=5.0)
        assert all(v.passed for v in verdicts)


def test_exact_moment_identity_agrees_with_sampling():
    """Empirical E[lhs^M] vs the exact moment from the identity engine."""
    xv, yv = (3.0, 4.0), (3.0, 4.0)
    p = 1.0
    lhs = inner_product_lhs_samples(xv, yv, p, RngStream(61, 0), COUNT)
    stats = collect_stats(lhs, order=4)
    exact_xv = (exact(3), exact(4))
    targets = {}
    for big_m in range(1, 5):
        moment = graczyk_lhs(big_m, exact_xv, exact_xv, exact(Fraction(1, 2)))
        targets[big_m] = float(moment.re * math.factorial(big_m))
    verdicts = moment_match_exact(stats, targets, z=5.0)
    assert all(v.passed for v in verdicts)


def test_ks_diagnostic_smoke():
    a = sample_gaussian(RngStream(71, 0), 50_000)
    b = sample_gaussian(RngStream(71, 1), 50_000)
    statistic, pvalue = ks_two_sample(a, b)
    assert statistic < 0.02
    assert pvalue > 1e-6
    shifted = b + 0.5
    statistic, _ = ks_two_sample(a, shifted)
    assert statistic > 0.1


def test_collect_stats_validation():
    with pytest.raises(ValueError):
        collect_stats(np.array([1.0]))
    with pytest.raises(ValueError):
        collect_stats(np.ones((3, 3)))

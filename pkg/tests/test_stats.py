import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from couplaw import bucket, correlation_matrix, fit, fit_series
from couplaw.errors import DegenerateFit, EmptyInput, ZeroVariance
from couplaw.graphs import DegreeSeries
from couplaw.stats import Bucket, BucketedHistogram, bucket_bounds
from couplaw.synth import sample_power_law


def series(values, name="test"):
    return DegreeSeries(name, tuple((f"c{i}", v) for i, v in enumerate(values)))


def exact_histogram(exponent, constant=1000.0, n_buckets=8, base=2.0):
    """Histogram whose frequencies sit exactly on C * midpoint**-exponent."""
    bounds = [int(base ** k) for k in range(n_buckets + 1)]
    buckets = []
    for lo, hi in zip(bounds, bounds[1:]):
        mid = math.sqrt(lo * hi)
        buckets.append(Bucket(lo, hi, 1, mid, constant * mid ** (-exponent)))
    return BucketedHistogram(tuple(buckets), base, "density")


# --- bucketing -------------------------------------------------------------


def test_bucket_example():
    h = bucket([1, 1, 2, 3, 5, 8], base=2.0, normalization="raw")
    spans = [(b.lower, b.upper, b.count) for b in h.buckets]
    assert spans == [(1, 2, 2), (2, 4, 2), (4, 8, 1), (8, 16, 1)]


def test_single_value():
    h = bucket([1])
    (b,) = h.buckets
    assert (b.lower, b.upper, b.count) == (1, 2, 1)
    assert b.midpoint == pytest.approx(math.sqrt(2), abs=1e-15)


def test_density_normalization_divides_by_width():
    h = bucket([4, 5, 6], base=2.0, normalization="density")
    last = h.buckets[-1]
    assert (last.lower, last.upper, last.count) == (4, 8, 3)
    assert last.frequency == pytest.approx(3 / 4)


def test_bucket_counts_match_bruteforce_oracle():
    values = sample_power_law(2.0, 10_000, 500, rng_seed=11)
    h = bucket(values)
    bounds = bucket_bounds(max(values), 2.0)
    # independent O(n*k) binning
    for b in h.buckets:
        expected = sum(1 for v in values if b.lower <= v < b.upper)
        assert b.count == expected
    assert [b.lower for b in h.buckets] == bounds[:-1]


def test_empty_input():
    with pytest.raises(EmptyInput):
        bucket([])


def test_zero_values_rejected():
    with pytest.raises(ValueError):
        bucket([0, 1, 2])


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=10_000), min_size=1,
                max_size=300))
def test_bucketing_conserves_counts(values):
    h = bucket(values)
    assert sum(b.count for b in h.buckets) == len(values)
    # buckets partition [1, max]
    assert h.buckets[0].lower == 1
    assert h.buckets[-1].upper > max(values)
    for a, b in zip(h.buckets, h.buckets[1:]):
        assert a.upper == b.lower


def test_fractional_base_bounds_strictly_increase():
    bounds = bucket_bounds(100, 1.5)
    assert bounds == sorted(set(bounds))
    assert bounds[0] == 1 and bounds[-1] > 100


# --- fitting ---------------------------------------------------------------


def test_exact_line_recovers_exponent():
    for a in (0.5, 1.0, 2.0, 3.663):
        result = fit(exact_histogram(a))
        assert result.status == "ok"
        assert result.exponent == pytest.approx(a, abs=1e-9)
        assert result.r_squared == pytest.approx(1.0, abs=1e-9)
        assert result.ci_lower <= result.exponent <= result.ci_upper


def test_ols_hand_oracle():
    # midpoints 10^0..10^4, frequencies 10^y: the log-log points are
    # x = [0,1,2,3,4], y = [3.0, 2.1, 1.4, 0.5, -0.2]. By hand:
    # slope -0.8, intercept 2.96, SSE 0.012, SE(slope) 0.02,
    # t(0.975, 3) = 3.182446305284263, r^2 = 1600/1603.
    ys = [3.0, 2.1, 1.4, 0.5, -0.2]
    buckets = tuple(
        Bucket(1, 2, 1, 10.0 ** k, 10.0 ** y) for k, y in enumerate(ys)
    )
    result = fit(BucketedHistogram(buckets, 10.0, "density"))
    assert result.exponent == pytest.approx(0.8, abs=1e-9)
    assert result.intercept == pytest.approx(2.96, abs=1e-9)
    half_width = 3.182446305284263 * 0.02
    assert result.ci_lower == pytest.approx(0.8 - half_width, abs=1e-9)
    assert result.ci_upper == pytest.approx(0.8 + half_width, abs=1e-9)
    assert result.r_squared == pytest.approx(1600 / 1603, abs=1e-9)
    assert result.buckets_used == 5


def test_scale_equivariance():
    base_hist = exact_histogram(1.7)
    noisy = BucketedHistogram(
        tuple(
            Bucket(b.lower, b.upper, b.count, b.midpoint,
                   b.frequency * (1.1 if i % 2 else 0.9))
            for i, b in enumerate(base_hist.buckets)
        ),
        base_hist.base, base_hist.normalization,
    )
    scaled = BucketedHistogram(
        tuple(
            Bucket(b.lower, b.upper, b.count, b.midpoint, b.frequency * 37.0)
            for b in noisy.buckets
        ),
        noisy.base, noisy.normalization,
    )
    r1, r2 = fit(noisy), fit(scaled)
    assert r1.exponent == pytest.approx(r2.exponent, abs=1e-9)
    assert r1.r_squared == pytest.approx(r2.r_squared, abs=1e-9)
    assert (r1.ci_upper - r1.ci_lower) == pytest.approx(
        r2.ci_upper - r2.ci_lower, abs=1e-9)
    assert r2.intercept == pytest.approx(r1.intercept + math.log10(37.0), abs=1e-9)


def test_raw_exponent_is_density_minus_one():
    values = sample_power_law(2.5, 10_000, 2048, rng_seed=3)
    density = fit(bucket(values, normalization="density"))
    raw = fit(bucket(values, normalization="raw"))
    # exact for power-of-two bucket widths, up to the width-1 first bucket
    assert raw.exponent == pytest.approx(density.exponent - 1.0, abs=1e-6)


def test_insufficient_data_below_min_buckets():
    result = fit(bucket([1, 1, 2, 3]), min_buckets=5)
    assert result.status == "insufficient_data"
    assert result.exponent is None and result.r_squared is None


def test_degenerate_single_bucket():
    with pytest.raises(DegenerateFit):
        fit(bucket([1, 1, 1]), min_buckets=1)


def test_fit_series_all_zeros():
    assert fit_series(series([0] * 40)).status == "insufficient_data"


def test_fit_series_sparse_interfaces():
    # 30 classes, only 4 implement anything: one non-empty bucket
    result = fit_series(series([1, 1, 1, 1] + [0] * 26), min_buckets=5)
    assert result.status == "insufficient_data"
    assert result.buckets_used == 1


def test_fit_series_recovers_sampled_exponent():
    result = fit_series(series(sample_power_law(2.5, 10_000, 2048, rng_seed=240)))
    assert result.status == "ok"
    assert 2.35 <= result.exponent <= 2.65
    assert result.r_squared >= 0.95


# --- correlation -----------------------------------------------------------


def test_identical_columns_correlate_fully():
    m = series([1, 5, 2, 9], "methods")
    f = series([1, 5, 2, 9], "fields")
    c = series([3, 1, 4, 1], "constructors")
    matrix = correlation_matrix(m, f, c)
    assert matrix.coefficient("methods", "fields") == pytest.approx(1.0, abs=1e-12)


def test_proportional_and_antiproportional():
    m = series([1, 2, 3, 4], "methods")
    f = series([2, 4, 6, 8], "fields")
    c = series([8, 6, 4, 2], "constructors")
    matrix = correlation_matrix(m, f, c)
    assert matrix.coefficient("methods", "fields") == pytest.approx(1.0, abs=1e-12)
    assert matrix.coefficient("methods", "constructors") == pytest.approx(
        -1.0, abs=1e-12)


def test_matrix_symmetric_unit_diagonal():
    m = series([1, 2, 3, 5], "m")
    f = series([4, 1, 2, 2], "f")
    c = series([0, 3, 1, 7], "c")
    matrix = correlation_matrix(m, f, c)
    for i in range(3):
        assert matrix.matrix[i][i] == 1.0
        for j in range(3):
            assert matrix.matrix[i][j] == matrix.matrix[j][i]
            assert -1.0 <= matrix.matrix[i][j] <= 1.0


def test_zero_variance_column():
    with pytest.raises(ZeroVariance):
        correlation_matrix(series([1, 2, 3]), series([4, 4, 4]), series([1, 0, 2]))


def test_mismatched_class_sets_rejected():
    bad = DegreeSeries("fields", (("other", 1), ("names", 2), ("here", 3)))
    with pytest.raises(ValueError):
        correlation_matrix(series([1, 2, 3]), bad, series([1, 0, 2]))

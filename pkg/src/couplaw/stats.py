"""Exponential bucketing and log-log power-law regression.

Counts are grouped into buckets whose widths grow geometrically (base 2
by default), then log10(frequency) is regressed on log10(midpoint) by
ordinary least squares. The negated slope estimates the power-law
exponent; 95% confidence bounds use the Student t quantile at n-2
degrees of freedom. With density normalization (count divided by bucket
width) the fitted exponent estimates the distribution's exponent
directly; raw mode reproduces the uncorrected convention and estimates
exponent minus one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats as sps

from .errors import DegenerateFit, EmptyInput, ZeroVariance

DEFAULT_BASE = 2.0
DEFAULT_MIN_BUCKETS = 5


@dataclass(frozen=True)
class Bucket:
    lower: int  # inclusive
    upper: int  # exclusive
    count: int
    midpoint: float  # geometric mean of the bounds
    frequency: float


@dataclass(frozen=True)
class BucketedHistogram:
    buckets: tuple[Bucket, ...]
    base: float
    normalization: str  # "density" or "raw"

    def nonempty(self) -> list[Bucket]:
        return [b for b in self.buckets if b.count > 0]


@dataclass(frozen=True)
class FitResult:
    status: str  # "ok" or "insufficient_data"
    buckets_used: int
    exponent: float | None = None
    intercept: float | None = None
    ci_lower: float | None = None
    ci_upper: float | None = None
    r_squared: float | None = None

    @staticmethod
    def insufficient(buckets_used: int) -> "FitResult":
        return FitResult(status="insufficient_data", buckets_used=buckets_used)


@dataclass(frozen=True)
class CorrelationMatrix:
    labels: tuple[str, ...]
    matrix: tuple[tuple[float, ...], ...]

    def coefficient(self, a: str, b: str) -> float:
        return self.matrix[self.labels.index(a)][self.labels.index(b)]


def bucket_bounds(max_value: int, base: float) -> list[int]:
    """Integer bucket boundaries 1 = b0 < b1 < ... covering [1, max_value].

    Boundary k is base**k rounded up, forced strictly increasing so every
    bucket is non-empty as an interval.
    """
    bounds = [1]
    k = 1
    while bounds[-1] <= max_value:
        nxt = math.ceil(base ** k)
        if nxt <= bounds[-1]:
            nxt = bounds[-1] + 1
        bounds.append(nxt)
        k += 1
    return bounds


def bucket(values, base: float = DEFAULT_BASE,
           normalization: str = "density") -> BucketedHistogram:
    """Group positive integer values into exponentially sized buckets."""
    values = list(values)
    if not values:
        raise EmptyInput("no values to bucket")
    if any(v < 1 for v in values):
        raise ValueError("bucket() expects positive integers; filter zeros first")
    if normalization not in ("density", "raw"):
        raise ValueError(f"unknown normalization {normalization!r}")
    arr = np.asarray(values)
    bounds = bucket_bounds(int(arr.max()), base)
    counts = np.histogram(arr, bins=bounds)[0]
    buckets = []
    for lo, hi, count in zip(bounds, bounds[1:], counts):
        width = hi - lo
        freq = count / width if normalization == "density" else float(count)
        buckets.append(Bucket(lo, hi, int(count), math.sqrt(lo * hi), freq))
    return BucketedHistogram(tuple(buckets), base, normalization)


def fit(histogram: BucketedHistogram,
        min_buckets: int = DEFAULT_MIN_BUCKETS) -> FitResult:
    """OLS of log10(frequency) on log10(midpoint) over non-empty buckets."""
    points = histogram.nonempty()
    if len(points) < min_buckets:
        return FitResult.insufficient(len(points))
    x = np.log10([b.midpoint for b in points])
    y = np.log10([b.frequency for b in points])
    if np.ptp(x) == 0:
        raise DegenerateFit("all bucket midpoints are equal")
    n = len(points)
    x_mean, y_mean = x.mean(), y.mean()
    sxx = float(((x - x_mean) ** 2).sum())
    sxy = float(((x - x_mean) * (y - y_mean)).sum())
    slope = sxy / sxx
    intercept = y_mean - slope * x_mean
    residuals = y - (intercept + slope * x)
    sse = float((residuals ** 2).sum())
    syy = float(((y - y_mean) ** 2).sum())
    r_squared = 1.0 if syy == 0 else (sxy * sxy) / (sxx * syy)
    if n > 2:
        se_slope = math.sqrt(sse / (n - 2) / sxx)
        t_crit = float(sps.t.ppf(0.975, n - 2))
        half_width = t_crit * se_slope
    else:
        half_width = math.inf
    exponent = -slope
    return FitResult(
        status="ok",
        buckets_used=n,
        exponent=exponent,
        intercept=intercept,
        ci_lower=exponent - half_width,
        ci_upper=exponent + half_width,
        r_squared=r_squared,
    )


def fit_series(series, base: float = DEFAULT_BASE,
               normalization: str = "density",
               min_buckets: int = DEFAULT_MIN_BUCKETS) -> FitResult:
    """Fit one degree series: drop zero counts, bucket, regress.

    Sparse series come back with status insufficient_data rather than an
    error, mirroring how systems with too few data points are reported.
    """
    values = [v for v in series.values() if v > 0]
    if not values:
        return FitResult.insufficient(0)
    histogram = bucket(values, base=base, normalization=normalization)
    try:
        return fit(histogram, min_buckets=min_buckets)
    except DegenerateFit:
        return FitResult.insufficient(len(histogram.nonempty()))


def fit_points(histogram: BucketedHistogram) -> list[tuple[float, float]]:
    """(log10 midpoint, log10 frequency) pairs for plotting."""
    return [(math.log10(b.midpoint), math.log10(b.frequency))
            for b in histogram.nonempty()]


def correlation_matrix(methods, fields, constructors) -> CorrelationMatrix:
    """Pearson correlations of per-class member counts (zeros included)."""
    series = {"methods": methods, "fields": fields, "constructors": constructors}
    names = [n for n, _ in methods.counts]
    columns = []
    for label, s in series.items():
        if [n for n, _ in s.counts] != names:
            raise ValueError("series are not over the same class set")
        col = np.asarray(s.values(), dtype=float)
        if np.ptp(col) == 0:
            raise ZeroVariance(label)
        columns.append(col)
    matrix = np.corrcoef(np.vstack(columns))
    # exact unit diagonal / symmetry regardless of float rounding
    matrix = (matrix + matrix.T) / 2.0
    np.fill_diagonal(matrix, 1.0)
    return CorrelationMatrix(
        labels=tuple(series),
        matrix=tuple(tuple(float(v) for v in row) for row in matrix),
    )

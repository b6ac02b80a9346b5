"""Closed-form degree and area laws for k-connected AB random geometric
graphs, evaluated in log space.

Degree laws (counts of users per station):

* ``poisson_degree`` -- lattice layouts: every order-k cell has measure
  total/n (or spacing d in 1D), so the degree is Poisson with mean
  lambda_a * k * total/n, resp. lambda_a * k * d.
* ``compound_poisson_erlang`` -- 1D Poisson layout: the cumulative order-k
  interval is Erlang(2k, 2*lambda_b); mixing Poisson(lambda_a * x) over it
  gives a negative-binomial form with r = 2k, p = 2*lambda_b/(2*lambda_b +
  lambda_a).
* ``compound_poisson_gamma`` -- 2D Poisson layout: the unit-mean-k gamma fit
  of the cumulative area (shape a, rate a/k) mixed with Poisson gives the
  negative-binomial form with r = a, p = a/(a + k*lambda), where lambda =
  lambda_a/lambda_b.

Area laws: ``gamma_area`` is the fitted gamma (mean k); ``erlang_area`` is
the exact 1D Erlang(2k, 2*lambda_b).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammainc, gammaln

from .errors import DataError

POISSON_DEGREE = "poisson_degree"
CPE = "compound_poisson_erlang"
CPG = "compound_poisson_gamma"
GAMMA_AREA = "gamma_area"
ERLANG_AREA = "erlang_area"

FAMILIES = (POISSON_DEGREE, CPE, CPG, GAMMA_AREA, ERLANG_AREA)

DEGREE_FAMILIES = (POISSON_DEGREE, CPE, CPG)


@dataclass(frozen=True)
class DistSpec:
    """Family plus parameters of one analytic law.

    ``lambda_a`` and ``lambda_b`` are the user/station intensities (per m or
    m^2); lattice layouts instead carry ``total_measure`` and ``n_points``
    (2D) or ``spacing`` (1D); ``shape`` is the fitted gamma shape for the
    compound-gamma laws.
    """

    family: str
    k: int = 1
    lambda_a: float | None = None
    lambda_b: float | None = None
    total_measure: float | None = None
    n_points: int | None = None
    spacing: float | None = None
    shape: float | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DataError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.k < 1 or self.k != int(self.k):
            raise DataError(f"k must be an integer >= 1, got {self.k}")
        for name in ("lambda_b", "total_measure", "spacing", "shape"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise DataError(f"{name} must be positive, got {v}")
        if self.lambda_a is not None and self.lambda_a < 0:
            raise DataError(f"lambda_a must be >= 0, got {self.lambda_a}")
        if self.n_points is not None and self.n_points < 1:
            raise DataError(f"n_points must be >= 1, got {self.n_points}")
        need = {
            POISSON_DEGREE: ("lambda_a",),
            CPE: ("lambda_a", "lambda_b"),
            CPG: ("lambda_a", "lambda_b", "shape"),
            GAMMA_AREA: ("shape",),
            ERLANG_AREA: ("lambda_b",),
        }[self.family]
        for name in need:
            if getattr(self, name) is None:
                raise DataError(f"family {self.family} needs {name}")
        if self.family == POISSON_DEGREE:
            grid_2d = self.total_measure is not None and self.n_points is not None
            if not grid_2d and self.spacing is None:
                raise DataError(
                    "poisson_degree needs total_measure and n_points, or spacing"
                )

    @property
    def intensity_ratio(self) -> float:
        """lambda = lambda_a / lambda_b."""
        if self.lambda_a is None or self.lambda_b is None:
            raise DataError(f"family {self.family} has no intensity ratio")
        return self.lambda_a / self.lambda_b

    @property
    def poisson_mean(self) -> float:
        """Mean degree of the lattice law: lambda_a * k * total/n (2D) or
        lambda_a * k * spacing (1D)."""
        if self.family != POISSON_DEGREE:
            raise DataError("poisson_mean is defined for the poisson_degree family")
        if self.total_measure is not None and self.n_points is not None:
            per_cell = self.total_measure / self.n_points
        else:
            per_cell = self.spacing
        return self.lambda_a * self.k * per_cell


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    variance: float
    cv: float


def _check_counts(n) -> np.ndarray:
    arr = np.asarray(n)
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(arr == np.floor(arr)):
            raise DataError("degree values must be integers")
    if np.any(arr < 0):
        raise DataError("degree values must be >= 0")
    return arr.astype(np.int64)


def _scalar_like(n, values: np.ndarray):
    return float(values[()]) if np.asarray(n).ndim == 0 else values


def _log_nb_pmf(n: np.ndarray, r: float, log_p: float, log_1mp: float) -> np.ndarray:
    return (
        gammaln(n + r)
        - gammaln(n + 1.0)
        - gammaln(r)
        + r * log_p
        + n * log_1mp
    )


def poisson_degree_pmf(n, spec: DistSpec):
    """Poisson pmf at the lattice mean; the mu = 0 edge is a unit mass at 0."""
    if spec.family != POISSON_DEGREE:
        raise DataError("spec family must be poisson_degree")
    arr = _check_counts(n)
    mu = spec.poisson_mean
    if mu == 0.0:
        return _scalar_like(n, (arr == 0).astype(float))
    out = np.exp(arr * math.log(mu) - mu - gammaln(arr + 1.0))
    return _scalar_like(n, out)


def cpe_pmf(n, spec: DistSpec):
    """Degree pmf of the 1D Poisson layout (compound Poisson-Erlang)."""
    if spec.family != CPE:
        raise DataError("spec family must be compound_poisson_erlang")
    arr = _check_counts(n)
    if spec.lambda_a == 0.0:
        return _scalar_like(n, (arr == 0).astype(float))
    r = 2.0 * spec.k
    denom = 2.0 * spec.lambda_b + spec.lambda_a
    log_p = math.log(2.0 * spec.lambda_b) - math.log(denom)
    log_1mp = math.log(spec.lambda_a) - math.log(denom)
    out = np.exp(_log_nb_pmf(arr.astype(float), r, log_p, log_1mp))
    return _scalar_like(n, out)


def cpg_pmf(n, spec: DistSpec):
    """Degree pmf of the fitted 2D Poisson layout (compound Poisson-gamma)."""
    if spec.family != CPG:
        raise DataError("spec family must be compound_poisson_gamma")
    arr = _check_counts(n)
    if spec.lambda_a == 0.0:
        return _scalar_like(n, (arr == 0).astype(float))
    a = spec.shape
    klam = spec.k * spec.intensity_ratio
    log_p = math.log(a) - math.log(a + klam)
    log_1mp = math.log(klam) - math.log(a + klam)
    out = np.exp(_log_nb_pmf(arr.astype(float), a, log_p, log_1mp))
    return _scalar_like(n, out)


def _check_nonneg_x(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise DataError("area values must be >= 0")
    return arr


def gamma_area_pdf_cdf(x, spec: DistSpec):
    """Density and CDF of the fitted cumulative-area law: gamma with shape
    ``spec.shape`` and rate shape/k, so the mean is exactly k."""
    if spec.family != GAMMA_AREA:
        raise DataError("spec family must be gamma_area")
    arr = _check_nonneg_x(x)
    a = spec.shape
    rate = a / spec.k
    with np.errstate(divide="ignore", invalid="ignore"):
        log_pdf = a * math.log(rate) - gammaln(a) + (a - 1.0) * np.log(arr) - rate * arr
    pdf = np.where(arr > 0, np.exp(log_pdf), 0.0 if a > 1 else np.inf if a < 1 else rate)
    cdf = gammainc(a, rate * arr)
    if np.asarray(x).ndim == 0:
        return float(pdf[()]), float(cdf[()])
    return pdf, cdf


def erlang_area_pdf(x, spec: DistSpec):
    """Density of the exact 1D cumulative-area law: Erlang(2k, 2*lambda_b)."""
    if spec.family != ERLANG_AREA:
        raise DataError("spec family must be erlang_area")
    arr = _check_nonneg_x(x)
    shape = 2 * spec.k
    rate = 2.0 * spec.lambda_b
    with np.errstate(divide="ignore"):
        log_pdf = shape * math.log(rate) - gammaln(shape) + (shape - 1.0) * np.log(arr) - rate * arr
    pdf = np.where(arr > 0, np.exp(log_pdf), 0.0)
    return _scalar_like(x, pdf)


def coefficient_of_variation(spec: DistSpec) -> SummaryStats:
    """Closed-form mean, variance and cv for any family.

    Degree laws: the lattice cv is mu^(-1/2); the 1D Poisson cv is
    sqrt((1 + lambda/2) / (k lambda)); the fitted 2D cv is
    sqrt(1/(k lambda) + 1/shape). All three decrease in k.
    """
    k = spec.k
    if spec.family == POISSON_DEGREE:
        mean = spec.poisson_mean
        var = mean
    elif spec.family == CPE:
        lam = spec.intensity_ratio
        mean = k * lam
        var = k * lam + 0.5 * k * lam * lam
    elif spec.family == CPG:
        klam = k * spec.intensity_ratio
        mean = klam
        var = klam + klam * klam / spec.shape
    elif spec.family == GAMMA_AREA:
        mean = float(k)
        var = k * k / spec.shape
    else:  # ERLANG_AREA
        mean = k / spec.lambda_b
        var = 2 * k / (2.0 * spec.lambda_b) ** 2
    if mean <= 0:
        raise DataError("cv is undefined for zero mean")
    return SummaryStats(mean=mean, variance=var, cv=math.sqrt(var) / mean)


def degree_pmf(n, spec: DistSpec):
    """Dispatch to the degree pmf of ``spec.family``."""
    fn = {POISSON_DEGREE: poisson_degree_pmf, CPE: cpe_pmf, CPG: cpg_pmf}
    if spec.family not in fn:
        raise DataError(f"{spec.family} is not a degree law")
    return fn[spec.family](n, spec)


def support_bound(spec: DistSpec) -> int:
    """n beyond which a degree law's tail is negligible: mean + 20 sd."""
    stats = coefficient_of_variation(spec)
    return int(math.ceil(stats.mean + 20.0 * math.sqrt(stats.variance))) + 1


def pmf_table(spec: DistSpec, n_max: int | None = None):
    """(n, pmf) table for n = 0..n_max plus the remaining tail mass.

    With ``n_max=None`` the table stops at mean + 20 sd or once the
    cumulative mass reaches 1 - 1e-9, whichever is first.
    """
    if n_max is not None and n_max < 0:
        raise DataError("n_max must be >= 0")
    limit = support_bound(spec) if n_max is None else n_max
    ns = np.arange(limit + 1)
    probs = degree_pmf(ns, spec)
    if n_max is None:
        cum = np.cumsum(probs)
        stop = int(np.searchsorted(cum, 1.0 - 1e-9))
        if stop < limit:
            ns, probs = ns[: stop + 1], probs[: stop + 1]
    tail = max(0.0, 1.0 - float(probs.sum()))
    return np.column_stack([ns, probs]), tail

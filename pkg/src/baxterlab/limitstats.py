"""Exact distribution statistics of the refined Baxter counts and finite-n
measurements of their normal-limit behaviour.

For fixed n the counts D(n, k) induce a lattice random variable with exact
probabilities p(n, k) = D(n, k)/B_n, mean mu_n, and variance sigma_n^2, all
rationals.  The module measures how close the normalized distribution is to
the standard normal — the Kolmogorov (CDF) distance and the local
(density) distance — reducing both suprema over the real line to exact
finite candidate sets before any rounding.  It also cross-checks the
moments through the mixed recurrence identities, an exact algebraic
identity valid for every n, and reports the limit ratios whose targets are
1/2, 1/4, and 1/12.

Exact rationals are converted to double precision only at the reporting
boundary; the normal CDF itself is accurate to well below 1e-12.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .exact import refined_baxter_row
from .recurrences import builtin_recurrence, generate_terms

_SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class DistributionSummary:
    """Exact probabilities and moments of the rise statistic at fixed n."""

    n: int
    probs: tuple[Fraction, ...]  # p(n, k) for k = 0..n
    mu: Fraction
    sigma2: Fraction


@dataclass(frozen=True)
class NormalityReport:
    """Finite-n distances to the standard normal limit."""

    n: int
    kolmogorov: float
    local_sup: float


def distribution(n: int) -> DistributionSummary:
    """Exact p(n, k), mean, and variance of the refined-count distribution."""
    if n < 2:
        raise ValueError(f"distribution requires n >= 2, got n={n}")
    row = refined_baxter_row(n)
    total = sum(row)
    probs = tuple(Fraction(d, total) for d in row)
    mu = sum((k * p for k, p in enumerate(probs)), Fraction(0))
    second_falling = sum((k * (k - 1) * p for k, p in enumerate(probs)), Fraction(0))
    sigma2 = second_falling + mu - mu * mu
    return DistributionSummary(n=n, probs=probs, mu=mu, sigma2=sigma2)


def standard_normal_cdf(x: float) -> float:
    """Phi(x), the standard normal CDF, to well within 1e-12 absolute error."""
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def _normal_density(x: float) -> float:
    return math.exp(-0.5 * x * x) / _SQRT_2PI


def kolmogorov_distance(n: int) -> float:
    """sup_x |F_n(mu + x sigma) - Phi(x)| for the exact distribution at n.

    The supremum of the difference against a continuous CDF is attained at
    the atoms, so it equals the larger one-sided gap over all jump points.
    """
    summary = distribution(n)
    if summary.sigma2 == 0:
        raise ArithmeticError(f"zero variance at n={n}")
    sigma = math.sqrt(float(summary.sigma2))
    best = 0.0
    cumulative = Fraction(0)
    for k, p in enumerate(summary.probs):
        x = float(k - summary.mu) / sigma
        phi = standard_normal_cdf(x)
        below = abs(float(cumulative) - phi)
        cumulative += p
        at = abs(float(cumulative) - phi)
        best = max(best, below, at)
    return best


def local_limit_distance(n: int) -> float:
    """sup_x |sigma p(n, floor(mu + x sigma)) - normal density at x|.

    Piecewise over k: on the x-interval mapping to k the first term is the
    constant sigma*p(n, k), so each piece's supremum occurs at an endpoint
    or at x = 0 (the density's peak) when the interval contains it.  The k
    values just outside [0, n] carry probability zero and cover the tails.
    """
    summary = distribution(n)
    if summary.sigma2 == 0:
        raise ArithmeticError(f"zero variance at n={n}")
    sigma = math.sqrt(float(summary.sigma2))
    best = 0.0
    for k in range(-1, n + 2):
        p = summary.probs[k] if 0 <= k <= n else Fraction(0)
        level = sigma * float(p)
        x_lo = float(k - summary.mu) / sigma
        x_hi = float(k + 1 - summary.mu) / sigma
        candidates = [x_lo, x_hi]
        if x_lo <= 0.0 <= x_hi:
            candidates.append(0.0)
        for x in candidates:
            best = max(best, abs(level - _normal_density(x)))
    return best


def normality_report(n: int) -> NormalityReport:
    return NormalityReport(
        n=n, kolmogorov=kolmogorov_distance(n), local_sup=local_limit_distance(n)
    )


# ---------------------------------------------------------------------------
# Memoized exact table of B_n and the derivative totals, grown on demand.
# ---------------------------------------------------------------------------


class _MomentTable:
    """Shared exact values B_n, f'_n(1), f''_n(1); single writer, then read-only."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._values: dict[str, list[int]] = {"baxter": [], "d1": [], "d2": []}
        self._prefix = {"baxter": [1], "d1": [0], "d2": [0]}  # index-0 conventions

    def _sequence(self, name: str, upto: int) -> list[int]:
        with self._lock:
            vals = self._values[name]
            if len(vals) <= upto:
                rec = builtin_recurrence(name)
                terms = generate_terms(rec, max(upto, rec.valid_from))
                full = self._prefix[name] + [int(t) for t in terms]
                self._values[name] = full
                vals = full
            return vals

    def baxter_values(self, upto: int) -> list[int]:
        return self._sequence("baxter", upto)

    def first_derivative_values(self, upto: int) -> list[int]:
        return self._sequence("d1", upto)

    def second_derivative_values(self, upto: int) -> list[int]:
        return self._sequence("d2", upto)


_TABLE = _MomentTable()


def mean_value(n: int) -> Fraction:
    """mu_n = f'_n(1)/f_n(1), exactly."""
    if n < 1:
        raise ValueError(f"mean_value requires n >= 1, got n={n}")
    b = _TABLE.baxter_values(n)
    d1 = _TABLE.first_derivative_values(n)
    return Fraction(d1[n], b[n])


def variance_value(n: int) -> Fraction:
    """sigma_n^2 = f''_n(1)/f_n(1) + mu_n - mu_n^2, exactly."""
    if n < 1:
        raise ValueError(f"variance_value requires n >= 1, got n={n}")
    b = _TABLE.baxter_values(n)
    d2 = _TABLE.second_derivative_values(n)
    mu = mean_value(n)
    return Fraction(d2[n], b[n]) + mu - mu * mu


@dataclass(frozen=True)
class LimitRatioReport:
    """Finite-n ratios against their limit targets 1/2, 1/4, and 1/12.

    ``mean_is_exact_half`` records the exact symmetry identity
    mu_n = (n+1)/2; the normalized mean therefore equals 1/2 + 1/(2n) with
    no higher-order correction.
    """

    n: int
    slope_step: int
    mean_ratio: float  # f'_n(1) / (n f_n(1)), target 1/2
    second_moment_ratio: float  # f''_n(1) / (n^2 f_n(1)), target 1/4
    variance_slope: float  # (sigma^2_{n+m} - sigma^2_n)/m, target 1/12
    mean_is_exact_half: bool


def limit_ratio_report(n: int, slope_step: int = 200) -> LimitRatioReport:
    """Measure the three moment ratios at n (exactly, then rounded once).

    The variance slope uses a difference quotient over ``slope_step`` so the
    unknown additive constant in the variance expansion cancels.
    """
    if n < 3:
        raise ValueError(f"limit_ratio_report requires n >= 3, got n={n}")
    if slope_step < 1:
        raise ValueError(f"slope_step must be positive, got {slope_step}")
    b = _TABLE.baxter_values(n + slope_step)
    d1 = _TABLE.first_derivative_values(n + slope_step)
    d2 = _TABLE.second_derivative_values(n + slope_step)
    mean_ratio = Fraction(d1[n], n * b[n])
    second_ratio = Fraction(d2[n], n * n * b[n])
    slope = (variance_value(n + slope_step) - variance_value(n)) / slope_step
    return LimitRatioReport(
        n=n,
        slope_step=slope_step,
        mean_ratio=float(mean_ratio),
        second_moment_ratio=float(second_ratio),
        variance_slope=float(slope),
        mean_is_exact_half=mean_value(n) == Fraction(n + 1, 2),
    )


def moment_via_recurrence(n: int) -> tuple[Fraction, Fraction]:
    """Both moment ratios f'_n(1)/f_n(1) and f''_n(1)/f_n(1) recovered from
    the solved mixed-identity system, entirely in exact arithmetic.

    Inputs are the consecutive ratios f_{n+1}(1)/f_n(1) and
    f'_{n+1}(1)/f'_n(1) together with the identity coefficients at x = 1;
    the result must agree exactly with the directly computed moments.
    """
    if n < 2:
        raise ValueError(f"moment_via_recurrence requires n >= 2, got n={n}")
    b = _TABLE.baxter_values(n + 1)
    d1 = _TABLE.first_derivative_values(n + 1)
    value_ratio = Fraction(b[n + 1], b[n])
    derivative_ratio = Fraction(d1[n + 1], d1[n])

    den = (n + 3) * (n + 4)
    a_1 = Fraction(11 * n * n + 29 * n + 12, den)
    b_1 = Fraction(-12 * n, den)
    c_1 = Fraction(12, den)
    cubic = 6 * n**3 + 28 * n**2 + 37 * n + 12
    at_1 = Fraction(den, cubic)
    bt_1 = Fraction(7 * n * n + 16 * n, cubic)
    ct_1 = Fraction(-6 * (n + 2), cubic)

    denominator = at_1 * derivative_ratio + bt_1 - ct_1 * b_1 / c_1
    if denominator == 0:
        raise ArithmeticError(f"vanishing denominator in the solved system at n={n}")
    first = (1 - ct_1 / c_1 * (value_ratio - a_1)) / denominator
    second = (value_ratio - a_1 - b_1 * first) / c_1
    return first, second

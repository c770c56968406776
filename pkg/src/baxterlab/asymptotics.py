"""Exact power-scale asymptotics of P-recursive sequences.

Given a recurrence a_0(n) f(n) = sum_j a_j(n) f(n-j), the growth of its
solutions is governed by the characteristic polynomial formed from the
top-degree coefficients of the a_j.  For a rational characteristic root
``lam``, the module expands the ansatz

    f(n) = lam^n * n^nu * (1 + b_1/n + b_2/n^2 + ...)

by substituting it into the recurrence and collecting powers of 1/n.  Each
a_j(n) lam^{-j} (1 - j/n)^{nu - s} contributes a truncated series in 1/n
whose coefficients are polynomials in nu; the first series order that does
not vanish identically is the indicial polynomial (its degree equals the
multiplicity of the root), and every later order determines one b_s by a
linear equation.  All coefficients are exact rationals.

Supported class: single power scale, rational lam and nu, no logarithm
factors.  A vanishing linear coefficient for some b_s (resonance) either
leaves a free parameter, which is set to zero, or signals that a logarithm
term would be required, in which case the branch is truncated and flagged.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial, rational_roots
from .recurrences import PolyCoeffRecurrence, generate_terms


class BranchStatus(enum.Enum):
    COMPLETE = "complete"
    RESONANCE_FREE_PARAMETER = "resonance_free_parameter"
    LOG_REQUIRED = "log_required"


class UnsupportedExpansionError(ValueError):
    """The recurrence's solutions fall outside the supported power-scale class."""


@dataclass(frozen=True)
class AsymptoticBranch:
    """One formal solution lam^n n^nu (1 + sum_s b_s n^-s) of a recurrence."""

    lam: Fraction
    nu: Fraction
    coeffs: tuple[Fraction, ...]  # b_1 .. b_M; shorter if truncated
    order: int  # requested number of coefficients M
    status: BranchStatus

    @property
    def truncated(self) -> bool:
        return len(self.coeffs) < self.order


def characteristic_polynomial(rec: PolyCoeffRecurrence) -> Polynomial:
    """Characteristic polynomial from the top-degree coefficients.

    With d the maximum degree over the a_j and c_j the n^d coefficient of
    a_j, this is c_0 L^l - sum_{j>=1} c_j L^{l-j}, normalized to primitive
    integer coefficients with positive leading term.
    """
    d = max(p.degree for p in rec.coeffs)
    ell = rec.order
    top = [p.coefficient(int(d)) for p in rec.coeffs]
    if top[0] == 0:
        raise ValueError(
            f"leading degree drop in '{rec.name}': a_0 has degree below {d}"
        )
    coeffs = [Fraction(0)] * (ell + 1)
    coeffs[ell] = top[0]
    for j in range(1, ell + 1):
        coeffs[ell - j] = -top[j]
    return Polynomial(coeffs).primitive()


def characteristic_roots(
    rec: PolyCoeffRecurrence,
) -> tuple[list[tuple[Fraction, int]], Polynomial]:
    """Rational characteristic roots with multiplicities plus residual factor."""
    return rational_roots(characteristic_polynomial(rec))


def _binomial_series_polys(upto: int) -> list[Polynomial]:
    """C(nu, r) for r = 0..upto as polynomials in nu."""
    nu = Polynomial([0, 1])
    out = [Polynomial([1])]
    for r in range(1, upto + 1):
        out.append(out[-1] * (nu - (r - 1)) * Fraction(1, r))
    return out


def _series_orders(
    rec: PolyCoeffRecurrence, lam: Fraction, upto: int
) -> list[Polynomial]:
    """Series coefficients Q_t(nu), t = 0..upto, of the substituted ansatz.

    Q_t is the coefficient of n^(d-t) in sum_j eps_j a_j(n) lam^{-j}
    (1 - j/n)^nu, with eps_0 = +1 and eps_j = -1 for j >= 1.  The order-u
    equation of the full expansion reads sum_{s+t=u} b_s Q_t(nu - s) = 0.
    """
    d = int(max(p.degree for p in rec.coeffs))
    binom_nu = _binomial_series_polys(upto)
    orders = [Polynomial() for _ in range(upto + 1)]
    for j, a_j in enumerate(rec.coeffs):
        eps = 1 if j == 0 else -1
        weight = Fraction(lam) ** (-j)
        for t in range(upto + 1):
            acc = Polynomial()
            for r in range(t + 1):
                c = a_j.coefficient(d - (t - r))
                if c:
                    acc = acc + c * Fraction(-j) ** r * binom_nu[r]
            if not acc.is_zero():
                orders[t] = orders[t] + eps * weight * acc
    return orders


def expand_branch(
    rec: PolyCoeffRecurrence, lam: int | Fraction, order: int
) -> list[AsymptoticBranch]:
    """All power-scale branches of the recurrence at the characteristic root lam.

    Returns one branch per rational root nu of the indicial polynomial,
    sorted by increasing nu, each carrying up to ``order`` correction
    coefficients b_1..b_M.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    lam = Fraction(lam)
    cp = characteristic_polynomial(rec)
    if cp(lam) != 0:
        raise ValueError(f"{lam} is not a characteristic root of '{rec.name}'")

    d = int(max(p.degree for p in rec.coeffs))
    # The indicial order never exceeds d + order of the recurrence for a
    # nonzero operator; the slack below is a safety margin, not a tuning knob.
    search_limit = d + rec.order + 2
    orders = _series_orders(rec, lam, search_limit + order)

    step = next((t for t in range(1, search_limit + 1) if not orders[t].is_zero()), None)
    if step is None:
        raise UnsupportedExpansionError(
            f"no nonvanishing series order found for '{rec.name}' at {lam}"
        )
    indicial = orders[step]
    roots, residual = rational_roots(indicial)
    if not roots:
        raise UnsupportedExpansionError(
            f"indicial polynomial of '{rec.name}' at {lam} has no rational roots "
            f"(degree {indicial.degree} residual); unsupported exponent class"
        )

    branches = []
    for nu, _mult in sorted(roots):
        coeffs: list[Fraction] = []
        status = BranchStatus.COMPLETE
        b = [Fraction(1)]
        for s in range(1, order + 1):
            lead = indicial(nu - s)
            rhs = Fraction(0)
            for i in range(s):
                q = orders[step + s - i]
                rhs += b[i] * q(nu - i)
            if lead == 0:
                if rhs == 0:
                    # free parameter: the general solution may add a multiple
                    # of the lower branch; normalize it away
                    b.append(Fraction(0))
                    coeffs.append(Fraction(0))
                    status = BranchStatus.RESONANCE_FREE_PARAMETER
                else:
                    status = BranchStatus.LOG_REQUIRED
                    break
            else:
                value = -rhs / lead
                b.append(value)
                coeffs.append(value)
        branches.append(
            AsymptoticBranch(
                lam=lam, nu=nu, coeffs=tuple(coeffs), order=order, status=status
            )
        )
    return branches


def residual_series(rec: PolyCoeffRecurrence, branch: AsymptoticBranch) -> list[Fraction]:
    """Series coefficients left after substituting the branch back in.

    Entry u is the order-u coefficient sum_{s+t=u} b_s Q_t(nu - s) with
    b_0 = 1; a correct branch gives all zeros through its truncation order.
    """
    b = [Fraction(1), *branch.coeffs]
    upto = len(b) + int(max(p.degree for p in rec.coeffs)) + rec.order + 2
    orders = _series_orders(rec, branch.lam, upto)
    step = next(t for t in range(1, upto) if not orders[t].is_zero())
    out = []
    for u in range(step + len(b) - 1 + 1):
        total = Fraction(0)
        for s in range(min(u, len(b) - 1) + 1):
            total += b[s] * orders[u - s](branch.nu - s)
        out.append(total)
    return out


def dominant_branch(rec: PolyCoeffRecurrence, order: int) -> AsymptoticBranch:
    """The branch at the characteristic root of strictly largest magnitude.

    Requires that root to be rational and simple; if the characteristic
    polynomial keeps a rootless residual factor, dominance is certified
    against its Cauchy bound.
    """
    roots, residual = characteristic_roots(rec)
    if not roots:
        raise UnsupportedExpansionError(
            f"'{rec.name}' has no rational characteristic roots"
        )
    top, top_mult = max(roots, key=lambda rm: abs(rm[0]))
    ties = [r for r, _ in roots if abs(r) == abs(top)]
    if len(ties) > 1:
        raise ValueError(f"dominant characteristic roots of '{rec.name}' tie: {ties}")
    if top_mult != 1:
        raise ValueError(f"dominant root {top} of '{rec.name}' is not simple")
    if residual.degree >= 1:
        lead = abs(residual.leading_coefficient)
        bound = 1 + max(abs(c) for c in residual.coefficients[:-1]) / lead
        if abs(top) <= bound:
            raise ValueError(
                f"cannot certify dominance of {top}: residual factor of degree "
                f"{residual.degree} has Cauchy bound {bound}"
            )
    branches = expand_branch(rec, top, order)
    if len(branches) != 1:
        raise ValueError(
            f"expected a single branch at simple root {top}, got {len(branches)}"
        )
    return branches[0]


def ratio_diagnostic(rec: PolyCoeffRecurrence, n: int) -> float:
    """Consecutive-term ratio f(n+1)/f(n) from exact terms, as a double."""
    terms = generate_terms(rec, n + 1)
    f_n = terms[n - rec.seed_start]
    if f_n == 0:
        raise ZeroDivisionError(f"{rec.name}({n}) = 0")
    return float(terms[n + 1 - rec.seed_start] / f_n)

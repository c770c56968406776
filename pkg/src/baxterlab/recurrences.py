"""Linear recurrences with polynomial coefficients, term generation, and
exact verification of the identities satisfied by the Baxter polynomial
family.

A recurrence is stored in homogeneous form

    a_0(n) f(n) - a_1(n) f(n-1) - ... - a_l(n) f(n-l) = 0,

with ``a_0`` explicit, a validity threshold, and exact seed values for the
``l`` indices below the threshold.  Four built-ins are provided: the Baxter
number recurrence ("baxter"), the recurrences for the first and second
derivative totals of the Baxter polynomial at 1 ("d1", "d2"), and the
binomial-cube sum recurrence ("franel").

The module also verifies two mixed identities that express the polynomial
one index up through derivatives at the same index (and conversely), and a
three-element annihilator basis of mixed shift/derivative operators, all by
exact polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .exact import baxter_number, baxter_polynomial, binomial_row
from .poly import Polynomial, rational_roots

#: the indeterminate n, for building coefficient polynomials
_N = Polynomial([0, 1])


@dataclass(frozen=True)
class PolyCoeffRecurrence:
    """Order-l recurrence a_0(n) f(n) = sum_j a_j(n) f(n-j) with seeds."""

    name: str
    coeffs: tuple[Polynomial, ...]  # a_0 .. a_l
    valid_from: int
    seeds: tuple[Fraction, ...]  # values at indices valid_from-l .. valid_from-1
    integral: bool = True  # terms are known integers; generation asserts it

    def __post_init__(self) -> None:
        if len(self.coeffs) < 2:
            raise ValueError("recurrence needs order >= 1")
        if len(self.seeds) != self.order:
            raise ValueError(
                f"expected {self.order} seeds, got {len(self.seeds)}"
            )
        # a_0 must be nonzero on the whole validity range; its integer roots
        # are finitely many, so check none lies at or above valid_from.
        roots, _ = rational_roots(self.coeffs[0])
        for r, _mult in roots:
            if r.denominator == 1 and r >= self.valid_from:
                raise ValueError(
                    f"leading coefficient of '{self.name}' vanishes at n={r}"
                )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def seed_start(self) -> int:
        """Index of the first seed value."""
        return self.valid_from - self.order


_SEEDS: dict[str, dict[int, int]] = {
    "baxter": {1: 1, 2: 2},
    "d1": {1: 1, 2: 3, 3: 12},
    "d2": {1: 0, 2: 2, 3: 14},
    "franel": {0: 1, 1: 2},
}

_VALID_FROM = {"baxter": 3, "d1": 4, "d2": 4, "franel": 2}


def _coefficients(name: str) -> tuple[Polynomial, ...]:
    n = _N
    if name == "baxter":
        return (
            (n + 2) * (n + 3),
            7 * n * n + 7 * n - 2,
            8 * (n - 1) * (n - 2),
        )
    if name == "d1":
        return (
            (3 * n - 2) * (n + 3) * (n + 2) * (n + 1),
            6 * (n + 1) * (3 * n**3 + 5 * n**2 - 4),
            3 * (n - 2) * (15 * n**3 + 6 * n**2 - 7 * n - 6),
            8 * (3 * n + 1) * (n - 3) * (n - 2) * (n - 1),
        )
    if name == "d2":
        return (
            (9 * n - 7) * (n + 3) * (n + 2) * (n - 2),
            6 * (9 * n**4 + 5 * n**3 - 12 * n**2 - 20 * n + 4),
            3 * (n - 1) * (45 * n**3 - 77 * n**2 - 50 * n + 8),
            8 * (9 * n + 2) * (n - 1) * (n - 2) * (n - 3),
        )
    if name == "franel":
        # (n+2)^2 u(n+2) = (7n^2+21n+16) u(n+1) + 8(n+1)^2 u(n), re-indexed
        # so that the top term is u(n): valid for n >= 2.
        return (
            n * n,
            7 * n * n - 7 * n + 2,
            8 * (n - 1) * (n - 1),
        )
    raise ValueError(f"unknown recurrence {name!r}")


def franel_number(n: int) -> int:
    """Direct binomial-cube sum, the independent oracle for 'franel'."""
    if n < 0:
        raise ValueError(f"franel_number requires n >= 0, got n={n}")
    return sum(b**3 for b in binomial_row(n))


def derive_seed(name: str, index: int) -> Fraction:
    """Recompute one seed value from first principles (no stored constants)."""
    if name == "baxter":
        return Fraction(baxter_number(index))
    if name == "d1":
        return baxter_polynomial(index).derivative()(1)
    if name == "d2":
        return baxter_polynomial(index).derivative(2)(1)
    if name == "franel":
        return Fraction(franel_number(index))
    raise ValueError(f"unknown recurrence {name!r}")


class SeedMismatchError(RuntimeError):
    """A stored seed constant disagrees with its first-principles value."""


def builtin_recurrence(name: str, seed_check: bool = False) -> PolyCoeffRecurrence:
    """One of the built-in recurrences: baxter, d1, d2, or franel.

    With ``seed_check`` the seeds are re-derived from the exact closed forms
    and compared against the stored constants; a mismatch raises
    :class:`SeedMismatchError`.
    """
    if name not in _SEEDS:
        raise ValueError(f"unknown recurrence {name!r}; expected one of {sorted(_SEEDS)}")
    stored = _SEEDS[name]
    seeds = {idx: Fraction(v) for idx, v in stored.items()}
    if seed_check:
        for idx in sorted(stored):
            derived = derive_seed(name, idx)
            if derived != seeds[idx]:
                raise SeedMismatchError(
                    f"seed {name}[{idx}]: stored {seeds[idx]}, derived {derived}"
                )
        seeds = {idx: derive_seed(name, idx) for idx in stored}
    ordered = tuple(seeds[idx] for idx in sorted(seeds))
    return PolyCoeffRecurrence(
        name=name,
        coeffs=_coefficients(name),
        valid_from=_VALID_FROM[name],
        seeds=ordered,
    )


def generate_terms(rec: PolyCoeffRecurrence, upto: int) -> list[Fraction]:
    """Terms f(seed_start), ..., f(upto) by exact forward recursion.

    Index i of the result holds f(rec.seed_start + i).  For recurrences
    declared integral, every division by a_0(n) is asserted exact.
    """
    if upto < rec.valid_from:
        raise ValueError(
            f"upto={upto} is below the validity threshold {rec.valid_from}"
        )
    vals: list[Fraction] = list(rec.seeds)
    for n in range(rec.valid_from, upto + 1):
        rhs = Fraction(0)
        for j in range(1, rec.order + 1):
            rhs += rec.coeffs[j](n) * vals[n - j - rec.seed_start]
        value = rhs / rec.coeffs[0](n)
        if rec.integral and value.denominator != 1:
            raise ArithmeticError(
                f"term {rec.name}({n}) = {value} is not an integer"
            )
        vals.append(value)
    return vals


@dataclass
class VerificationReport:
    """Outcome of an exact residual check over an index range."""

    name: str
    start: int
    stop: int
    checked: int = 0
    failures: list[tuple[int, Fraction]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_recurrence(
    rec: PolyCoeffRecurrence,
    oracle: Callable[[int], int | Fraction],
    start: int,
    stop: int,
) -> VerificationReport:
    """Check a_0(n) f(n) - sum_j a_j(n) f(n-j) == 0 against oracle values.

    The oracle must supply exact values on [start - order, stop].  Every
    failing index is recorded with its nonzero residual.
    """
    if start < rec.valid_from:
        raise ValueError(
            f"start={start} is below the validity threshold {rec.valid_from}"
        )
    if stop < start:
        raise ValueError(f"empty range [{start}, {stop}]")
    cache = {m: Fraction(oracle(m)) for m in range(start - rec.order, stop + 1)}
    report = VerificationReport(name=rec.name, start=start, stop=stop)
    for n in range(start, stop + 1):
        residual = rec.coeffs[0](n) * cache[n]
        for j in range(1, rec.order + 1):
            residual -= rec.coeffs[j](n) * cache[n - j]
        report.checked += 1
        if residual != 0:
            report.failures.append((n, residual))
    return report


# ---------------------------------------------------------------------------
# Mixed identities relating the polynomial family across one index step.
# ---------------------------------------------------------------------------

#: identity expressing f_{n+1}(x) through f_n and its first two derivatives
NEXT_FROM_DERIVATIVES = "next_from_derivatives"
#: identity expressing f_n(x) through f'_{n+1}, f'_n, and f''_n
VALUE_FROM_NEXT_DERIVATIVE = "value_from_next_derivative"

MIXED_IDENTITIES = (NEXT_FROM_DERIVATIVES, VALUE_FROM_NEXT_DERIVATIVE)


@dataclass
class IdentityReport:
    """Result of checking a polynomial identity at one index."""

    name: str
    n: int
    residual: Polynomial

    @property
    def passed(self) -> bool:
        return self.residual.is_zero()


def verify_mixed_identity(n: int, which: str) -> IdentityReport:
    """Verify one of the mixed identities at index n as an exact polynomial
    identity in x (denominators cleared)."""
    if n < 2:
        raise ValueError(f"mixed identities hold for n >= 2, got n={n}")
    p = baxter_polynomial(n)
    d1 = p.derivative()
    d2 = p.derivative(2)
    if which == NEXT_FROM_DERIVATIVES:
        # (n+3)(n+4) f_{n+1} = ((10n^2+25n+12)x + n^2+4n) f_n
        #                      - 3x((5n+4)x - (n+4)) f_n' + 6x^2(x+1) f_n''
        lhs = (n + 3) * (n + 4) * baxter_polynomial(n + 1)
        rhs = (
            Polynomial([n * n + 4 * n, 10 * n * n + 25 * n + 12]) * p
            + Polynomial([0, 3 * (n + 4), -3 * (5 * n + 4)]) * d1
            + Polynomial([0, 0, 6, 6]) * d2
        )
    elif which == VALUE_FROM_NEXT_DERIVATIVE:
        # (6n^3+28n^2+37n+12) f_n = (n+3)(n+4) f_{n+1}'
        #     + ((8n^2+23n+12)x - (n+3)(n+4)) f_n' - 3(n+2)x(x+1) f_n''
        lhs = (6 * n**3 + 28 * n**2 + 37 * n + 12) * p
        rhs = (
            (n + 3) * (n + 4) * baxter_polynomial(n + 1).derivative()
            + Polynomial([-(n + 3) * (n + 4), 8 * n * n + 23 * n + 12]) * d1
            + Polynomial([0, -3 * (n + 2), -3 * (n + 2)]) * d2
        )
    else:
        raise ValueError(f"unknown identity {which!r}; expected one of {MIXED_IDENTITIES}")
    return IdentityReport(name=which, n=n, residual=lhs - rhs)


# ---------------------------------------------------------------------------
# Annihilating operators in the shift S: f_n -> f_{n+1} and derivative D: d/dx.
# ---------------------------------------------------------------------------

#: coefficient of one operator term: ((n_power, x_power, value), ...)
CoeffData = tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class OreOperatorExpr:
    """Operator sum_i coeff_i(n, x) S^{shift_i} D^{deriv_i} acting on the family."""

    name: str
    terms: tuple[tuple[int, int, CoeffData], ...]

    def coefficient_at(self, shift: int, deriv: int, n: int) -> Polynomial:
        """The (shift, deriv) coefficient with the numeric n substituted."""
        for s, d, data in self.terms:
            if (s, d) == (shift, deriv):
                return _coefficient_poly(data, n)
        return Polynomial()


def _coefficient_poly(data: CoeffData, n: int) -> Polynomial:
    out: dict[int, int] = {}
    for npow, xpow, value in data:
        out[xpow] = out.get(xpow, 0) + value * n**npow
    size = max(out) + 1 if out else 0
    return Polynomial([out.get(k, 0) for k in range(size)])


def _op(name: str, *terms: tuple[int, int, dict[tuple[int, int], int]]) -> OreOperatorExpr:
    frozen = tuple(
        (shift, deriv, tuple((npow, xpow, v) for (npow, xpow), v in sorted(data.items())))
        for shift, deriv, data in terms
    )
    return OreOperatorExpr(name=name, terms=frozen)


_ANNIHILATORS = (
    _op(
        "derivative2",
        (0, 2, {(0, 2): -6, (0, 3): -6}),
        (1, 0, {(0, 0): 12, (1, 0): 7, (2, 0): 1}),
        (0, 1, {(0, 1): -12, (1, 1): -3, (0, 2): 12, (1, 2): 15}),
        (0, 0, {(1, 0): -4, (2, 0): -1, (0, 1): -12, (1, 1): -25, (2, 1): -10}),
    ),
    _op(
        "shift_derivative",
        (1, 1, {(0, 1): -6, (1, 1): -2}),
        (1, 0, {(0, 0): 6, (1, 0): 5, (2, 0): 1}),
        (0, 1, {(1, 1): -1, (1, 2): -1}),
        (0, 0, {(1, 0): -2, (2, 0): -1, (1, 1): 3, (2, 1): 2}),
    ),
    _op(
        "shift2",
        (2, 0, {(0, 0): 120, (1, 0): 94, (2, 0): 24, (3, 0): 2}),
        (
            1,
            0,
            {
                (0, 0): -120, (1, 0): -145, (2, 0): -56, (3, 0): -7,
                (0, 1): -120, (1, 1): -145, (2, 1): -56, (3, 1): -7,
            },
        ),
        (0, 1, {(1, 1): 21, (2, 1): 9, (1, 3): -21, (2, 3): -9}),
        (
            0,
            0,
            {
                (1, 0): 30, (2, 0): 23, (3, 0): 5,
                (1, 1): -129, (2, 1): -140, (3, 1): -35,
                (1, 2): 51, (2, 2): 53, (3, 2): 14,
            },
        ),
    ),
)


def annihilator_operators() -> tuple[OreOperatorExpr, ...]:
    """The three basis operators that annihilate the Baxter polynomial family."""
    return _ANNIHILATORS


def apply_ore_operator(
    op: OreOperatorExpr,
    n: int,
    family: Callable[[int], Polynomial] = baxter_polynomial,
) -> Polynomial:
    """Apply the operator to the polynomial family at index n.

    Shifts move the index up, derivative powers differentiate in x, and the
    coefficients multiply exactly; the operator annihilates the family at n
    iff the result is the zero polynomial.
    """
    if n < 2:
        raise ValueError(f"operators are applied for n >= 2, got n={n}")
    members: dict[int, Polynomial] = {}
    result = Polynomial()
    for shift, deriv, data in op.terms:
        if shift not in members:
            members[shift] = family(n + shift)
        result = result + _coefficient_poly(data, n) * members[shift].derivative(deriv)
    return result

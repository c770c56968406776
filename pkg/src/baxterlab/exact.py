"""Exact evaluation of Baxter numbers, their refinements, and related sums.

Everything here is computed with arbitrary-precision integers and rationals;
there are no floating-point paths.  The refined count D(n, k) is

    D(n, k) = 2 / (n (n+1)^2) * C(n+1, k-1) * C(n+1, k) * C(n+1, k+1),

the two-parameter refinement is

    theta(s, t) = 2 / ((s+1)^2 (s+2)) * C(s+t, s) * C(s+t+1, s) * C(s+t+2, s),

with D(n, k) = theta(k-1, n-k), and the Baxter number B_n is the sum of
D(n, k) over k (B_0 = 1 by convention).  Both closed forms have rational
prefactors; the functions evaluate them exactly and insist on an integer
result, so every call doubles as an integrality check.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for n >= 0; zero for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    # multiplicative form with running exact division keeps intermediates small
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


def binomial_row(n: int) -> list[int]:
    """The full row [C(n, 0), ..., C(n, n)]."""
    if n < 0:
        raise ValueError(f"binomial_row requires n >= 0, got n={n}")
    row = [1]
    for k in range(n):
        row.append(row[-1] * (n - k) // (k + 1))
    return row


def pochhammer(a: int | Fraction, m: int) -> Fraction:
    """Rising factorial (a)_m = a (a+1) ... (a+m-1), with (a)_0 = 1."""
    if m < 0:
        raise ValueError(f"pochhammer requires m >= 0, got m={m}")
    out = Fraction(1)
    a = Fraction(a)
    for i in range(m):
        out *= a + i
    return out


def _exact_integer_quotient(numerator: int, denominator: int, what: str) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise ArithmeticError(
            f"{what} is not an integer ({numerator}/{denominator}); "
            "this indicates an implementation bug"
        )
    return q


def refined_baxter(n: int, k: int) -> int:
    """Number of Baxter permutations of length n with k-1 descents and n-k rises."""
    if n < 1:
        raise ValueError(f"refined_baxter requires n >= 1, got n={n}")
    if k <= 0 or k > n:
        return 0
    numerator = 2 * binomial(n + 1, k - 1) * binomial(n + 1, k) * binomial(n + 1, k + 1)
    return _exact_integer_quotient(numerator, n * (n + 1) ** 2, f"D({n},{k})")


def refined_baxter_row(n: int) -> list[int]:
    """The row [D(n, 0), ..., D(n, n)] (index 0 holds 0) via one shared binomial row."""
    if n < 1:
        raise ValueError(f"refined_baxter_row requires n >= 1, got n={n}")
    b = binomial_row(n + 1)
    den = n * (n + 1) ** 2
    row = [0]
    for k in range(1, n + 1):
        row.append(_exact_integer_quotient(2 * b[k - 1] * b[k] * b[k + 1], den, f"D({n},{k})"))
    return row


def theta_number(s: int, t: int) -> int:
    """Number of Baxter permutations with s descents and t rises."""
    if s < 0 or t < 0:
        raise ValueError(f"theta_number requires s, t >= 0, got s={s}, t={t}")
    numerator = 2 * binomial(s + t, s) * binomial(s + t + 1, s) * binomial(s + t + 2, s)
    return _exact_integer_quotient(numerator, (s + 1) ** 2 * (s + 2), f"theta({s},{t})")


def baxter_number(n: int) -> int:
    """The n-th Baxter number B_n, with B_0 = 1 by convention."""
    if n < 0:
        raise ValueError(f"baxter_number requires n >= 0, got n={n}")
    if n == 0:
        return 1
    return sum(refined_baxter_row(n))


def baxter_polynomial(n: int) -> Polynomial:
    """Generating polynomial of the refined counts: sum_k D(n, k) x^k.

    Monic of degree n with zero constant term.
    """
    if n < 1:
        raise ValueError(f"baxter_polynomial requires n >= 1, got n={n}")
    return Polynomial(refined_baxter_row(n))


def hyp3f2_terminating(
    p1: int,
    p2: int,
    p3: int,
    q1: int,
    q2: int,
    z: int | Fraction,
) -> Fraction:
    """Exact value of the terminating hypergeometric sum 3F2(p1,p2,p3; q1,q2; z).

    The sum is sum_k (p1)_k (p2)_k (p3)_k / ((q1)_k (q2)_k k!) z^k.  At least
    one upper parameter must be a non-positive integer so the series is a
    finite sum; the lower parameters must be positive.
    """
    if q1 <= 0 or q2 <= 0:
        raise ValueError(f"lower parameters must be positive, got q1={q1}, q2={q2}")
    cutoffs = [-p for p in (p1, p2, p3) if p <= 0]
    if not cutoffs:
        raise ValueError(
            f"series does not terminate: no non-positive upper parameter in ({p1}, {p2}, {p3})"
        )
    last = min(cutoffs)
    z = Fraction(z)
    total = Fraction(0)
    term = Fraction(1)
    for k in range(last + 1):
        total += term
        term *= Fraction((p1 + k) * (p2 + k) * (p3 + k), (q1 + k) * (q2 + k) * (k + 1)) * z
    return total

"""Exact real-root counting via Sturm chains.

Chains are computed over the integers with content-stripped signed
pseudo-remainders, which keeps coefficient growth manageable up to the
degree-60 polynomials checked here.  Infinite interval endpoints are
handled through leading-coefficient sign analysis, never by large finite
stand-ins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import baxter_polynomial
from .poly import Polynomial

IntCoeffs = list[int]


def _content(cs: IntCoeffs) -> int:
    g = 0
    for c in cs:
        g = math.gcd(g, c)
    return g


def _primitive_int(cs: IntCoeffs) -> IntCoeffs:
    g = _content(cs)
    return [c // g for c in cs] if g > 1 else list(cs)


def _derivative_int(cs: IntCoeffs) -> IntCoeffs:
    return [k * c for k, c in enumerate(cs)][1:]


def _pseudo_remainder(a: IntCoeffs, b: IntCoeffs) -> IntCoeffs:
    """Remainder of lc(b)^(deg a - deg b + 1) * a modulo b, over the integers.

    The multiplier power is applied in full even when the degree drops by
    more than one per step, so the result's sign is exactly that of the
    scaled true remainder.
    """
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    steps = len(a) - len(b) + 1
    done = 0
    while rem and len(rem) - 1 >= db:
        top = rem[-1]
        rem = [c * lead for c in rem[:-1]]
        shift = len(rem) - db
        for i in range(db):
            rem[shift + i] -= top * b[i]
        done += 1
        while rem and rem[-1] == 0:
            rem.pop()
    if rem and done < steps:
        scale = lead ** (steps - done)
        rem = [c * scale for c in rem]
    return rem


def _int_gcd(a: IntCoeffs, b: IntCoeffs) -> IntCoeffs:
    """Primitive gcd of two integer polynomials (positive leading coefficient)."""
    a, b = _primitive_int(a), _primitive_int(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_remainder(a, b)
        a, b = b, _primitive_int(r) if r else []
    if not a:
        return []
    return a if a[-1] > 0 else [-c for c in a]


def _sturm_chain_int(p: IntCoeffs) -> list[IntCoeffs]:
    """Sturm chain of a primitive integer polynomial.

    Each element equals the classical chain member up to a positive factor,
    so sign variations are preserved; pseudo-remainder multipliers of either
    sign are compensated.
    """
    chain = [_primitive_int(p)]
    if len(p) > 1:
        chain.append(_primitive_int(_derivative_int(p)))
    while len(chain[-1]) > 1:
        prev, cur = chain[-2], chain[-1]
        rem = _pseudo_remainder(prev, cur)
        if not rem:
            break
        delta = len(prev) - len(cur) + 1
        stripped = _primitive_int(rem)
        # next member is -rem/lc(cur)^delta up to a positive factor
        if cur[-1] > 0 or delta % 2 == 0:
            stripped = [-c for c in stripped]
        chain.append(stripped)
    return chain


def _sign_at(cs: IntCoeffs, x: Fraction) -> int:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return (acc > 0) - (acc < 0)


def _sign_at_infinity(cs: IntCoeffs, positive: bool) -> int:
    lead = cs[-1]
    sign = (lead > 0) - (lead < 0)
    if not positive and (len(cs) - 1) % 2 == 1:
        sign = -sign
    return sign


def _variations(signs: list[int]) -> int:
    nonzero = [s for s in signs if s]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def sturm_chain(p: Polynomial) -> list[Polynomial]:
    """The Sturm chain of p as exact polynomials (positive rescalings)."""
    if p.is_zero():
        raise ValueError("zero polynomial has no Sturm chain")
    ints = p.primitive().scaled_integer_coefficients()
    return [Polynomial(cs) for cs in _sturm_chain_int(ints)]


def squarefree_part(p: Polynomial) -> Polynomial:
    """p divided by gcd(p, p'), normalized to primitive integer coefficients."""
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    prim = p.primitive()
    if prim.degree < 1:
        return prim
    ints = prim.scaled_integer_coefficients()
    g = _int_gcd(ints, _derivative_int(ints))
    return prim.exact_div(Polynomial(g)).primitive()


def count_real_roots(
    p: Polynomial,
    lower: int | Fraction | None = None,
    upper: int | Fraction | None = None,
) -> int:
    """Number of distinct real roots of a squarefree p in (lower, upper].

    ``None`` endpoints denote -infinity / +infinity.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree < 1:
        return 0
    if lower is not None and upper is not None and not Fraction(lower) < Fraction(upper):
        raise ValueError(f"empty interval ({lower}, {upper}]")
    ints = p.primitive().scaled_integer_coefficients()
    chain = _sturm_chain_int(ints)
    if len(chain[-1]) > 1:
        raise ValueError("polynomial is not squarefree")

    def variations_at(point: int | Fraction | None, positive: bool) -> int:
        if point is None:
            return _variations([_sign_at_infinity(cs, positive) for cs in chain])
        x = Fraction(point)
        return _variations([_sign_at(cs, x) for cs in chain])

    return variations_at(lower, False) - variations_at(upper, True)


@dataclass
class RealRootReport:
    """Sturm verification summary for one Baxter polynomial."""

    n: int
    degree: int
    squarefree_degree: int
    repeated_factor_degree: int
    real_roots: int
    positive_roots: int
    constant_term_zero: bool

    @property
    def passed(self) -> bool:
        return (
            self.real_roots == self.squarefree_degree
            and self.positive_roots == 0
            and self.constant_term_zero
        )


def check_baxter_real_rooted(n: int) -> RealRootReport:
    """Verify that the degree-n Baxter polynomial has only real, nonpositive roots."""
    if n < 2:
        raise ValueError(f"check requires n >= 2, got n={n}")
    p = baxter_polynomial(n)
    ints = p.scaled_integer_coefficients()
    g = _int_gcd(ints, _derivative_int(ints))
    sf = squarefree_part(p)
    return RealRootReport(
        n=n,
        degree=int(p.degree),
        squarefree_degree=int(sf.degree),
        repeated_factor_degree=len(g) - 1 if g else 0,
        real_roots=count_real_roots(sf),
        positive_roots=count_real_roots(sf, 0, None),
        constant_term_zero=p.constant_term == 0,
    )

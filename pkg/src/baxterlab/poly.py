"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored by ascending degree with trailing zeros trimmed,
so arithmetic, evaluation, and equality are exact (``fractions.Fraction``
throughout).  The zero polynomial has an empty coefficient tuple and
degree ``-inf``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

_NEG_INF = float("-inf")


class Polynomial:
    """Immutable dense polynomial over the rationals."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; ``-inf`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else _NEG_INF

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of x^k (zero outside the stored range)."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Polynomial:
        return Polynomial([other]) - self

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial()
            return Polynomial([c * other for c in self._coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise ValueError("negative exponent")
        result = Polynomial([1])
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Scalar) -> Fraction:
        """Evaluate at x by Horner's scheme (exact)."""
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self, order: int = 1) -> Polynomial:
        """Formal derivative of the given order (exact coefficients)."""
        if order < 0:
            raise ValueError(f"unsupported derivative order {order}")
        p = self
        for _ in range(order):
            p = Polynomial([k * c for k, c in enumerate(p._coeffs)][1:])
        return p

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Long division over the rationals: self = q*other + r, deg r < deg other."""
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        db = len(other._coeffs) - 1
        lead = other._coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < db:
                break
            shift = len(rem) - 1 - db
            factor = rem[-1] / lead
            quot[shift] = factor
            for i, c in enumerate(other._coeffs):
                rem[shift + i] -= factor * c
            rem.pop()
        return Polynomial(quot), Polynomial(rem)

    def exact_div(self, other: Polynomial) -> Polynomial:
        """Divide by an exact factor; raises if the division leaves a remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def scaled_integer_coefficients(self) -> list[int]:
        """Coefficients scaled by the positive lcm of denominators to integers."""
        if not self._coeffs:
            return []
        scale = 1
        for c in self._coeffs:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
        return [int(c * scale) for c in self._coeffs]

    def primitive(self) -> Polynomial:
        """Integer-primitive multiple with positive leading coefficient."""
        ints = self.scaled_integer_coefficients()
        if not ints:
            return Polynomial()
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        if ints[-1] < 0:
            g = -g
        return Polynomial([c // g for c in ints])

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{k}" if c != 1 else f"x^{k}")
        return " + ".join(parts)


def _divisors(n: int) -> list[int]:
    """Positive divisors of |n| (n nonzero) by trial division."""
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Polynomial) -> tuple[list[tuple[Fraction, int]], Polynomial]:
    """All rational roots of p with multiplicities, plus the rootless residual factor.

    Roots are returned sorted by decreasing value.  Intended for the small
    characteristic/indicial polynomials arising from recurrences; the
    divisor enumeration is not suited to huge coefficients.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every value as a root")
    work = list(p.primitive().coefficients)
    roots: dict[Fraction, int] = {}

    # factor out x^k
    k = 0
    while work and work[0] == 0:
        work.pop(0)
        k += 1
    if k:
        roots[Fraction(0)] = k

    def deflate(cs: list[Fraction], r: Fraction) -> list[Fraction] | None:
        # synthetic division; returns quotient if remainder is zero
        acc = Fraction(0)
        out = []
        for c in reversed(cs):
            acc = acc * r + c
            out.append(acc)
        if out[-1] != 0:
            return None
        return [c for c in reversed(out[:-1])]

    while len(work) > 1:
        c0 = int(work[0])
        cl = int(work[-1])
        found = None
        for num in _divisors(c0):
            for den in _divisors(cl):
                if math.gcd(num, den) != 1:
                    continue
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    q = deflate(work, cand)
                    if q is not None:
                        found = (cand, q)
                        break
                if found:
                    break
            if found:
                break
        if not found:
            break
        r, work = found
        roots[r] = roots.get(r, 0) + 1

    ordered = sorted(roots.items(), key=lambda item: item[0], reverse=True)
    return ordered, Polynomial(work)

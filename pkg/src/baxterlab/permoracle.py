"""Brute-force enumeration of Baxter permutations with rise/descent counts.

A Baxter permutation avoids the two vincular patterns 2-41-3 and 3-14-2
(the middle pair must be adjacent).  Enumerating all permutations of a
small ground set and tabulating by descent count gives an independent
combinatorial oracle for the closed-form refined counts: the table entry
at d descents must equal D(n, d+1).

The default size guard keeps the full-table scan below a minute; length 9
(362 880 permutations) is allowed behind an explicit opt-in.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

MAX_DEFAULT_LENGTH = 8
MAX_OPT_IN_LENGTH = 9


def _validate(perm: Sequence[int]) -> tuple[int, ...]:
    p = tuple(perm)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def _avoids_patterns(p: tuple[int, ...]) -> bool:
    n = len(p)
    for j in range(n - 1):
        a, b = p[j], p[j + 1]
        if a > b:
            # 2-41-3: i < j, l > j+1 with b < p[i] < p[l] < a.
            # Exists iff the smallest in-window value on the left is below
            # the largest in-window value on the right.
            left = min((v for v in p[:j] if b < v < a), default=None)
            if left is None:
                continue
            right = max((v for v in p[j + 2 :] if b < v < a), default=None)
            if right is not None and left < right:
                return False
        else:
            # 3-14-2: i < j, l > j+1 with a < p[l] < p[i] < b.
            left = max((v for v in p[:j] if a < v < b), default=None)
            if left is None:
                continue
            right = min((v for v in p[j + 2 :] if a < v < b), default=None)
            if right is not None and left > right:
                return False
    return True


def is_baxter(perm: Sequence[int]) -> bool:
    """True iff the permutation avoids both defining vincular patterns."""
    return _avoids_patterns(_validate(perm))


def rise_descent_counts(perm: Sequence[int]) -> tuple[int, int]:
    """(rises, descents): positions with p(i) < p(i+1) and p(i) > p(i+1)."""
    p = _validate(perm)
    rises = sum(1 for i in range(len(p) - 1) if p[i] < p[i + 1])
    return rises, len(p) - 1 - rises


@dataclass(frozen=True)
class StatTable:
    """Baxter permutation counts of length n, tabulated by descent count."""

    n: int
    counts: tuple[int, ...]  # index d = number of descents, d = 0..n-1

    @property
    def total(self) -> int:
        return sum(self.counts)


def enumerate_counts(n: int, allow_large: bool = False) -> StatTable:
    """Scan all n! permutations and tabulate the Baxter ones by descents."""
    limit = MAX_OPT_IN_LENGTH if allow_large else MAX_DEFAULT_LENGTH
    if not 2 <= n <= limit:
        raise ValueError(
            f"enumeration supports 2 <= n <= {limit}"
            + ("" if allow_large else " (pass allow_large=True for 9)")
            + f", got n={n}"
        )
    counts = [0] * n
    ground = tuple(range(1, n + 1))
    for p in permutations(ground):
        if _avoids_patterns(p):
            descents = sum(1 for i in range(n - 1) if p[i] > p[i + 1])
            counts[descents] += 1
    return StatTable(n=n, counts=tuple(counts))

"""Permutations in one-line notation and classical pattern containment.

Permutations are plain tuples of ints holding a rearrangement of
``1..n``.  Tuples are hashable and immutable, which is all the generating
tree needs; :func:`as_permutation` is the validating constructor.
"""
from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterable, Sequence

Permutation = tuple[int, ...]


def as_permutation(values: Iterable[int]) -> Permutation:
    """Return ``values`` as a permutation tuple, checking it is one."""
    w = tuple(int(v) for v in values)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{list(w)} is not a permutation of 1..{len(w)}")
    return w


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def standardize(values: Sequence[int]) -> Permutation:
    """Rescale distinct values to 1..k keeping their relative order."""
    rank = {v: i + 1 for i, v in enumerate(sorted(values))}
    return tuple(rank[v] for v in values)


def delete_max(w: Sequence[int]) -> Permutation:
    """The parent of ``w`` in the generating tree: drop the value n."""
    n = len(w)
    return tuple(v for v in w if v != n)


def insert_max(w: Sequence[int], site: int) -> Permutation:
    """Insert n+1 into ``w`` with ``site`` entries to its right."""
    cut = len(w) - site
    return tuple(w[:cut]) + (len(w) + 1,) + tuple(w[cut:])


@lru_cache(maxsize=None)
def _value_neighbours(pattern: Permutation) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # For each pattern index t, the earlier index whose value is the closest
    # below (resp. above) pattern[t]; -1 if none.  Together they fix the open
    # value window a host entry must fall into.
    lower, upper = [], []
    for t, v in enumerate(pattern):
        below = [s for s in range(t) if pattern[s] < v]
        above = [s for s in range(t) if pattern[s] > v]
        lower.append(max(below, key=lambda s: pattern[s]) if below else -1)
        upper.append(min(above, key=lambda s: pattern[s]) if above else -1)
    return tuple(lower), tuple(upper)


def contains(host: Sequence[int], pattern: Sequence[int], *, anchor: tuple[int, int] | None = None) -> bool:
    """True if some subsequence of ``host`` is order-isomorphic to ``pattern``.

    ``anchor=(t, i)`` restricts the search to occurrences that match
    ``pattern[t]`` with ``host[i]``.  The generating tree uses it to look
    only for occurrences through a freshly inserted maximum.

    Backtracking over host indices, left to right; each pattern entry's
    candidates are restricted to the value window set by its already
    matched neighbours in value order.
    """
    pattern = tuple(pattern)
    k, n = len(pattern), len(host)
    if k == 0:
        return True
    if k > n:
        return False
    fixed_t, fixed_i = anchor if anchor is not None else (-1, -1)
    if anchor is not None and not (fixed_t <= fixed_i and k - fixed_t <= n - fixed_i):
        return False
    lower, upper = _value_neighbours(pattern)
    chosen = [0] * k

    def extend(t: int, start: int) -> bool:
        if t == k:
            return True
        lo = chosen[lower[t]] if lower[t] >= 0 else 0
        hi = chosen[upper[t]] if upper[t] >= 0 else n + 1
        if t == fixed_t:
            candidates = (fixed_i,) if start <= fixed_i else ()
        elif t < fixed_t:
            candidates = range(start, fixed_i - (fixed_t - t) + 1)
        else:
            candidates = range(start, n - (k - t) + 1)
        for i in candidates:
            v = host[i]
            if lo < v < hi:
                chosen[t] = v
                if extend(t + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def avoids_321(w: Sequence[int]) -> bool:
    """Linear-time 321 test: the non-left-to-right-maxima must increase."""
    top = 0
    last_small = 0
    for v in w:
        if v > top:
            top = v
        elif v < last_small:
            return False
        else:
            last_small = v
    return True


class PatternFamily(enum.Enum):
    """The three octagonal-type pattern sets; [321] is always imposed too."""

    HEX8 = ((4, 6, 7, 1, 8, 2, 3, 5), (4, 6, 7, 8, 1, 2, 3, 5),
            (5, 6, 7, 1, 8, 2, 3, 4), (5, 6, 7, 8, 1, 2, 3, 4))
    HEX6 = ((3, 5, 1, 6, 2, 4), (3, 5, 6, 1, 2, 4),
            (4, 5, 1, 6, 2, 3), (4, 5, 6, 1, 2, 3))
    HEX4 = ((2, 1, 4, 3), (3, 1, 4, 2), (2, 4, 1, 3), (3, 4, 1, 2))

    @property
    def patterns(self) -> tuple[Permutation, ...]:
        return self.value

    @property
    def size(self) -> int:
        """Pattern length: 8, 6 or 4."""
        return len(self.value[0])

    @classmethod
    def from_name(cls, name: str) -> "PatternFamily":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown family {name!r}; expected one of hex8, hex6, hex4") from None


def is_member(w: Sequence[int], family: PatternFamily) -> bool:
    """True if ``w`` avoids [321] and every pattern of ``family``."""
    return avoids_321(w) and not any(contains(w, p) for p in family.patterns)

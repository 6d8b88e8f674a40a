"""Brute-force generating tree T(321, P) for the three pattern families.

Level n of the tree holds every family member of length n.  Children come
from inserting n+1 into each site of the parent and keeping the insertions
that stay pattern-free.  Since the parent is already clean, a new
occurrence must pass through n+1; the default check only searches for
those.  ``full_check=True`` re-runs unrestricted containment instead, for
differential testing.
"""
from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .labels import Label, fast_label, project_label
from .perm import Permutation, PatternFamily, contains, insert_max, is_member

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 14


class BudgetExceeded(RuntimeError):
    """Raised when enumeration would pass the configured resource budget.

    ``completed_level`` is the last level fully enumerated and
    ``completed_count`` its size.
    """

    def __init__(self, message: str, completed_level: int, completed_count: int):
        super().__init__(message)
        self.completed_level = completed_level
        self.completed_count = completed_count


@dataclass(frozen=True)
class TreeLevel:
    n: int
    family: PatternFamily
    members: tuple[Permutation, ...]
    label_histogram: dict[Label, int] = field(repr=False)

    @property
    def count(self) -> int:
        return len(self.members)

    def projected_histogram(self) -> dict[tuple[int, ...], int]:
        """Histogram over the labels the family keeps track of."""
        out: Counter = Counter()
        for label, c in self.label_histogram.items():
            out[project_label(label, self.family)] += c
        return dict(out)


@lru_cache(maxsize=None)
def _max_index(pattern: Permutation) -> int:
    return pattern.index(len(pattern))


def _child_ok(child: Permutation, cut: int, family: PatternFamily) -> bool:
    return not any(contains(child, p, anchor=(_max_index(p), cut)) for p in family.patterns)


def active_sites(w: Sequence[int], family: PatternFamily, *, full_check: bool = False) -> list[int]:
    """Sites (counted by entries to their right) where n+1 may be inserted."""
    n = len(w)
    sites = []
    if full_check:
        for j in range(n + 1):
            if is_member(insert_max(w, j), family):
                sites.append(j)
        return sites
    for j in range(n + 1):
        cut = n - j
        # n+1 followed by a descent is a 321; every site further left fails too
        if j >= 2 and w[cut] > w[cut + 1]:
            break
        child = insert_max(w, j)
        if _child_ok(child, cut, family):
            sites.append(j)
    return sites


def children(w: Sequence[int], family: PatternFamily, *, full_check: bool = False) -> list[Permutation]:
    """Children of a tree node, rightmost insertion site first."""
    w = tuple(w)
    if not is_member(w, family):
        raise ValueError(f"{list(w)} is not a {family.name} member; the tree is pruned there")
    return [insert_max(w, j) for j in active_sites(w, family, full_check=full_check)]


def _expand(args: tuple[Sequence[Permutation], PatternFamily, bool]) -> list[Permutation]:
    frontier, family, full_check = args
    out: list[Permutation] = []
    for w in frontier:
        out.extend(insert_max(w, j) for j in active_sites(w, family, full_check=full_check))
    return out


def _next_level(frontier: Sequence[Permutation], family: PatternFamily, full_check: bool, jobs: int) -> list[Permutation]:
    if jobs <= 1 or len(frontier) < 2 * jobs:
        return _expand((frontier, family, full_check))
    # any partition works: results are concatenated and sorted by the caller
    size = -(-len(frontier) // jobs)
    chunks = [(frontier[i:i + size], family, full_check) for i in range(0, len(frontier), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_expand, chunks))
    return [w for part in parts for w in part]


@lru_cache(maxsize=64)
def _members(n: int, family: PatternFamily, full_check: bool) -> tuple[Permutation, ...]:
    if n == 1:
        return ((1,),)
    return tuple(sorted(_next_level(_members(n - 1, family, full_check), family, full_check, 1)))


def iter_levels(
    n_max: int,
    family: PatternFamily,
    *,
    max_n: int = DEFAULT_MAX_N,
    max_nodes: int | None = None,
    jobs: int = 1,
    full_check: bool = False,
) -> Iterator[TreeLevel]:
    """Yield levels 1..n_max of the pruned tree, respecting the budget."""
    if n_max < 1:
        raise ValueError("levels start at n = 1")
    frontier: tuple[Permutation, ...] = ()
    total = 0
    prev = 0
    for n in range(1, n_max + 1):
        if n > max_n:
            raise BudgetExceeded(f"level {n} exceeds the oracle budget (max n = {max_n})", n - 1, len(frontier))
        prev = len(frontier)
        if n == 1:
            frontier = ((1,),)
        elif jobs > 1:
            frontier = tuple(sorted(_next_level(frontier, family, full_check, jobs)))
        else:
            frontier = _members(n, family, full_check)
        total += len(frontier)
        if max_nodes is not None and total > max_nodes:
            raise BudgetExceeded(f"level {n} pushes the node count past {max_nodes}", n - 1, prev)
        hist = Counter(fast_label(w) for w in frontier)
        log.debug("%s level %d: %d members", family.name, n, len(frontier))
        yield TreeLevel(n, family, frontier, dict(hist))


def enumerate_level(n: int, family: PatternFamily, **budget) -> TreeLevel:
    """All family members of length ``n``, sorted, with their label histogram."""
    level = None
    for level in iter_levels(n, family, **budget):
        pass
    assert level is not None
    return level


def count_labeled(n: int, label: Sequence[int], family: PatternFamily, **budget) -> int:
    """Number of level-n members carrying ``label``.

    For HEX6 and HEX4, ``label`` is the truncated label (see
    :func:`hexavoid.labels.project_label`).
    """
    level = enumerate_level(n, family, **budget)
    return level.projected_histogram().get(tuple(label), 0)

"""Level-by-level counting in label space.

Every node of the pruned tree is replaced by its label, and the succession
rule says which labels its children carry.  Iterating the rule from the
root label counts family members without building a single permutation.

HEX8 labels are ``(x, k, l, m)`` and follow the rule

    T = min(k+2, max(k+1, l+2)),  S = T if T <= x-2 else x,
    (x,k,l,m) -> (x+1,k+1,l+1,m+1), (i, min(i,l), min(i,m), 0) for i = 1..S

HEX6 drops k, HEX4 keeps only m.  Their rules have the same shape with a
different threshold T:

    HEX6: T = min(l+1, max(l, m+1)),  children (x+1,l+1,m+1), (i, min(i,m), 0)
    HEX4: T = x if m == x else 0,     children (x+1,m+1), (i, 0)

The two truncated rules were read off the brute-force tree and are checked
against it level by level in the test suite.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .labels import Label, project_label
from .perm import PatternFamily


def _threshold_hex8(label: tuple[int, ...]) -> int:
    _, k, l, _ = label  # noqa: E741
    return min(k + 2, max(k + 1, l + 2))


def _threshold_hex6(label: tuple[int, ...]) -> int:
    _, l, m = label  # noqa: E741
    return min(l + 1, max(l, m + 1))


def _threshold_hex4(label: tuple[int, ...]) -> int:
    x, m = label
    return x if m == x else 0


THRESHOLDS: dict[PatternFamily, Callable[[tuple[int, ...]], int]] = {
    PatternFamily.HEX8: _threshold_hex8,
    PatternFamily.HEX6: _threshold_hex6,
    PatternFamily.HEX4: _threshold_hex4,
}


def root_label(family: PatternFamily) -> tuple[int, ...]:
    """Label of the single node [1] on level 1."""
    return project_label(Label(1, 1, 1, 1), family)


def child_count(parent: tuple[int, ...], family: PatternFamily = PatternFamily.HEX8) -> int:
    """S + 1: the number of active sites, all of them rightmost."""
    x = parent[0]
    t = THRESHOLDS[family](parent)
    return (t if t <= x - 2 else x) + 1


def site_label(parent: tuple[int, ...], j: int, family: PatternFamily = PatternFamily.HEX8) -> tuple[int, ...]:
    """Label after inserting n+1 with ``j`` active entries to its right."""
    if j == 0:
        return tuple(v + 1 for v in parent)
    if family is PatternFamily.HEX8:
        _, _, l, m = parent  # noqa: E741
        return (j, min(j, l), min(j, m), 0)
    if family is PatternFamily.HEX6:
        return (j, min(j, parent[2]), 0)
    return (j, 0)


def succeed(parent: tuple[int, ...], family: PatternFamily = PatternFamily.HEX8) -> list[tuple[int, ...]]:
    """Children labels of a node labelled ``parent``, rightmost site first."""
    return [site_label(parent, j, family) for j in range(child_count(parent, family))]


@lru_cache(maxsize=1 << 20)
def _successors(parent: tuple[int, ...], family: PatternFamily, threshold: Callable) -> tuple[tuple[int, ...], ...]:
    # threshold is part of the key so a swapped-in rule never reads stale entries
    return tuple(succeed(parent, family))


@dataclass(frozen=True)
class LabelDistribution:
    n: int
    family: PatternFamily
    counts: dict[tuple[int, ...], int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @classmethod
    def root(cls, family: PatternFamily = PatternFamily.HEX8) -> "LabelDistribution":
        return cls(1, family, {root_label(family): 1})


def advance(dist: LabelDistribution) -> LabelDistribution:
    """Push every label's count through the succession rule one level down."""
    nxt: defaultdict[tuple[int, ...], int] = defaultdict(int)
    threshold = THRESHOLDS[dist.family]
    for label, c in dist.counts.items():
        for child in _successors(label, dist.family, threshold):
            nxt[child] += c
    return LabelDistribution(dist.n + 1, dist.family, dict(nxt))


def distributions_through(n_max: int, family: PatternFamily = PatternFamily.HEX8) -> list[LabelDistribution]:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    dists = [LabelDistribution.root(family)]
    while dists[-1].n < n_max:
        dists.append(advance(dists[-1]))
    return dists


def totals_through(n_max: int, family: PatternFamily = PatternFamily.HEX8) -> list[int]:
    """Family sizes for n = 1..n_max."""
    return [d.total for d in distributions_through(n_max, family)]

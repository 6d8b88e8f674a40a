"""Basic-subsequence decomposition and generating-tree labels.

A 321-avoiding permutation splits into two increasing subsequences:
``b1``, its right-to-left minima (the last entry included), and ``b2``,
everything else.  The three largest entries of ``b2`` are called K < L < M
(zero when missing).  Everything to the right of M lies in ``b1`` and forms
the *active region*; the label ``(x, k, l, m)`` records its size and how many
of its values exceed K, L and M.

Naming note: ``b1`` is always the right-to-left minima.  With that reading
[46718235] has b2 = 4, 6, 7, 8, active region 2, 3, 5 and label (3,0,0,0).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .perm import Permutation, PatternFamily, avoids_321, standardize


class Label(NamedTuple):
    x: int
    k: int
    l: int  # noqa: E741
    m: int


@dataclass(frozen=True)
class Decomposition:
    """Positions are 1-based, as in one-line notation."""

    b1: tuple[tuple[int, int], ...]
    b2: tuple[tuple[int, int], ...]
    M: int
    L: int
    K: int
    m_position: int

    @property
    def b1_values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.b1)

    @property
    def b2_values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.b2)


def _check(w: Sequence[int]) -> None:
    if not w:
        raise ValueError("labels are defined for nonempty permutations only")
    if not avoids_321(w):
        raise ValueError(f"{list(w)} contains [321]; no two-row decomposition")


def decompose(w: Sequence[int]) -> Decomposition:
    _check(w)
    n = len(w)
    is_min = [False] * n
    lowest = n + 1
    for i in range(n - 1, -1, -1):
        if w[i] < lowest:
            lowest = w[i]
            is_min[i] = True
    b1 = tuple((i + 1, w[i]) for i in range(n) if is_min[i])
    b2 = tuple((i + 1, w[i]) for i in range(n) if not is_min[i])
    top = [v for _, v in b2[-3:]]
    top = [0] * (3 - len(top)) + top
    K, L, M = top
    m_position = b2[-1][0] if b2 else 0
    return Decomposition(b1, b2, M, L, K, m_position)


def label_from(w: Sequence[int], d: Decomposition) -> Label:
    active = w[d.m_position:]
    return Label(
        len(active),
        sum(v > d.K for v in active),
        sum(v > d.L for v in active),
        sum(v > d.M for v in active),
    )


def label_of(w: Sequence[int]) -> Label:
    """Generating-tree label ``(x, k, l, m)`` of a nonempty 321-avoider."""
    return label_from(w, decompose(w))


def fast_label(w: Sequence[int]) -> Label:
    """Same as :func:`label_of` without validation; for the hot loop.

    Scans right to left: the active region is the maximal suffix of
    right-to-left minima, and M is the first entry that breaks it.
    """
    n = len(w)
    i = n - 1
    lowest = n + 1
    while i >= 0 and w[i] < lowest:
        lowest = w[i]
        i -= 1
    if i < 0:
        return Label(n, n, n, n)
    # w[i] is M.  K and L are the next two b2 entries to its left.
    M = w[i]
    found: list[int] = []
    lowest_right = min(w[i:])
    for j in range(i - 1, -1, -1):
        if len(found) == 2:
            break
        v = w[j]
        if v < lowest_right:
            lowest_right = v
        else:
            found.append(v)
    L = found[0] if found else 0
    K = found[1] if len(found) > 1 else 0
    active = w[i + 1:]
    return Label(
        n - i - 1,
        sum(v > K for v in active),
        sum(v > L for v in active),
        sum(v > M for v in active),
    )


def ends_in_max(w: Sequence[int]) -> bool:
    """Membership test for the ``h_n(0,0,0,0)`` class: w ends in n."""
    return len(w) > 0 and w[-1] == len(w)


def k_elements(w: Sequence[int]) -> tuple[int, ...]:
    """Active-region values exceeding K."""
    d = decompose(w)
    return tuple(v for v in w[d.m_position:] if v > d.K)


def delete_k_elements(w: Sequence[int]) -> Permutation:
    """The map d_K: drop the K-elements and rescale to 1..n-k.

    An input labelled (x, k, l, m) lands on one labelled (x-k, 0, 0, 0), or,
    when x == k, on a permutation ending in its maximum.
    """
    drop = set(k_elements(w))
    return standardize([v for v in w if v not in drop])


def project_label(label: Label, family: PatternFamily) -> tuple[int, ...]:
    """Truncate a full label to the parameters a family keeps track of.

    HEX8 keeps (x, k, l, m); HEX6 keeps (x, l, m); HEX4 keeps (x, m).
    """
    if family is PatternFamily.HEX8:
        return tuple(label)
    if family is PatternFamily.HEX6:
        return (label.x, label.l, label.m)
    return (label.x, label.m)


def b2_values(w: Sequence[int]) -> tuple[int, ...]:
    return decompose(w).b2_values

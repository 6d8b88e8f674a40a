"""Exact integer recurrences for the family sizes and the five auxiliary sequences."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .perm import PatternFamily


@dataclass(frozen=True)
class RecurrenceSpec:
    """``alpha_n = sum(c_i * alpha_{n-i})`` for ``n >= valid_from``.

    ``base_values[j]`` is ``alpha_{base_start + j}``; the bases must cover
    every index below ``valid_from``.
    """

    family: PatternFamily
    coefficients: tuple[int, ...]
    base_values: tuple[int, ...]
    base_start: int
    valid_from: int

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def characteristic_polynomial(self) -> tuple[int, ...]:
        """Monic coefficients, highest degree first."""
        return (1,) + tuple(-c for c in self.coefficients)


# alpha_0 = 1 (the empty permutation) lets the order-six rule start at n = 6.
HEX8_RECURRENCE = RecurrenceSpec(PatternFamily.HEX8, (6, -11, 9, -4, -4, 1), (1, 1, 2, 5, 14, 42), 0, 6)
# Stated for n >= 1 as a rule for alpha_{n+1}; only usable once every index is >= 1.
HEX6_RECURRENCE = RecurrenceSpec(PatternFamily.HEX6, (4, -4, 3, 1, -1), (1, 2, 5, 14, 42), 1, 6)
HEX4_RECURRENCE = RecurrenceSpec(PatternFamily.HEX4, (3, -3, 1), (1, 2, 5), 1, 4)

RECURRENCES = {spec.family: spec for spec in (HEX8_RECURRENCE, HEX6_RECURRENCE, HEX4_RECURRENCE)}


def alpha_sequence(n_max: int, spec: RecurrenceSpec = HEX8_RECURRENCE) -> list[int]:
    """``[alpha_1, ..., alpha_{n_max}]``."""
    if n_max < 1:
        return []
    values = dict(enumerate(spec.base_values, start=spec.base_start))
    for n in range(spec.valid_from, n_max + 1):
        values[n] = sum(c * values[n - i] for i, c in enumerate(spec.coefficients, start=1))
    return [values[n] for n in range(1, n_max + 1)]


def alpha_via_recurrence(n: int, spec: RecurrenceSpec = HEX8_RECURRENCE) -> int:
    if n < 1:
        raise ValueError("n must be at least 1")
    return alpha_sequence(n, spec)[-1]


def hex4_closed_form(n: int) -> int:
    if n < 1:
        raise ValueError("n must be at least 1")
    return (n - 1) ** 2 + 1


def catalan(n: int) -> int:
    """Number of 321-avoiding permutations of length n."""
    return comb(2 * n, n) // (n + 1)


SEQUENCE_NAMES = ("alpha", "beta", "gamma", "delta", "epsilon")


@dataclass(frozen=True)
class SequenceTable:
    """Rows are stored 0-based: ``alpha[0]`` is alpha_1."""

    n_max: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    epsilon: tuple[int, ...]

    def row(self, name: str) -> tuple[int, ...]:
        if name not in SEQUENCE_NAMES:
            raise KeyError(name)
        return getattr(self, name)

    def rows(self) -> dict[str, tuple[int, ...]]:
        return {name: self.row(name) for name in SEQUENCE_NAMES}


def five_sequences(n_max: int) -> SequenceTable:
    """HEX8 values of alpha..epsilon for n = 1..n_max.

    beta, gamma and epsilon are explicit in alpha; delta telescopes over
    epsilon from the seed delta_5 = 1.  Below each rule's range the
    entries are zero.
    """
    if n_max < 6:
        raise ValueError("the five-sequence table needs n_max >= 6")
    a = [1] + alpha_sequence(n_max + 1)  # a[i] = alpha_i, alpha_0 = 1

    def beta(n: int) -> int:
        return a[n] - 2 * a[n - 1] if n >= 3 else 0

    def gamma(n: int) -> int:
        return a[n] - 3 * a[n - 1] + a[n - 2] if n >= 4 else 0

    def epsilon(n: int) -> int:
        return 2 * a[n - 3] - 5 * a[n - 4] + a[n - 5] if n >= 6 else 0

    delta = {n: 0 for n in range(1, 5)}
    delta[5] = 1
    for n in range(6, n_max + 1):
        delta[n] = epsilon(n + 1) + delta[n - 1]

    ns = range(1, n_max + 1)
    return SequenceTable(
        n_max,
        tuple(a[n] for n in ns),
        tuple(beta(n) for n in ns),
        tuple(gamma(n) for n in ns),
        tuple(delta[n] for n in ns),
        tuple(epsilon(n) for n in ns),
    )

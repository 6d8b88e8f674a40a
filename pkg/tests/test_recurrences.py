import pytest

from hexavoid import published
from hexavoid.recurrences import (
    HEX4_RECURRENCE, HEX6_RECURRENCE, HEX8_RECURRENCE, alpha_sequence, alpha_via_recurrence, catalan,
    five_sequences, hex4_closed_form,
)


def test_hex8_table():
    table = five_sequences(12)
    for name, row in published.HEX8_TABLE.items():
        assert table.row(name) == row


def test_hex6_values():
    assert tuple(alpha_sequence(12, HEX6_RECURRENCE)) == published.HEX6_FIRST_VALUES


def test_hex4_matches_quadratic():
    assert alpha_sequence(60, HEX4_RECURRENCE) == [hex4_closed_form(n) for n in range(1, 61)]


def test_far_values_are_exact_integers():
    # frozen values; label DP and recurrence agree on both
    assert alpha_via_recurrence(40) == 192890452763318240452
    assert alpha_via_recurrence(20) == 3682565575


def test_characteristic_polynomials():
    assert HEX8_RECURRENCE.characteristic_polynomial() == (1, -6, 11, -9, 4, 4, -1)
    assert HEX6_RECURRENCE.characteristic_polynomial() == (1, -4, 4, -3, -1, 1)
    assert HEX4_RECURRENCE.characteristic_polynomial() == (1, -3, 3, -1)


def test_catalan():
    assert [catalan(n) for n in range(1, 8)] == [1, 2, 5, 14, 42, 132, 429]


def test_guards():
    with pytest.raises(ValueError):
        alpha_via_recurrence(0)
    with pytest.raises(ValueError):
        five_sequences(5)
    with pytest.raises(KeyError):
        five_sequences(8).row("zeta")
    assert alpha_sequence(0) == []


def test_table_rows_are_nonnegative():
    for row in five_sequences(40).rows().values():
        assert all(v >= 0 for v in row)

import pytest

from hexavoid import label_dp
from hexavoid.label_dp import child_count, distributions_through, root_label, succeed, totals_through
from hexavoid.perm import PatternFamily
from hexavoid.recurrences import RECURRENCES, alpha_sequence
from hexavoid.verify import Workspace, check_conformance

HEX8 = PatternFamily.HEX8


def test_root_labels():
    assert root_label(HEX8) == (1, 1, 1, 1)
    assert root_label(PatternFamily.HEX6) == (1, 1, 1)
    assert root_label(PatternFamily.HEX4) == (1, 1)


def test_hex8_rule_examples():
    assert succeed((1, 1, 1, 1)) == [(2, 2, 2, 2), (1, 1, 1, 0)]
    # x = k = l = m: no hexagon can form, every site is open
    assert child_count((4, 4, 4, 4)) == 5
    assert child_count((3, 0, 0, 0)) == 4
    assert child_count((5, 0, 0, 0)) == 3
    assert succeed((5, 1, 0, 0)) == [(6, 2, 1, 1), (1, 0, 0, 0), (2, 0, 0, 0)]


@pytest.mark.parametrize("family", list(PatternFamily))
def test_totals_match_recurrence(family):
    assert totals_through(30, family) == alpha_sequence(30, RECURRENCES[family])


@pytest.mark.parametrize("family", list(PatternFamily))
def test_distributions_match_oracle(family, ws10):
    for dist, lv in zip(distributions_through(10, family), ws10.levels(family)):
        assert dist.counts == lv.projected_histogram()


def test_bad_n():
    with pytest.raises(ValueError):
        distributions_through(0)


def test_mutated_rule_is_caught(monkeypatch):
    # drop one child from every node; the conformance check must notice
    monkeypatch.setitem(label_dp.THRESHOLDS, HEX8, lambda lab: lab[1])
    check = check_conformance(Workspace(7), HEX8, depth=7)
    assert not check.passed
    assert "child-count" in check.details

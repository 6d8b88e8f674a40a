import pytest

from hexavoid import published
from hexavoid.oracle import BudgetExceeded, active_sites, children, count_labeled, enumerate_level, iter_levels
from hexavoid.perm import PatternFamily, is_member
from hexavoid.recurrences import catalan, hex4_closed_form

HEX8, HEX6, HEX4 = PatternFamily.HEX8, PatternFamily.HEX6, PatternFamily.HEX4


def test_small_levels_are_catalan():
    for n in range(1, 8):
        assert enumerate_level(n, HEX8).count == catalan(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_hex8_counts(n):
    assert enumerate_level(n, HEX8).count == published.HEX8_TABLE["alpha"][n - 1]


@pytest.mark.parametrize("n", range(1, 11))
def test_hex6_counts(n):
    assert enumerate_level(n, HEX6).count == published.HEX6_FIRST_VALUES[n - 1]


@pytest.mark.parametrize("n", range(1, 11))
def test_hex4_counts(n):
    assert enumerate_level(n, HEX4).count == hex4_closed_form(n)


def test_first_pruned_level():
    lv = enumerate_level(8, HEX8)
    assert lv.count == catalan(8) - 4
    assert not set(HEX8.patterns) & set(lv.members)


@pytest.mark.parametrize("family", list(PatternFamily))
@pytest.mark.parametrize("n", range(1, 8))
def test_anchored_and_full_checks_agree(family, n):
    for w in enumerate_level(n, family).members:
        assert active_sites(w, family) == active_sites(w, family, full_check=True)


def test_members_are_members():
    for fam in PatternFamily:
        assert all(is_member(w, fam) for w in enumerate_level(7, fam).members)


def test_children_rejects_non_members():
    with pytest.raises(ValueError):
        children((3, 2, 1), HEX8)
    assert children((1,), HEX8) == [(1, 2), (2, 1)]


def test_count_labeled():
    assert count_labeled(8, (3, 0, 0, 0), HEX8) == published.HEX8_TABLE["delta"][7 - 1]
    # delta_3 is zero: no length-4 member carries (3,0,0,0)
    assert count_labeled(4, (3, 0, 0, 0), HEX8) == 0
    total = sum(enumerate_level(6, HEX6).projected_histogram().values())
    assert total == 128


def test_budget_on_depth():
    with pytest.raises(BudgetExceeded) as info:
        list(iter_levels(6, HEX8, max_n=4))
    assert info.value.completed_level == 4
    assert info.value.completed_count == 14


def test_budget_on_nodes():
    with pytest.raises(BudgetExceeded) as info:
        enumerate_level(8, HEX8, max_nodes=100)
    # 1+2+5+14+42 = 64 nodes fit, level 6 would pass 100
    assert info.value.completed_level == 5
    assert info.value.completed_count == 42


def test_parallel_levels_match_serial():
    assert enumerate_level(9, HEX8, jobs=2).members == enumerate_level(9, HEX8).members


def test_bad_n():
    with pytest.raises(ValueError):
        enumerate_level(0, HEX8)

import itertools

import pytest
from hypothesis import given, strategies as st

from hexavoid.perm import (
    PatternFamily, as_permutation, avoids_321, contains, delete_max, identity, insert_max, is_member, standardize,
)


def brute_contains(host, pattern):
    k = len(pattern)
    return any(standardize([host[i] for i in idx]) == tuple(pattern) for idx in itertools.combinations(range(len(host)), k))


perms = st.integers(1, 8).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


def test_as_permutation_rejects_non_permutations():
    assert as_permutation([2, 1, 3]) == (2, 1, 3)
    with pytest.raises(ValueError):
        as_permutation([1, 1, 3])
    with pytest.raises(ValueError):
        as_permutation([0, 1])


def test_insert_and_delete_max():
    assert insert_max((2, 1, 3), 0) == (2, 1, 3, 4)
    assert insert_max((2, 1, 3), 3) == (4, 2, 1, 3)
    assert insert_max((2, 1, 3), 1) == (2, 1, 4, 3)
    assert delete_max((2, 4, 1, 3)) == (2, 1, 3)


@given(perms, st.data())
def test_insert_then_delete_round_trips(w, data):
    site = data.draw(st.integers(0, len(w)))
    child = insert_max(w, site)
    assert delete_max(child) == w
    assert len(child) - 1 - child.index(len(child)) == site


def test_contains_small_cases():
    assert contains((3, 2, 1), (3, 2, 1))
    assert not contains((1, 2, 3), (2, 1))
    assert contains((4, 6, 7, 1, 8, 2, 3, 5), (4, 6, 7, 1, 8, 2, 3, 5))
    assert not contains((1, 2), (1, 2, 3))


@given(perms, st.sampled_from([(2, 1), (1, 3, 2), (2, 1, 4, 3), (3, 1, 4, 2), (2, 4, 1, 3), (3, 2, 1)]))
def test_contains_matches_brute_force(host, pattern):
    assert contains(host, pattern) == brute_contains(host, pattern)


@given(perms)
def test_avoids_321_matches_containment(w):
    assert avoids_321(w) == (not brute_contains(w, (3, 2, 1)))


def test_anchored_containment_pins_the_maximum():
    host = (2, 1, 4, 3)
    assert contains(host, (2, 1, 4, 3), anchor=(2, 2))
    assert not contains(host, (2, 1, 4, 3), anchor=(2, 3))


def test_family_metadata():
    assert PatternFamily.HEX8.size == 8 and PatternFamily.HEX6.size == 6 and PatternFamily.HEX4.size == 4
    assert all(len(PatternFamily[f].patterns) == 4 for f in ("HEX8", "HEX6", "HEX4"))
    assert PatternFamily.from_name("hex6") is PatternFamily.HEX6
    with pytest.raises(ValueError, match="unknown family"):
        PatternFamily.from_name("hex9")


def test_family_patterns_avoid_321_themselves_but_are_excluded():
    for fam in PatternFamily:
        for p in fam.patterns:
            assert avoids_321(p)
            assert not is_member(p, fam)


def test_identity_is_a_member():
    for fam in PatternFamily:
        assert is_member(identity(9), fam)

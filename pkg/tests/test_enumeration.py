import math

import pytest
from hypothesis import given, settings, strategies as st

from cactus_arcs import ValenceProfile, brute_force_oracle, count, enumerate_diagrams, enumerate_structures
from cactus_arcs.enumeration import count_structures

from conftest import SMALL_PROFILES, prof


@pytest.mark.parametrize("text, expected", [("2,2,2:2", 18), ("1,1,1:1", 12), ("1,1:1", 0), ("1:1", 1)])
def test_counts(text, expected):
    p = prof(text)
    assert count(p) == expected
    assert len(enumerate_diagrams(p)) == expected


@pytest.mark.parametrize("text", SMALL_PROFILES)
def test_matches_oracle(text):
    p = prof(text)
    assert enumerate_diagrams(p).keys() == brute_force_oracle(p).keys()


def test_oracle_bound():
    with pytest.raises(ValueError):
        brute_force_oracle(prof("3,3,3:3"), bound=10)


@pytest.mark.parametrize("m", range(1, 6))
def test_catalan(m):
    # 2m points of valence 1: non-crossing perfect matchings
    vals = (1,) * (2 * m)
    catalan = math.comb(2 * m, m) // (m + 1)
    assert len(enumerate_structures(vals)) == catalan
    assert count_structures(vals) == catalan


@pytest.mark.parametrize("vals, expected", [((1, 1), 1), ((2, 2), 1), ((1, 1, 1, 1), 2), ((1, 2, 1), 1)])
def test_structures(vals, expected):
    assert len(enumerate_structures(vals)) == expected


def test_parallel_jobs_identical():
    p = prof("2,2,2,2:2")
    assert enumerate_diagrams(p, jobs=2).keys() == enumerate_diagrams(p).keys()


def test_relabelling_preserves_count():
    a = count(prof("1,2,3:2"))
    b = count(prof("3,1,2:2"))
    assert a == b == len(enumerate_diagrams(prof("3,2,1:2")))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=4), st.integers(0, 3))
def test_count_agrees_with_enumeration(finite, l_inf):
    p = ValenceProfile.from_finite(finite, l_inf)
    dset = enumerate_diagrams(p)
    assert count(p) == len(dset)
    assert all(d.profile == p for d in dset)


def test_set_ordinals():
    dset = enumerate_diagrams(prof("2,2,2:2"))
    for i, d in enumerate(dset):
        assert dset.ordinal(d) == i

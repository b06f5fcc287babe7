import itertools
import json

import pytest
from hypothesis import given, strategies as st

from cactus_arcs import (
    ArcDiagram,
    InvalidDiagramError,
    ValenceProfile,
    canonical_key,
    collapse_from_slots,
    expand_to_slots,
    validate,
)
from cactus_arcs.diagram import crosses, is_noncrossing
from cactus_arcs.enumeration import enumerate_structures

from conftest import dset_for, figure1, prof


def test_figure1_is_valid_with_expected_valences():
    d = figure1()
    assert validate(d).ok
    # l1 = l2 = 3, l3 = l_inf = 1, l4 = 2
    assert d.profile == ValenceProfile.from_finite((3, 3, 1, 2), 1)


def test_crossing_pair_rejected():
    d = ArcDiagram.build((0, 1, 2, 3), {(0, 2): 1, (1, 3): 1})
    v = validate(d)
    assert not v.ok and v.reason == "crossing"


@pytest.mark.parametrize(
    "arr, chords, profile, reason",
    [
        ((0, 1, 2), {(1, 1): 1}, None, "self_chord"),
        ((1, 0, 2), {(0, 1): 1, (1, 2): 1, (0, 2): 1}, None, "infinity_position"),
        ((0, 1, 1), {(0, 1): 1}, prof("1,1:0"), "arrangement"),
        ((0, 1, 2), {(0, 1): 1}, prof("1,1:1"), "endpoint_count"),
        ((0, 1, 2), {(0, 5): 1}, prof("1,1:1"), "bad_position"),
    ],
)
def test_invalid_diagrams(arr, chords, profile, reason):
    if profile is None:
        d = ArcDiagram.build(arr, chords)
    else:
        d = ArcDiagram(arr, tuple(sorted((a, b, m) for (a, b), m in chords.items())), profile)
    assert validate(d).reason == reason
    with pytest.raises(InvalidDiagramError):
        canonical_key(d)


def test_mutating_a_valid_diagram_is_caught():
    d = figure1()
    chords = list(d.chords)
    a, b, m = chords[0]
    chords[0] = (a, b, m + 1)
    bad = ArcDiagram(d.arrangement, tuple(chords), d.profile)
    assert validate(bad).reason == "endpoint_count"


def test_json_round_trip():
    d = figure1()
    assert ArcDiagram.from_json(d.to_json()) == d
    assert ArcDiagram.from_dict(json.loads(json.dumps(d.to_dict()))) == d


def test_canonical_key_injective_on_x2222():
    dset = dset_for("2,2,2:2")
    keys = [canonical_key(d) for d in dset]
    assert len(set(keys)) == len(keys) == 18


def test_profile_parse_and_str():
    p = ValenceProfile.parse("3,3,1,2:1")
    assert p.valences == (1, 3, 3, 1, 2)
    assert str(p) == "3,3,1,2:1"
    with pytest.raises(ValueError):
        ValenceProfile.parse("1,2")


@pytest.mark.parametrize("text", ["2,2,2:2", "1,1,1:1", "3,3,1,2:1", "1,2,3:2"])
def test_expand_collapse_round_trip(text):
    for d in dset_for(text):
        m = expand_to_slots(d)
        assert m.is_noncrossing()
        assert len(m.stubs) == d.profile.total
        assert collapse_from_slots(m, d.arrangement, d.profile) == d


def _brute_realizations(d: ArcDiagram) -> int:
    """Count non-crossing stub matchings that collapse to ``d`` by trying every perfect matching."""
    vals = d.position_valences()
    owner = [p for p, v in enumerate(vals) for _ in range(v)]
    target = d.chord_map()

    def matchings(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for k, other in enumerate(rest):
            for tail in matchings(rest[:k] + rest[k + 1:]):
                yield [(first, other)] + tail

    found = 0
    for m in matchings(list(range(len(owner)))):
        partner = [0] * len(owner)
        chords: dict = {}
        for i, j in m:
            partner[i], partner[j] = j, i
            a, b = sorted((owner[i], owner[j]))
            chords[(a, b)] = chords.get((a, b), 0) + 1
        if chords == target and is_noncrossing(partner):
            found += 1
    return found


def _small_sequences():
    out = []
    for n in (2, 3, 4):
        for vals in itertools.product(range(4), repeat=n):
            if sum(vals) <= 8 and sum(vals) % 2 == 0 and sum(vals):
                out.append(vals)
    return out


@pytest.mark.parametrize("vals", _small_sequences())
def test_slot_realization_unique_small(vals):
    # positions carry these valences; label = position
    profile = ValenceProfile(len(vals) - 1, vals)
    for cmap in enumerate_structures(vals):
        d = ArcDiagram.build(tuple(range(len(vals))), cmap, profile)
        assert _brute_realizations(d) == 1


@pytest.mark.parametrize("text", ["2,2,2:2", "1,2,3:2", "3,3,1,2:1"])
def test_slot_realization_unique_larger(text):
    for d in list(dset_for(text))[:12]:
        assert _brute_realizations(d) == 1


@given(st.tuples(*[st.integers(0, 6)] * 4), st.tuples(*[st.integers(0, 6)] * 4))
def test_crosses_symmetric(x, y):
    a, b = sorted(x[:2])
    c, d = sorted(y[:2])
    assert crosses(a, b, c, d) == crosses(c, d, a, b)

import pytest

from cactus_arcs import (
    ArcDiagram,
    InvalidDiagramError,
    border_thickness,
    component_count,
    component_decomposition,
    component_sizes,
    gcd_multiplicity,
    invariant_record,
)

from conftest import dset_for, figure1, figure6


def test_figure6_has_four_components():
    assert component_count(figure6()) == 4


def test_two_double_chords():
    d = ArcDiagram.build((0, 1, 2, 3), {(0, 1): 2, (2, 3): 2})
    assert component_count(d) == 2
    assert border_thickness(d) == 0
    assert gcd_multiplicity(d) == 2


def test_square_is_one_loop():
    d = ArcDiagram.build((0, 1, 2, 3), {(0, 1): 1, (1, 2): 1, (2, 3): 1, (0, 3): 1})
    assert component_count(d) == 1
    assert component_sizes(d) == [4]
    assert border_thickness(d) == 1


def test_loops_cover_every_stub_once():
    loops = component_decomposition(figure6())
    stubs = [s for loop in loops for s in loop]
    assert len(stubs) == len(set(stubs)) == figure6().profile.total


def test_odd_valence_rejected():
    with pytest.raises(InvalidDiagramError):
        component_count(figure1())
    assert invariant_record(figure1()).component_count is None


def test_figure1_border_and_gcd():
    d = figure1()
    # adjacent pair (2,3) has no chord
    assert border_thickness(d) == 0
    assert gcd_multiplicity(d) == 1


def test_no_chords():
    d = ArcDiagram.build((0, 1), {})
    assert gcd_multiplicity(d) is None
    assert component_count(d) == 0


def test_record_dict():
    rec = invariant_record(figure6()).to_dict()
    assert rec["components"] == 4
    assert set(rec) == {"border", "gcd", "components", "component_sizes"}


@pytest.mark.parametrize("text", ["2,2,2:2", "2,2,2,2:2"])
def test_component_counts_realized(text):
    counts = {component_count(d) for d in dset_for(text)}
    assert min(counts) == 1

import pytest

from cactus_arcs import ArcDiagram, ValenceProfile, enumerate_diagrams

# valence sum <= 12; the shared corpus for exhaustive checks
SMALL_PROFILES = ["1:1", "1,1:0", "1,1,1:1", "2,2,2:2", "3,3,1,2:1", "1,2,2:1", "2,2,2,2:2", "1,2,3:2"]


def prof(text: str) -> ValenceProfile:
    return ValenceProfile.parse(text)


def figure1() -> ArcDiagram:
    return ArcDiagram.build((0, 1, 2, 3, 4), {(0, 1): 1, (1, 2): 2, (2, 4): 1, (3, 4): 1})


def figure6() -> ArcDiagram:
    return ArcDiagram.build(
        (0, 1, 2, 3, 4),
        {(0, 1): 1, (0, 2): 1, (0, 4): 4, (1, 2): 1, (2, 3): 1, (2, 4): 1, (3, 4): 1},
    )


def figure7_top() -> ArcDiagram:
    return ArcDiagram.build(
        (0, 6, 1, 2, 3, 4, 5),
        {(0, 1): 1, (0, 2): 2, (0, 3): 1, (2, 3): 1, (3, 4): 2, (4, 5): 1, (4, 6): 1},
    )


def figure7_bottom() -> ArcDiagram:
    return ArcDiagram.build(
        (0, 6, 1, 2, 3, 4, 5),
        {(0, 2): 2, (0, 3): 1, (1, 2): 1, (2, 3): 1, (3, 4): 2, (4, 5): 1, (4, 6): 1},
    )


_SETS: dict = {}


def dset_for(text: str):
    if text not in _SETS:
        _SETS[text] = enumerate_diagrams(prof(text))
    return _SETS[text]


@pytest.fixture(params=SMALL_PROFILES)
def small_set(request):
    return dset_for(request.param)

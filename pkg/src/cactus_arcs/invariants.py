"""Border thickness, gcd of chord multiplicities, and right-hand-rule components."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .diagram import ArcDiagram, InvalidDiagramError, Stub, expand_to_slots


def border_thickness(diagram: ArcDiagram) -> int:
    """Fewest chords between any two circularly adjacent positions, (n, 0) included."""
    n = diagram.n
    cmap = diagram.chord_map()
    pairs = [(x, x + 1) for x in range(n)] + [(0, n)]
    return min(cmap.get(pair, 0) for pair in pairs)


def gcd_multiplicity(diagram: ArcDiagram) -> int | None:
    """gcd of the positive multiplicities; None for a diagram with no chords."""
    if not diagram.chords:
        return None
    return math.gcd(*(m for _, _, m in diagram.chords))


def all_even(diagram: ArcDiagram) -> bool:
    return all(v % 2 == 0 for v in diagram.profile.valences)


def component_decomposition(diagram: ArcDiagram) -> list[tuple[Stub, ...]]:
    """Split the chords into closed loops.

    At every point the stubs, in clockwise order, are joined in consecutive
    pairs (1st with 2nd, 3rd with 4th, ...). A loop alternates between
    following a chord and crossing a point through that pairing. Each loop is
    returned as the cyclic sequence of stubs it visits, starting from its
    smallest stub.
    """
    if not all_even(diagram):
        raise InvalidDiagramError("components need every valence to be even")
    matching = expand_to_slots(diagram)
    stubs = matching.stubs
    index = {stub: i for i, stub in enumerate(stubs)}

    def across(i: int) -> int:
        pos, slot = stubs[i]
        return index[(pos, slot ^ 1)]

    seen: set[int] = set()
    loops = []
    for start in range(len(stubs)):
        if start in seen:
            continue
        loop = []
        i = start
        while True:
            j = matching.partner[i]
            loop.extend((i, j))
            seen.update((i, j))
            i = across(j)
            if i == start:
                break
        loops.append(tuple(stubs[k] for k in loop))
    return loops


def component_count(diagram: ArcDiagram) -> int:
    return len(component_decomposition(diagram))


def component_sizes(diagram: ArcDiagram) -> list[int]:
    """Number of distinct points on each loop, sorted."""
    return sorted(len({pos for pos, _ in loop}) for loop in component_decomposition(diagram))


@dataclass(frozen=True)
class InvariantRecord:
    border_thickness: int
    gcd_multiplicity: int | None
    component_count: int | None
    component_sizes: tuple[int, ...] | None

    def to_dict(self) -> dict:
        return {
            "border": self.border_thickness,
            "gcd": self.gcd_multiplicity,
            "components": self.component_count,
            "component_sizes": None if self.component_sizes is None else list(self.component_sizes),
        }


def invariant_record(diagram: ArcDiagram) -> InvariantRecord:
    if all_even(diagram):
        sizes = tuple(component_sizes(diagram))
        count = len(sizes)
    else:
        sizes = count = None
    return InvariantRecord(border_thickness(diagram), gcd_multiplicity(diagram), count, sizes)

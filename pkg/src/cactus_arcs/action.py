"""The J_n action on arc diagrams and the composite words built from it.

``apply_generator`` works on the stub expansion of a diagram: the stubs of
positions p..q are reversed in place, chords with both ends on one side of
the interval keep their partners, and the stubs whose chords cross into the
interval are re-paired in the only non-crossing way, nested around the
interval.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .cactus import Generator, Word, interval, product
from .diagram import (
    ArcDiagram,
    InvalidDiagramError,
    ValenceProfile,
    _stub_targets,
    is_noncrossing,
    require_valid,
)


class ReconnectionError(RuntimeError):
    """The reconnection step was not unique; never expected for a valid diagram."""


def _linear_matching(diagram: ArcDiagram) -> tuple[list[int], list[int]]:
    """Owner position and partner index for every stub, skipping validation."""
    targets = _stub_targets(diagram)
    owner = [p for p, t in enumerate(targets) for _ in t]
    partner = [-1] * len(owner)
    stack: list[int] = []
    idx = 0
    for p, tlist in enumerate(targets):
        for x in tlist:
            if x > p:
                stack.append(idx)
            else:
                j = stack.pop()
                partner[idx], partner[j] = j, idx
            idx += 1
    return owner, partner


def _reflect(diagram: ArcDiagram, g: Generator):
    """Reverse the stubs of p..q; return new owners, fixed pairs, and crossing stubs."""
    p, q = g.p, g.q
    owner, partner = _linear_matching(diagram)
    inside = [p <= owner[i] <= q for i in range(len(owner))]
    lo = next((i for i, pos in enumerate(owner) if pos >= p), len(owner))
    hi = next((i for i, pos in enumerate(owner) if pos > q), len(owner))
    # old stub index -> new stub index
    new_index = list(range(len(owner)))
    for i in range(lo, hi):
        new_index[i] = lo + hi - 1 - i
    new_owner = [0] * len(owner)
    for i, pos in enumerate(owner):
        new_owner[new_index[i]] = g.reflect(pos)
    new_partner = [-1] * len(owner)
    inner_cross, outer_cross = [], []
    for i, j in enumerate(partner):
        if inside[i] == inside[j]:
            new_partner[new_index[i]] = new_index[j]
        elif inside[i]:
            inner_cross.append(new_index[i])
        else:
            outer_cross.append(new_index[i])
    inner_cross.sort()
    # outer crossing stubs clockwise, starting just after position q
    outer_cross.sort(key=lambda k: (k < lo, k))
    return new_owner, new_partner, inner_cross, outer_cross


def _collapse(diagram: ArcDiagram, g: Generator, owner: list[int], partner: list[int]) -> ArcDiagram:
    chords: dict[tuple[int, int], int] = {}
    for i, j in enumerate(partner):
        if i < j:
            a, b = owner[i], owner[j]
            key = (a, b) if a < b else (b, a)
            chords[key] = chords.get(key, 0) + 1
    arr = diagram.arrangement
    new_arr = tuple(arr[g.reflect(x)] for x in range(len(arr)))
    return ArcDiagram.build(new_arr, chords, diagram.profile)


def _step(diagram: ArcDiagram, g: Generator) -> ArcDiagram:
    owner, partner, inner, outer = _reflect(diagram, g)
    for a, b in zip(reversed(inner), outer):
        partner[a], partner[b] = b, a
    if not is_noncrossing(partner):
        raise ReconnectionError(f"{g} produced a crossing matching on {diagram}")
    return _collapse(diagram, g, owner, partner)


def apply_generator(diagram: ArcDiagram, g: Generator) -> ArcDiagram:
    g.check(diagram.n)
    require_valid(diagram)
    return _step(diagram, g)


def apply_word(diagram: ArcDiagram, word: Word) -> ArcDiagram:
    """Apply the factors of ``word`` from right to left."""
    word.check(diagram.n)
    require_valid(diagram)
    for g in word.in_application_order():
        diagram = _step(diagram, g)
    return diagram


def brute_force_reconnection(diagram: ArcDiagram, g: Generator) -> list[ArcDiagram]:
    """Every non-crossing way to re-pair the cut stubs after reflecting p..q.

    Tries all bijections between inner and outer crossing stubs; the action is
    well defined exactly when the returned list has one element.
    """
    g.check(diagram.n)
    require_valid(diagram)
    owner, partner, inner, outer = _reflect(diagram, g)
    found = {}
    for perm in itertools.permutations(outer):
        trial = list(partner)
        for a, b in zip(inner, perm):
            trial[a], trial[b] = b, a
        if is_noncrossing(trial):
            d = _collapse(diagram, g, owner, trial)
            found[d.chords] = d
    return list(found.values())


# --------------------------------------------------------------------------
# composite words


def swap_word(i_pos: int, j_pos: int) -> Word:
    """Word exchanging the points at positions ``i_pos < j_pos``.

    For equal valences the chords come back unchanged.
    """
    if not (1 <= i_pos < j_pos):
        raise ValueError(f"need 1 <= i_pos < j_pos, got {i_pos}, {j_pos}")
    if j_pos == i_pos + 1:
        return Word.of((i_pos, j_pos))
    outer = Word.of((i_pos + 1, j_pos))
    return product(outer, Word.of((i_pos, i_pos + 1)), outer)


def _lone_partner(diagram: ArcDiagram, pos: int) -> int:
    label = diagram.arrangement[pos]
    if diagram.profile.valences[label] != 1:
        raise ValueError(f"point at position {pos} has valence {diagram.profile.valences[label]}, need 1")
    for a, b, _ in diagram.chords:
        if a == pos:
            return b
        if b == pos:
            return a
    raise InvalidDiagramError(f"no chord at position {pos}")


def _adjacent(n: int, a: int, b: int) -> bool:
    return (a - b) % (n + 1) in (1, n)


def adjacency_word(diagram: ArcDiagram, i_pos: int) -> Word:
    """Word moving the valence-1 point at ``i_pos`` next to its partner.

    The other points keep their relative order and their chords.
    """
    n = diagram.n
    if n < 3:
        raise ValueError("adjacency needs n >= 3")
    if not 1 <= i_pos <= n:
        raise ValueError(f"position {i_pos} out of range")
    require_valid(diagram)
    j, k = i_pos, _lone_partner(diagram, i_pos)
    if _adjacent(n, j, k):
        return Word()
    if j < k:
        return product(interval(j, k - 2), interval(j, k - 1))
    # move across to k+1 first, then restore the order of the others
    return product(interval(k + 2, j), interval(k + 1, j))


def fissure_word(diagram: ArcDiagram, kind: Literal["+", "-"], j_pos: int, k_pos: int) -> Word:
    """Word carrying the valence-1 point at ``j_pos`` to index ``k_pos``.

    ``kind`` names the side its partner sits on: ``"-"`` for the neighbour at
    ``j_pos - 1`` (counter-clockwise), ``"+"`` for the one at ``j_pos + 1``.
    The remaining points keep their relative order.
    """
    n = diagram.n
    if kind not in ("+", "-"):
        raise ValueError(f"kind must be '+' or '-', got {kind!r}")
    if not (1 <= j_pos <= n and 1 <= k_pos <= n):
        raise ValueError(f"indices out of range: j={j_pos}, k={k_pos}, n={n}")
    require_valid(diagram)
    partner = _lone_partner(diagram, j_pos)
    expected = (j_pos - 1) if kind == "-" else (j_pos + 1) % (n + 1)
    if partner != expected:
        raise ValueError(f"point at {j_pos} is attached to {partner}, not on the {kind} side")
    j, k = j_pos, k_pos
    if j == k:
        return Word()
    if k > j:
        if kind == "-":
            return product(interval(j, k - 1), interval(j, k))
        return product(interval(j, k), interval(j + 1, k))
    if kind == "-":
        return product(interval(k, j), interval(k, j - 1))
    return product(interval(k + 1, j), interval(k, j))


# --------------------------------------------------------------------------
# n = 3


Site = Literal["p", "q", "r", "s"]


@dataclass(frozen=True)
class N3Solution:
    """Arc counts for n = 3 with positions 0..3 carrying valences a, b, c, d.

    ``p, q, r, s`` join the neighbours (0,1), (1,2), (2,3), (3,0); ``m`` is the
    diagonal, on (1,3) when ``orientation == "bd"`` and on (0,2) when ``"ac"``.
    """

    m: int
    p: int
    q: int
    r: int
    s: int
    orientation: Literal["bd", "ac"] | None

    def chord_map(self) -> dict[tuple[int, int], int]:
        out = {(0, 1): self.p, (1, 2): self.q, (2, 3): self.r, (0, 3): self.s}
        if self.m:
            out[(1, 3) if self.orientation == "bd" else (0, 2)] = self.m
        return {k: v for k, v in out.items() if v}

    def to_diagram(self, arrangement, profile: ValenceProfile | None = None) -> ArcDiagram:
        return ArcDiagram.build(arrangement, self.chord_map(), profile)


def n3_solve(a: int, b: int, c: int, d: int, zero_site: Site) -> N3Solution | None:
    """Unique arc counts with the given border site empty, or None if infeasible."""
    diff = (b + d) - (a + c)
    if diff % 2:
        return None
    m = abs(diff) // 2
    orientation = "bd" if diff > 0 else "ac" if diff < 0 else None
    bd = m if orientation == "bd" else 0
    ac = m if orientation == "ac" else 0
    a, b, c, d = a - ac, b - bd, c - ac, d - bd
    # around the border: p+q=b, q+r=c, r+s=d, s+p=a
    if zero_site == "p":
        p, q = 0, b
        r = c - q
        s = d - r
        ok = s + p == a
    elif zero_site == "q":
        q, p = 0, b
        s = a - p
        r = d - s
        ok = q + r == c
    elif zero_site == "r":
        r, q = 0, c
        p = b - q
        s = a - p
        ok = r + s == d
    elif zero_site == "s":
        s, p = 0, a
        q = b - p
        r = c - q
        ok = r + s == d
    else:
        raise ValueError(f"zero_site must be one of p, q, r, s; got {zero_site!r}")
    if not ok or min(p, q, r, s) < 0:
        return None
    return N3Solution(m, p, q, r, s, orientation)


N3_WITNESS = Word.of((2, 3), (1, 3), (2, 3), (1, 2))


def rotation_word(n: int) -> Word:
    """s(1,n) s(1,n-1)."""
    return product(interval(1, n), interval(1, n - 1))


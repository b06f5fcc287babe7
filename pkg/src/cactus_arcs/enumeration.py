"""Exact enumeration of X(l_1, ..., l_n, l_inf), plus a brute-force oracle."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .diagram import (
    ArcDiagram,
    ValenceProfile,
    _key,
    collapse_from_slots,
    is_noncrossing,
    stub_list,
    SlotMatching,
)

DEFAULT_ORACLE_BOUND = 16


@dataclass(frozen=True)
class DiagramSet:
    profile: ValenceProfile
    elements: tuple[ArcDiagram, ...]
    index: dict[bytes, int] = field(compare=False, repr=False)

    @classmethod
    def from_diagrams(cls, profile: ValenceProfile, diagrams) -> "DiagramSet":
        keyed = {_key(d): d for d in diagrams}
        keys = sorted(keyed)
        return cls(profile, tuple(keyed[k] for k in keys), {k: i for i, k in enumerate(keys)})

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[ArcDiagram]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> ArcDiagram:
        return self.elements[i]

    def ordinal(self, diagram: ArcDiagram) -> int:
        return self.index[_key(diagram)]

    def keys(self) -> frozenset[bytes]:
        return frozenset(self.index)


def arrangements(n: int) -> Iterator[tuple[int, ...]]:
    for perm in itertools.permutations(range(1, n + 1)):
        yield (0, *perm)


def _pairings(valences: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Non-crossing stub matchings with no pair inside one position."""
    owner = [pos for pos, v in enumerate(valences) for _ in range(v)]
    total = len(owner)
    partner = [-1] * total

    def fill(lo: int, hi: int) -> Iterator[None]:
        # match stubs lo..hi-1 among themselves
        if lo >= hi:
            yield
            return
        for k in range(lo + 1, hi, 2):
            if owner[k] == owner[lo]:
                continue
            partner[lo], partner[k] = k, lo
            for _ in fill(lo + 1, k):
                yield from fill(k + 1, hi)
        partner[lo] = -1

    for _ in fill(0, total):
        yield tuple(partner)


def enumerate_structures(valences_by_position: Sequence[int]) -> list[dict[tuple[int, int], int]]:
    """All non-crossing, loop-free chord maps with the given valence at each position."""
    return [dict(cm) for cm in _structures(tuple(int(v) for v in valences_by_position))]


@lru_cache(maxsize=4096)
def _structures(valences: tuple[int, ...]) -> tuple[tuple[tuple[tuple[int, int], int], ...], ...]:
    if sum(valences) % 2:
        return ()
    stubs = stub_list(valences)
    seen = set()
    for partner in _pairings(valences):
        chords: Counter = Counter()
        for i, j in enumerate(partner):
            if i < j:
                chords[(stubs[i][0], stubs[j][0])] += 1
        key = tuple(sorted(chords.items()))
        seen.add(key)
    return tuple(sorted(seen))


def _enumerate_arrangement(profile: ValenceProfile, arrangement: tuple[int, ...]) -> list[ArcDiagram]:
    by_position = tuple(profile.valences[label] for label in arrangement)
    return [ArcDiagram.build(arrangement, dict(cm), profile) for cm in _structures(by_position)]


def enumerate_diagrams(profile: ValenceProfile, jobs: int = 1) -> DiagramSet:
    """Every element of X(profile), ordered by canonical key.

    Arrangements are not quotiented: points of equal valence in different
    orders give different elements.
    """
    if profile.total % 2:
        return DiagramSet.from_diagrams(profile, [])
    arrs = list(arrangements(profile.n))
    if jobs > 1 and len(arrs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(_enumerate_arrangement, itertools.repeat(profile), arrs)
            diagrams = [d for chunk in chunks for d in chunk]
    else:
        diagrams = [d for arr in arrs for d in _enumerate_arrangement(profile, arr)]
    return DiagramSet.from_diagrams(profile, diagrams)


# --------------------------------------------------------------------------
# oracle


def _all_perfect_matchings(items: list[int], owner: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        if owner[other] == owner[first]:
            continue
        for tail in _all_perfect_matchings(rest[:i] + rest[i + 1:], owner):
            yield [(first, other), *tail]


def brute_force_oracle(profile: ValenceProfile, bound: int = DEFAULT_ORACLE_BOUND) -> DiagramSet:
    """Enumerate every perfect matching of stubs, keep the non-crossing ones.

    Independent of :func:`enumerate_diagrams`: no recursion on regions, no
    structure cache shared with it.
    """
    if profile.total > bound:
        raise ValueError(f"valence sum {profile.total} exceeds oracle bound {bound}")
    if profile.total % 2:
        return DiagramSet.from_diagrams(profile, [])
    diagrams = []
    for arr in arrangements(profile.n):
        by_position = [profile.valences[label] for label in arr]
        stubs = stub_list(by_position)
        owner = [pos for pos, _ in stubs]
        for pairs in _all_perfect_matchings(list(range(len(stubs))), owner):
            partner = [0] * len(stubs)
            for i, j in pairs:
                partner[i], partner[j] = j, i
            if not is_noncrossing(partner):
                continue
            diagrams.append(collapse_from_slots(SlotMatching(stubs, tuple(partner)), arr, profile))
    return DiagramSet.from_diagrams(profile, diagrams)


# --------------------------------------------------------------------------
# counting


def count_structures(valences_by_position: Sequence[int]) -> int:
    """Number of structures for one arrangement, by interval DP over stubs."""
    owner = tuple(pos for pos, v in enumerate(valences_by_position) for _ in range(v))
    total = len(owner)
    if total % 2:
        return 0

    @lru_cache(maxsize=None)
    def ways(lo: int, hi: int) -> int:
        if lo >= hi:
            return 1
        acc = 0
        for k in range(lo + 1, hi, 2):
            if owner[k] != owner[lo]:
                acc += ways(lo + 1, k) * ways(k + 1, hi)
        return acc

    return ways(0, total)


def count(profile: ValenceProfile) -> int:
    """|X(profile)| without materialising diagrams."""
    if profile.total % 2:
        return 0
    finite = profile.finite
    weight = math.prod(math.factorial(m) for m in Counter(finite).values())
    total = 0
    for order in set(itertools.permutations(finite)):
        total += count_structures((profile.l_inf, *order)) * weight
    return total

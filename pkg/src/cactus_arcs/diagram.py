"""Arc diagrams on a disc and their boundary-stub (slot) expansion.

A diagram has ``n + 1`` points on a circle at positions ``0..n`` in clockwise
order. Position 0 always carries the point at infinity, written as label 0.
Chords are keyed by *positions*; the arrangement says which label sits where.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

INFINITY = 0


class InvalidDiagramError(ValueError):
    """Raised when an operation needs a valid diagram and did not get one."""


@dataclass(frozen=True)
class ValenceProfile:
    """Valences indexed by label: ``valences[0]`` is l_inf, ``valences[i]`` is l_i."""

    n: int
    valences: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "valences", tuple(int(v) for v in self.valences))
        if self.n < 1:
            raise ValueError(f"need at least one finite point, got n={self.n}")
        if len(self.valences) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} valences, got {len(self.valences)}")
        if any(v < 0 for v in self.valences):
            raise ValueError(f"valences must be non-negative: {self.valences}")

    @classmethod
    def from_finite(cls, finite: Sequence[int], l_inf: int) -> "ValenceProfile":
        """Build from ``(l_1, ..., l_n)`` and ``l_inf`` in the usual X(...) order."""
        return cls(len(finite), (l_inf, *finite))

    @classmethod
    def parse(cls, text: str) -> "ValenceProfile":
        """Parse ``"l1,...,ln:linf"``."""
        try:
            finite, l_inf = text.split(":")
            values = [int(v) for v in finite.split(",") if v.strip()]
            return cls.from_finite(values, int(l_inf))
        except ValueError as exc:
            raise ValueError(f"bad profile {text!r}; expected 'l1,...,ln:linf'") from exc

    @property
    def total(self) -> int:
        return sum(self.valences)

    @property
    def l_inf(self) -> int:
        return self.valences[0]

    @property
    def finite(self) -> tuple[int, ...]:
        return self.valences[1:]

    def __str__(self) -> str:
        return ",".join(map(str, self.finite)) + f":{self.l_inf}"

    def to_list(self) -> list[int]:
        return list(self.valences)


@dataclass(frozen=True)
class ArcDiagram:
    """An element of X(l_1, ..., l_n, l_inf).

    ``chords`` is stored as a sorted tuple of ``(a, b, multiplicity)`` with
    ``a < b``; construct through :meth:`build` to normalise a mapping.
    Construction does not validate; use :func:`validate`.
    """

    arrangement: tuple[int, ...]
    chords: tuple[tuple[int, int, int], ...]
    profile: ValenceProfile = field(compare=False)

    @property
    def n(self) -> int:
        return len(self.arrangement) - 1

    @classmethod
    def build(
        cls,
        arrangement: Sequence[int],
        chords: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]],
        profile: ValenceProfile | None = None,
    ) -> "ArcDiagram":
        """Normalise chords (merge, orient, sort, drop zeros) and infer the profile if absent."""
        merged: Counter = Counter()
        items = chords.items() if isinstance(chords, Mapping) else ((k[:2], k[2]) for k in chords)
        for (a, b), m in items:
            a, b = int(a), int(b)
            merged[(min(a, b), max(a, b))] += int(m)
        normal = tuple(sorted((a, b, m) for (a, b), m in merged.items() if m != 0))
        arrangement = tuple(int(x) for x in arrangement)
        if profile is None:
            profile = _infer_profile(arrangement, normal)
        return cls(arrangement, normal, profile)

    def chord_map(self) -> dict[tuple[int, int], int]:
        return {(a, b): m for a, b, m in self.chords}

    def multiplicity(self, a: int, b: int) -> int:
        a, b = min(a, b), max(a, b)
        for x, y, m in self.chords:
            if (x, y) == (a, b):
                return m
        return 0

    def position_valences(self) -> tuple[int, ...]:
        """Endpoint count at each position, read from the chords."""
        counts = [0] * (self.n + 1)
        for a, b, m in self.chords:
            counts[a] += m
            counts[b] += m
        return tuple(counts)

    def position_of(self, label: int) -> int:
        return self.arrangement.index(label)

    def chords_by_label(self) -> dict[frozenset, int]:
        """Chord multiplicities keyed by the unordered pair of *labels*."""
        return {frozenset((self.arrangement[a], self.arrangement[b])): m for a, b, m in self.chords}

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "arrangement": list(self.arrangement),
            "chords": [list(c) for c in self.chords],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> "ArcDiagram":
        n = int(data["n"])
        arrangement = data["arrangement"]
        if len(arrangement) != n + 1:
            raise ValueError(f"arrangement has {len(arrangement)} entries, expected {n + 1}")
        return cls.build(arrangement, [tuple(c) for c in data["chords"]])

    @classmethod
    def from_json(cls, text: str) -> "ArcDiagram":
        return cls.from_dict(json.loads(text))


def _infer_profile(arrangement: Sequence[int], chords) -> ValenceProfile:
    n = len(arrangement) - 1
    counts = [0] * (n + 1)
    for a, b, m in chords:
        if 0 <= a <= n:
            counts[a] += m
        if 0 <= b <= n:
            counts[b] += m
    valences = [0] * (n + 1)
    for pos, label in enumerate(arrangement):
        if 0 <= label <= n:
            valences[label] = counts[pos]
    return ValenceProfile(n, tuple(valences))


# --------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Validity:
    ok: bool
    reason: str | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def crosses(a: int, b: int, c: int, d: int) -> bool:
    """True when chords {a,b} and {c,d} (a<b, c<d) interleave."""
    return a < c < b < d or c < a < d < b


def validate(diagram: ArcDiagram) -> Validity:
    n = diagram.n
    profile = diagram.profile
    arr = diagram.arrangement
    if profile.n != n:
        return Validity(False, "profile_size", (profile.n, n))
    if sorted(arr) != list(range(n + 1)):
        return Validity(False, "arrangement", arr)
    if arr[0] != INFINITY:
        return Validity(False, "infinity_position", arr[0])
    seen = set()
    for a, b, m in diagram.chords:
        if a == b:
            return Validity(False, "self_chord", (a, b))
        if not (0 <= a <= n and 0 <= b <= n) or a > b:
            return Validity(False, "bad_position", (a, b))
        if m <= 0:
            return Validity(False, "multiplicity", (a, b, m))
        if (a, b) in seen:
            return Validity(False, "duplicate_chord", (a, b))
        seen.add((a, b))
    counts = diagram.position_valences()
    for pos in range(n + 1):
        want = profile.valences[arr[pos]]
        if counts[pos] != want:
            return Validity(False, "endpoint_count", (pos, counts[pos], want))
    chords = diagram.chords
    for i, (a, b, _) in enumerate(chords):
        for c, d, _ in chords[i + 1:]:
            if crosses(a, b, c, d):
                return Validity(False, "crossing", ((a, b), (c, d)))
    return Validity(True)


def require_valid(diagram: ArcDiagram) -> None:
    result = validate(diagram)
    if not result:
        raise InvalidDiagramError(f"invalid diagram ({result.reason}: {result.witness})")


def canonical_key(diagram: ArcDiagram) -> bytes:
    """UTF-8 bytes of the compact JSON serialization; injective on valid diagrams."""
    require_valid(diagram)
    return diagram.to_json().encode("utf-8")


def _key(diagram: ArcDiagram) -> bytes:
    # hot-path variant for diagrams already known valid
    return diagram.to_json().encode("utf-8")


# --------------------------------------------------------------------------
# stubs


Stub = tuple[int, int]  # (position, slot)


@dataclass(frozen=True)
class SlotMatching:
    """A perfect matching on the stubs, stored as ``partner[stub_index]``.

    ``stubs`` lists ``(position, slot)`` in clockwise order from position 0.
    """

    stubs: tuple[Stub, ...]
    partner: tuple[int, ...]

    def pairs(self) -> list[tuple[Stub, Stub]]:
        return [(self.stubs[i], self.stubs[j]) for i, j in enumerate(self.partner) if i < j]

    def is_noncrossing(self) -> bool:
        return is_noncrossing(self.partner)


def stub_list(position_valences: Sequence[int]) -> tuple[Stub, ...]:
    return tuple((pos, slot) for pos, v in enumerate(position_valences) for slot in range(v))


def is_noncrossing(partner: Sequence[int]) -> bool:
    """Balanced-bracket test on a fixed-point-free involution of ``range(len)``."""
    stack = []
    for i, j in enumerate(partner):
        if j == i or partner[j] != i:
            return False
        if i < j:
            stack.append(j)
        elif not stack or stack.pop() != i:
            return False
    return not stack


def _stub_targets(diagram: ArcDiagram) -> list[list[int]]:
    """For each position, partner positions of its stubs in clockwise slot order.

    Non-crossing forces the slots at ``p`` to reach partners in counter-clockwise
    order starting from ``p - 1``; parallel chords take consecutive slots.
    """
    n = diagram.n
    out: list[list[int]] = [[] for _ in range(n + 1)]
    cmap = diagram.chord_map()
    for p in range(n + 1):
        for step in range(1, n + 1):
            x = (p - step) % (n + 1)
            m = cmap.get((min(p, x), max(p, x)), 0)
            out[p].extend([x] * m)
    return out


def expand_to_slots(diagram: ArcDiagram) -> SlotMatching:
    require_valid(diagram)
    targets = _stub_targets(diagram)
    stubs = stub_list([len(t) for t in targets])
    partner = [-1] * len(stubs)
    stack: list[tuple[int, int]] = []  # (stub index, position)
    idx = 0
    for p, tlist in enumerate(targets):
        for x in tlist:
            if x > p:
                stack.append((idx, p))
            else:
                if not stack:
                    raise InvalidDiagramError(f"no non-crossing realization: unmatched stub at {p}")
                j, q = stack.pop()
                if q != x:
                    raise InvalidDiagramError(
                        f"no non-crossing realization: stub at {p} wants {x}, found {q}"
                    )
                partner[idx], partner[j] = j, idx
            idx += 1
    if stack:
        raise InvalidDiagramError("no non-crossing realization: stubs left open")
    return SlotMatching(stubs, tuple(partner))


def collapse_from_slots(
    matching: SlotMatching,
    arrangement: Sequence[int],
    profile: ValenceProfile | None = None,
) -> ArcDiagram:
    chords: Counter = Counter()
    for i, j in enumerate(matching.partner):
        if i < j:
            a, b = matching.stubs[i][0], matching.stubs[j][0]
            if a == b:
                raise InvalidDiagramError(f"stubs {i} and {j} share position {a}")
            chords[(min(a, b), max(a, b))] += 1
    return ArcDiagram.build(arrangement, chords, profile)

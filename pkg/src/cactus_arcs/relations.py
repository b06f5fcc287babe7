"""Extensional checks of relations among words, as maps on an enumerated X."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .action import _step, apply_word, rotation_word
from .cactus import Generator, Word, phi
from .diagram import ValenceProfile, _key
from .enumeration import DiagramSet, enumerate_diagrams
from .orbits import action_table, generators


@dataclass(frozen=True)
class RelationCheck:
    lhs: Word
    rhs: Word
    profile: ValenceProfile
    holds: bool
    witness: int | None = None
    order: int | None = None

    def to_dict(self) -> dict:
        return {
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "profile": self.profile.to_list(),
            "holds": self.holds,
            "witness": self.witness,
            "order": self.order,
        }


def holds_on_set(lhs: Word, rhs: Word, dset: DiagramSet) -> RelationCheck:
    """Compare both words element by element; the witness is the first ordinal that differs."""
    for i, d in enumerate(dset):
        if apply_word(d, lhs) != apply_word(d, rhs):
            return RelationCheck(lhs, rhs, dset.profile, False, i)
    return RelationCheck(lhs, rhs, dset.profile, True)


def induced_permutation(word: Word, dset: DiagramSet) -> list[int]:
    """``perm[i]`` is the ordinal of ``word`` applied to element ``i``."""
    out = []
    for d in dset:
        for g in word.in_application_order():
            d = _step(d, g)
        out.append(dset.index[_key(d)])
    return out


def _cycle_lengths(perm: list[int]) -> list[int]:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return lengths


def word_order_on_set(word: Word, dset: DiagramSet) -> int:
    """Least m >= 1 with word**m acting trivially: lcm of the cycle lengths."""
    return math.lcm(1, *_cycle_lengths(induced_permutation(word, dset)))


def _generator_perms(dset: DiagramSet) -> dict[Generator, list[int]]:
    gens = generators(dset.profile.n)
    table = action_table(dset)
    return {g: [row[k] for row in table] for k, g in enumerate(gens)}


def _compose(perms: dict[Generator, list[int]], word: Word, size: int) -> list[int]:
    out = list(range(size))
    for g in word.in_application_order():
        step = perms[g]
        out = [step[i] for i in out]
    return out


def _first_difference(a: list[int], b: list[int]) -> int | None:
    return next((i for i, (x, y) in enumerate(zip(a, b)) if x != y), None)


def defining_relation_instances(n: int) -> dict[str, list[tuple[Word, Word]]]:
    gens = generators(n)
    involution = [(Word((g, g)), Word()) for g in gens]
    commute = [
        (Word((g, h)), Word((h, g)))
        for g in gens for h in gens
        if g.q < h.p
    ]
    nested = [
        (Word((g, h, g)), Word((Generator(g.p + g.q - h.q, g.p + g.q - h.p),)))
        for g in gens for h in gens
        if g.p <= h.p and h.q <= g.q
    ]
    return {"involution": involution, "disjoint_commutation": commute, "nesting": nested}


def check_defining_relations(dset: DiagramSet) -> dict:
    """Every instance of the three defining relation families, checked on every element."""
    n = dset.profile.n
    perms = _generator_perms(dset)
    size = len(dset)
    families = {}
    all_hold = True
    for name, instances in defining_relation_instances(n).items():
        failures = []
        for lhs, rhs in instances:
            witness = _first_difference(_compose(perms, lhs, size), _compose(perms, rhs, size))
            if witness is not None:
                failures.append(RelationCheck(lhs, rhs, dset.profile, False, witness).to_dict())
        families[name] = {"instances": len(instances), "failures": failures}
        all_hold &= not failures
    return {"profile": dset.profile.to_list(), "set_size": size, "holds": all_hold, "families": families}


def braid_words(i: int) -> tuple[Word, Word]:
    lhs = Word.of((i, i + 1), (i - 1, i), (i, i + 1))
    rhs = Word.of((i - 1, i), (i, i + 1), (i - 1, i))
    return lhs, rhs


def check_braid(dset: DiagramSet, i: int) -> RelationCheck:
    n = dset.profile.n
    if not 2 <= i <= n - 1:
        raise ValueError(f"braid index needs 2 <= i <= n-1, got i={i}, n={n}")
    lhs, rhs = braid_words(i)
    return holds_on_set(lhs, rhs, dset)


def check_rotation_relation(profile: ValenceProfile, dset: DiagramSet | None = None) -> dict:
    """Order of s(1,n) s(1,n-1) on X for an equal-valence profile, and of its image in S_n."""
    n = profile.n
    if n < 2:
        raise ValueError("rotation relation needs n >= 2")
    if len(set(profile.valences)) != 1:
        raise ValueError(f"rotation relation needs equal valences, got {profile}")
    dset = dset if dset is not None else enumerate_diagrams(profile)
    word = rotation_word(n)
    order = word_order_on_set(word, dset)
    bound = n * (n + 1)
    phi_order = phi(word, n).order()
    return {
        "profile": profile.to_list(),
        "set_size": len(dset),
        "word": str(word),
        "order": order,
        "bound": bound,
        "divides": bound % order == 0,
        "phi_order": phi_order,
        "phi_is_n_cycle": len(phi(word, n).cycles()) == 1 and phi_order == n,
        "holds": bound % order == 0 and phi_order == n,
    }

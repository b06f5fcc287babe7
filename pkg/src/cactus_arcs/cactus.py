"""Generators s(p,q) of the cactus group J_n, words in them, and the map to S_n."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class WordSyntaxError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Generator:
    p: int
    q: int

    def __post_init__(self):
        if not (1 <= self.p < self.q):
            raise ValueError(f"generator needs 1 <= p < q, got s({self.p},{self.q})")

    def check(self, n: int) -> None:
        if self.q > n:
            raise ValueError(f"s({self.p},{self.q}) out of range for n={n}")

    def reflect(self, x: int) -> int:
        """Image of position ``x`` under the interval reversal."""
        return self.p + self.q - x if self.p <= x <= self.q else x

    def __str__(self) -> str:
        return f"s({self.p},{self.q})"


@dataclass(frozen=True)
class Word:
    """A product of generators as written, leftmost first; it acts right to left."""

    factors: tuple[Generator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> "Word":
        return cls(tuple(Generator(p, q) for p, q in pairs))

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __mul__(self, other: "Word") -> "Word":
        # (self * other) acts as other first, then self
        return Word(self.factors + other.factors)

    def __pow__(self, k: int) -> "Word":
        return Word(self.factors * k)

    def reversed(self) -> "Word":
        return Word(tuple(reversed(self.factors)))

    def in_application_order(self) -> tuple[Generator, ...]:
        return tuple(reversed(self.factors))

    def check(self, n: int) -> None:
        for g in self.factors:
            g.check(n)

    def __str__(self) -> str:
        return " ".join(map(str, self.factors))


_FACTOR = re.compile(r"s\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_word(text: str, n: int | None = None) -> Word:
    """Parse whitespace-separated ``s(p,q)`` factors, e.g. ``"s(1,2) s(2,4)"``."""
    factors = []
    for token in text.split():
        match = _FACTOR.fullmatch(token)
        if match is None:
            raise WordSyntaxError(f"cannot parse factor {token!r}")
        p, q = int(match.group(1)), int(match.group(2))
        if not (1 <= p < q):
            raise WordSyntaxError(f"bad factor {token!r}: need 1 <= p < q")
        if n is not None and q > n:
            raise WordSyntaxError(f"factor {token!r} out of range for n={n}")
        factors.append(Generator(p, q))
    return Word(tuple(factors))


def interval(a: int, b: int) -> Word:
    """Reversal of positions ``a..b`` as a word; empty when the interval is a single point."""
    if a == b:
        return Word()
    return Word((Generator(min(a, b), max(a, b)),))


def wrapped_interval(a: int, b: int) -> Word:
    """Reversal of the clockwise run ``a..b``; runs through infinity use the complement.

    A run that passes through infinity (``a > b``) is replaced by the reversal
    of the complementary run ``b+1..a-1``, which gives the same cyclic order of
    the points up to a reflection of the whole circle.
    """
    if a <= b:
        return interval(a, b)
    lo, hi = b + 1, a - 1
    if lo >= hi:
        return Word()
    return Word((Generator(lo, hi),))


def product(*words: Word) -> Word:
    out: tuple[Generator, ...] = ()
    for w in words:
        out += w.factors
    return Word(out)


# --------------------------------------------------------------------------
# permutations of {1..n}, stored one-line: perm[i-1] is the image of i


@dataclass(frozen=True)
class IntervalPermutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: "IntervalPermutation") -> "IntervalPermutation":
        """Apply ``self`` first, then ``other``."""
        return IntervalPermutation(tuple(other(self(i)) for i in range(1, self.n + 1)))

    def is_identity(self) -> bool:
        return all(self(i) == i for i in range(1, self.n + 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def act_on_arrangement(self, arrangement: Sequence[int]) -> tuple[int, ...]:
        """Move the label at position ``x`` to position ``self(x)``; position 0 stays."""
        out = list(arrangement)
        for x in range(1, self.n + 1):
            out[self(x)] = arrangement[x]
        return tuple(out)


def identity(n: int) -> IntervalPermutation:
    return IntervalPermutation(tuple(range(1, n + 1)))


def phi(word: Word | Iterable[Generator], n: int) -> IntervalPermutation:
    """Image in S_n: each s(p,q) reverses p..q; rightmost factor acts first."""
    word = word if isinstance(word, Word) else Word(tuple(word))
    word.check(n)
    perm = identity(n)
    for g in word.in_application_order():
        perm = perm.then(IntervalPermutation(tuple(g.reflect(i) for i in range(1, n + 1))))
    return perm

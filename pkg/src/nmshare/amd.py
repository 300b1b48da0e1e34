"""Manipulation-detection codes over a set family, with exact game analysis.

A code encodes source i as a uniformly random element of the i-th set; a
decoder maps a group element back to the index of the set containing it (or
reports nothing, which downstream layers treat as "manipulation detected").

The adversary in every game variant adds a fixed offset to the codeword.
Advantages are computed by full enumeration over all (offset, source,
codeword) triples and returned as exact rationals; at the group sizes this
library targets (n < 10**4) enumeration is instantaneous.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .families import SetFamily


class AmdCode:
    """A set family read as a manipulation-detection code."""

    __slots__ = ("family",)

    def __init__(self, family: SetFamily):
        self.family = family

    def encode(self, source: int, rng: random.Random) -> int:
        """Uniformly random element of the source's set."""
        if not 0 <= source < self.family.m:
            raise ValueError(f"source {source} outside [0, {self.family.m})")
        return rng.choice(self.family.sets[source])

    def decode(self, element: int) -> Optional[int]:
        """Set index containing the element; None means no set claims it."""
        return self.family.locate(element)

    def __repr__(self) -> str:
        return f"AmdCode({self.family!r})"


@dataclass(frozen=True)
class AdvantageReport:
    """Exact best win probability of the offset adversary in one game.

    best_deltas lists every maximizing offset in increasing residue order,
    so reports are deterministic and ties are visible.
    """

    epsilon: Fraction
    best_deltas: tuple[int, ...]
    game: str

    def to_dict(self) -> dict:
        return {
            "game": self.game,
            "epsilon": {"num": self.epsilon.numerator,
                        "den": self.epsilon.denominator},
            "best_deltas": list(self.best_deltas),
        }


def _best_over_deltas(family: SetFamily, count_for_delta, denominator: int,
                      game: str) -> AdvantageReport:
    best = -1
    deltas: list[int] = []
    for delta in range(1, family.n):
        c = count_for_delta(delta)
        if c > best:
            best, deltas = c, [delta]
        elif c == best:
            deltas.append(delta)
    return AdvantageReport(Fraction(best, denominator), tuple(deltas), game)


def weak_advantage(code: AmdCode) -> AdvantageReport:
    """Adversary commits to an offset before the uniform source is drawn.

    Wins when codeword + offset lands in any set other than the source's.
    """
    fam = code.family
    n, m = fam.n, fam.m

    def count(delta: int) -> int:
        wins = 0
        for i, s in enumerate(fam.sets):
            for x in s:
                j = fam.locate((x + delta) % n)
                if j is not None and j != i:
                    wins += 1
        return wins

    return _best_over_deltas(fam, count, m * fam.set_size, "weak")


def strong_advantage(code: AmdCode) -> AdvantageReport:
    """Adversary learns the source before choosing the offset.

    The win probability is maximized per source, then over sources; only the
    codeword choice stays random.
    """
    fam = code.family
    n = fam.n

    def count(delta: int) -> int:
        top = 0
        for i, s in enumerate(fam.sets):
            wins = 0
            for x in s:
                j = fam.locate((x + delta) % n)
                if j is not None and j != i:
                    wins += 1
            top = max(top, wins)
        return top

    return _best_over_deltas(fam, count, fam.set_size, "strong")


def circular_weak_advantage(code: AmdCode, c: int) -> AdvantageReport:
    """Weak game, but the offset must land exactly in set (i + c) mod m."""
    fam = code.family
    n, m = fam.n, fam.m
    if not 1 <= c <= m - 1:
        raise ValueError(f"shift must lie in [1, {m - 1}], got {c}")

    def count(delta: int) -> int:
        wins = 0
        for i, s in enumerate(fam.sets):
            target = (i + c) % m
            for x in s:
                if fam.locate((x + delta) % n) == target:
                    wins += 1
        return wins

    return _best_over_deltas(fam, count, m * fam.set_size,
                             f"circular-weak({c})")


def circular_strong_advantage(code: AmdCode, c: int) -> AdvantageReport:
    """Strong game with the exact-target win condition of the circular game."""
    fam = code.family
    n, m = fam.n, fam.m
    if not 1 <= c <= m - 1:
        raise ValueError(f"shift must lie in [1, {m - 1}], got {c}")

    def count(delta: int) -> int:
        top = 0
        for i, s in enumerate(fam.sets):
            target = (i + c) % m
            wins = sum(1 for x in s if fam.locate((x + delta) % n) == target)
            top = max(top, wins)
        return top

    return _best_over_deltas(fam, count, fam.set_size,
                             f"circular-strong({c})")


def is_r_optimal_weak(code: AmdCode) -> bool:
    """Exact test: weak advantage equals set_size * (m-1) / (n-1)."""
    fam = code.family
    bound = Fraction(fam.set_size * (fam.m - 1), fam.n - 1)
    return weak_advantage(code).epsilon == bound


def is_r_optimal_circular(code: AmdCode, c: int) -> bool:
    """Exact test: circular weak advantage equals set_size / (n-1).

    Holds if and only if the underlying family verifies as a c-circular
    external difference family.
    """
    fam = code.family
    bound = Fraction(fam.set_size, fam.n - 1)
    return circular_weak_advantage(code, c).epsilon == bound

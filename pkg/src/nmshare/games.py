"""Executable security games: share tampering against threshold schemes.

The harness plays one round as follows.  A secret is drawn (uniformly by
default), dealt into n shares, and the first t shares are handed to the
adversary.  The adversary returns replacements for exactly those t shares
plus its choice of k - t identifiers of untouched shares; reconstruction
runs on that set and the win predicate is evaluated on the recovered secret.

Blinding is structural: the adversary only ever sees its own t shares, the
public identifiers, and interpolation coefficients (public values), so a
strategy that tries to read honest ordinates cannot even be written against
the interface.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .amd import AdvantageReport
from .fields import FieldElement
from .shamir import Share, ShareVector, ThresholdParams, deal, lagrange_coefficients, reconstruct


class Relation:
    """An irreflexive binary relation on the secret space {0..m-1}."""

    __slots__ = ("name", "_holds")

    def __init__(self, name: str, holds: Callable[[int, int], bool]):
        self.name = name
        self._holds = holds

    def holds(self, candidate: int, secret: int) -> bool:
        return self._holds(candidate, secret)

    def __repr__(self) -> str:
        return f"Relation({self.name!r})"

    @classmethod
    def not_equal(cls) -> Relation:
        """Any change counts: the malleability game becomes the robustness game."""
        return cls("ne", lambda sp, s: sp != s)

    @classmethod
    def additive_shift(cls, c: int, m: int) -> Relation:
        """candidate == secret + c mod m, for a fixed 0 < c < m."""
        if not 0 < c < m:
            raise ValueError(f"shift must lie in (0, {m}), got {c}")
        return cls(f"shift:{c}", lambda sp, s: sp == (s + c) % m)

    @classmethod
    def shift_set(cls, shifts: Sequence[int], m: int) -> Relation:
        """candidate - secret mod m lies in a fixed set of nonzero shifts."""
        cs = sorted(set(int(c) for c in shifts))
        if not cs:
            raise ValueError("the shift set must be nonempty")
        for c in cs:
            if not 0 < c < m:
                raise ValueError(f"shift {c} outside (0, {m})")
        allowed = frozenset(cs)
        name = "shifts:" + ",".join(str(c) for c in cs)
        return cls(name, lambda sp, s: (sp - s) % m in allowed)

    @classmethod
    def custom(cls, name: str, predicate: Callable[[int, int], bool],
               domain: int) -> Relation:
        """Wrap an arbitrary predicate; irreflexivity is spot-checked over
        the first min(domain, 512) secrets."""
        for s in range(min(domain, 512)):
            if predicate(s, s):
                raise ValueError(f"relation {name!r} is not irreflexive at {s}")
        return cls(name, predicate)


@dataclass(frozen=True)
class GameTranscript:
    true_secret: int
    reconstructed: Optional[int]
    win: bool
    seed: int

    @property
    def detected(self) -> bool:
        return self.reconstructed is None


@dataclass(frozen=True)
class AdversaryView:
    """Everything the adversary is allowed to see.

    ``controlled`` are its own t shares; ``identifiers`` are the public x
    values of all n shares; interpolation coefficients for any prospective
    reconstruction set are public and computable via ``coefficients``.
    """

    controlled: tuple[Share, ...]
    identifiers: tuple[FieldElement, ...]
    threshold: int

    def coefficients(self, xs: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
        return lagrange_coefficients(xs)

    def default_good_identifiers(self) -> tuple[FieldElement, ...]:
        """The first k - t identifiers the adversary does not control."""
        held = {s.x.value for s in self.controlled}
        free = [x for x in self.identifiers if x.value not in held]
        return tuple(free[: self.threshold - len(self.controlled)])


@dataclass(frozen=True)
class AdversaryMove:
    replacements: tuple[Share, ...]
    good_identifiers: tuple[FieldElement, ...]


class Adversary:
    """Deterministic tampering strategy; subclasses implement act()."""

    def act(self, view: AdversaryView) -> AdversaryMove:
        raise NotImplementedError


class ReplayAdversary(Adversary):
    """Returns its shares untouched (a guaranteed loss; useful as a control)."""

    def act(self, view: AdversaryView) -> AdversaryMove:
        return AdversaryMove(view.controlled, view.default_good_identifiers())


class _OffsetAdversary(Adversary):
    def __init__(self, describe: str,
                 pick_delta: Callable[[AdversaryView], FieldElement]):
        self._describe = describe
        self._pick_delta = pick_delta

    def act(self, view: AdversaryView) -> AdversaryMove:
        first = view.controlled[0]
        delta = self._pick_delta(view)
        tampered = Share(first.x, first.y + delta)
        return AdversaryMove((tampered,) + view.controlled[1:],
                             view.default_good_identifiers())

    def __repr__(self) -> str:
        return self._describe


def shamir_offset_attack(delta: FieldElement) -> Adversary:
    """Add a fixed nonzero offset to the first controlled share.

    Against unencoded threshold sharing this shifts the recovered secret by
    b_1 * delta, so it wins the robustness game with certainty.
    """
    if delta.is_zero():
        raise ValueError("offset must be nonzero")
    return _OffsetAdversary(f"shamir_offset_attack({delta.value})",
                            lambda view: delta)


def additive_relation_attack(c: int) -> Adversary:
    """Shift the reconstructed encoded value by exactly c.

    The adversary reads the public interpolation coefficient b_1 of its
    first share within its planned reconstruction set and adds c / b_1 to
    that share, moving the interpolated value to K + c.  Against unencoded
    sharing this wins the shift-by-c malleability game with certainty.
    """
    if c <= 0:
        raise ValueError("target shift must be positive (0 is reflexive)")

    def pick(view: AdversaryView) -> FieldElement:
        xs = tuple(s.x for s in view.controlled) + view.default_good_identifiers()
        b1 = view.coefficients(xs)[0]
        return b1.field.element(c) * b1.invert()

    return _OffsetAdversary(f"additive_relation_attack({c})", pick)


class PlainShamirScheme:
    """Unencoded threshold sharing: the secret space is all of [0, p)."""

    __slots__ = ("threshold",)

    def __init__(self, threshold: ThresholdParams):
        self.threshold = threshold

    @property
    def secret_count(self) -> int:
        return self.threshold.field.p

    def share_secret(self, secret: int, rng: random.Random) -> ShareVector:
        shares, _poly = deal(
            self.threshold, self.threshold.field.element(secret), rng
        )
        return shares

    def recover_secret(self, shares: Sequence[Share]) -> Optional[int]:
        return reconstruct(self.threshold, shares).value

    def encoded_values(self, secret: int) -> tuple[int, ...]:
        return (secret,)

    def decode_encoded(self, element: int) -> Optional[int]:
        return element

    def to_dict(self) -> dict:
        return {"p": self.threshold.field.p, "k": self.threshold.k,
                "n": self.threshold.n}

    def __repr__(self) -> str:
        return (f"PlainShamirScheme(p={self.threshold.field.p}, "
                f"k={self.threshold.k}, n={self.threshold.n})")


def _draw_secret(m: int, rng: random.Random,
                 weights: Optional[Sequence[float]]) -> int:
    if weights is None:
        return rng.randrange(m)
    if len(weights) != m:
        raise ValueError(f"need {m} weights, got {len(weights)}")
    return rng.choices(range(m), weights=weights)[0]


def play_malleability(scheme, relation: Relation, adversary: Adversary,
                      t: int, seed: int,
                      weights: Optional[Sequence[float]] = None) -> GameTranscript:
    """One seeded round of the tampering game for an arbitrary relation.

    The adversary wins iff the reconstructed secret is valid, differs from
    the true secret, and is related to it.
    """
    params: ThresholdParams = scheme.threshold
    if not 1 <= t < params.k:
        raise ValueError(f"t must lie in [1, {params.k - 1}], got {t}")
    rng = random.Random(seed)
    secret = _draw_secret(scheme.secret_count, rng, weights)
    dealt = scheme.share_secret(secret, rng)

    view = AdversaryView(
        controlled=dealt.shares[:t],
        identifiers=tuple(s.x for s in dealt.shares),
        threshold=params.k,
    )
    move = adversary.act(view)

    if len(move.replacements) != t or any(
        rep.x != orig.x for rep, orig in zip(move.replacements, view.controlled)
    ):
        raise ValueError("adversary must replace exactly its own t shares")
    held = {s.x.value for s in view.controlled}
    good_values = [x.value for x in move.good_identifiers]
    by_x = {s.x.value: s for s in dealt.shares}
    if (
        len(move.good_identifiers) != params.k - t
        or len(set(good_values)) != len(good_values)
        or any(v in held or v not in by_x for v in good_values)
    ):
        raise ValueError("adversary must pick k - t identifiers it does not hold")

    reconstruction = list(move.replacements)
    reconstruction.extend(by_x[v] for v in good_values)
    recovered = scheme.recover_secret(reconstruction)
    win = (
        recovered is not None
        and recovered != secret
        and relation.holds(recovered, secret)
    )
    return GameTranscript(secret, recovered, win, seed)


def play_robustness(scheme, adversary: Adversary, t: int, seed: int,
                    weights: Optional[Sequence[float]] = None) -> GameTranscript:
    """The tampering game with the any-change win condition."""
    return play_malleability(scheme, Relation.not_equal(), adversary, t, seed,
                             weights)


def exact_win_probability(scheme, relation: Relation, t: int) -> AdvantageReport:
    """Best additive adversary, computed by exhaustive enumeration.

    Any tampering of up to k-1 shares shifts the interpolated value by some
    constant the adversary controls, so sweeping that offset over the whole
    group while enumerating the uniform (secret, encoding) space is a
    complete analysis for this adversary class.  Exact rational output.
    """
    params: ThresholdParams = scheme.threshold
    if not 1 <= t < params.k:
        raise ValueError(f"t must lie in [1, {params.k - 1}], got {t}")
    p = params.field.p
    m = scheme.secret_count
    pool = [(s, g) for s in range(m) for g in scheme.encoded_values(s)]
    best = -1
    deltas: list[int] = []
    for delta in range(1, p):
        wins = 0
        for s, g in pool:
            candidate = scheme.decode_encoded((g + delta) % p)
            if (
                candidate is not None
                and candidate != s
                and relation.holds(candidate, s)
            ):
                wins += 1
        if wins > best:
            best, deltas = wins, [delta]
        elif wins == best:
            deltas.append(delta)
    return AdvantageReport(Fraction(best, len(pool)), tuple(deltas),
                           f"malleability({relation.name})")


def derive_trial_seed(seed: int, index: int) -> int:
    """Stable per-trial seed so trials can run in any order or in parallel."""
    return (seed * 0x9E3779B97F4A7C15 + index) % 2**63


def estimate_win_probability(scheme, relation: Relation, adversary: Adversary,
                             t: int, trials: int, seed: int,
                             weights: Optional[Sequence[float]] = None) -> Fraction:
    """Empirical win frequency over independently seeded rounds."""
    if trials < 1:
        raise ValueError("need at least one trial")
    wins = 0
    for i in range(trials):
        transcript = play_malleability(
            scheme, relation, adversary, t, derive_trial_seed(seed, i), weights
        )
        wins += transcript.win
    return Fraction(wins, trials)

"""Threshold sharing by polynomial evaluation over a prime field.

The dealer hides the secret as the constant term of a random polynomial with
k coefficients and hands out evaluations at the fixed points x = 1..n.  Any k
shares recover the constant term as a public linear combination (the
interpolation coefficients at zero); fewer reveal nothing.

All randomness is an injected ``random.Random`` so every transcript replays.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .fields import FieldElement, PrimeField


@dataclass(frozen=True)
class ThresholdParams:
    """k-of-n sharing over a field with p >= n + 1 (x values are 1..n)."""

    k: int
    n: int
    field: PrimeField

    def __post_init__(self) -> None:
        if not 1 < self.k <= self.n:
            raise ValueError(f"need 1 < k <= n, got k={self.k}, n={self.n}")
        if self.field.p < self.n + 1:
            raise ValueError(
                f"field too small: p={self.field.p} < n+1={self.n + 1}"
            )


@dataclass(frozen=True)
class Polynomial:
    """Coefficients with the constant term first; length fixes k.

    The leading coefficient may be zero: the dealer draws every
    non-constant coefficient uniformly, which is exactly what the privacy
    argument needs (conditioning on exact degree would bias shares).
    """

    coefficients: tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("a polynomial needs at least a constant term")

    def evaluate(self, x: FieldElement) -> FieldElement:
        acc = self.coefficients[-1]
        for coeff in reversed(self.coefficients[:-1]):
            acc = acc * x + coeff
        return acc

    @property
    def constant_term(self) -> FieldElement:
        return self.coefficients[0]


@dataclass(frozen=True)
class Share:
    """One share: public identifier x (nonzero) and secret ordinate y."""

    x: FieldElement
    y: FieldElement

    def __post_init__(self) -> None:
        if self.x.is_zero():
            raise ValueError("share identifier must be nonzero")


@dataclass(frozen=True)
class ShareVector:
    params: ThresholdParams
    shares: tuple[Share, ...]

    def __post_init__(self) -> None:
        if len(self.shares) != self.params.n:
            raise ValueError(
                f"expected {self.params.n} shares, got {len(self.shares)}"
            )
        xs = [s.x.value for s in self.shares]
        if len(set(xs)) != len(xs):
            raise ValueError("share identifiers must be distinct")

    def to_dict(self) -> dict:
        return {
            "p": self.params.field.p,
            "k": self.params.k,
            "n": self.params.n,
            "shares": [{"x": s.x.value, "y": s.y.value} for s in self.shares],
        }

    @classmethod
    def from_dict(cls, data: dict) -> ShareVector:
        try:
            field = PrimeField(data["p"])
            params = ThresholdParams(data["k"], data["n"], field)
            shares = tuple(
                Share(field.element(s["x"]), field.element(s["y"]))
                for s in data["shares"]
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed share object: {exc}") from exc
        return cls(params, shares)


def random_polynomial(params: ThresholdParams, secret: FieldElement,
                      rng: random.Random) -> Polynomial:
    """Uniform polynomial with the given constant term and k coefficients."""
    coeffs = [secret]
    coeffs.extend(params.field.random_element(rng) for _ in range(params.k - 1))
    return Polynomial(tuple(coeffs))


def shares_from_polynomial(params: ThresholdParams,
                           poly: Polynomial) -> ShareVector:
    """Evaluate a (possibly hand-picked) polynomial at x = 1..n."""
    if len(poly.coefficients) != params.k:
        raise ValueError(
            f"polynomial has {len(poly.coefficients)} coefficients, expected {params.k}"
        )
    field = params.field
    shares = tuple(
        Share(field.element(i), poly.evaluate(field.element(i)))
        for i in range(1, params.n + 1)
    )
    return ShareVector(params, shares)


def deal(params: ThresholdParams, secret: FieldElement,
         rng: random.Random) -> tuple[ShareVector, Polynomial]:
    """Deal shares of the secret; the polynomial is returned for oracles."""
    if secret.field != params.field:
        raise ValueError("secret must live in the scheme's field")
    poly = random_polynomial(params, secret, rng)
    return shares_from_polynomial(params, poly), poly


def lagrange_coefficients(xs: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    """Interpolation-at-zero coefficients b_j for distinct nonzero points.

    b_j is the product over h != j of x_h / (x_h - x_j); the recovered
    constant term is then sum(b_j * y_j).  Every b_j is nonzero.
    """
    if not xs:
        raise ValueError("need at least one evaluation point")
    values = [x.value for x in xs]
    if 0 in values:
        raise ValueError("evaluation points must be nonzero")
    if len(set(values)) != len(values):
        raise ValueError("evaluation points must be distinct")
    field = xs[0].field
    out = []
    for j, xj in enumerate(xs):
        num, den = field.one(), field.one()
        for h, xh in enumerate(xs):
            if h != j:
                num = num * xh
                den = den * (xh - xj)
        out.append(num * den.invert())
    return tuple(out)


def reconstruct(params: ThresholdParams, shares: Sequence[Share]) -> FieldElement:
    """Recover the constant term from exactly k shares."""
    if len(shares) != params.k:
        raise ValueError(f"need exactly k={params.k} shares, got {len(shares)}")
    coeffs = lagrange_coefficients([s.x for s in shares])
    acc = params.field.zero()
    for b, share in zip(coeffs, shares):
        acc = acc + b * share.y
    return acc

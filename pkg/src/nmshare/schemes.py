"""Composition of a detection code with threshold sharing.

Secrets are small integers in [0, m).  Sharing first encodes the secret as a
uniformly random element K of the secret's set (K lives in the same prime
field the shares are dealt over), then deals K with the threshold scheme.
Recovery interpolates K back and decodes it; a K claimed by no set is
reported as detected manipulation rather than as some arbitrary secret,
since surfacing tampering is the whole point of the composition.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

from .amd import AmdCode
from .families import SetFamily
from .fields import FieldElement, PrimeField
from .shamir import Share, ShareVector, ThresholdParams, deal, reconstruct


class ComposedScheme:
    """Detection code over Z_p composed with k-of-n sharing over F_p."""

    __slots__ = ("code", "threshold")

    def __init__(self, code: AmdCode, threshold: ThresholdParams):
        if code.family.n != threshold.field.p:
            raise ValueError(
                f"code group order {code.family.n} must equal the share "
                f"field order {threshold.field.p}"
            )
        self.code = code
        self.threshold = threshold

    @property
    def secret_count(self) -> int:
        """Size m of the secret space [0, m)."""
        return self.code.family.m

    def share_secret(self, secret: int, rng: random.Random) -> ShareVector:
        """Encode the secret and deal the encoded value."""
        encoded = self.code.encode(secret, rng)
        shares, _poly = deal(
            self.threshold, self.threshold.field.element(encoded), rng
        )
        return shares

    def recover_secret(self, shares: Sequence[Share]) -> Optional[int]:
        """Interpolate and decode; None signals detected manipulation."""
        encoded = reconstruct(self.threshold, shares)
        return self.code.decode(encoded.value)

    # Enumeration hooks used by the exact game analyzer.
    def encoded_values(self, secret: int) -> tuple[int, ...]:
        return self.code.family.sets[secret]

    def decode_encoded(self, element: int) -> Optional[int]:
        return self.code.decode(element)

    def to_dict(self) -> dict:
        return {
            "family": self.code.family.to_dict(),
            "k": self.threshold.k,
            "n": self.threshold.n,
        }

    @classmethod
    def from_dict(cls, data: dict) -> ComposedScheme:
        try:
            family = SetFamily.from_dict(data["family"])
            params = ThresholdParams(data["k"], data["n"], PrimeField(family.n))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed scheme object: {exc}") from exc
        return cls(AmdCode(family), params)

    def __repr__(self) -> str:
        return (
            f"ComposedScheme(m={self.secret_count}, "
            f"k={self.threshold.k}, n={self.threshold.n}, "
            f"p={self.threshold.field.p})"
        )


def collapse_to_single_delta(deltas: Sequence[FieldElement],
                             coefficients: Sequence[FieldElement]) -> FieldElement:
    """Fold additive tampering of several shares onto the first share.

    Adding delta_i to share i shifts the interpolated value by
    sum(b_i * delta_i); the single offset (sum b_i delta_i) / b_1 applied to
    share 1 alone produces the identical shift.  ``coefficients`` are the
    interpolation coefficients of the reconstruction set, of which the
    first len(deltas) entries correspond to the tampered shares.
    """
    if not deltas:
        raise ValueError("need at least one tampered share")
    if len(deltas) > len(coefficients):
        raise ValueError("more offsets than interpolation coefficients")
    total = deltas[0].field.zero()
    for b, d in zip(coefficients, deltas):
        total = total + b * d
    return total * coefficients[0].invert()

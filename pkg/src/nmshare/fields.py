"""Exact arithmetic in the integers modulo an odd prime.

Everything downstream (sharing, detection codes, difference-family
construction) works over Z_p for a machine-sized odd prime p, so this module
keeps to plain Python integers: no floating point, no extension fields.
"""

from __future__ import annotations

import random
from typing import Iterator, Union

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, found by trial division."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return tuple(factors)


class PrimeField:
    """The field Z_p for an odd prime p."""

    __slots__ = ("p", "_unit_factors")

    def __init__(self, p: int):
        if p < 3 or not is_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p}")
        self.p = p
        self._unit_factors = prime_factors(p - 1)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def element(self, value: int) -> FieldElement:
        """Embed an integer into the field, reducing mod p."""
        return FieldElement(value % self.p, self)

    def zero(self) -> FieldElement:
        return FieldElement(0, self)

    def one(self) -> FieldElement:
        return FieldElement(1, self)

    def elements(self) -> Iterator[FieldElement]:
        """All field elements in increasing residue order."""
        return (FieldElement(v, self) for v in range(self.p))

    def nonzero_elements(self) -> Iterator[FieldElement]:
        return (FieldElement(v, self) for v in range(1, self.p))

    def random_element(self, rng: random.Random) -> FieldElement:
        return FieldElement(rng.randrange(self.p), self)

    def primitive_roots(self) -> tuple[FieldElement, ...]:
        """All primitive roots of the field, in increasing residue order."""
        return tuple(a for a in self.nonzero_elements() if a.is_primitive())


class FieldElement:
    """A residue in [0, p); immutable. Arithmetic never mixes fields."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value
        self.field = field

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"

    def __int__(self) -> int:
        return self.value

    def _coerce(self, other: Union[FieldElement, int]) -> int:
        if isinstance(other, FieldElement):
            if other.field.p != self.field.p:
                raise ValueError(
                    f"mixed fields: mod {self.field.p} vs mod {other.field.p}"
                )
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other: Union[FieldElement, int]) -> FieldElement:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement((self.value + v) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other: Union[FieldElement, int]) -> FieldElement:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement((self.value - v) % self.field.p, self.field)

    def __rsub__(self, other: int) -> FieldElement:
        if not isinstance(other, int):
            return NotImplemented
        return FieldElement((other - self.value) % self.field.p, self.field)

    def __mul__(self, other: Union[FieldElement, int]) -> FieldElement:
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * v % self.field.p, self.field)

    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.value % self.field.p, self.field)

    def __pow__(self, exponent: int) -> FieldElement:
        """Square-and-multiply exponentiation; exponent must be >= 0."""
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative exponent; use invert() instead")
        if exponent == 0 and self.value == 0:
            raise ValueError("0**0 is undefined")
        return FieldElement(pow(self.value, exponent, self.field.p), self.field)

    def invert(self) -> FieldElement:
        """Multiplicative inverse; raises ZeroDivisionError on 0."""
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.field.p}")
        return FieldElement(pow(self.value, -1, self.field.p), self.field)

    def is_zero(self) -> bool:
        return self.value == 0

    def is_quadratic_residue(self) -> bool:
        """Euler's criterion: a^((p-1)/2) == 1. Undefined at 0."""
        if self.value == 0:
            raise ValueError("quadratic residuosity is undefined at 0")
        p = self.field.p
        return pow(self.value, (p - 1) // 2, p) == 1

    def is_primitive(self) -> bool:
        """True iff the multiplicative order of this element is p - 1."""
        if self.value == 0:
            raise ValueError("0 generates nothing")
        p = self.field.p
        return all(
            pow(self.value, (p - 1) // r, p) != 1 for r in self.field._unit_factors
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field.p == other.field.p
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

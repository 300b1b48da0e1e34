"""External difference multisets and verifiers over the cyclic group Z_n.

A family here is an ordered tuple of pairwise-disjoint equal-size subsets of
Z_n.  The verifiers decide three progressively stronger uniformity
properties of the shifted external differences:

* circular (single shift c): the union over j of D(A_{j+c mod m}, A_j)
  covers every nonzero group element the same number of times;
* shift-set (a set S of shifts): the same, summed over all c in S;
* strong circular: every individual D(A_{j+c mod m}, A_j) is uniform on
  its own, with one common multiplicity.

All arithmetic is exact; verdicts are never approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Optional, Sequence


class SetFamily:
    """An ordered tuple of m pairwise-disjoint size-ell subsets of Z_n.

    The order of the sets is significant (shifts are taken on indices mod m);
    the order of elements inside each set is preserved for reproducible
    iteration but carries no meaning.
    """

    __slots__ = ("n", "sets", "_index")

    def __init__(self, n: int, sets: Iterable[Iterable[int]]):
        self.n = int(n)
        self.sets = tuple(tuple(int(x) for x in s) for s in sets)
        if self.n < 2:
            raise ValueError(f"group order must be at least 2, got {n}")
        if len(self.sets) < 2:
            raise ValueError("a family needs at least two sets")
        size = len(self.sets[0])
        if size < 1:
            raise ValueError("sets must be nonempty")
        index: dict[int, int] = {}
        for j, s in enumerate(self.sets):
            if len(s) != size:
                raise ValueError(
                    f"sets must share one size; set {j} has {len(s)}, expected {size}"
                )
            for x in s:
                if not 0 <= x < self.n:
                    raise ValueError(f"element {x} outside [0, {self.n})")
                if x in index:
                    raise ValueError(
                        f"element {x} appears twice (sets {index[x]} and {j})"
                    )
                index[x] = j
        self._index = index

    @property
    def m(self) -> int:
        """Number of sets."""
        return len(self.sets)

    @property
    def set_size(self) -> int:
        """Common size of each set."""
        return len(self.sets[0])

    def locate(self, element: int) -> Optional[int]:
        """Index of the set containing element, or None."""
        return self._index.get(element)

    def to_dict(self) -> dict:
        return {"n": self.n, "sets": [list(s) for s in self.sets]}

    @classmethod
    def from_dict(cls, data: dict) -> SetFamily:
        try:
            return cls(data["n"], data["sets"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed family object: {exc}") from exc

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SetFamily)
            and self.n == other.n
            and self.sets == other.sets
        )

    def __hash__(self) -> int:
        return hash((self.n, self.sets))

    def __repr__(self) -> str:
        return f"SetFamily(n={self.n}, sets={self.sets})"


class DifferenceMultiset:
    """Multiset of group elements, stored as a dense multiplicity vector."""

    __slots__ = ("n", "counts")

    def __init__(self, n: int, counts: Sequence[int]):
        if len(counts) != n:
            raise ValueError("need one multiplicity per group element")
        self.n = n
        self.counts = tuple(counts)

    def count(self, element: int) -> int:
        return self.counts[element % self.n]

    def total(self) -> int:
        return sum(self.counts)

    def elements(self) -> tuple[int, ...]:
        """The multiset flattened to a sorted tuple (handy for oracles)."""
        out = []
        for x, c in enumerate(self.counts):
            out.extend([x] * c)
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DifferenceMultiset)
            and self.n == other.n
            and self.counts == other.counts
        )

    def __repr__(self) -> str:
        return f"DifferenceMultiset(n={self.n}, counts={self.counts})"


class Violation(NamedTuple):
    element: int
    observed: int
    expected: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a family verification.

    ``lambda_`` is the uniform multiplicity and is meaningful only when
    ``valid``.  On failure ``violation`` pinpoints the first offending
    element in scan order (0 upward).
    """

    valid: bool
    lambda_: Optional[int] = None
    violation: Optional[Violation] = None

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "lambda": self.lambda_,
            "violation": None if self.violation is None else dict(
                self.violation._asdict()
            ),
        }


def external_difference(a1: Iterable[int], a2: Iterable[int], n: int) -> DifferenceMultiset:
    """Multiset of all differences x - y mod n with x in a1, y in a2.

    The two sets must be disjoint and nonempty, so 0 never occurs.
    """
    s1, s2 = tuple(a1), tuple(a2)
    if not s1 or not s2:
        raise ValueError("external difference of an empty set")
    if set(s1) & set(s2):
        raise ValueError(f"sets overlap: {sorted(set(s1) & set(s2))}")
    counts = [0] * n
    for x in s1:
        for y in s2:
            counts[(x - y) % n] += 1
    return DifferenceMultiset(n, counts)


def _accumulate_differences(counts: list[int], upper: Sequence[int],
                            lower: Sequence[int], n: int) -> None:
    for x in upper:
        for y in lower:
            counts[(x - y) % n] += 1


def _uniformity_report(counts: Sequence[int]) -> VerificationReport:
    """Check a multiplicity vector is 0 at 0 and constant elsewhere.

    Scan order is element 0 upward; the target multiplicity is taken from
    element 1, so a nonuniform vector always yields a concrete violation.
    """
    if counts[0] != 0:
        return VerificationReport(False, None, Violation(0, counts[0], 0))
    lam = counts[1]
    for x in range(2, len(counts)):
        if counts[x] != lam:
            return VerificationReport(False, None, Violation(x, counts[x], lam))
    return VerificationReport(True, lam, None)


def verify_cedf(family: SetFamily, c: int) -> VerificationReport:
    """Decide the circular external-difference property for shift c.

    Valid iff the union over j of D(A_{j+c mod m}, A_j) hits every nonzero
    element of Z_n equally often; the report's lambda then satisfies
    m * set_size**2 == lambda * (n - 1) automatically.
    """
    m = family.m
    if not 1 <= c <= m - 1:
        raise ValueError(f"shift must lie in [1, {m - 1}], got {c}")
    counts = [0] * family.n
    for j in range(m):
        _accumulate_differences(counts, family.sets[(j + c) % m],
                                family.sets[j], family.n)
    return _uniformity_report(counts)


def verify_sedf(family: SetFamily, shifts: Iterable[int]) -> VerificationReport:
    """Decide the shift-set external-difference property.

    The differences are summed over every shift c in ``shifts``; validity
    means joint uniformity, with |shifts| * m * set_size**2 == lambda * (n-1).
    """
    m = family.m
    shift_set = sorted(set(int(c) for c in shifts))
    if not shift_set:
        raise ValueError("the shift set must be nonempty")
    for c in shift_set:
        if not 1 <= c <= m - 1:
            raise ValueError(f"shift {c} outside [1, {m - 1}]")
    counts = [0] * family.n
    for c in shift_set:
        for j in range(m):
            _accumulate_differences(counts, family.sets[(j + c) % m],
                                    family.sets[j], family.n)
    return _uniformity_report(counts)


def verify_scedf(family: SetFamily, c: int) -> VerificationReport:
    """Decide the strong circular property: per-index uniformity.

    Every single multiset D(A_{j+c mod m}, A_j) must equal lambda copies of
    Z_n minus 0, with one lambda shared by all j.  This is deliberately the
    strict reading: families whose shifted differences are only jointly
    uniform (ordinary circular families) fail here.
    """
    m = family.m
    if not 1 <= c <= m - 1:
        raise ValueError(f"shift must lie in [1, {m - 1}], got {c}")
    lam: Optional[int] = None
    for j in range(m):
        counts = [0] * family.n
        _accumulate_differences(counts, family.sets[(j + c) % m],
                                family.sets[j], family.n)
        report = _uniformity_report(counts)
        if not report.valid:
            return report
        if lam is None:
            lam = report.lambda_
        elif report.lambda_ != lam:
            return VerificationReport(
                False, None, Violation(1, counts[1], lam)
            )
    return VerificationReport(True, lam, None)


def shift_family(family: SetFamily, c: int) -> SetFamily:
    """Reorder a 1-circular family so it verifies for shift c.

    Requires gcd(c, m) = 1.  The new family is A'_i = A_{i * c^{-1} mod m};
    the inverse is taken mod m because indices range over 0..m-1.
    """
    m = family.m
    if not 1 <= c <= m - 1:
        raise ValueError(f"shift must lie in [1, {m - 1}], got {c}")
    if gcd(c, m) != 1:
        raise ValueError(f"shift {c} is not invertible mod {m}")
    base = verify_cedf(family, 1)
    if not base.valid:
        raise ValueError("input family is not a valid 1-circular family")
    cinv = pow(c, -1, m)
    return SetFamily(family.n, (family.sets[(i * cinv) % m] for i in range(m)))

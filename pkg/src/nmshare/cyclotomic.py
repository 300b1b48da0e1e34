"""Cyclotomic construction of circular difference families, plus searches.

For a prime q = m * set_size**2 + 1 and a primitive root alpha, the
construction takes the subgroup of set_size-th powers of order set_size (the
powers of alpha**(set_size * m)) as the base set and multiplies it through m
cosets.  Whether the result actually verifies depends on alpha; two exact
success criteria are provided:

* for set_size == 2: alpha**4 - 1 must be a quadratic non-residue;
* in general: the set_size elements beta**(i*m + 1) - 1 (beta =
  alpha**set_size) must represent every coset of the subgroup H = <beta>.

The search drivers sweep primitive roots, hunt for shift-set families among
orderings of the cosets, and exhaustively enumerate small groups for
strongly uniform families, emitting a machine-checkable certificate of what
was searched.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

from .families import SetFamily, verify_cedf, verify_scedf, verify_sedf
from .fields import PrimeField


def _validated_field(q: int, m: int, set_size: int) -> PrimeField:
    fld = PrimeField(q)
    if q - 1 != m * set_size * set_size:
        raise ValueError(
            f"need q - 1 == m * set_size**2; got q={q}, m={m}, set_size={set_size}"
        )
    return fld


@dataclass(frozen=True)
class ConstructionParams:
    """Inputs of the cyclotomic construction: prime q = m*set_size**2 + 1
    and a primitive root alpha."""

    q: int
    m: int
    set_size: int
    alpha: int

    def __post_init__(self) -> None:
        fld = _validated_field(self.q, self.m, self.set_size)
        if not fld.element(self.alpha).is_primitive():
            raise ValueError(f"{self.alpha} is not a primitive root mod {self.q}")


def cyclotomic_family(params: ConstructionParams) -> SetFamily:
    """Build the m coset sets; the base set is the subgroup of order set_size.

    Set j is alpha**(set_size * j) times the base set.  Disjointness is
    guaranteed because distinct cosets of the power subgroup never meet, but
    the SetFamily constructor re-checks it anyway.
    """
    q, m, ell, alpha = params.q, params.m, params.set_size, params.alpha
    base = tuple(pow(alpha, i * ell * m, q) for i in range(ell))
    sets = [base]
    for j in range(1, m):
        mult = pow(alpha, ell * j, q)
        sets.append(tuple(mult * x % q for x in base))
    return SetFamily(q, sets)


def nonresidue_criterion(q: int, alpha: int) -> bool:
    """Success test for set_size == 2: alpha**4 - 1 is a non-square.

    Exactly characterizes when the construction with pair sets verifies:
    the differences are (alpha**2 - 1) and (alpha**2 + 1) times the squares,
    and those two factors fall in different square classes iff their
    product alpha**4 - 1 is a non-square.
    """
    fld = PrimeField(q)
    if (q - 1) % 4 != 0:
        raise ValueError(f"q must be 1 mod 4, got {q}")
    a = fld.element(alpha)
    if not a.is_primitive():
        raise ValueError(f"{alpha} is not a primitive root mod {q}")
    probe = a ** 4 - 1
    if probe.is_zero():
        raise ValueError("alpha**4 == 1; alpha cannot be primitive for q > 5")
    return not probe.is_quadratic_residue()


def coset_representative_criterion(q: int, m: int, set_size: int,
                                   alpha: int) -> bool:
    """General success test: beta**(i*m+1) - 1 represent all cosets of <beta>.

    beta = alpha**set_size generates the subgroup H of order set_size * m,
    whose index is set_size.  The construction verifies iff the set_size
    probe elements are nonzero and pairwise in distinct cosets of H.
    """
    fld = _validated_field(q, m, set_size)
    if not fld.element(alpha).is_primitive():
        raise ValueError(f"{alpha} is not a primitive root mod {q}")
    beta = pow(alpha, set_size, q)
    order = set_size * m
    subgroup = set()
    x = 1
    for _ in range(order):
        subgroup.add(x)
        x = x * beta % q
    probes = [(pow(beta, i * m + 1, q) - 1) % q for i in range(set_size)]
    if any(v == 0 for v in probes):
        return False
    for i in range(set_size):
        for j in range(i + 1, set_size):
            if probes[i] * pow(probes[j], -1, q) % q in subgroup:
                return False
    return True


@dataclass(frozen=True)
class SearchResult:
    """All primitive roots that make the construction verify for (q, m, set_size)."""

    q: int
    m: int
    set_size: int
    witnesses: tuple[int, ...]
    examined: int

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "set_size": self.set_size,
            "witnesses": list(self.witnesses),
            "examined": self.examined,
        }


def search_parameter_set(q: int, m: int, set_size: int) -> SearchResult:
    """Sweep primitive roots in increasing order and collect the witnesses.

    The coset-representative criterion does the filtering; every accepted
    root is cross-checked by actually building the family and running the
    difference verifier, so a witness in the result is never unverified.
    """
    fld = _validated_field(q, m, set_size)
    witnesses = []
    examined = 0
    for root in fld.primitive_roots():
        examined += 1
        if not coset_representative_criterion(q, m, set_size, root.value):
            continue
        params = ConstructionParams(q, m, set_size, root.value)
        report = verify_cedf(cyclotomic_family(params), 1)
        if not report.valid or report.lambda_ != 1:
            raise AssertionError(
                f"criterion and verifier disagree at q={q}, alpha={root.value}"
            )
        witnesses.append(root.value)
    return SearchResult(q, m, set_size, tuple(witnesses), examined)


_MAX_EXHAUSTIVE_ORDERINGS = 9


def _coset_orderings(classes: tuple[tuple[int, ...], ...]):
    """All orderings with the class containing 1 pinned first.

    The shift-set property is invariant under rotating the family order, so
    pinning the base class quotients that symmetry away with no loss.
    """
    rest = range(1, len(classes))
    for perm in permutations(rest):
        yield (classes[0],) + tuple(classes[i] for i in perm)


def search_sedf_orderings(q: int, m: int, set_size: int,
                          shifts: Iterable[int],
                          alpha: Optional[int] = None) -> tuple[SetFamily, ...]:
    """Exhaustively reorder the m cyclotomic cosets hunting for shift-set
    families; returns every ordering that verifies.

    Uses the smallest primitive root unless alpha is given.  Bounded to
    m <= 9 ((m-1)! orderings); use random_sedf_orderings beyond that.
    """
    if m > _MAX_EXHAUSTIVE_ORDERINGS:
        raise ValueError(
            f"m={m} is too large to enumerate (m-1)! orderings; "
            "use random_sedf_orderings instead"
        )
    fld = _validated_field(q, m, set_size)
    if alpha is None:
        alpha = fld.primitive_roots()[0].value
    classes = cyclotomic_family(ConstructionParams(q, m, set_size, alpha)).sets
    shift_tuple = tuple(sorted(set(shifts)))
    found = []
    for ordering in _coset_orderings(classes):
        candidate = SetFamily(q, ordering)
        if verify_sedf(candidate, shift_tuple).valid:
            found.append(candidate)
    return tuple(found)


def random_sedf_orderings(q: int, m: int, set_size: int,
                          shifts: Iterable[int], attempts: int, seed: int,
                          alpha: Optional[int] = None) -> tuple[SetFamily, ...]:
    """Randomized restarts over coset orderings for m beyond the exhaustive
    bound; returns the distinct verifying orderings found."""
    fld = _validated_field(q, m, set_size)
    if alpha is None:
        alpha = fld.primitive_roots()[0].value
    classes = cyclotomic_family(ConstructionParams(q, m, set_size, alpha)).sets
    shift_tuple = tuple(sorted(set(shifts)))
    rng = random.Random(seed)
    seen = set()
    found = []
    rest = list(range(1, m))
    for _ in range(attempts):
        rng.shuffle(rest)
        key = tuple(rest)
        if key in seen:
            continue
        seen.add(key)
        candidate = SetFamily(q, (classes[0],) + tuple(classes[i] for i in rest))
        if verify_sedf(candidate, shift_tuple).valid:
            found.append(candidate)
    return tuple(found)


@dataclass(frozen=True)
class ScedfCertificate:
    """Machine-checkable record of an exhaustive strong-family search.

    ``per_group`` has one entry per group order that was actually
    enumerated; ``skipped`` records orders ruled out before enumeration and
    why.  ``exhaustive`` is False iff the candidate budget ran out.
    """

    m: int
    set_size: int
    c: int
    n_max: int
    budget: int
    exhaustive: bool
    candidates_examined: int
    per_group: tuple[dict, ...] = field(default_factory=tuple)
    skipped: tuple[dict, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "set_size": self.set_size,
            "c": self.c,
            "n_max": self.n_max,
            "budget": self.budget,
            "exhaustive": self.exhaustive,
            "candidates_examined": self.candidates_examined,
            "per_group": list(self.per_group),
            "skipped": list(self.skipped),
        }


@dataclass(frozen=True)
class ScedfSearchReport:
    families: tuple[SetFamily, ...]
    certificate: ScedfCertificate


def _disjoint_set_tuples(pool: Sequence[int], m: int, set_size: int):
    """Ordered choices of m disjoint set_size-subsets of the pool, in
    lexicographic order."""
    if m == 0:
        yield ()
        return
    for first in combinations(pool, set_size):
        remaining = [x for x in pool if x not in first]
        for rest in _disjoint_set_tuples(remaining, m - 1, set_size):
            yield (first,) + rest


def search_scedf(n_max: int, m: int, set_size: int, c: int,
                 budget: int = 2_000_000) -> ScedfSearchReport:
    """Exhaustively enumerate candidate strongly uniform families.

    Groups Z_n for n <= n_max are scanned; orders failing the divisibility
    identity set_size**2 == lambda * (n - 1) or too small to hold m disjoint
    sets are recorded as skipped.  Families are enumerated up to additive
    translation by pinning 0 into the first set (the property is
    translation-invariant).  If the budget is exceeded the certificate is
    flagged non-exhaustive and the partial results are still returned.
    """
    if m < 2:
        raise ValueError("need at least two sets")
    if not 1 <= c <= m - 1:
        raise ValueError(f"shift must lie in [1, {m - 1}], got {c}")
    per_group: list[dict] = []
    skipped: list[dict] = []
    found: list[SetFamily] = []
    examined = 0
    exhausted_budget = False
    pair_total = set_size * set_size
    for n in range(2, n_max + 1):
        if pair_total % (n - 1) != 0:
            skipped.append({"n": n, "reason": "multiplicity identity fails"})
            continue
        if m * set_size > n:
            skipped.append({"n": n, "reason": "sets do not fit in the group"})
            continue
        lam = pair_total // (n - 1)
        group_candidates = 0
        group_found = 0
        pool = list(range(1, n))
        for tail in combinations(pool, set_size - 1):
            first = (0,) + tail
            rest_pool = [x for x in pool if x not in tail]
            for others in _disjoint_set_tuples(rest_pool, m - 1, set_size):
                if examined >= budget:
                    exhausted_budget = True
                    break
                examined += 1
                group_candidates += 1
                candidate = SetFamily(n, (first,) + others)
                if verify_scedf(candidate, c).valid:
                    found.append(candidate)
                    group_found += 1
            if exhausted_budget:
                break
        per_group.append({
            "n": n,
            "lambda": lam,
            "candidates": group_candidates,
            "found": group_found,
        })
        if exhausted_budget:
            break
    certificate = ScedfCertificate(
        m=m,
        set_size=set_size,
        c=c,
        n_max=n_max,
        budget=budget,
        exhaustive=not exhausted_budget,
        candidates_examined=examined,
        per_group=tuple(per_group),
        skipped=tuple(skipped),
    )
    return ScedfSearchReport(tuple(found), certificate)

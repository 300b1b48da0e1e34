"""Non-malleable threshold secret sharing from circular difference families.

Layers, bottom up: exact prime-field arithmetic; external-difference
verifiers over Z_n; manipulation-detection codes with exact game analysis;
threshold sharing; the code/sharing composition; executable security games;
and the cyclotomic construction with its search drivers.
"""

from .amd import (
    AdvantageReport,
    AmdCode,
    circular_strong_advantage,
    circular_weak_advantage,
    is_r_optimal_circular,
    is_r_optimal_weak,
    strong_advantage,
    weak_advantage,
)
from .catalog import KNOWN_WITNESSES
from .cyclotomic import (
    ConstructionParams,
    ScedfCertificate,
    ScedfSearchReport,
    SearchResult,
    coset_representative_criterion,
    cyclotomic_family,
    nonresidue_criterion,
    random_sedf_orderings,
    search_parameter_set,
    search_scedf,
    search_sedf_orderings,
)
from .families import (
    DifferenceMultiset,
    SetFamily,
    VerificationReport,
    Violation,
    external_difference,
    shift_family,
    verify_cedf,
    verify_scedf,
    verify_sedf,
)
from .fields import FieldElement, PrimeField, is_prime, prime_factors
from .games import (
    Adversary,
    AdversaryMove,
    AdversaryView,
    GameTranscript,
    PlainShamirScheme,
    Relation,
    ReplayAdversary,
    additive_relation_attack,
    derive_trial_seed,
    estimate_win_probability,
    exact_win_probability,
    play_malleability,
    play_robustness,
    shamir_offset_attack,
)
from .schemes import ComposedScheme, collapse_to_single_delta
from .shamir import (
    Polynomial,
    Share,
    ShareVector,
    ThresholdParams,
    deal,
    lagrange_coefficients,
    reconstruct,
    random_polynomial,
    shares_from_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "AdvantageReport",
    "AmdCode",
    "Adversary",
    "AdversaryMove",
    "AdversaryView",
    "ComposedScheme",
    "ConstructionParams",
    "DifferenceMultiset",
    "FieldElement",
    "GameTranscript",
    "KNOWN_WITNESSES",
    "PlainShamirScheme",
    "Polynomial",
    "PrimeField",
    "Relation",
    "ReplayAdversary",
    "ScedfCertificate",
    "ScedfSearchReport",
    "SearchResult",
    "SetFamily",
    "Share",
    "ShareVector",
    "ThresholdParams",
    "VerificationReport",
    "Violation",
    "additive_relation_attack",
    "circular_strong_advantage",
    "circular_weak_advantage",
    "collapse_to_single_delta",
    "coset_representative_criterion",
    "cyclotomic_family",
    "deal",
    "derive_trial_seed",
    "estimate_win_probability",
    "exact_win_probability",
    "external_difference",
    "is_prime",
    "is_r_optimal_circular",
    "is_r_optimal_weak",
    "lagrange_coefficients",
    "nonresidue_criterion",
    "play_malleability",
    "play_robustness",
    "prime_factors",
    "random_polynomial",
    "random_sedf_orderings",
    "reconstruct",
    "search_parameter_set",
    "search_scedf",
    "search_sedf_orderings",
    "shamir_offset_attack",
    "shares_from_polynomial",
    "shift_family",
    "strong_advantage",
    "verify_cedf",
    "verify_scedf",
    "verify_sedf",
    "weak_advantage",
]

"""Exact computation on numerical semigroups.

Core objects: :class:`NumericalSemigroup` and :class:`RelativeIdeal`.  On top
of them sit Apery tables and Hilbert functions, pseudo-Frobenius numbers and
the (almost) symmetry predicates, numerical duplication with its predicted
Hilbert function, a parametric family of almost symmetric semigroups whose
Hilbert function decreases at a prescribed level, and a procedure producing
symmetric semigroups whose Hilbert function drops at that level by more than
any prescribed amount.
"""

from .core import (
    GENERATOR_LIMIT,
    GcdError,
    NotMember,
    NumericalSemigroup,
    SemigroupError,
    parse_generators,
)
from .hilbert import (
    AperyTable,
    HilbertFunction,
    LayerSets,
    NotStabilized,
    apery_table,
    decrease_levels,
    element_order,
    hilbert_by_set_construction,
    hilbert_function,
    hilbert_through_stabilization,
    layer_sets,
    order_table,
)
from .ideals import (
    NariPartition,
    RelativeIdeal,
    ideal_generated_by,
    ideal_sum,
    is_almost_symmetric,
    is_canonical_ideal,
    is_symmetric,
    maximal_ideal,
    nari_partition,
    pseudo_frobenius,
    semigroup_as_ideal,
    semigroup_type,
    standard_canonical_ideal,
)
from .construction import (
    Claim,
    ConstructionCertificate,
    ConstructionData,
    EllTooSmall,
    ExcludedEll,
    construct_asd,
    gcd_validity,
    is_excluded_level,
    verify_construction,
)
from .duplication import (
    BNotInS,
    ChainStep,
    EvenB,
    ExcludedLevel,
    IdealSumViolation,
    LevelTooSmall,
    WitnessReport,
    duplication_chain,
    gorenstein_witness,
    numerical_duplication,
    predicted_duplication_hilbert,
    smallest_odd_element,
)
from .fixtures import (
    Fixture,
    FixtureError,
    FixtureIntegrityError,
    check_all_fixtures,
    check_fixture,
    fixture_semigroup,
    get_fixture,
    load_registry,
)

__version__ = "1.0.0"

__all__ = [
    "AperyTable",
    "BNotInS",
    "ChainStep",
    "Claim",
    "ConstructionCertificate",
    "ConstructionData",
    "EllTooSmall",
    "EvenB",
    "ExcludedEll",
    "ExcludedLevel",
    "Fixture",
    "FixtureError",
    "FixtureIntegrityError",
    "GENERATOR_LIMIT",
    "GcdError",
    "HilbertFunction",
    "IdealSumViolation",
    "LayerSets",
    "LevelTooSmall",
    "NariPartition",
    "NotMember",
    "NotStabilized",
    "NumericalSemigroup",
    "RelativeIdeal",
    "SemigroupError",
    "WitnessReport",
    "apery_table",
    "check_all_fixtures",
    "check_fixture",
    "construct_asd",
    "decrease_levels",
    "duplication_chain",
    "element_order",
    "fixture_semigroup",
    "gcd_validity",
    "get_fixture",
    "gorenstein_witness",
    "hilbert_by_set_construction",
    "hilbert_function",
    "hilbert_through_stabilization",
    "ideal_generated_by",
    "ideal_sum",
    "is_almost_symmetric",
    "is_canonical_ideal",
    "is_excluded_level",
    "is_symmetric",
    "layer_sets",
    "load_registry",
    "maximal_ideal",
    "nari_partition",
    "numerical_duplication",
    "order_table",
    "parse_generators",
    "predicted_duplication_hilbert",
    "pseudo_frobenius",
    "semigroup_as_ideal",
    "semigroup_type",
    "smallest_odd_element",
    "standard_canonical_ideal",
    "verify_construction",
]

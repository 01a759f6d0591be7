"""Finite categories: limits, canonical comparison maps, natural-iso search,
monoidal coherence and executable theorem checks."""

from .core import (
    CompositionError,
    FinCategory,
    FinCatError,
    FunctorData,
    NatTransformData,
    ProductCategory,
    StructuralError,
    ValidationReport,
    compose,
    compose_functors,
    identity_functor,
    identity_transformation,
    is_fully_faithful,
    is_invertible,
    is_trivial,
    opposite,
    product_category,
    product_functor,
    slice_category,
    validate_category,
    validate_functor,
    validate_natural_transformation,
)
from .corpus import (
    CorpusSpec,
    GeneratorBoundsError,
    default_corpus,
    gen_bool_matrix,
    gen_boolean_algebra,
    gen_chain,
    gen_cyclic_group,
    gen_divisor_lattice,
    gen_m3,
    gen_n5,
    gen_poset_from_covers,
    gen_terminal,
)
from .limits import (
    CoproductWitness,
    LimitAbsent,
    LimitCache,
    ProductWitness,
    ZeroStructure,
    build_limit_cache,
    canonical_alpha,
    canonical_delta,
    delta_functors,
    find_binary_coproduct,
    find_binary_product,
    find_initial,
    find_terminal,
    is_distributive,
    is_semi_additive,
    is_subterminal,
    plus_times_functors,
    zero_structure,
)
from .monoidal import (
    HypothesisViolation,
    MonoidalFunctorData,
    MonoidalNatData,
    MonoidalStructure,
    Strength,
    cartesian_monoidal,
    check_coproduct_preservation,
    check_strength_theorem,
    classify_monoidal_functor,
    cocartesian_monoidal,
    find_monoidal_isos,
    identity_monoidal_functor,
    kronecker_monoidal,
    meet_lax_functor,
    require_strength_psi,
    strength_setting,
    tensor_strong_monoidal,
    validate_braiding,
    validate_monoidal,
    validate_monoidal_functor,
    validate_monoidal_nat,
)
from .reports import Check, CoherenceReport, DecisionReport, TheoremReport, Verdict
from .search import SearchResult, SearchTruncated, exists_natural_iso, search_natural_transformations
from .serialize import DocumentError, load_category, save_category

__version__ = "0.1.0"

__all__ = [
    "Check",
    "CoherenceReport",
    "CompositionError",
    "CoproductWitness",
    "CorpusSpec",
    "DecisionReport",
    "DocumentError",
    "FinCatError",
    "FinCategory",
    "FunctorData",
    "GeneratorBoundsError",
    "HypothesisViolation",
    "LimitAbsent",
    "LimitCache",
    "MonoidalFunctorData",
    "MonoidalNatData",
    "MonoidalStructure",
    "NatTransformData",
    "ProductCategory",
    "ProductWitness",
    "SearchResult",
    "SearchTruncated",
    "Strength",
    "StructuralError",
    "TheoremReport",
    "ValidationReport",
    "Verdict",
    "ZeroStructure",
    "build_limit_cache",
    "canonical_alpha",
    "canonical_delta",
    "cartesian_monoidal",
    "check_coproduct_preservation",
    "check_strength_theorem",
    "classify_monoidal_functor",
    "cocartesian_monoidal",
    "compose",
    "compose_functors",
    "default_corpus",
    "delta_functors",
    "exists_natural_iso",
    "find_binary_coproduct",
    "find_binary_product",
    "find_initial",
    "find_monoidal_isos",
    "find_terminal",
    "gen_bool_matrix",
    "gen_boolean_algebra",
    "gen_chain",
    "gen_cyclic_group",
    "gen_divisor_lattice",
    "gen_m3",
    "gen_n5",
    "gen_poset_from_covers",
    "gen_terminal",
    "identity_functor",
    "identity_monoidal_functor",
    "identity_transformation",
    "is_distributive",
    "is_fully_faithful",
    "is_invertible",
    "is_semi_additive",
    "is_subterminal",
    "is_trivial",
    "kronecker_monoidal",
    "load_category",
    "meet_lax_functor",
    "opposite",
    "plus_times_functors",
    "product_category",
    "product_functor",
    "require_strength_psi",
    "save_category",
    "search_natural_transformations",
    "slice_category",
    "strength_setting",
    "tensor_strong_monoidal",
    "validate_braiding",
    "validate_category",
    "validate_functor",
    "validate_monoidal",
    "validate_monoidal_functor",
    "validate_monoidal_nat",
    "validate_natural_transformation",
    "zero_structure",
]

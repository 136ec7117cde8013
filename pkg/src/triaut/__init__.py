"""Exact computer algebra for triangular automorphism groups over Q."""

from .poly import (
    COMMUTATIVE,
    FREE,
    NEG_INFINITY,
    Polynomial,
    Scalar,
    SyllableProfile,
    as_scalar,
    syllable_profile,
    term_budget,
)
from .endo import (
    Elementary,
    Endomorphism,
    as_elementary,
    classify,
    commutator,
    compose,
    conjugate,
    elementary,
    from_document,
    from_json,
    identity,
    invert,
    invert_triangular,
    power,
    sigma,
    split_triangular,
    to_document,
    to_json,
    transposition,
    triangular_shape,
)
from .structure import (
    CommutatorExpression,
    LayerFactorization,
    express_as_single_commutator,
    express_in_layer_commutator,
    factorize_unitriangular,
    solve_difference,
)
from .presentation import (
    Phi,
    Tau,
    check_relation_family,
    evaluate_b_word,
    format_b_word,
    parse_b_word,
    to_b_generators,
)
from .analysis import (
    FreePairCertificate,
    PairClass,
    classify_pair,
    diagonalize_elementary,
    element_order,
    fix_ifix_split,
    free_pair_check,
    format_group_word,
    ia_level,
    nonlinearity_witness,
    parse_group_word,
    witness_value_at_zero,
)
from . import errors

__all__ = [name for name in dir() if not name.startswith("_")]

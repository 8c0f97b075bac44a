"""Strongly J#-clean matrix decompositions over projective-free rings."""

from .decomposer import Decomposition, VerificationReport, decompose, decompose_from_factorization, verify
from .errors import (
    BudgetExceeded,
    JCleanError,
    NoFactorization,
    NotAUnit,
    NotClean,
    NotComaximal,
    ParseError,
    RingMismatch,
    Unsupported,
)
from .factorizer import (
    Classification,
    SCFactorization,
    Verdict,
    classify_2x2,
    classify_3x3,
    field_case,
    quadratic_root_criterion,
    roots_in_cosets,
    sc_factorize,
)
from .jsharp import elem_in_jsharp, matrix_in_jsharp, poly_in_class
from .matrix import Matrix, charpoly, companion, identity, mid, scalar_embed
from .poly import BezoutPair, Polynomial, bezout_comaximal, congruent_mod_J, eval_at_matrix, monic_divmod, poly_parse
from .rings import (
    Integers,
    IntegersMod,
    LocalizedIntegers,
    PrimeField,
    Ring,
    RingElement,
    TruncatedSeries,
    elem_parse,
    in_jacobson,
    is_unit,
    jacobson_nil_index,
    ring_parse,
    try_inv,
)
from .series_lift import SeriesRoot, lift_root_cubic, lift_root_quadratic, series_decompose

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

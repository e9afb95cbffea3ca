"""Exact computer algebra for quantized matrix algebras.

The engine works in any commutation system whose ascending products
rewrite as lambda*(descending word) plus strictly smaller terms; M_q(n)
is the shipped flagship instance.  Coefficients live in Q(q) (or Q after
specializing q), monomials in the descending PBW basis, and left ideals
are handled through left Groebner bases.
"""

from .errors import (
    DegreeGuardExceeded,
    DimensionMismatch,
    DivisionByZero,
    EmptyBasis,
    EvaluationPole,
    IndexOutOfRange,
    InvalidPrefix,
    InvalidSpec,
    MissingPair,
    NegativeGeneratorPower,
    PairLimitExceeded,
    ParseError,
    QuantmatError,
)
from .qfield import ONE, Q, QMode, QRat, SYMBOLIC, ZERO
from .pbw import (
    GeneratorId,
    Monomial,
    MonomialOrder,
    PAPER_LEX,
    Polynomial,
    Term,
    compare_monomials,
    compare_word_lex,
    gen_index,
    gen_row_col,
    mono_divides,
    mono_lcm,
    mono_sub,
    mono_sum,
)
from .straighten import (
    CheckResult,
    CommutationSystem,
    ValidationReport,
    mono_mul,
    poly_mul,
    quantum_plane,
    scalar_mul,
    validate_ordering,
    validate_solvability,
    weyl_algebra,
)
from .mq import MqSpec, build_mq, classify_pair
from .fixtures import quantum_determinant
from .groebner import (
    BasisStats,
    GroebnerBasis,
    buchberger,
    ideal_member,
    interreduce,
    left_divide,
    left_spoly,
)
from .dimension import (
    PrefixSubset,
    Staircase,
    check_elimination_bound,
    eliminate_prefix,
    gk_dimension,
    hilbert_count,
    leading_staircase,
    make_staircase,
)
from .textio import (
    IdealFile,
    format_mono,
    format_poly,
    format_qrat,
    load_ideal,
    parse_expr,
    parse_poly,
    save_ideal,
)

__version__ = "0.1.0"

__all__ = [
    "BasisStats",
    "CheckResult",
    "CommutationSystem",
    "DegreeGuardExceeded",
    "DimensionMismatch",
    "DivisionByZero",
    "EmptyBasis",
    "EvaluationPole",
    "GeneratorId",
    "GroebnerBasis",
    "IdealFile",
    "IndexOutOfRange",
    "InvalidPrefix",
    "InvalidSpec",
    "MissingPair",
    "Monomial",
    "MonomialOrder",
    "MqSpec",
    "NegativeGeneratorPower",
    "ONE",
    "PAPER_LEX",
    "PairLimitExceeded",
    "ParseError",
    "Polynomial",
    "PrefixSubset",
    "Q",
    "QMode",
    "QRat",
    "QuantmatError",
    "SYMBOLIC",
    "Staircase",
    "Term",
    "ValidationReport",
    "ZERO",
    "buchberger",
    "build_mq",
    "check_elimination_bound",
    "classify_pair",
    "compare_monomials",
    "compare_word_lex",
    "eliminate_prefix",
    "format_mono",
    "format_poly",
    "format_qrat",
    "gen_index",
    "gen_row_col",
    "gk_dimension",
    "hilbert_count",
    "ideal_member",
    "interreduce",
    "leading_staircase",
    "left_divide",
    "left_spoly",
    "load_ideal",
    "make_staircase",
    "mono_divides",
    "mono_lcm",
    "mono_mul",
    "mono_sub",
    "mono_sum",
    "parse_expr",
    "parse_poly",
    "poly_mul",
    "quantum_determinant",
    "quantum_plane",
    "save_ideal",
    "scalar_mul",
    "validate_ordering",
    "validate_solvability",
    "weyl_algebra",
]

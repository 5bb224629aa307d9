"""Generalized Hölder weights, operator weights of diagonal maps, and the
Hölder-type inequalities they satisfy, for exponents in ``R \\ {0}`` and ``±inf``."""

from .errors import ConjugateUndefinedError, CriticalPointDefect, InvalidInputError
from .inequalities import (
    Direction,
    ExponentTriple,
    InequalityReport,
    check_generalized_hoelder,
    conjugate_t,
)
from .measure import (
    DiscreteMeasureSpace,
    StepFunction,
    check_reverse_hoelder,
    check_hoelder_lp,
    ext_pointwise_product,
    in_Lp,
    lp_weight,
)
from .operator import (
    Attained,
    CaseLabel,
    DiagonalMap,
    ExtremalSequence,
    Vacuous,
    classify,
    dual_check,
    extremizer,
    operator_weight,
)
from .oracle import OracleEstimate, SearchBudget, exact_n2, oracle_operator_weight
from .weights import Exponent, WeightClass, classify_weight, hoelder_weight

__version__ = "0.1.0"

__all__ = [
    "Attained",
    "CaseLabel",
    "ConjugateUndefinedError",
    "CriticalPointDefect",
    "DiagonalMap",
    "Direction",
    "DiscreteMeasureSpace",
    "Exponent",
    "ExponentTriple",
    "ExtremalSequence",
    "InequalityReport",
    "InvalidInputError",
    "OracleEstimate",
    "SearchBudget",
    "StepFunction",
    "Vacuous",
    "WeightClass",
    "check_generalized_hoelder",
    "check_reverse_hoelder",
    "check_hoelder_lp",
    "classify",
    "classify_weight",
    "conjugate_t",
    "dual_check",
    "exact_n2",
    "ext_pointwise_product",
    "extremizer",
    "hoelder_weight",
    "in_Lp",
    "lp_weight",
    "operator_weight",
    "oracle_operator_weight",
]

"""Exact Lucas sequences U_n(P, Q), their residues, and mod-4 non-square criteria."""

from lucas_squares.arith import (
    binomial,
    decimal_digits,
    is_nonzero_square,
    is_perfect_square,
    isqrt,
    mod_norm,
)
from lucas_squares.criteria import Conclusion, CriterionId, CriterionVerdict, classify, explain
from lucas_squares.lucas_core import LucasParams, u_closed, u_matrix, u_mod, u_rec
from lucas_squares.periods import PeriodInfo, period_mod, residues_mod
from lucas_squares.verify import (
    CensusReport,
    GridSpec,
    VerificationReport,
    census,
    check_equivalence,
    check_rm_subset,
    verify_criterion,
)

__version__ = "0.1.0"

__all__ = [
    "CensusReport",
    "Conclusion",
    "CriterionId",
    "CriterionVerdict",
    "GridSpec",
    "LucasParams",
    "PeriodInfo",
    "VerificationReport",
    "binomial",
    "census",
    "check_equivalence",
    "check_rm_subset",
    "classify",
    "decimal_digits",
    "explain",
    "is_nonzero_square",
    "is_perfect_square",
    "isqrt",
    "mod_norm",
    "period_mod",
    "residues_mod",
    "u_closed",
    "u_matrix",
    "u_mod",
    "u_rec",
    "verify_criterion",
]

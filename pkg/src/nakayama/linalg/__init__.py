"""Exact matrices, canonical subspaces and the invertible-element span oracle."""

from .hyperplane import extend_to_hyperplane_avoiding, hyperplanes_containing
from .matrix import Matrix, SolveSuite, dot, lin_comb, solve_suite, vec_add, vec_scale, vec_sub
from .span_oracle import (
    FOUND,
    NONE_CERTIFIED,
    NONE_PROBABILISTIC,
    SpanOracleResult,
    nonsingular_in_span,
)
from .subspace import Subspace, complement_through

__all__ = [
    "Matrix",
    "SolveSuite",
    "solve_suite",
    "Subspace",
    "complement_through",
    "extend_to_hyperplane_avoiding",
    "hyperplanes_containing",
    "nonsingular_in_span",
    "SpanOracleResult",
    "FOUND",
    "NONE_CERTIFIED",
    "NONE_PROBABILISTIC",
    "dot",
    "lin_comb",
    "vec_add",
    "vec_sub",
    "vec_scale",
]

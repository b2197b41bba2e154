"""Resilient (n,2)-functions and equitable partitions of Q_n and H(r,4)."""

from ._core import (  # noqa: F401
    RescubeError,
    affine_dual,
    affine_rank,
    are_equivalent,
    canonical_form,
    ci_order,
    classify,
    contract,
    detect_reducible,
    expand,
    hamming_code,
    is_resilient,
    latin_squares,
    lift,
    linear_function,
    max_resilience_bound,
    quotient_matrix,
    quotient_matrix_h4,
    rank_class,
    split,
    standard_matrix,
    verify,
)

__all__ = [
    "RescubeError",
    "affine_dual",
    "affine_rank",
    "are_equivalent",
    "canonical_form",
    "ci_order",
    "classify",
    "contract",
    "detect_reducible",
    "expand",
    "hamming_code",
    "is_resilient",
    "latin_squares",
    "lift",
    "linear_function",
    "max_resilience_bound",
    "quotient_matrix",
    "quotient_matrix_h4",
    "rank_class",
    "split",
    "standard_matrix",
    "verify",
]

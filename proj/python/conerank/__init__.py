"""Stanley-Reisner ideals of cones: invariants and up-to-radical generators."""

from ._core import (
    Complex,
    ConerankError,
    Inconclusive,
    InvalidInput,
    Undefined,
    VerificationFailure,
    cone_union,
    construct,
    graded_betti,
    has_2_linear_resolution,
    height,
    is_d_tree,
    is_generalized_tree,
    lemma3_r,
    proj_dim,
    regularity,
    run_cli,
    verify,
)

__all__ = [
    "Complex",
    "ConerankError",
    "Inconclusive",
    "InvalidInput",
    "Undefined",
    "VerificationFailure",
    "cone_union",
    "construct",
    "graded_betti",
    "has_2_linear_resolution",
    "height",
    "is_d_tree",
    "is_generalized_tree",
    "lemma3_r",
    "proj_dim",
    "regularity",
    "run_cli",
    "verify",
]

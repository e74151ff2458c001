"""Rank-metric code equivalence toolkit."""

from ._rankeq import (
    Field,
    MatrixCode,
    Outcome,
    RankeqError,
    brute_mcre,
    component_profile,
    conductor,
    expand_code,
    left_stabilizer,
    load_mcode,
    mul_left,
    mul_right,
    random_code,
    reduce_me_to_mce,
    right_stabilizer,
    save_mcode,
    solve_hvmce,
    solve_mcre,
    verify_witness,
)

__all__ = [
    "Field",
    "MatrixCode",
    "Outcome",
    "RankeqError",
    "brute_mcre",
    "component_profile",
    "conductor",
    "expand_code",
    "left_stabilizer",
    "load_mcode",
    "mul_left",
    "mul_right",
    "random_code",
    "reduce_me_to_mce",
    "right_stabilizer",
    "save_mcode",
    "solve_hvmce",
    "solve_mcre",
    "verify_witness",
]

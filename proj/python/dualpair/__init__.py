"""Exact dual-pair computations.

Thin Python surface over the C++ core: root-system character arithmetic,
branching and transfer maps, parabolic exponent tables, split-octonion
algebra, and the deterministic verification suites.  Exact rational and
Laurent values are returned as strings (``v`` denotes ``q**0.5``); weights
are plain integer lists in fundamental-weight coordinates.
"""

from ._core import (
    decompose_tensor,
    delta_exponent,
    dim,
    g2_delta_exponents,
    graded_branch_f4,
    minuscule_identity,
    oct_mul,
    oct_norm,
    oct_trace,
    restrict_map,
    run_suite,
    suite_names,
    table3,
    transfer,
    weights,
)

__all__ = [
    "decompose_tensor",
    "delta_exponent",
    "dim",
    "g2_delta_exponents",
    "graded_branch_f4",
    "minuscule_identity",
    "oct_mul",
    "oct_norm",
    "oct_trace",
    "restrict_map",
    "run_suite",
    "suite_names",
    "table3",
    "transfer",
    "weights",
]

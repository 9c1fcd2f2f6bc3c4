"""Exact cells of the totally nonnegative flag variety of SL_n.

Permutations are lists in one-line notation, rationals are "p/q" strings and
matrices are lists of rows.
"""

from ._rtnn import (
    RtnnError,
    audit_decomposition,
    audit_semigroup,
    bruhat_leq,
    bruhat_pairs,
    build_chart,
    canonical_rep,
    classify,
    eval_chart,
    invert_chart,
    length,
    reduced_word,
    run_cli,
    sample_tnn_flag,
    stratum,
)

__all__ = [
    "RtnnError",
    "audit_decomposition",
    "audit_semigroup",
    "bruhat_leq",
    "bruhat_pairs",
    "build_chart",
    "canonical_rep",
    "classify",
    "eval_chart",
    "invert_chart",
    "length",
    "reduced_word",
    "run_cli",
    "sample_tnn_flag",
    "stratum",
]

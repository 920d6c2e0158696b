"""Exact face-vector, M-sequence and cd-index computations."""

from ._fvlab import (
    CapExceeded,
    CdInexpressible,
    InvalidInput,
    approximate_point,
    binomial,
    cd_index,
    cd_mul,
    cd_words,
    decide_rank5,
    decide_simplicial,
    f_to_h,
    fatness,
    flag_vector,
    g_to_h,
    h_to_f,
    h_to_g,
    is_m_sequence,
    macaulay_rep,
    pseudo_power,
    run_cli,
    stanley_sphere,
)

__all__ = [
    "CapExceeded",
    "CdInexpressible",
    "InvalidInput",
    "approximate_point",
    "binomial",
    "cd_index",
    "cd_mul",
    "cd_words",
    "decide_rank5",
    "decide_simplicial",
    "f_to_h",
    "fatness",
    "flag_vector",
    "g_to_h",
    "h_to_f",
    "h_to_g",
    "is_m_sequence",
    "macaulay_rep",
    "pseudo_power",
    "run_cli",
    "stanley_sphere",
]

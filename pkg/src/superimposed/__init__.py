"""Generalized (u, u+v) superimposed codes over GF(2): construction, measurement,
decoding and exhaustive verification."""

from .gf2words import Word, concat, distance, pad_zeros, repeat, weight, xor
from .construct import (
    ChainSpec,
    Codebook,
    LevelSpec,
    build_c2,
    build_c3,
    build_chain,
    build_single_level,
    predict_params,
    repetition_code,
    simplex_code,
    superimpose_level,
)
from .analyze import full_report, is_constant_weight, is_linear, min_distance, weight_spectrum
from .decode import channel_simulate, majority_decode, ml_decode, staged_decode, staged_decode_c2
from .oracle import best_linear_code, bv_lookup, chain_search

__version__ = "0.1.0"

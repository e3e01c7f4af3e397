"""Arithmetic (2-adic) autocorrelation of binary m-sequences.

Three mathematically independent routes to the same quantity:
  - arith: direct 2-adic subtraction of sigma values
  - blocks: block-type counting of the two-row matrix
  - closedform: prediction from the basis expansion of (1 + pi^tau)^-1
"""

from .arith import arithmetic_autocorr, distribution, sigma, weight
from .blocks import BlockTypeTable, autocorr_via_blocks, block_type_counts, g_of
from .closedform import (
    TauProfile,
    brute_count_eq4,
    brute_count_eq5,
    lemma4_count,
    predict_acorr,
    predict_distribution,
    weighted_sum,
)
from .gf2m import (
    GF2m,
    PRIMITIVE_POLYS,
    find_primitive_polynomials,
    format_poly,
    make_field,
    parse_poly,
)
from .sequences import BinarySequence, m_sequence

__all__ = [
    "GF2m",
    "PRIMITIVE_POLYS",
    "BinarySequence",
    "BlockTypeTable",
    "TauProfile",
    "arithmetic_autocorr",
    "autocorr_via_blocks",
    "block_type_counts",
    "brute_count_eq4",
    "brute_count_eq5",
    "distribution",
    "find_primitive_polynomials",
    "format_poly",
    "g_of",
    "lemma4_count",
    "m_sequence",
    "make_field",
    "parse_poly",
    "predict_acorr",
    "predict_distribution",
    "sigma",
    "weight",
    "weighted_sum",
]

"""Maximal generalized palindromes under substring-consistent matching models.

Computes all maximal palindromes of a string for both the reversal-based and
the symmetry-based definition, under exact, complementary (theta),
parameterized, order-preserving, Cartesian-tree, and palindromic-structure
matching, with brute-force oracles and linearity benchmarks.
"""

from .core import CenterArray, Text, Window, mirror_center, rank_compress, window_of
from .encodings import (
    CodeArray,
    ComplementMap,
    LPalArray,
    PDArray,
    PEArray,
    complement_apply,
    lpal,
    op_code,
    parent_distance,
    pd_window,
    pe_window,
    prev_encoding,
)
from .lce import LceIndex, OutwardLce, outward_lce_theta
from .oracle import is_rev_palindrome, is_sym_palindrome, maximal_array_bruteforce, scsttr_equal
from .rev_engine import (
    Counters,
    CtChecker,
    CtStats,
    PalstructLists,
    build_palstruct_lists,
    scan_rev,
    scan_rev_op,
)
from .sym_engine import SymScanResult, scan_sym, scan_sym_ct_inward, tokenizer_for

__version__ = "0.1.0"

__all__ = [
    "CenterArray",
    "CodeArray",
    "ComplementMap",
    "Counters",
    "CtChecker",
    "CtStats",
    "LPalArray",
    "LceIndex",
    "OutwardLce",
    "PDArray",
    "PEArray",
    "PalstructLists",
    "SymScanResult",
    "Text",
    "Window",
    "build_palstruct_lists",
    "complement_apply",
    "is_rev_palindrome",
    "is_sym_palindrome",
    "lpal",
    "maximal_array_bruteforce",
    "mirror_center",
    "op_code",
    "outward_lce_theta",
    "parent_distance",
    "pd_window",
    "pe_window",
    "prev_encoding",
    "rank_compress",
    "scan_rev",
    "scan_rev_op",
    "scan_sym",
    "scan_sym_ct_inward",
    "scsttr_equal",
    "tokenizer_for",
    "window_of",
]

"""Suffix-tree path decomposition indexes.

Build the sampled arrays of a text (generalized LPF / path decomposition
arrays), navigate a compressed suffix tree over them, locate patterns, and
report the repetitiveness measures they define.
"""
from .archive import StpdIndex, load, save
from .core import (IndexPermutation, PermutationKind, Text, TextArrays, build_pa,
                   build_sa, bwt, check_order_preserving, cobwt, count_runs, perm_eval)
from .general import GeneralLocator, PhraseCover, PointEnclosure, build_cover
from .lpf import (CompressedText, LpfArray, PdaArray, build_lpf, build_pda, compress,
                  extract_char, irreducible_positions)
from .oracle import TextOracle
from .phi import PhiStructure, build_phi
from .stcolex import StColexIndex
from .stlex import NULL, NodeRep, StLexTree
from .stpos import (WorstCaseSpec, leftmost_occurrence, ppm_escape_count,
                    rightmost_occurrence, stpos_size, worst_case_string)

__version__ = "0.1.0"

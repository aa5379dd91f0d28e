"""Exact Groebner-Shirshov basis computations for the quantized matrix algebra M_q(n)."""

from .freealg import Generator, NCPoly, cmp_generators, cmp_words, leading_word
from .gsb import Reducer, composition, family_of, find_ambiguities, reduce, verify_gsb
from .qlaurent import GENERIC, Q, Q_INV, LaurentPoly, QMode
from .quantum_matrix import RelationClass, build_relations, classify_pair

__version__ = "0.1.0"

__all__ = [
    "GENERIC",
    "Generator",
    "LaurentPoly",
    "NCPoly",
    "Q",
    "Q_INV",
    "QMode",
    "Reducer",
    "RelationClass",
    "build_relations",
    "classify_pair",
    "cmp_generators",
    "cmp_words",
    "composition",
    "family_of",
    "find_ambiguities",
    "leading_word",
    "reduce",
    "verify_gsb",
]

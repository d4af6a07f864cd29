"""Brauer graph algebras, their radical-graded algebras and string combinatorics."""
from .classify import ReprType, classify_A, classify_grA, consistency_A_vs_grA
from .graph import BrauerGraph, validate
from .io import load_corpus, parse_bg, parse_sqp, serialize_bg, serialize_sqp
from .presentation import build_quiver, ideal_variant, relations, string_presentation
from .strings import Presentation, Word, enumerate_bands, enumerate_strings, is_band, is_string, parse_word

__all__ = [
    "BrauerGraph", "Presentation", "ReprType", "Word",
    "build_quiver", "classify_A", "classify_grA", "consistency_A_vs_grA",
    "enumerate_bands", "enumerate_strings", "ideal_variant", "is_band", "is_string",
    "load_corpus", "parse_bg", "parse_sqp", "parse_word", "relations",
    "serialize_bg", "serialize_sqp", "string_presentation", "validate",
]

"""Pregroup-grammar compositional distributional sentence semantics."""

from .demo import bundled_lexicon, run_demo
from .engine import Analysis, MeaningResult, analyze, compute_meaning, \
    meaning_of, similarity
from .lexicon import Lexicon, LexiconEntry, SpaceAssignment, load_lexicon, \
    serialize
from .pregroup import PregroupType, ReductionDiagram, SimpleType, TypePoset, \
    TypeRegistry, contracts, greedy_reduce, parse_type, reduce_to
from .tensor import BOOLEAN, NATURAL, REAL, Semiring, Tensor

__version__ = "0.1.0"

__all__ = [
    "bundled_lexicon", "run_demo",
    "Analysis", "MeaningResult", "analyze", "compute_meaning", "meaning_of",
    "similarity", "Lexicon", "LexiconEntry", "SpaceAssignment",
    "load_lexicon", "serialize", "PregroupType", "ReductionDiagram",
    "SimpleType", "TypePoset", "TypeRegistry", "contracts", "greedy_reduce",
    "parse_type", "reduce_to", "BOOLEAN", "NATURAL", "REAL", "Semiring",
    "Tensor",
]

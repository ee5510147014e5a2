# betarec/transducers/__init__.py
"""
Letter-to-letter transducers and the Frougny normalization pipeline.
"""

from .frougny import balance_bounds, build_fractional_converter, build_normalizer, lead_bound, normalizer_relation
from .letter import (
    LetterTransducer,
    apply,
    eliminate_initial_function,
    relation_automaton,
    transduce_word,
    word_automaton,
)

__all__ = [
    "LetterTransducer",
    "apply",
    "balance_bounds",
    "build_fractional_converter",
    "build_normalizer",
    "eliminate_initial_function",
    "lead_bound",
    "normalizer_relation",
    "relation_automaton",
    "transduce_word",
    "word_automaton",
]

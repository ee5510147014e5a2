# betarec/logic/__init__.py
"""
First-order formulas over <R, 1, <=, +, X_beta>: parsing, compilation to set
automata, sentence decision and synthesis from automata.
"""

from .ast import (
    And,
    DigitAt,
    Equal,
    Exists,
    Forall,
    Formula,
    Implies,
    IsOne,
    Leq,
    Less,
    Linear,
    Not,
    Or,
    Sum,
    conjunction,
    disjunction,
    format_formula,
    formula_size,
)
from .compiler import compile_formula, decide_sentence, evaluate, evaluate_linear, miniscope, power_index
from .helpers import beta_integer, negative_power, next_power, power_of_base, previous_power, times_base
from .parser import parse_formula, tokenize
from .synthesis import StateCoding, encode_run, min_gap, run_tracks, state_coding, synthesize_formula

__all__ = [
    "And",
    "DigitAt",
    "Equal",
    "Exists",
    "Forall",
    "Formula",
    "Implies",
    "IsOne",
    "Leq",
    "Less",
    "Linear",
    "Not",
    "Or",
    "StateCoding",
    "Sum",
    "beta_integer",
    "compile_formula",
    "conjunction",
    "decide_sentence",
    "disjunction",
    "encode_run",
    "evaluate",
    "evaluate_linear",
    "format_formula",
    "formula_size",
    "min_gap",
    "miniscope",
    "negative_power",
    "next_power",
    "parse_formula",
    "power_index",
    "power_of_base",
    "previous_power",
    "run_tracks",
    "state_coding",
    "synthesize_formula",
    "times_base",
    "tokenize",
]

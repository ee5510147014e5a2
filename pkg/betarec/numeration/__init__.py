# betarec/numeration/__init__.py
"""
beta-expansions, Renyi expansion of 1, Parry admissibility, exact evaluation.
"""

from .bertrand import bertrand_automaton, bertrand_size, bertrand_step
from .columns import decode_columns, encode_columns, parse_signed_word
from .expansion import (
    admissibility_gap_constant,
    greedy_expand,
    is_admissible,
    is_admissible_pointed,
    quasi_greedy_tail,
    renyi_star,
    synchronize,
    value_of,
)
from .words import (
    EventuallyPeriodicWord,
    PointedWord,
    format_fraction,
    format_word,
    lexicographic_compare,
    parse_digits,
    parse_fraction,
    parse_word,
)

__all__ = [
    "bertrand_automaton",
    "bertrand_size",
    "bertrand_step",
    "decode_columns",
    "encode_columns",
    "EventuallyPeriodicWord",
    "PointedWord",
    "admissibility_gap_constant",
    "format_fraction",
    "format_word",
    "greedy_expand",
    "is_admissible",
    "is_admissible_pointed",
    "lexicographic_compare",
    "parse_digits",
    "parse_fraction",
    "parse_signed_word",
    "parse_word",
    "quasi_greedy_tail",
    "renyi_star",
    "synchronize",
    "value_of",
]

# betarec/automata/__init__.py
"""
Büchi automata engine: structure, closure operations, complementation, DOT.
"""

from .buchi import (
    STAR,
    BuchiAutomaton,
    UltimatelyPeriodicWord,
    accepts,
    explore,
    girth,
    is_empty,
    is_star,
    lasso_samples,
    sort_symbols,
    star,
    symbol_key,
    trim,
)
from .complement import complement, determinize_weak, equivalent, included, rank_complement, weak_marking
from .export import format_symbol, to_dot
from .ops import (
    complete,
    cyclic_unroll,
    intersect,
    inverse_map,
    map_alphabet,
    minimize,
    project,
    pullback,
    relabel,
    union,
    union_product,
)

__all__ = [
    "STAR",
    "BuchiAutomaton",
    "UltimatelyPeriodicWord",
    "accepts",
    "complement",
    "complete",
    "cyclic_unroll",
    "determinize_weak",
    "equivalent",
    "explore",
    "format_symbol",
    "girth",
    "included",
    "intersect",
    "inverse_map",
    "is_empty",
    "is_star",
    "lasso_samples",
    "map_alphabet",
    "minimize",
    "project",
    "pullback",
    "rank_complement",
    "relabel",
    "sort_symbols",
    "star",
    "symbol_key",
    "to_dot",
    "trim",
    "union",
    "union_product",
    "weak_marking",
]

# betarec/realsets/__init__.py
"""
beta-recognizable subsets of R^n: universes, arithmetic relations, the digit
predicate and the constructions closed under them.
"""

from .algebra import (
    complement_set,
    cylindrify,
    difference,
    equivalent_sets,
    included_set,
    intersection,
    is_empty_set,
    project_set,
    saturated,
    union_set,
)
from .constructions import (
    DOWN,
    UP,
    box,
    canonical_pad,
    empty_set,
    interval_set,
    member,
    sample_points,
    shift_by_base,
    singleton,
    track_pairs,
    translate,
)
from .digits import digit_predicate, greedy_digit
from .linear import (
    Relation,
    add_relation,
    carry_automaton,
    equality_relation,
    lexicographic_order,
    linear_relation,
    order_relation,
)
from .model import PaddingMode, RealSetAutomaton, coerce_point, digit_columns, set_alphabet, zero_column
from .padding import pad_closure, settle
from .rebase import from_power_field, rebase_power, to_power_field
from .universe import (
    beta_integers,
    figure_universe,
    greedy_only,
    minimal_padding,
    strict_universe,
    track_step,
    universe,
    universe_step,
)

__all__ = [
    "DOWN",
    "UP",
    "PaddingMode",
    "RealSetAutomaton",
    "Relation",
    "add_relation",
    "beta_integers",
    "box",
    "canonical_pad",
    "carry_automaton",
    "coerce_point",
    "complement_set",
    "cylindrify",
    "difference",
    "digit_columns",
    "digit_predicate",
    "empty_set",
    "equality_relation",
    "equivalent_sets",
    "figure_universe",
    "from_power_field",
    "greedy_digit",
    "greedy_only",
    "included_set",
    "intersection",
    "interval_set",
    "is_empty_set",
    "lexicographic_order",
    "linear_relation",
    "member",
    "minimal_padding",
    "order_relation",
    "pad_closure",
    "project_set",
    "rebase_power",
    "sample_points",
    "saturated",
    "set_alphabet",
    "settle",
    "shift_by_base",
    "singleton",
    "strict_universe",
    "to_power_field",
    "track_pairs",
    "track_step",
    "translate",
    "union_set",
    "universe",
    "universe_step",
    "zero_column",
]

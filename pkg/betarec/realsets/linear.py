# betarec/realsets/linear.py
"""
Carry automata for linear constraints sum(c_i x_i) + offset {=,<,<=,>,>=} 0,
and the relations built from them: order, addition, equality, constants.

Before the star the state is r = sum(c_i * integer part read so far); at the
star it becomes S = r + offset and every further column moves it to
beta*S + sum(c_i d_i). S is beta^k times the value of the constraint on the
digits read so far, and the unread tail adds something in a fixed interval,
so S leaving the interval decides the sign for good. For a Pisot base the
reachable S form a finite set.
"""

import logging
from collections.abc import Sequence
from enum import Enum
from itertools import product

from ..algebraic.base import BaseProfile
from ..algebraic.field import FieldElement
from ..automata.buchi import STAR, BuchiAutomaton, explore, is_star, star
from ..automata.ops import intersect, minimize, pullback
from ..errors import AlphabetError
from ..limits import get_limits
from ..transducers.frougny import normalizer_relation
from .model import RealSetAutomaton, digit_columns, set_alphabet
from .padding import settle
from .universe import universe

logger = logging.getLogger(__name__)

POS, NEG = "pos", "neg"
INT, FRAC = "int", "frac"


class Relation(str, Enum):
    EQ = "="
    LT = "<"
    LEQ = "<="
    GT = ">"
    GEQ = ">="

    def accepts_sink(self, sink: str) -> bool:
        if sink == POS:
            return self in (Relation.GT, Relation.GEQ)
        return self in (Relation.LT, Relation.LEQ)

    @property
    def accepts_zero(self) -> bool:
        return self in (Relation.EQ, Relation.LEQ, Relation.GEQ)


def _tail_bounds(base: BaseProfile, coeffs, digits) -> tuple[FieldElement, FieldElement]:
    """Range of sum(c_i * val(0*tail_i)) over the unread fractional tails."""
    fld = base.field
    lo = hi = fld.zero
    for c, ds in zip(coeffs, digits, strict=True):
        if ds is None:
            # admissible-closure track: 0*tail lies in [-1, 1]
            t_lo, t_hi = fld.scalar(-1), fld.one
        else:
            t_lo = fld.scalar(min(min(ds), 0)) / (base.value - 1)
            t_hi = fld.scalar(max(max(ds), 0)) / (base.value - 1)
        a, b = t_lo * c, t_hi * c
        lo, hi = lo + min(a, b), hi + max(a, b)
    return lo, hi


def carry_automaton(
    base: BaseProfile,
    coeffs: Sequence[int],
    offset: FieldElement | None = None,
    rel: Relation = Relation.EQ,
    digits: Sequence[Sequence[int] | None] | None = None,
    cap: int | None = None,
) -> BuchiAutomaton:
    """
    Raw carry automaton, without the universe filter.

    Args:
        base: Numeration base
        coeffs: Integer coefficient per track
        offset: Constant term, defaults to 0
        rel: Comparison with 0
        digits: Per-track digit range; None (or a None entry) means signed
            canonical digits read as admissible-closure words
        cap: State cap, defaults to Limits.converter_cap

    Raises:
        CapExceededError: more than `cap` carries (base not Pisot)
    """
    coeffs = tuple(int(c) for c in coeffs)
    n = len(coeffs)
    if n == 0:
        raise AlphabetError("need at least one track")
    digits = list(digits) if digits is not None else [None] * n
    if len(digits) != n:
        raise AlphabetError(f"{len(digits)} digit ranges for {n} tracks")
    cap = cap or get_limits().converter_cap
    fld = base.field
    beta = base.value
    offset = offset if offset is not None else fld.zero
    ranges = [tuple(ds) if ds is not None else base.signed_alphabet for ds in digits]

    t_lo, t_hi = _tail_bounds(base, coeffs, digits)
    d_min = sum(min(c * d for d in ds) for c, ds in zip(coeffs, ranges, strict=True))
    d_max = sum(max(c * d for d in ds) for c, ds in zip(coeffs, ranges, strict=True))
    live_lo = min(-offset - t_hi, fld.scalar(-d_max) / (beta - 1))
    live_hi = max(-offset - t_lo, fld.scalar(-d_min) / (beta - 1))

    columns = list(product(*ranges))
    by_sum: dict[int, list[tuple]] = {}
    for column in columns:
        by_sum.setdefault(sum(c * d for c, d in zip(coeffs, column, strict=True)), []).append(column)
    alphabet = columns + [star(n)]

    def classify_int(r: FieldElement):
        if r > live_hi:
            return POS
        if r < live_lo:
            return NEG
        return INT, r

    def classify_frac(s: FieldElement):
        if s + t_lo > 0:
            return POS
        if s + t_hi < 0:
            return NEG
        return FRAC, s

    def succ(label):
        if label in (POS, NEG):
            for sym in alphabet:
                yield sym, label
            return
        phase, v = label
        classify = classify_int if phase == INT else classify_frac
        for total, group in by_sum.items():
            target = classify(beta * v + total)
            for column in group:
                yield column, target
        if phase == INT:
            yield star(n), classify_frac(v + offset)

    def accepting(label):
        if label in (POS, NEG):
            return rel.accepts_sink(label)
        return label[0] == FRAC and rel.accepts_zero

    machine, _ = explore([(INT, fld.zero)], succ, accepting, alphabet, cap, "carry automaton")
    logger.debug(f"Carry automaton {coeffs} {rel.value} {offset!r}: {machine.n_states} states")
    return machine


def linear_relation(
    base: BaseProfile,
    coeffs: Sequence[int],
    offset: FieldElement | None = None,
    rel: Relation = Relation.EQ,
    cap: int | None = None,
) -> RealSetAutomaton:
    """The set {x in R^n : sum(c_i x_i) + offset rel 0}, deterministic and weak."""
    n = len(coeffs)
    raw = carry_automaton(base, coeffs, offset, rel, None, cap)
    machine = minimize(intersect(raw, universe(base, n).machine, cap))
    logger.info(f"Linear relation {tuple(coeffs)} {rel.value} over {base}: {machine.n_states} states")
    return RealSetAutomaton(base, n, machine)


def order_relation(base: BaseProfile, cap: int | None = None) -> RealSetAutomaton:
    """{(x, y) : x < y}, compared by value (closure representations included)."""
    return linear_relation(base, (1, -1), None, Relation.LT, cap)


def equality_relation(base: BaseProfile, cap: int | None = None) -> RealSetAutomaton:
    """{(x, y) : x = y}; relates the greedy and quasi-greedy representations of a point."""
    return linear_relation(base, (1, -1), None, Relation.EQ, cap)


def add_relation(base: BaseProfile, method: str = "carry", cap: int | None = None) -> RealSetAutomaton:
    """
    {(x, y, z) : x + y = z}.

    Args:
        method: "carry" builds the carry automaton of x + y - z directly;
            "normalizer" sums the digits of x and y column by column and runs
            the result through the normalizer relation against z

    Raises:
        NotPisotError: base is not Pisot
    """
    base.require_pisot()
    if method == "carry":
        return linear_relation(base, (1, 1, -1), None, Relation.EQ, cap)
    if method != "normalizer":
        raise ValueError(f"unknown addition method {method!r}")
    m = base.canonical_max
    relation = normalizer_relation(base, range(-2 * m, 2 * m + 1), closure=True, cap=cap)

    def digit_sum(sym):
        if is_star(sym):
            return STAR, STAR
        return sym[0] + sym[1], sym[2]

    lifted = pullback(relation, set_alphabet(base, 3), digit_sum)
    result = settle(base, 3, lifted, cap)
    logger.info(f"Addition over {base} via normalizer: {result.n_states} states")
    return result


def lexicographic_order(base: BaseProfile) -> RealSetAutomaton:
    """
    First-difference order on synchronized words: equal columns (star
    included) until a column (a, b) with a < b, anything afterwards.
    Agrees with value order on greedy expansions.
    """
    pairs = digit_columns(base, 2)
    edges = [("same", (a, a), "same") for a in base.signed_alphabet]
    edges.append(("same", star(2), "same"))
    edges += [("same", (a, b), "less") for a, b in pairs if a < b]
    edges += [("less", sym, "less") for sym in pairs + [star(2)]]
    figure = BuchiAutomaton.from_edges(set_alphabet(base, 2), edges, ["same"], ["less"])
    machine = minimize(intersect(figure, universe(base, 2).machine))
    return RealSetAutomaton(base, 2, machine)

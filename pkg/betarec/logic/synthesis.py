# betarec/logic/synthesis.py
"""
From an automaton back to a formula.

The automaton is unrolled into k+1 cyclic copies, k being the admissibility
gap of the base, so that any run visits a given state at most once every
k+1 digit columns. The run is then stored in one real z_q per state q: the digit of
z_q at the power c is 1 exactly when the run is in q before reading the
column of x at c. With 1s at least k zeros apart these digit words are
greedy expansions, so X_beta reads the run back off the z_q.

Positions are anchored at b0, the top power of x (1 when every |x_i| < 1).
The star sits between the columns at 1 and 1/beta, so at c = 1 a transition
reads the digit column and then the star.
"""

import logging
from dataclasses import dataclass

from ..algebraic.base import BaseProfile
from ..algebraic.field import FieldElement
from ..automata.buchi import BuchiAutomaton, UltimatelyPeriodicWord, is_star, trim
from ..automata.ops import minimize
from ..numeration.expansion import admissibility_gap_constant, value_of
from ..numeration.words import EventuallyPeriodicWord, PointedWord
from ..realsets.algebra import saturated
from ..realsets.linear import Relation
from ..realsets.model import RealSetAutomaton
from .ast import (
    And,
    DigitAt,
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
    conjunction,
    disjunction,
    exists_all,
    formula_size,
)
from .helpers import next_power, power_of_base

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StateCoding:
    """
    Run coding of an unrolled automaton.

    Attributes:
        machine: The unrolled automaton, one initial state
        gap: Minimum number of zeros between two 1s of a run track
        tracks: Variable holding the run track of each state
        anchor: Variable holding the top power b0
    """
    machine: BuchiAutomaton
    gap: int
    tracks: tuple[str, ...]
    anchor: str = "b0"

    @property
    def size(self) -> int:
        return len(self.tracks)

    def vector(self, q: int) -> tuple[int, ...]:
        """Unit column coding state q."""
        return tuple(int(j == q) for j in range(self.size))


def _single_initial(a: BuchiAutomaton) -> BuchiAutomaton:
    if len(a.initial) == 1:
        return a
    fresh = a.n_states
    edges = list(a.edges) + [(fresh, x, t) for q in a.initial for x, t in a.out_edges(q)]
    return BuchiAutomaton.build(a.n_states + 1, a.alphabet, edges, {fresh}, a.accepting)


def _unroll_columns(a: BuchiAutomaton, m: int) -> BuchiAutomaton:
    """cyclic_unroll where star edges stay in their copy, so copies count digit columns."""
    n = a.n_states
    edges = [
        (i * n + s, x, (i if is_star(x) else (i + 1) % m) * n + t) for i in range(m) for s, x, t in a.edges
    ]
    accepting = {i * n + q for i in range(m) for q in a.accepting}
    return BuchiAutomaton.build(n * m, a.alphabet, edges, a.initial, accepting)


def state_coding(x: RealSetAutomaton, prefix: str = "z") -> StateCoding:
    """
    Unroll the zero-padded machine of x into gap+1 copies.

    Raises:
        NotParryError: base is not Parry
    """
    k = admissibility_gap_constant(x.base)
    machine = _single_initial(minimize(saturated(x).machine))
    unrolled = trim(_unroll_columns(machine, k + 1))
    tracks = tuple(f"{prefix}{j + 1}" for j in range(unrolled.n_states))
    return StateCoding(unrolled, k, tracks)


# ── Run encoding ───────────────────────────────────────────


def run_tracks(run: UltimatelyPeriodicWord, n_states: int) -> list[EventuallyPeriodicWord]:
    """Indicator word of each state along the run."""
    return [
        EventuallyPeriodicWord.of([int(q == j) for q in run.prefix], [int(q == j) for q in run.loop])
        for j in range(n_states)
    ]


def encode_run(run: UltimatelyPeriodicWord, n_states: int, base: BaseProfile) -> tuple[FieldElement, ...]:
    """The reals val(0*w_j) of the run tracks, one per state."""
    return tuple(value_of(PointedWord.of((0,), w), base) for w in run_tracks(run, n_states))


def min_gap(word: EventuallyPeriodicWord) -> int | None:
    """Fewest zeros between two consecutive 1s; None with fewer than two 1s."""
    span = len(word.preperiod) + 2 * len(word.period)
    ones = [i for i in range(span) if word[i] != 0]
    if len(ones) < 2:
        return None
    return min(b - a - 1 for a, b in zip(ones, ones[1:]))


# ── Formula ────────────────────────────────────────────────


def _column(xs: tuple[str, ...], column, c: str) -> Formula:
    return conjunction([DigitAt(a, v, c) for v, a in zip(xs, column, strict=True)])


def _transitions(coding: StateCoding, xs: tuple[str, ...], c: str, d: str, composite: bool) -> list[Formula]:
    a = coding.machine
    z = coding.tracks
    steps: list[tuple[int, tuple, int]] = []
    for p, sym, m in a.edges:
        if is_star(sym):
            continue
        if not composite:
            steps.append((p, sym, m))
            continue
        steps.extend((p, sym, q) for s2, q in a.out_edges(m) if is_star(s2))
    return [
        conjunction([DigitAt(1, z[p], c), _column(xs, sym, c), DigitAt(1, z[q], d)])
        for p, sym, q in sorted(set(steps), key=lambda e: (e[0], e[2], e[1]))
    ]


def _one_hot(coding: StateCoding, c: str) -> Formula:
    z = coding.tracks
    return disjunction([
        conjunction([DigitAt(int(i == j), z[i], c) for i in range(coding.size)]) for j in range(coding.size)
    ])


def _false(xs: tuple[str, ...]) -> Formula:
    return And(DigitAt(0, xs[0], xs[0]), Not(DigitAt(0, xs[0], xs[0])))


def synthesize_formula(x: RealSetAutomaton, variables: tuple[str, ...] | None = None) -> Formula:
    """
    A formula defining the set recognized by x.

    Args:
        variables: Names of the free variables, default x or x1..xn

    Raises:
        NotParryError: base is not Parry
    """
    n = x.arity
    xs = variables or (("x",) if n == 1 else tuple(f"x{i + 1}" for i in range(n)))
    if len(xs) != n:
        raise ValueError(f"{len(xs)} variable names for arity {n}")
    coding = state_coding(x)
    a = coding.machine
    if a.n_states == 0 or not a.initial:
        return _false(xs)
    b0, c, d = coding.anchor, "c", "d"
    z = coding.tracks
    (init,) = a.initial

    below = And(power_of_base(c), Leq(c, b0))
    anchor = conjunction([
        power_of_base(b0),
        Linear.of(((b0, -1),), 1, Relation.LEQ),
        Forall(c, Implies(And(power_of_base(c), Less(b0, c)),
                          _column(xs, (0,) * n, c))),
        Or(IsOne(b0), Not(_column(xs, (0,) * n, b0))),
    ])
    start = conjunction([DigitAt(int(j == init), z[j], b0) for j in range(coding.size)])
    simple = _transitions(coding, xs, c, d, composite=False)
    through_star = _transitions(coding, xs, c, d, composite=True)
    branches = []
    if through_star:
        branches.append(And(IsOne(c), disjunction(through_star)))
    if simple:
        branches.append(And(Not(IsOne(c)), disjunction(simple)))
    if not branches:
        return _false(xs)
    step = Exists(d, And(next_power(d, c), disjunction(branches)))
    follow = Forall(c, Implies(below, And(_one_hot(coding, c), step)))
    if a.accepting:
        seen = disjunction([DigitAt(1, z[q], d) for q in sorted(a.accepting)])
        later = Exists(d, conjunction([power_of_base(d), Less(d, c), seen]))
        recurrent = Forall(c, Implies(power_of_base(c), later))
    else:
        return _false(xs)
    phi = exists_all((b0,) + z, conjunction([anchor, start, follow, recurrent]))
    logger.info(f"Synthesized formula from {a.n_states} unrolled states (gap {coding.gap}): {formula_size(phi)} atoms")
    return phi

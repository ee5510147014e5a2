# betarec/realsets/padding.py
"""
Leading-zero closure and the clean-up shared by every construction that
leaves the deterministic weak subclass (projection, shifting, morphisms).
"""

import logging

from ..algebraic.base import BaseProfile
from ..automata.buchi import BuchiAutomaton
from ..automata.complement import determinize_weak
from ..automata.ops import intersect, minimize
from .model import PaddingMode, RealSetAutomaton, zero_column
from .universe import universe

logger = logging.getLogger(__name__)


def pad_closure(machine: BuchiAutomaton, n: int) -> BuchiAutomaton:
    """
    Accept 0^j w whenever some 0^i w is accepted: a fresh initial state loops
    on the zero column and copies the out-edges of every state reachable from
    the initial states on zero columns.
    """
    zero = zero_column(n)
    seen = set(machine.initial)
    stack = list(seen)
    while stack:
        q = stack.pop()
        for t in machine.successors(q, zero):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    fresh = machine.n_states
    edges = list(machine.edges) + [(fresh, zero, fresh)]
    edges += [(fresh, x, t) for q in sorted(seen) for x, t in machine.out_edges(q)]
    return BuchiAutomaton.build(
        fresh + 1, set(machine.alphabet) | {zero}, edges, {fresh}, machine.accepting
    )


def settle(base: BaseProfile, n: int, machine: BuchiAutomaton, cap: int | None = None) -> RealSetAutomaton:
    """
    Zero-padded set automaton from an arbitrary machine over set columns:
    leading-zero closure, intersection with the universe, then back to a
    deterministic weak automaton when possible.
    """
    padded = intersect(pad_closure(machine, n), universe(base, n).machine, cap)
    result = minimize(determinize_weak(padded, cap))
    if not result.is_deterministic:
        logger.debug(f"Settled set automaton stays nondeterministic ({result.n_states} states)")
    return RealSetAutomaton(base, n, result, PaddingMode.ZERO_PADDED)

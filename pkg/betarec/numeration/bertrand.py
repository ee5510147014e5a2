# betarec/numeration/bertrand.py
"""
Bertrand automaton of a Parry base: reads canonical digits and checks that
every suffix stays lexicographically below or equal to d*_beta(1).

State i means the digits since the last drop spell the first i symbols of
d*_beta(1) (with the period wrapped). A drop is a digit strictly below the
expected one and resets the state to 0.
"""

from ..algebraic.base import BaseProfile
from ..automata.buchi import BuchiAutomaton
from .expansion import renyi_star
from .words import EventuallyPeriodicWord


def bertrand_size(dstar: EventuallyPeriodicWord) -> int:
    return len(dstar.preperiod) + len(dstar.period)


def bertrand_step(dstar: EventuallyPeriodicWord, state: int, digit: int) -> tuple[int, bool] | None:
    """(next state, dropped), or None when the digit exceeds d*_beta(1) at this state."""
    expected = dstar[state]
    if digit > expected:
        return None
    if digit < expected:
        return 0, True
    nxt = state + 1
    if nxt == bertrand_size(dstar):
        nxt = len(dstar.preperiod)
    return nxt, False


def bertrand_automaton(base: BaseProfile, strict: bool = False) -> BuchiAutomaton:
    """
    One-track automaton over A_beta.

    Args:
        strict: Accept only words with infinitely many drops, i.e. words whose
            shifts are all strictly below d*_beta(1). The extra state |d*| is
            "just dropped" and is the only accepting one. Otherwise every state
            is accepting and the automaton is closed.
    """
    dstar = renyi_star(base)
    size = bertrand_size(dstar)
    edges = []
    sources = list(range(size)) + ([size] if strict else [])
    for q in sources:
        state = 0 if q == size else q
        for d in base.canonical_alphabet:
            step = bertrand_step(dstar, state, d)
            if step is None:
                continue
            target, dropped = step
            if strict and dropped:
                target = size
            edges.append((q, (d,), target))
    accepting = {size} if strict else set(range(size))
    return BuchiAutomaton.build(
        len(sources), [(d,) for d in base.canonical_alphabet], edges, {0}, accepting
    )

# betarec/realsets/digits.py
"""
The digit predicate X_{beta,a}(x, y): y is a power of beta and the digit of
d_beta(x) at the position of y is a.

Both tracks may carry admissible-closure representations. A power beta^i is
written either 0..010..0 (a single 1 at i) or, when it has a second
representation, as zeros followed by d*_beta(1) starting at i - 1. The x
track may end in d*_beta(1) after its last drop p, in which case the greedy
digit at p is one more than the digit read and every greedy digit below p
is 0. The automaton follows both forms of y at once and remembers, for the
column of y, the digit read on x, whether x dropped there, and whether x
dropped again afterwards.
"""

import logging

from ..algebraic.base import BaseProfile
from ..automata.buchi import explore, is_star
from ..automata.ops import intersect, minimize
from ..errors import AlphabetError
from ..numeration.bertrand import bertrand_step
from ..numeration.expansion import renyi_star
from .model import RealSetAutomaton, set_alphabet
from .universe import track_step, universe

logger = logging.getLogger(__name__)

WAIT = "wait"

# a leading zero above the word always counts as a drop
_VIRTUAL = (0, True)


def greedy_digit(m: int, dropped_here: bool, dropped_after: bool) -> int:
    """Greedy digit (absolute value) at a column of a closure representation."""
    if dropped_after:
        return m
    return m + 1 if dropped_here else 0


def digit_predicate(base: BaseProfile, a: int) -> RealSetAutomaton:
    """
    X_{beta,a} as a two-track set automaton.

    Raises:
        AlphabetError: a is not a signed canonical digit
        NotParryError: base is not Parry
    """
    if a not in base.signed_alphabet:
        raise AlphabetError(f"digit {a} outside {base.signed_alphabet}")
    dstar = renyi_star(base)
    lead = dstar[0]

    def advance_power(power, dy, m, dropped):
        if power == WAIT:
            if dy == 0:
                return WAIT
            return ("set", m, dropped, False) if dy == 1 else None
        if power is None or dy != 0:
            return None
        _, m0, d0, after = power
        return "set", m0, d0, after or dropped

    def advance_alt(alt, dy, prev, dropped):
        if alt == WAIT:
            if dy == 0:
                return WAIT
            if dy != lead:
                return None
            j, _ = bertrand_step(dstar, 0, dy)
            return "run", j, prev[0], prev[1], dropped
        if alt is None or dy != dstar[alt[1]]:
            return None
        _, j, m0, d0, after = alt
        j2, _ = bertrand_step(dstar, j, dy)
        return "run", j2, m0, d0, after or dropped

    def succ(label):
        xtrack, prev, power, alt = label
        for sym in set_alphabet(base, 2):
            if is_star(sym):
                yield sym, label
                continue
            dx, dy = sym
            if dy < 0:
                continue
            step = track_step(dstar, xtrack, dx)
            if step is None:
                continue
            xtrack2, dropped = step
            power2 = advance_power(power, dy, abs(dx), dropped)
            alt2 = advance_alt(alt, dy, prev, dropped)
            if power2 is None and alt2 is None:
                continue
            yield sym, (xtrack2, (abs(dx), dropped), power2, alt2)

    def holds(sign: int, branch) -> bool:
        if branch is None or branch == WAIT:
            return False
        m, dropped_here, dropped_after = branch[-3:]
        g = greedy_digit(m, dropped_here, dropped_after)
        return a == 0 if g == 0 else sign * g == a

    def accepting(label):
        (sign, _), _, power, alt = label
        return holds(sign, power) or holds(sign, alt)

    root = ((0, 0), _VIRTUAL, WAIT, WAIT)
    raw, _ = explore([root], succ, accepting, set_alphabet(base, 2), None, f"digit predicate X_{a}")
    machine = minimize(intersect(raw, universe(base, 2).machine))
    logger.info(f"Digit predicate X_{a} over {base}: {machine.n_states} states")
    return RealSetAutomaton(base, 2, machine)

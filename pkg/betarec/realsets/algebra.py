# betarec/realsets/algebra.py
"""
Boolean algebra on set automata: intersection, union, complement inside the
universe, cylindrification and projection.
"""

import logging
from collections.abc import Sequence

from ..automata.buchi import is_empty, is_star, star
from ..automata.complement import Method, complement, equivalent, included
from ..automata.ops import complete, intersect, minimize, project, pullback, union_product
from ..errors import AlphabetError
from .model import PaddingMode, RealSetAutomaton, set_alphabet
from .padding import settle
from .universe import universe

logger = logging.getLogger(__name__)


def _check_compatible(x: RealSetAutomaton, y: RealSetAutomaton) -> None:
    if x.base != y.base:
        raise AlphabetError(f"sets over different bases: {x.base} and {y.base}")
    if x.arity != y.arity:
        raise AlphabetError(f"arity mismatch: {x.arity} vs {y.arity}")


def saturated(x: RealSetAutomaton) -> RealSetAutomaton:
    """x itself when zero-padded; otherwise its zero-padded form."""
    if x.padding_mode == PaddingMode.ZERO_PADDED:
        return x
    from .constructions import canonical_pad

    return canonical_pad(x, PaddingMode.ZERO_PADDED)


def intersection(x: RealSetAutomaton, y: RealSetAutomaton, cap: int | None = None) -> RealSetAutomaton:
    _check_compatible(x, y)
    mode = PaddingMode.ZERO_PADDED
    if PaddingMode.EXACT in (x.padding_mode, y.padding_mode):
        mode = PaddingMode.EXACT
    return RealSetAutomaton(x.base, x.arity, minimize(intersect(x.machine, y.machine, cap)), mode)


def union_set(x: RealSetAutomaton, y: RealSetAutomaton, cap: int | None = None) -> RealSetAutomaton:
    _check_compatible(x, y)
    x, y = saturated(x), saturated(y)
    return x.with_machine(minimize(union_product(x.machine, y.machine, cap)))


def complement_set(x: RealSetAutomaton, cap: int | None = None, method: Method = "auto") -> RealSetAutomaton:
    """R^n minus X: complement of the machine, intersected with the universe."""
    x = saturated(x)
    full = complete(x.machine, set_alphabet(x.base, x.arity))
    outside = complement(full, cap, method)
    machine = minimize(intersect(outside, universe(x.base, x.arity).machine, cap))
    logger.debug(f"Complement in R^{x.arity}: {x.n_states} -> {machine.n_states} states")
    return x.with_machine(machine)


def difference(x: RealSetAutomaton, y: RealSetAutomaton, cap: int | None = None) -> RealSetAutomaton:
    return intersection(x, complement_set(y, cap), cap)


def cylindrify(x: RealSetAutomaton, positions: Sequence[int], n: int) -> RealSetAutomaton:
    """
    The subset of R^n whose coordinates at `positions` (0-based, one per
    track of x, in order) form a point of x.

    Raises:
        AlphabetError: wrong number of positions or out of range
    """
    positions = tuple(positions)
    if len(positions) != x.arity or any(not 0 <= p < n for p in positions):
        raise AlphabetError(f"positions {positions} do not place {x.arity} tracks into {n}")
    x = saturated(x)
    if positions == tuple(range(n)):
        return x
    inner = star(x.arity)
    lifted = pullback(
        x.machine,
        set_alphabet(x.base, n),
        lambda s: inner if is_star(s) else tuple(s[p] for p in positions),
    )
    machine = minimize(intersect(lifted, universe(x.base, n).machine))
    return RealSetAutomaton(x.base, n, machine, PaddingMode.ZERO_PADDED)


def project_set(x: RealSetAutomaton, keep: Sequence[int], cap: int | None = None) -> RealSetAutomaton:
    """Existential projection onto the tracks `keep` (0-based)."""
    x = saturated(x)
    return settle(x.base, len(tuple(keep)), project(x.machine, keep), cap)


def is_empty_set(x: RealSetAutomaton) -> bool:
    return is_empty(x.machine)


def included_set(x: RealSetAutomaton, y: RealSetAutomaton, cap: int | None = None) -> bool:
    _check_compatible(x, y)
    return included(saturated(x).machine, saturated(y).machine, cap)


def equivalent_sets(x: RealSetAutomaton, y: RealSetAutomaton, cap: int | None = None) -> bool:
    _check_compatible(x, y)
    return equivalent(saturated(x).machine, saturated(y).machine, cap)

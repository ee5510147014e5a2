# betarec/realsets/universe.py
"""
Universe automata: all synchronized admissible-closure representations of
points of R^n, the beta-integers, greedy-only and minimal-padding filters.

A track state is (sign, bertrand state). The sign is fixed by the first
nonzero digit of the track; the Bertrand automaton runs on absolute values.
"""

import logging
from functools import lru_cache
from itertools import product

from ..algebraic.base import BaseProfile
from ..automata.buchi import BuchiAutomaton, Symbol, explore, is_star, star
from ..automata.ops import intersect, minimize
from ..numeration.bertrand import bertrand_automaton, bertrand_step
from ..numeration.expansion import renyi_star
from ..numeration.words import EventuallyPeriodicWord
from .model import PaddingMode, RealSetAutomaton, digit_columns, set_alphabet, zero_column

logger = logging.getLogger(__name__)

START, INT, FRAC = "start", "int", "frac"

Track = tuple[int, int]


def _sign(d: int) -> int:
    return (d > 0) - (d < 0)


def track_step(dstar: EventuallyPeriodicWord, track: Track, d: int) -> tuple[Track, bool] | None:
    """Advance one track on digit d: (new track, dropped), or None if d breaks sign coherence or admissibility."""
    sign, q = track
    s = _sign(d)
    if s and sign and s != sign:
        return None
    step = bertrand_step(dstar, q, abs(d))
    if step is None:
        return None
    q2, dropped = step
    return (sign or s, q2), dropped


def universe_step(
    dstar: EventuallyPeriodicWord, tracks: tuple[Track, ...], column: Symbol
) -> tuple[tuple[Track, ...], tuple[bool, ...]] | None:
    """Advance every track on one digit column; also returns the per-track drop flags."""
    new_tracks, drops = [], []
    for track, d in zip(tracks, column, strict=True):
        step = track_step(dstar, track, d)
        if step is None:
            return None
        new_tracks.append(step[0])
        drops.append(step[1])
    return tuple(new_tracks), tuple(drops)


def _phase_successors(dstar, columns, n):
    """Successor function over (phase, tracks) labels shared by the universe builders."""

    def succ(label):
        phase, tracks = label
        for column in columns:
            step = universe_step(dstar, tracks, column)
            if step is not None:
                yield column, (FRAC if phase == FRAC else INT, step[0])
        if phase == INT:
            yield star(n), (FRAC, tracks)

    return succ


@lru_cache(maxsize=32)
def universe(base: BaseProfile, n: int) -> RealSetAutomaton:
    """
    Deterministic weak automaton for 0* d_beta(R^n), closed under the
    admissible-closure representations.

    Raises:
        NotParryError: base is not Parry
    """
    dstar = renyi_star(base)
    columns = digit_columns(base, n)
    root = (START, ((0, 0),) * n)
    machine, _ = explore(
        [root],
        _phase_successors(dstar, columns, n),
        lambda label: label[0] == FRAC,
        set_alphabet(base, n),
        None,
        "universe",
    )
    machine = minimize(machine)
    logger.info(f"Universe of R^{n} in base {base}: {machine.n_states} states")
    return RealSetAutomaton(base, n, machine, PaddingMode.ZERO_PADDED)


def figure_universe(base: BaseProfile, signs: tuple[int, ...]) -> RealSetAutomaton:
    """
    The sign-vector automaton A_{beta,z}: a fresh initial state with a zero
    loop, an integer-part copy and a fractional-part copy of the product of
    Bertrand automata, joined by star edges. Components with a negative
    sign read negated digits.

    Args:
        signs: One of +1 / -1 per component
    """
    if not signs or any(s not in (1, -1) for s in signs):
        raise ValueError(f"signs must be a nonempty vector of +1/-1, got {signs}")
    n = len(signs)
    one = bertrand_automaton(base)

    def oriented(column):
        return tuple(s * d for s, d in zip(signs, column, strict=True))

    def core_edges(state):
        per_track = [[(x[0], t) for x, t in one.out_edges(q)] for q in state]
        for combo in product(*per_track):
            yield oriented(tuple(d for d, _ in combo)), tuple(t for _, t in combo)

    init = tuple(sorted(one.initial))[0]
    root = (init,) * n

    def succ(label):
        if label == START:
            yield zero_column(n), START
            for column, target in core_edges(root):
                yield column, (INT, target)
            return
        phase, state = label
        for column, target in core_edges(state):
            yield column, (phase, target)
        if phase == INT:
            yield star(n), (FRAC, state)

    alphabet = {oriented(c) for c in product(base.canonical_alphabet, repeat=n)} | {star(n)}
    machine, _ = explore([START], succ, lambda label: label != START and label[0] == FRAC, alphabet, None, "A_z")
    return RealSetAutomaton(base, n, machine, PaddingMode.ZERO_PADDED)


@lru_cache(maxsize=32)
def beta_integers(base: BaseProfile, n: int) -> RealSetAutomaton:
    """
    Z_beta^n. A track stays alive in the fractional part while it is all zeros
    or has not dropped below d*_beta(1) since the star; the second case covers
    representations like 0*(10)^omega of 1 in base phi.
    """
    dstar = renyi_star(base)
    columns = digit_columns(base, n)
    fresh = ((True, True),) * n

    def succ(label):
        phase, tracks, flags = label
        for column in columns:
            step = universe_step(dstar, tracks, column)
            if step is None:
                continue
            new_tracks, drops = step
            if phase != FRAC:
                yield column, (INT, new_tracks, flags)
                continue
            new_flags = tuple(
                (zero and d == 0, nodrop and not dropped)
                for (zero, nodrop), d, dropped in zip(flags, column, drops, strict=True)
            )
            if all(zero or nodrop for zero, nodrop in new_flags):
                yield column, (FRAC, new_tracks, new_flags)
        if phase == INT:
            yield star(n), (FRAC, tracks, fresh)

    machine, _ = explore(
        [(START, ((0, 0),) * n, fresh)],
        succ,
        lambda label: label[0] == FRAC,
        set_alphabet(base, n),
        None,
        "beta-integers",
    )
    return RealSetAutomaton(base, n, minimize(machine), PaddingMode.ZERO_PADDED)


@lru_cache(maxsize=32)
def strict_universe(base: BaseProfile, n: int) -> BuchiAutomaton:
    """
    Greedy expansions only: every track drops below d*_beta(1) infinitely
    often. The counter j waits for a drop on track j; `hit` marks a full round.
    """
    dstar = renyi_star(base)
    columns = digit_columns(base, n)

    def succ(label):
        phase, tracks, j, _ = label
        for column in columns:
            step = universe_step(dstar, tracks, column)
            if step is None:
                continue
            new_tracks, drops = step
            if phase != FRAC:
                yield column, (INT, new_tracks, 0, False)
                continue
            k, hit = j, False
            while drops[k]:
                k += 1
                if k == n:
                    k, hit = 0, True
                    break
            yield column, (FRAC, new_tracks, k, hit)
        if phase == INT:
            yield star(n), (FRAC, tracks, 0, False)

    machine, _ = explore(
        [(START, ((0, 0),) * n, 0, False)],
        succ,
        lambda label: label[0] == FRAC and label[3],
        set_alphabet(base, n),
        None,
        "strict universe",
    )
    return machine


def greedy_only(x: RealSetAutomaton) -> RealSetAutomaton:
    """Keep only the synchronized beta-expansions d_beta(p), still zero-padded."""
    return x.with_machine(intersect(x.machine, strict_universe(x.base, x.arity)))


@lru_cache(maxsize=32)
def minimal_padding(base: BaseProfile, n: int) -> BuchiAutomaton:
    """Words whose first column is nonzero, or is a zero column directly followed by the star."""
    zero = zero_column(n)

    def succ(label):
        for sym in set_alphabet(base, n):
            if label == START and not is_star(sym):
                yield sym, ("zero" if sym == zero else "free")
            elif label == "zero" and is_star(sym):
                yield sym, "free"
            elif label == "free":
                yield sym, "free"

    machine, _ = explore([START], succ, lambda label: label == "free", set_alphabet(base, n), None, "minimal padding")
    return machine

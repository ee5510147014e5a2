# betarec/automata/complement.py
"""
Complementation ladder and language comparisons.

1. deterministic weak: complete, then swap accepting states;
2. deterministic Büchi: a two-copy automaton guessing the last visit to F;
3. weak (nondeterministic): breakpoint construction, giving a deterministic
   automaton for the complement, made weak when its components allow it;
4. anything else: rank-based complement over tight rankings, odd ranks up to
   2(|Q| - |F|) - 1.
"""

import logging
from typing import Literal

import networkx as nx

from ..errors import CapExceededError
from ..limits import get_limits
from .buchi import BuchiAutomaton, explore, is_empty, trim
from .ops import complete, intersect, minimize

logger = logging.getLogger(__name__)

Method = Literal["auto", "rank"]


def weak_marking(a: BuchiAutomaton) -> BuchiAutomaton | None:
    """
    Same automaton with a weak acceptance marking, or None if some component
    mixes accepting and rejecting cycles.

    A cyclic component becomes accepting when every cycle in it meets F, and
    rejecting when it holds no accepting state. Transient states are rejecting.
    """
    accepting: set[int] = set()
    for comp in a.components:
        if len(comp) == 1:
            (q,) = comp
            if not a._graph.has_edge(q, q):
                continue
        inside = comp & a.accepting
        if not inside:
            continue
        rest = a._graph.subgraph(comp - a.accepting)
        if not nx.is_directed_acyclic_graph(rest):
            return None
        accepting |= comp
    if accepting == set(a.accepting):
        return a
    return BuchiAutomaton.build(a.n_states, a.alphabet, a.edges, a.initial, accepting)


def _swap(a: BuchiAutomaton) -> BuchiAutomaton:
    return BuchiAutomaton.build(
        a.n_states, a.alphabet, a.edges, a.initial, set(a.states) - set(a.accepting)
    )


def _complement_deterministic(a: BuchiAutomaton, cap: int) -> BuchiAutomaton:
    """a complete deterministic; copy 1 waits, copy 2 stays outside F forever."""

    def succ(node):
        q, phase = node
        for sym, t in a.out_edges(q):
            if phase == 0:
                yield sym, (t, 0)
            if t not in a.accepting:
                yield sym, (t, 1)

    result, _ = explore(
        [(q, 0) for q in sorted(a.initial)], succ, lambda node: node[1] == 1, a.alphabet, cap, "complement"
    )
    return result


def _breakpoint(a: BuchiAutomaton, cap: int) -> BuchiAutomaton:
    """
    Deterministic automaton for the complement of a weak automaton: states
    (S, O) with O the runs that stayed in F since the last breakpoint
    (O empty). Breakpoints are accepting.
    """
    acc = a.accepting

    def succ(node):
        s, o = node
        for sym in a.alphabet:
            s2 = a.step(s, sym)
            o2 = (s2 if not o else a.step(o, sym)) & acc
            yield sym, (s2, frozenset(o2))

    result, _ = explore(
        [(frozenset(a.initial), frozenset())], succ, lambda node: not node[1], a.alphabet, cap, "breakpoint"
    )
    return result


GUESS, RANKED = "guess", "ranked"


def _tight_rankings(targets: list[int], bound: dict[int, int], acc: frozenset[int], m: int):
    """
    Level rankings of `targets` with maximum m using every odd rank up to m.
    Accepting states take even ranks; a state never exceeds its bound.
    """
    free = [sum(1 for t in targets[i:] if t not in acc) for i in range(len(targets) + 1)]
    chosen: list[tuple[int, int]] = []

    def walk(i: int, missing: frozenset[int]):
        if len(missing) > free[i]:
            return
        if i == len(targets):
            yield tuple(chosen)
            return
        t = targets[i]
        step = 2 if t in acc else 1
        for r in range(0, min(bound.get(t, m), m) + 1, step):
            chosen.append((t, r))
            yield from walk(i + 1, missing - {r})
            chosen.pop()

    yield from walk(0, frozenset(range(1, m + 1, 2)))


def rank_complement(a: BuchiAutomaton, cap: int | None = None) -> BuchiAutomaton:
    """
    Rank-based complement over tight level rankings.

    A run first tracks the plain subset of reached states, then guesses a
    tight ranking whose odd maximum stays fixed from there on. Ranked states
    carry the obligation set of even-ranked runs; they accept when it is empty.

    Raises:
        CapExceededError: more than `cap` states constructed, or more than
            `cap` rankings enumerated for one successor
    """
    cap = cap or get_limits().complement_cap
    acc = a.accepting
    top = 2 * (a.n_states - len(acc)) - 1
    odd_maxima = [-1, *range(1, top + 1, 2)]

    def rankings(states, bound: dict[int, int], maxima: list[int]):
        targets = sorted(states)
        count = 0
        for m in maxima:
            for f in _tight_rankings(targets, bound, acc, m):
                count += 1
                if count > cap:
                    raise CapExceededError("rank-based complement", cap)
                yield f

    def succ(node):
        if node[0] == GUESS:
            s = node[1]
            for sym in a.alphabet:
                s2 = a.step(s, sym)
                yield sym, (GUESS, s2)
                for f in rankings(s2, {}, odd_maxima):
                    yield sym, (RANKED, f, frozenset())
            return
        _, f, o = node
        m = max((r for _, r in f), default=-1)
        for sym in a.alphabet:
            bound: dict[int, int] = {}
            for q, r in f:
                for t in a.successors(q, sym):
                    bound[t] = min(bound.get(t, r), r)
            moved = a.step(o, sym) if o else None
            for f2 in rankings(bound, bound, [m]):
                even = {t for t, r in f2 if r % 2 == 0}
                o2 = even if moved is None else moved & even
                yield sym, (RANKED, f2, frozenset(o2))

    start = frozenset(a.initial)
    roots = [(GUESS, start)] + [(RANKED, f, frozenset()) for f in rankings(start, {}, odd_maxima)]
    result, _ = explore(
        roots,
        succ,
        lambda node: node[0] == RANKED and not node[2],
        a.alphabet,
        cap,
        "rank-based complement",
    )
    result = trim(result)
    logger.info(f"Rank-based complement: {a.n_states} -> {result.n_states} states")
    return result


def complement(a: BuchiAutomaton, cap: int | None = None, method: Method = "auto") -> BuchiAutomaton:
    """
    Automaton for alphabet^omega minus L(a).

    Args:
        a: Input automaton
        cap: State cap, defaults to Limits.complement_cap
        method: "auto" walks the ladder; "rank" forces the rank-based construction

    Raises:
        CapExceededError: the chosen construction exceeds the cap
    """
    cap = cap or get_limits().complement_cap
    if method == "rank":
        return rank_complement(a, cap)
    marked = weak_marking(a)
    if marked is not None and marked.is_deterministic:
        return minimize(_swap(complete(marked)))
    if a.is_deterministic:
        return _complement_deterministic(complete(a), cap)
    if marked is not None:
        d = _breakpoint(marked, cap)
        weak = weak_marking(d)
        if weak is not None:
            return minimize(weak)
        return d
    logger.warning(f"Falling back to rank-based complement on {a.n_states} states")
    return rank_complement(a, cap)


def determinize_weak(a: BuchiAutomaton, cap: int | None = None) -> BuchiAutomaton:
    """
    Deterministic weak automaton for L(a) when the breakpoint construction
    yields one; the input is returned unchanged otherwise.
    """
    cap = cap or get_limits().complement_cap
    marked = weak_marking(a)
    if marked is None:
        return a
    if marked.is_deterministic:
        return minimize(marked)
    weak = weak_marking(_breakpoint(marked, cap))
    if weak is None:
        logger.debug(f"Breakpoint automaton of {a.n_states} states is not weak; kept nondeterministic")
        return a
    return minimize(_swap(complete(weak)))


def included(a: BuchiAutomaton, b: BuchiAutomaton, cap: int | None = None) -> bool:
    """L(a) ⊆ L(b)."""
    extra = set(a.alphabet) - set(b.alphabet)
    if extra:
        b = complete(b, set(a.alphabet) | set(b.alphabet))
    return is_empty(intersect(a, complement(b, cap)))


def equivalent(a: BuchiAutomaton, b: BuchiAutomaton, cap: int | None = None) -> bool:
    """Language equivalence as emptiness of both differences."""
    return included(a, b, cap) and included(b, a, cap)

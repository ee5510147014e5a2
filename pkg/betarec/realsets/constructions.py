# betarec/realsets/constructions.py
"""
Set constructions: constants and boxes, translation, multiplication and
division by beta, padding conversions, membership and sampling.
"""

import logging
from collections.abc import Sequence

from ..algebraic.base import BaseProfile
from ..algebraic.field import FieldElement
from ..automata.buchi import BuchiAutomaton, accepts, is_star, lasso_samples, star
from ..automata.ops import intersect, minimize, project, pullback
from ..errors import AlphabetError
from ..numeration.columns import decode_columns, encode_columns
from ..numeration.expansion import greedy_expand, synchronize, value_of
from .linear import Relation, carry_automaton, linear_relation
from .model import PaddingMode, RealSetAutomaton, coerce_point, set_alphabet
from .padding import pad_closure, settle
from .universe import greedy_only, minimal_padding, universe

logger = logging.getLogger(__name__)

UP, DOWN = "up", "down"


def _unit(n: int, i: int, c: int) -> tuple[int, ...]:
    return tuple(c if j == i else 0 for j in range(n))


def _meet(base: BaseProfile, n: int, parts: list[RealSetAutomaton]) -> RealSetAutomaton:
    machine = parts[0].machine if parts else universe(base, n).machine
    for part in parts[1:]:
        machine = minimize(intersect(machine, part.machine))
    return RealSetAutomaton(base, n, machine)


def singleton(base: BaseProfile, point) -> RealSetAutomaton:
    """The one-point set {point}."""
    p = coerce_point(base, point)
    n = len(p)
    return _meet(base, n, [linear_relation(base, _unit(n, i, 1), -x, Relation.EQ) for i, x in enumerate(p)])


def box(base: BaseProfile, n: int, lo, hi) -> RealSetAutomaton:
    """
    The closed box prod [lo_i, hi_i]; scalar bounds apply to every axis.

    Raises:
        AlphabetError: empty box or bounds of the wrong length
    """
    lows = coerce_point(base, lo if isinstance(lo, Sequence) else [lo] * n)
    highs = coerce_point(base, hi if isinstance(hi, Sequence) else [hi] * n)
    if len(lows) != n or len(highs) != n:
        raise AlphabetError(f"box bounds must have {n} components")
    if any(a > b for a, b in zip(lows, highs, strict=True)):
        raise AlphabetError("empty box: some lower bound exceeds its upper bound")
    parts = []
    for i in range(n):
        parts.append(linear_relation(base, _unit(n, i, -1), lows[i], Relation.LEQ))
        parts.append(linear_relation(base, _unit(n, i, 1), -highs[i], Relation.LEQ))
    return _meet(base, n, parts)


def interval_set(base: BaseProfile, lo, hi) -> RealSetAutomaton:
    """The closed interval [lo, hi]."""
    return box(base, 1, [lo], [hi])


# ── Track pairing ──────────────────────────────────────────


def track_pairs(
    base: BaseProfile,
    n: int,
    offsets: Sequence[FieldElement],
    left_digits: Sequence[int] | None = None,
    cap: int | None = None,
) -> BuchiAutomaton:
    """
    Automaton over 2n tracks (u_1..u_n, v_1..v_n) with val(v_i) = val(u_i) + offsets[i].

    Args:
        left_digits: Digit range of the u tracks when they are not canonical
            beta-representations (images of a morphism, for instance)
    """
    left = tuple(left_digits) if left_digits is not None else base.signed_alphabet
    columns = [
        u + v
        for u in _columns(left, n)
        for v in _columns(base.signed_alphabet, n)
    ]
    alphabet = columns + [star(2 * n)]
    machine = None
    for i, t in enumerate(offsets):
        pair = carry_automaton(base, (-1, 1), -t, Relation.EQ, [left_digits, None], cap)
        lifted = pullback(pair, alphabet, lambda s, i=i: star(2) if is_star(s) else (s[i], s[n + i]))
        machine = lifted if machine is None else intersect(machine, lifted, cap)
    return machine


def _columns(digits: Sequence[int], n: int) -> list[tuple[int, ...]]:
    cols: list[tuple[int, ...]] = [()]
    for _ in range(n):
        cols = [c + (d,) for c in cols for d in digits]
    return cols


def translate(x: RealSetAutomaton, t, cap: int | None = None) -> RealSetAutomaton:
    """X + t for a constant vector t in Q(beta)^n."""
    shift = coerce_point(x.base, t)
    n = x.arity
    if len(shift) != n:
        raise AlphabetError(f"translation has {len(shift)} components, set has arity {n}")
    pairs = track_pairs(x.base, n, shift, None, cap)
    lifted = pullback(x.machine, pairs.alphabet, lambda s: s[:n])
    moved = project(intersect(pairs, lifted, cap), range(n, 2 * n))
    result = settle(x.base, n, moved, cap)
    logger.debug(f"Translated set by {[v.format() for v in shift]}: {result.n_states} states")
    return result


# ── Multiplication by beta ─────────────────────────────────


def shift_by_base(x: RealSetAutomaton, direction: str = UP, cap: int | None = None) -> RealSetAutomaton:
    """
    beta*X (up) or X/beta (down), by moving the star one column. The machine
    is split into a copy before the star and a copy after it; splice states
    replace each star edge together with the digit edge next to it.
    """
    if direction not in (UP, DOWN):
        raise ValueError(f"direction must be {UP!r} or {DOWN!r}, got {direction!r}")
    n = x.arity
    a = pad_closure(x.machine, n)
    size = a.n_states
    edges = []
    star_edges = []
    for p, sym, q in a.edges:
        if is_star(sym):
            star_edges.append((p, q))
        else:
            edges.append((p, sym, q))
            edges.append((p + size, sym, q + size))
    splice: dict = {}

    def node(key) -> int:
        return splice.setdefault(key, 2 * size + len(splice))

    s = star(n)
    for p, q1 in star_edges:
        if direction == UP:
            # p -*-> q1 -c-> q2  becomes  p -c-> P(q2) -*-> q2
            for c, q2 in a.out_edges(q1):
                if not is_star(c):
                    edges.append((p, c, node(("up", q2))))
                    edges.append((node(("up", q2)), s, q2 + size))
        else:
            # q -c-> p -*-> q1  becomes  q -*-> S(q) -c-> q1
            for q, c, target in a.edges:
                if target == p and not is_star(c):
                    edges.append((q, s, node(("down", q))))
                    edges.append((node(("down", q)), c, q1 + size))
    machine = BuchiAutomaton.build(
        2 * size + len(splice),
        set_alphabet(x.base, n),
        edges,
        a.initial,
        {q + size for q in a.accepting},
    )
    result = settle(x.base, n, machine, cap)
    logger.debug(f"Shifted set {direction}: {x.n_states} -> {result.n_states} states")
    return result


# ── Padding conventions ────────────────────────────────────


def canonical_pad(x: RealSetAutomaton, target: PaddingMode) -> RealSetAutomaton:
    """
    Convert between the exact language d_beta(X) (minimal padding, greedy
    words) and the zero-padded closure language.
    """
    if x.padding_mode == target:
        return x
    if target == PaddingMode.ZERO_PADDED:
        zeros = [x.base.field.zero] * x.arity
        pairs = track_pairs(x.base, x.arity, zeros)
        lifted = pullback(x.machine, pairs.alphabet, lambda s: s[: x.arity])
        closure = project(intersect(pairs, lifted), range(x.arity, 2 * x.arity))
        return settle(x.base, x.arity, closure)
    greedy = greedy_only(x).machine
    exact = intersect(greedy, minimal_padding(x.base, x.arity))
    return x.with_machine(minimize(exact), PaddingMode.EXACT)


# ── Points ─────────────────────────────────────────────────


def member(x: RealSetAutomaton, point) -> bool:
    """
    Whether the point lies in X, by running the synchronized greedy expansions.

    Raises:
        AlphabetError: wrong dimension or a component outside Q(beta)
        CapExceededError: an expansion has no period within the cap
    """
    p = coerce_point(x.base, point)
    if len(p) != x.arity:
        raise AlphabetError(f"point of dimension {len(p)} for a set of arity {x.arity}")
    words = synchronize([greedy_expand(v, x.base) for v in p])
    return accepts(x.machine, encode_columns(words))


def sample_points(x: RealSetAutomaton, limit: int = 20) -> list[tuple[FieldElement, ...]]:
    """Distinct points decoded from accepted lassos."""
    out: list[tuple[FieldElement, ...]] = []
    seen = set()
    for word in lasso_samples(x.machine, 4 * limit):
        try:
            tracks = decode_columns(word)
        except AlphabetError:
            continue
        point = tuple(value_of(w, x.base) for w in tracks)
        if point not in seen:
            seen.add(point)
            out.append(point)
            if len(out) >= limit:
                break
    return out


def empty_set(base: BaseProfile, n: int) -> RealSetAutomaton:
    """The empty subset of R^n."""
    machine = BuchiAutomaton.build(1, set_alphabet(base, n), [], {0}, set())
    return RealSetAutomaton(base, n, minimize(machine))

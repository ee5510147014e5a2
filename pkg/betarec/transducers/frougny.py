# betarec/transducers/frougny.py
"""
Frougny's converter and the pointed normalizer.

A converter state is the balance r = val(input so far) - val(output so far),
both scaled so that the next digit has weight 1. Reading a and writing b moves
r to beta*r + a - b. A balance outside

    [(min A - max C) / (beta - 1), (max A - min C) / (beta - 1)]

can no longer return to zero, so those states are pruned; for a Pisot base
the remaining state set is finite.
"""

import logging
from collections.abc import Iterable

from ..algebraic.base import BaseProfile
from ..algebraic.field import FieldElement
from ..automata.buchi import STAR, BuchiAutomaton, explore
from ..automata.ops import relabel
from ..errors import AlphabetError
from ..limits import get_limits
from ..numeration.bertrand import bertrand_size, bertrand_step
from ..numeration.expansion import renyi_star
from .letter import LetterTransducer

logger = logging.getLogger(__name__)

INT, FRAC = "int", "frac"


def balance_bounds(base: BaseProfile, digits: Iterable[int]) -> tuple[FieldElement, FieldElement]:
    """Tight interval of balances that can still be cancelled."""
    digits = list(digits)
    beta = base.value
    top = base.canonical_max
    lo = base.field.scalar(-max(digits)) / (beta - 1)
    hi = (base.field.scalar(top - min(digits))) / (beta - 1)
    return lo, hi


def lead_bound(base: BaseProfile, c: int) -> int:
    """K = floor(log_beta(c / (beta - 1))); may be negative."""
    if c < 1:
        raise AlphabetError("digit bound must be >= 1")
    beta = base.value
    target = base.field.scalar(c) / (beta - 1)
    k = 0
    if target >= base.field.one:
        while beta ** (k + 1) <= target:
            k += 1
        return k
    k = -1
    while beta**k > target:
        k -= 1
    return k


def _check_digits(digits: Iterable[int]) -> tuple[int, ...]:
    digits = tuple(sorted(set(int(d) for d in digits)))
    if 0 not in digits:
        raise AlphabetError(f"input alphabet {digits} must contain 0")
    return digits


def _converter_relation(
    base: BaseProfile,
    digits: tuple[int, ...],
    pointed: bool,
    admissible: bool,
    cap: int,
    closure: bool = False,
):
    """
    Relation automaton over (input, output) pairs; labels are
    (phase, balance, bertrand state). Phase is None for the unpointed
    converter and the bertrand state is None without admissibility.
    With `closure` every output whose shifts stay <= d*_beta(1) is accepted,
    not only the greedy one.
    """
    beta = base.value
    lo, hi = balance_bounds(base, digits)
    outputs = base.canonical_alphabet
    dstar = renyi_star(base) if admissible else None
    dropped = bertrand_size(dstar) if dstar is not None else None

    def succ(label):
        phase, r, q = label
        for a in digits:
            for b in outputs:
                s = beta * r + (a - b)
                if s < lo or s > hi:
                    continue
                q2 = None
                if dstar is not None:
                    step = bertrand_step(dstar, 0 if q == dropped else q, b)
                    if step is None:
                        continue
                    q2 = dropped if step[1] else step[0]
                yield (a, b), (phase, s, q2)
        if phase == INT:
            yield (STAR, STAR), (FRAC, r, q)

    def accepting(label):
        phase, _, q = label
        if phase == INT:
            return False
        return dstar is None or closure or q == dropped

    alphabet = [(a, b) for a in digits for b in outputs]
    if pointed:
        alphabet.append((STAR, STAR))
    root = (INT if pointed else None, base.field.zero, 0 if admissible else None)
    return explore([root], succ, accepting, alphabet, cap, "Frougny converter")


def build_fractional_converter(
    base: BaseProfile, digits: Iterable[int], admissible: bool = True, cap: int | None = None
) -> LetterTransducer:
    """
    Converter relating words over `digits` to words over A_beta of the same
    value (as fractional parts 0*u).

    Args:
        base: Pisot base
        digits: Input alphabet C, containing 0
        admissible: Take the product with the strict admissibility automaton of
            the output, so that the output is the beta-expansion; otherwise all
            states are accepting
        cap: State cap, defaults to Limits.converter_cap

    Raises:
        NotPisotError: base is not Pisot
        CapExceededError: more than `cap` states
    """
    base.require_pisot()
    cap = cap or get_limits().converter_cap
    digits = _check_digits(digits)
    relation, labels = _converter_relation(base, digits, False, admissible, cap)
    logger.info(f"Converter for {base} over {digits}: {relation.n_states} states")
    return LetterTransducer.from_relation(relation, 1, None, [r for _, r, _ in labels])


def _negate_symbol(x):
    return tuple(c if c == STAR else -c for c in x)


def _with_negated_copy(positive: BuchiAutomaton) -> BuchiAutomaton:
    negative = relabel(positive, _negate_symbol)
    k = positive.n_states
    return BuchiAutomaton.build(
        2 * k,
        set(positive.alphabet) | set(negative.alphabet),
        list(positive.edges) + [(s + k, x, t + k) for s, x, t in negative.edges],
        set(positive.initial) | {q + k for q in positive.initial},
        set(positive.accepting) | {q + k for q in positive.accepting},
    )


def normalizer_relation(
    base: BaseProfile, digits: Iterable[int], closure: bool = False, cap: int | None = None
) -> BuchiAutomaton:
    """
    Synchronized pair automaton {(u, v)}: v is a beta-representation of
    val(u) over the signed canonical alphabet, the star in the same column.
    Inputs need enough leading zero columns for the output to fit.

    Args:
        closure: Accept every admissible-closure output, not only d_beta

    Raises:
        NotPisotError: base is not Pisot
    """
    base.require_pisot()
    cap = cap or get_limits().converter_cap
    digits = _check_digits(digits)
    positive, _ = _converter_relation(base, digits, True, True, cap, closure)
    return _with_negated_copy(positive)


def build_normalizer(base: BaseProfile, digits: Iterable[int], cap: int | None = None) -> LetterTransducer:
    """
    Pointed normalizer: maps u*v over `digits` to the zero-padded
    beta-expansion of its value. The initial function emits the output for
    K+1 leading input zeros; the negative copy handles negative values.

    Raises:
        NotPisotError: base is not Pisot
        RuntimeError: two output prefixes reach the same state on leading zeros
    """
    base.require_pisot()
    cap = cap or get_limits().converter_cap
    digits = _check_digits(digits)
    c = max(abs(d) for d in digits)
    pad = max(lead_bound(base, c) + 1, 0)

    positive, labels = _converter_relation(base, digits, True, True, cap)
    (root,) = positive.initial
    frontier: dict[int, tuple] = {root: ()}
    for _ in range(pad):
        nxt: dict[int, tuple] = {}
        for q, out in frontier.items():
            for b in base.canonical_alphabet:
                word = out + ((b,),)
                for t in positive.successors(q, (0, b)):
                    if nxt.setdefault(t, word) != word:
                        raise RuntimeError(f"state {t} reached by two output prefixes on leading zeros")
        frontier = nxt

    k = positive.n_states
    alpha = dict(frontier)
    alpha.update({q + k: tuple(_negate_symbol(y) for y in out) for q, out in frontier.items()})
    values = [r for _, r, _ in labels]
    values += [-r for r in values]

    result = LetterTransducer.from_relation(_with_negated_copy(positive), 1, alpha, values)
    logger.info(f"Normalizer for {base} over {digits}: {result.n_states} states, lead padding {pad}")
    return result

# betarec/numeration/expansion.py
"""
beta-expansions: greedy algorithm, Renyi expansion of 1, Parry admissibility
and exact evaluation of eventually periodic representations.
"""

import logging

from ..algebraic.base import BaseProfile
from ..algebraic.field import FieldElement
from ..errors import AlphabetError, CapExceededError
from ..limits import get_limits
from .words import EventuallyPeriodicWord, PointedWord, lexicographic_compare

logger = logging.getLogger(__name__)


def greedy_expand(x: FieldElement, base: BaseProfile, max_steps: int | None = None) -> PointedWord:
    """
    The beta-expansion d_beta(x) of x in Q(beta).

    Negative x get the digitwise negation of d_beta(-x). The fractional orbit
    T(y) = beta*y - floor(beta*y) is tracked exactly and its first repetition
    closes the period.

    Raises:
        CapExceededError: no cycle within max_steps (base not Pisot)
    """
    cap = max_steps or get_limits().expansion_cap
    sign = x.sign()
    if sign < 0:
        return greedy_expand(-x, base, cap).negate()
    beta = base.value
    k = 0
    bound = base.field.one
    while x >= bound:
        bound = bound * beta
        k += 1
    r = x * beta ** (-k) if k else x

    int_digits: list[int] = []
    for _ in range(k):
        y = beta * r
        d = y.floor()
        int_digits.append(d)
        r = y - d

    seen: dict[FieldElement, int] = {}
    frac: list[int] = []
    while r not in seen:
        if len(frac) >= cap:
            raise CapExceededError("greedy expansion cycle detection", cap)
        seen[r] = len(frac)
        y = beta * r
        d = y.floor()
        frac.append(d)
        r = y - d
    j = seen[r]
    return PointedWord.of(int_digits, EventuallyPeriodicWord.of(frac[:j], frac[j:]))


def renyi_star(base: BaseProfile) -> EventuallyPeriodicWord:
    """d*_beta(1), the quasi-greedy expansion of 1."""
    base.require_parry()
    assert base.renyi_star is not None
    return base.renyi_star


def _check_canonical(digits, base: BaseProfile) -> None:
    top = base.canonical_max
    bad = [d for d in digits if not 0 <= d <= top]
    if bad:
        raise AlphabetError(f"digits {sorted(set(bad))} outside A_beta = 0..{top}")


def is_admissible(u: EventuallyPeriodicWord, base: BaseProfile) -> bool:
    """Parry's criterion: every shift of u is lexicographically below d*_beta(1)."""
    _check_canonical(u.digits(), base)
    dstar = renyi_star(base)
    return all(lexicographic_compare(s, dstar) < 0 for s in u.shifts())


def is_admissible_pointed(w: PointedWord, base: BaseProfile) -> bool:
    """Admissibility of the whole digit sequence (integer then fractional part), up to sign."""
    if w.sign < 0:
        w = w.negate()
    full = w.fractional_part.prepend(w.integer_part)
    return is_admissible(full, base)


def value_of(w: PointedWord, base: BaseProfile) -> FieldElement:
    """val_beta(w); the periodic tail is summed in closed form."""
    beta = base.value
    fld = base.field
    acc = fld.zero
    for d in w.integer_part:
        acc = acc * beta + d
    frac = w.fractional_part
    inv = beta ** (-1)
    scale = fld.one
    for d in frac.preperiod:
        scale = scale * inv
        acc = acc + scale * d
    p = len(frac.period)
    block = fld.zero
    weight = fld.one
    for d in frac.period:
        weight = weight * inv
        block = block + weight * d
    denominator = fld.one - inv**p
    assert not denominator.is_zero
    return acc + scale * block / denominator


def admissibility_gap_constant(base: BaseProfile) -> int:
    """k = |u| + |v| for d*_beta(1) = u v^omega."""
    dstar = renyi_star(base)
    return len(dstar.preperiod) + len(dstar.period)


def synchronize(words: list[PointedWord]) -> list[PointedWord]:
    """Pad integer parts to a common length; all-small tuples keep the single 0*."""
    stripped = [PointedWord.of(w.integer_part, w.fractional_part) for w in words]
    length = max(len(w.integer_part) for w in stripped)
    return [w.padded(length) for w in stripped]


def quasi_greedy_tail(w: PointedWord, base: BaseProfile) -> PointedWord | None:
    """
    The second admissible-closure representation of a finite expansion:
    decrement the last nonzero digit and continue with d*_beta(1).
    Example in base phi: 1*0^omega -> 0*(10)^omega. None for infinite or zero words.
    """
    if w.sign < 0:
        alt = quasi_greedy_tail(w.negate(), base)
        return alt.negate() if alt is not None else None
    frac = w.fractional_part
    if not frac.is_zero_tail:
        return None
    seq = list(w.integer_part) + list(frac.preperiod)
    nonzero = [i for i, d in enumerate(seq) if d]
    if not nonzero:
        return None
    idx = nonzero[-1]
    head = seq[:idx] + [seq[idx] - 1]
    dstar = renyi_star(base)
    n_int = len(w.integer_part)
    if len(head) <= n_int:
        fill = n_int - len(head)
        return PointedWord(tuple(head) + dstar.prefix(fill), dstar.shift(fill))
    return PointedWord(tuple(head[:n_int]), dstar.prepend(head[n_int:]))

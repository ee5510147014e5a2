# betarec/gdifs/kernel.py
"""
(beta, C)-kernels: the zoomed copies N_{k,b}(X) = (beta^k X - b) n box, with
box = [-c/(beta-1), c/(beta-1)]^n.

Saturation is breadth first from N_{0,0} = X n box. The child of (k, b) under
the digit a is (k+1, beta*b + a), obtained as (beta * N_{k,b} - a) n box;
since a <= c this equals N_{k+1, beta*b+a}. Classes are compared by language
equivalence, so only offsets reachable from 0 are ever explored.
"""

import logging
from collections import deque
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from ..algebraic.base import BaseProfile
from ..algebraic.field import FieldElement
from ..automata.buchi import BuchiAutomaton, star
from ..automata.ops import intersect, project, pullback
from ..errors import IncompleteKernelError
from ..limits import get_limits
from ..realsets.algebra import equivalent_sets, intersection, is_empty_set, union_set
from ..realsets.constructions import DOWN, UP, box, shift_by_base, track_pairs, translate
from ..realsets.model import RealSetAutomaton
from ..realsets.padding import settle
from .model import Gdifs, digit_range, require_similarities, to_automaton

logger = logging.getLogger(__name__)


class KernelStatus(str, Enum):
    COMPLETE = "complete"
    CAP_EXCEEDED = "cap_exceeded"


@dataclass(frozen=True)
class KernelClass:
    """
    One class of the kernel.

    Attributes:
        depth: k of the first (k, b) that produced the class
        offset: b, a vector of field elements
        set: N_{k,b}(X)
        label: Name given by the caller's oracle, if any
    """
    depth: int
    offset: tuple[FieldElement, ...]
    set: RealSetAutomaton
    label: str | None = None

    @property
    def is_empty(self) -> bool:
        return is_empty_set(self.set)


@dataclass
class KernelFamily:
    """
    Saturated classes with the digit transitions between them.

    Attributes:
        base: Numeration base
        c: Digit bound
        digits: The digit columns explored
        classes: Classes, index 0 is N_{0,0}
        transitions: (class, digit) -> class
        status: complete, or cap_exceeded when saturation stopped early
    """
    base: BaseProfile
    c: int
    digits: tuple[tuple[int, ...], ...]
    classes: list[KernelClass] = field(default_factory=list)
    transitions: dict[tuple[int, tuple[int, ...]], int] = field(default_factory=dict)
    status: KernelStatus = KernelStatus.COMPLETE

    @property
    def is_complete(self) -> bool:
        return self.status == KernelStatus.COMPLETE

    def children(self, i: int) -> dict[tuple[int, ...], int]:
        return {a: j for (src, a), j in self.transitions.items() if src == i}


@lru_cache(maxsize=16)
def kernel_box(base: BaseProfile, n: int, c: int) -> RealSetAutomaton:
    """[-c/(beta-1), c/(beta-1)]^n."""
    r = base.field.scalar(c) / (base.value - 1)
    return box(base, n, -r, r)


def attractor_set(g: Gdifs, cap: int | None = None) -> RealSetAutomaton:
    """
    The union of the selected attractor components as a set automaton:
    the words 0*w read from the selected vertices, normalized to canonical
    digits by value equality.

    Raises:
        NotPisotError: base is not Pisot
        SimilarityError: g is a general affine system
    """
    g = require_similarities(g)
    g.base.require_pisot()
    a = to_automaton(g)
    n = g.arity
    zero, s = (0,) * n, star(n)
    start, mid = a.n_states, a.n_states + 1
    edges = list(a.edges) + [(start, zero, start), (start, s, mid)]
    edges += [(mid, x, t) for q in a.initial for x, t in a.out_edges(q)]
    words = BuchiAutomaton.build(a.n_states + 2, list(a.alphabet) + [s], edges, {start}, a.accepting)
    pairs = track_pairs(g.base, n, [g.base.field.zero] * n, range(-g.c, g.c + 1), cap)
    lifted = pullback(words, pairs.alphabet, lambda sym: sym[:n])
    return settle(g.base, n, project(intersect(pairs, lifted, cap), range(n, 2 * n)), cap)


def _as_set(x) -> RealSetAutomaton:
    return x if isinstance(x, RealSetAutomaton) else attractor_set(x)


def kernel(
    x: RealSetAutomaton | Gdifs,
    c: int,
    digits: Sequence[tuple[int, ...]] | None = None,
    max_k: int | None = None,
    max_classes: int | None = None,
    namer: Callable[[RealSetAutomaton], str | None] | None = None,
) -> KernelFamily:
    """
    Saturate the (beta, C)-kernel of x.

    Args:
        x: A set automaton, or a GDIFS whose selected attractor is the set
        c: Digit bound, C = {-c..c}^n unless `digits` narrows it
        namer: Optional oracle naming each class

    Returns:
        The family; status is cap_exceeded when a cap stopped saturation,
        which says nothing about whether the kernel is finite

    Raises:
        NotPisotError: base is not Pisot
        SimilarityError: x is a general affine system
    """
    x = _as_set(x)
    base, n = x.base, x.arity
    base.require_pisot()
    limits = get_limits()
    max_k = max_k or limits.kernel_max_k
    max_classes = max_classes or limits.kernel_max_classes
    columns = tuple(tuple(a) for a in digits) if digits is not None else tuple(digit_range(c, n))
    frame = kernel_box(base, n, c)
    family = KernelFamily(base, c, columns)

    def add(depth: int, offset, s: RealSetAutomaton) -> int:
        for i, known in enumerate(family.classes):
            if equivalent_sets(known.set, s):
                return i
        label = namer(s) if namer else None
        family.classes.append(KernelClass(depth, offset, s, label))
        queue.append(len(family.classes) - 1)
        return len(family.classes) - 1

    queue: deque[int] = deque()
    zero = tuple(base.field.zero for _ in range(n))
    add(0, zero, intersection(x, frame))
    while queue:
        i = queue.popleft()
        current = family.classes[i]
        if current.depth >= max_k:
            family.status = KernelStatus.CAP_EXCEEDED
            continue
        scaled = shift_by_base(current.set, UP)
        for a in columns:
            offset = tuple(base.value * b + d for b, d in zip(current.offset, a, strict=True))
            child = intersection(translate(scaled, [-d for d in a]), frame)
            if len(family.classes) >= max_classes and not any(
                equivalent_sets(k.set, child) for k in family.classes
            ):
                family.status = KernelStatus.CAP_EXCEEDED
                logger.warning(f"Kernel saturation stopped at {max_classes} classes")
                return family
            family.transitions[(i, a)] = add(current.depth + 1, offset, child)
    logger.info(f"Kernel over {base}: {len(family.classes)} classes, status {family.status.value}")
    return family


def gdifs_from_kernel(family: KernelFamily) -> Gdifs:
    """
    The GDIFS on the kernel classes, edge i -> j labelled a for each
    transition; N_{0,0} is selected. Empty classes are dropped.

    Raises:
        IncompleteKernelError: the family is not complete
    """
    if not family.is_complete:
        raise IncompleteKernelError("kernel saturation did not complete")
    n = len(family.digits[0])
    keep = [i for i, k in enumerate(family.classes) if not k.is_empty]
    dropped = len(family.classes) - len(keep)
    if dropped:
        logger.warning(f"Dropping {dropped} empty kernel class(es) from the GDIFS")
    if not keep:
        loops = [(0, 0, a) for a in family.digits]
        return Gdifs.build(family.base, family.c, n, 1, loops, set(), ("empty",))
    index = {old: new for new, old in enumerate(keep)}
    edges = [(index[i], index[j], a) for (i, a), j in family.transitions.items() if i in index and j in index]
    names = [family.classes[i].label or f"N{i}" for i in keep]
    selected = {index[0]} if 0 in index else set()
    return Gdifs.build(family.base, family.c, n, len(keep), edges, selected, names)


def recurrence_holds(family: KernelFamily, i: int) -> bool:
    """Whether class i equals the union over its digits a of (child_a + a) / beta."""
    parts = [
        shift_by_base(translate(family.classes[j].set, list(a)), DOWN)
        for a, j in family.children(i).items()
    ]
    if not parts:
        return family.classes[i].is_empty
    acc = parts[0]
    for p in parts[1:]:
        acc = union_set(acc, p)
    return equivalent_sets(acc, family.classes[i].set)

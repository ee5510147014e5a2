# betarec/gdifs/model.py
"""
Graph-directed iterated function systems whose maps are the similarities
S_a(x) = (x + a) / beta, and their closed automata.

An edge (u, v, a) states that S_a(K_v) is part of K_u. Reading the digit a
from state u and continuing in v gives the same recurrence on values, so a
GDIFS and a closed automaton over the digit columns are the same object.
"""

import logging
from dataclasses import dataclass
from itertools import product

import numpy as np

from ..algebraic.base import BaseProfile, integer_base
from ..automata.buchi import BuchiAutomaton, is_star
from ..errors import AlphabetError, NotClosedError, SimilarityError

logger = logging.getLogger(__name__)

Edge = tuple[int, int, tuple[int, ...]]


def digit_range(c: int, n: int) -> list[tuple[int, ...]]:
    """All columns of {-c..c}^n."""
    return list(product(range(-c, c + 1), repeat=n))


@dataclass(frozen=True)
class Gdifs:
    """
    A GDIFS with maps x -> (x + a) / beta, a in {-c..c}^n.

    Attributes:
        base: Numeration base
        c: Digit bound of the alphabet C = {-c..c}
        arity: Dimension n
        n_vertices: Vertices are 0..n_vertices-1
        edges: (u, v, a) for S_a(K_v) inside K_u
        selected: Vertices whose attractor components make up the set
        names: Optional vertex labels
    """
    base: BaseProfile
    c: int
    arity: int
    n_vertices: int
    edges: tuple[Edge, ...]
    selected: frozenset[int]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        """Validate edges and the out-degree condition."""
        if self.arity < 1 or self.c < 0 or self.n_vertices < 1:
            raise ValueError("a GDIFS needs arity >= 1, c >= 0 and at least one vertex")
        for u, v, a in self.edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge ({u}, {v}) outside 0..{self.n_vertices - 1}")
            if len(a) != self.arity or any(abs(d) > self.c for d in a):
                raise AlphabetError(f"translation {a} outside {{-{self.c}..{self.c}}}^{self.arity}")
        sources = {u for u, _, _ in self.edges}
        for q in range(self.n_vertices):
            if q not in sources:
                raise NotClosedError(f"vertex {self.label(q)} has no outgoing edge")
        if not self.selected <= set(range(self.n_vertices)):
            raise ValueError("selected vertices out of range")
        if self.names is not None and len(self.names) != self.n_vertices:
            raise ValueError("one name per vertex")

    @classmethod
    def build(cls, base, c, arity, n_vertices, edges, selected, names=None) -> "Gdifs":
        ordered = tuple(sorted({(u, v, tuple(a)) for u, v, a in edges}))
        return cls(base, c, arity, n_vertices, ordered, frozenset(selected), tuple(names) if names else None)

    def label(self, q: int) -> str:
        return self.names[q] if self.names else str(q)

    @property
    def alphabet(self) -> list[tuple[int, ...]]:
        return digit_range(self.c, self.arity)

    def adjacency(self) -> np.ndarray:
        """Edge-count matrix."""
        m = np.zeros((self.n_vertices, self.n_vertices))
        for u, v, _ in self.edges:
            m[u, v] += 1
        return m


@dataclass(frozen=True)
class AffineSystem:
    """
    A GDIFS with general affine contractions x -> M x + t, for drawing only.

    Attributes:
        n_vertices: Vertices are 0..n_vertices-1
        edges: (u, v, M, t) for M K_v + t inside K_u
        selected: Vertices drawn
        names: Optional vertex labels
    """
    n_vertices: int
    edges: tuple[tuple[int, int, tuple[tuple[float, ...], ...], tuple[float, ...]], ...]
    selected: frozenset[int]
    names: tuple[str, ...] | None = None

    @property
    def arity(self) -> int:
        return len(self.edges[0][3])


def require_similarities(g) -> Gdifs:
    """
    Raises:
        SimilarityError: g uses maps other than (x + a) / beta
    """
    if isinstance(g, AffineSystem):
        raise SimilarityError("only GDIFS with maps (x + a)/beta convert to automata or kernels")
    return g


# ── Automata ───────────────────────────────────────────────


def to_automaton(g: Gdifs) -> BuchiAutomaton:
    """The closed automaton: vertices as states, all accepting, initial = selected."""
    g = require_similarities(g)
    edges = [(u, a, v) for u, v, a in g.edges]
    return BuchiAutomaton.build(g.n_vertices, g.alphabet, edges, g.selected, range(g.n_vertices))


def from_automaton(a: BuchiAutomaton, base: BaseProfile, c: int | None = None) -> Gdifs:
    """
    The GDIFS of a trim closed automaton over digit columns.

    Raises:
        NotClosedError: a state lies on a non-accepting cycle or is not trim
        AlphabetError: star or non-integer symbols
    """
    if any(is_star(x) or not all(isinstance(d, int) for d in x) for x in a.alphabet):
        raise AlphabetError("a GDIFS automaton reads digit columns only")
    open_states = a.open_cycle_states()
    if open_states:
        raise NotClosedError(f"state {open_states[0]} on non-accepting cycle")
    useless = sorted(set(a.states) - a.useful_states())
    if useless:
        raise NotClosedError(f"state {useless[0]} is not trim")
    bound = max((abs(d) for _, x, _ in a.edges for d in x), default=0)
    c = bound if c is None else c
    if bound > c:
        raise AlphabetError(f"digit {bound} exceeds the bound {c}")
    edges = [(u, v, x) for u, x, v in a.edges]
    return Gdifs.build(base, c, a.arity, a.n_states, edges, a.initial)


# ── Examples ───────────────────────────────────────────────


def cantor_gdifs() -> Gdifs:
    """
    X_T union -X_T in base 3, X_T the triadic Cantor set: A = X, B = X_T,
    C = -X_T, selected A.
    """
    edges = [
        (0, 1, (0,)), (0, 1, (2,)), (0, 2, (0,)), (0, 2, (-2,)),
        (1, 1, (0,)), (1, 1, (2,)),
        (2, 2, (0,)), (2, 2, (-2,)),
    ]
    return Gdifs.build(integer_base(3), 2, 1, 3, edges, {0}, ("A", "B", "C"))


def cantor_ifs() -> Gdifs:
    return Gdifs.build(integer_base(3), 2, 1, 1, [(0, 0, (0,)), (0, 0, (2,))], {0})


def pascal_ifs() -> Gdifs:
    """Pascal's triangle modulo 2: P = P/2 u (P + (0,1))/2 u (P + (1,1))/2."""
    return Gdifs.build(integer_base(2), 1, 2, 1, [(0, 0, a) for a in ((0, 0), (0, 1), (1, 1))], {0})


def menger_ifs() -> Gdifs:
    """Base 3, the 23 translations of {0,1,2}^3 other than (0,1,1), (1,0,1), (1,1,0) and (1,1,1)."""
    removed = {(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)}
    loops = [(0, 0, a) for a in product(range(3), repeat=3) if a not in removed]
    return Gdifs.build(integer_base(3), 2, 3, 1, loops, {0})


def full_ifs(b: int, n: int = 1) -> Gdifs:
    """All digits {0..b-1}^n in integer base b: the attractor is [0, 1]^n."""
    loops = [(0, 0, a) for a in product(range(b), repeat=n)]
    return Gdifs.build(integer_base(b), b - 1, n, 1, loops, {0})

# betarec/automata/buchi.py
"""
Büchi automata over tuple symbols.

States are dense integers 0..n-1. A symbol is a tuple of digits of fixed
arity; the star vector is the tuple ("*", ..., "*"). Structural flags
(deterministic, weak, closed, trim) are computed on demand and cached.
"""

import logging
from collections import deque
from collections.abc import Callable, Hashable, Iterable
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from ..errors import AlphabetError, CapExceededError

logger = logging.getLogger(__name__)

STAR = "*"

Symbol = tuple


def star(arity: int) -> Symbol:
    """The star vector of the given arity."""
    return (STAR,) * arity


def is_star(symbol: Symbol) -> bool:
    return bool(symbol) and all(c == STAR for c in symbol)


def symbol_key(symbol: Symbol):
    """Total order on symbols: digit tuples numerically, star last."""
    return tuple((0, c, "") if isinstance(c, int) else (1, 0, str(c)) for c in symbol)


def sort_symbols(symbols: Iterable[Symbol]) -> tuple[Symbol, ...]:
    return tuple(sorted(set(symbols), key=symbol_key))


def _primitive(loop: tuple) -> tuple:
    n = len(loop)
    for p in range(1, n + 1):
        if n % p == 0 and loop[:p] * (n // p) == loop:
            return loop[:p]
    return loop


@dataclass(frozen=True)
class UltimatelyPeriodicWord:
    """prefix . loop^omega over symbols, canonical (primitive loop, minimal prefix)."""
    prefix: tuple
    loop: tuple

    @classmethod
    def of(cls, prefix, loop) -> "UltimatelyPeriodicWord":
        pre, lp = tuple(prefix), tuple(loop)
        if not lp:
            raise AlphabetError("loop must be nonempty")
        lp = _primitive(lp)
        while pre and pre[-1] == lp[-1]:
            lp = (pre[-1],) + lp[:-1]
            pre = pre[:-1]
        return cls(pre, lp)

    def __getitem__(self, i: int):
        if i < len(self.prefix):
            return self.prefix[i]
        return self.loop[(i - len(self.prefix)) % len(self.loop)]

    def symbols(self) -> set:
        return set(self.prefix) | set(self.loop)


@dataclass(frozen=True)
class BuchiAutomaton:
    """
    A Büchi automaton.

    Attributes:
        n_states: States are 0..n_states-1
        alphabet: Sorted symbols
        edges: Sorted (source, symbol, target) triples
        initial: Initial states
        accepting: Accepting states
    """
    n_states: int
    alphabet: tuple[Symbol, ...]
    edges: tuple[tuple[int, Symbol, int], ...]
    initial: frozenset[int]
    accepting: frozenset[int]

    @classmethod
    def build(cls, n_states: int, alphabet, edges, initial, accepting) -> "BuchiAutomaton":
        alphabet = sort_symbols(alphabet)
        letters = set(alphabet)
        arities = {len(s) for s in alphabet}
        if len(arities) > 1:
            raise AlphabetError(f"symbols of mixed arity {sorted(arities)}")
        edge_set = set()
        for s, a, t in edges:
            if a not in letters:
                raise AlphabetError(f"symbol {a!r} not in alphabet")
            if not (0 <= s < n_states and 0 <= t < n_states):
                raise ValueError(f"edge ({s}, {a!r}, {t}) outside 0..{n_states - 1}")
            edge_set.add((s, a, t))
        ordered = tuple(sorted(edge_set, key=lambda e: (e[0], symbol_key(e[1]), e[2])))
        return cls(n_states, alphabet, ordered, frozenset(initial), frozenset(accepting))

    @classmethod
    def from_edges(cls, alphabet, edges, initial, accepting) -> "BuchiAutomaton":
        """Build from arbitrary hashable state labels; states are numbered in first-seen order."""
        index: dict[Hashable, int] = {}

        def idx(label):
            if label not in index:
                index[label] = len(index)
            return index[label]

        for q in initial:
            idx(q)
        numbered = [(idx(s), a, idx(t)) for s, a, t in edges]
        acc = {idx(q) for q in accepting}
        return cls.build(len(index), alphabet, numbered, {idx(q) for q in initial}, acc)

    # ── Views ──────────────────────────────────────────────

    @property
    def arity(self) -> int:
        return len(self.alphabet[0]) if self.alphabet else 0

    @property
    def states(self) -> range:
        return range(self.n_states)

    @cached_property
    def _succ(self) -> list[dict[Symbol, tuple[int, ...]]]:
        table: list[dict[Symbol, list[int]]] = [{} for _ in range(self.n_states)]
        for s, a, t in self.edges:
            table[s].setdefault(a, []).append(t)
        return [{a: tuple(ts) for a, ts in row.items()} for row in table]

    def successors(self, q: int, symbol: Symbol) -> tuple[int, ...]:
        return self._succ[q].get(symbol, ())

    def out_edges(self, q: int) -> Iterable[tuple[Symbol, int]]:
        for a, ts in self._succ[q].items():
            for t in ts:
                yield a, t

    def step(self, states: Iterable[int], symbol: Symbol) -> frozenset[int]:
        return frozenset(t for q in states for t in self.successors(q, symbol))

    def to_networkx(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        for q in self.states:
            g.add_node(q, initial=q in self.initial, accepting=q in self.accepting)
        for s, a, t in self.edges:
            g.add_edge(s, t, label=a)
        return g

    @cached_property
    def _graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.states)
        g.add_edges_from((s, t) for s, _, t in self.edges)
        return g

    @cached_property
    def components(self) -> list[frozenset[int]]:
        """Strongly connected components."""
        return [frozenset(c) for c in nx.strongly_connected_components(self._graph)]

    def _is_cyclic(self, component: frozenset[int]) -> bool:
        if len(component) > 1:
            return True
        (q,) = component
        return self._graph.has_edge(q, q)

    # ── Flags ──────────────────────────────────────────────

    @cached_property
    def is_deterministic(self) -> bool:
        return len(self.initial) <= 1 and all(len(ts) <= 1 for row in self._succ for ts in row.values())

    @cached_property
    def is_complete(self) -> bool:
        return bool(self.initial) and all(len(row) == len(self.alphabet) for row in self._succ)

    @cached_property
    def is_weak(self) -> bool:
        for c in self.components:
            if not self._is_cyclic(c):
                continue
            marks = {q in self.accepting for q in c}
            if len(marks) > 1:
                return False
        return True

    @cached_property
    def is_closed(self) -> bool:
        return not self.open_cycle_states()

    @cached_property
    def is_trim(self) -> bool:
        return self.useful_states() == set(self.states)

    def open_cycle_states(self) -> list[int]:
        """States lying on a cycle without being accepting."""
        return sorted(
            q for c in self.components if self._is_cyclic(c) for q in c if q not in self.accepting
        )

    # ── Reachability ───────────────────────────────────────

    def reachable(self, sources: Iterable[int] | None = None) -> set[int]:
        seen = set(self.initial if sources is None else sources)
        queue = deque(seen)
        while queue:
            q = queue.popleft()
            for t in self._graph.successors(q):
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        return seen

    def live_states(self) -> set[int]:
        """States from which some accepting run continues."""
        good = set()
        for c in self.components:
            if self._is_cyclic(c) and c & self.accepting:
                good |= c
        return _co_reach(self._graph, good) if good else set()

    def useful_states(self) -> set[int]:
        return self.reachable() & self.live_states()


def _co_reach(graph: nx.DiGraph, targets: set[int]) -> set[int]:
    rev = graph.reverse(copy=False)
    seen = set(targets)
    queue = deque(targets)
    while queue:
        q = queue.popleft()
        for p in rev.successors(q):
            if p not in seen:
                seen.add(p)
                queue.append(p)
    return seen


# ── Emptiness & membership ─────────────────────────────────


def _accepting_lasso_exists(
    roots: Iterable[Hashable],
    successors: Callable[[Hashable], Iterable[Hashable]],
    is_accepting: Callable[[Hashable], bool],
) -> bool:
    g = nx.DiGraph()
    queue = deque()
    for r in roots:
        if r not in g:
            g.add_node(r)
            queue.append(r)
    while queue:
        u = queue.popleft()
        for v in successors(u):
            if v not in g:
                g.add_node(v)
                queue.append(v)
            g.add_edge(u, v)
    for comp in nx.strongly_connected_components(g):
        cyclic = len(comp) > 1 or any(g.has_edge(u, u) for u in comp)
        if cyclic and any(is_accepting(u) for u in comp):
            return True
    return False


def is_empty(a: BuchiAutomaton) -> bool:
    """True iff no accepting state lies on a cycle reachable from an initial state."""
    return not (a.initial & a.live_states())


def accepts(a: BuchiAutomaton, word: UltimatelyPeriodicWord) -> bool:
    """Membership of an ultimately periodic word, decided on the lasso product."""
    arity = a.arity
    for sym in word.symbols():
        if len(sym) != arity:
            raise AlphabetError(f"symbol {sym!r} has arity {len(sym)}, automaton has {arity}")
    n_pre, n_loop = len(word.prefix), len(word.loop)

    def nxt(pos: int) -> int:
        return pos + 1 if pos + 1 < n_pre + n_loop else n_pre

    def successors(node):
        q, pos = node
        return [(t, nxt(pos)) for t in a.successors(q, word[pos])]

    return _accepting_lasso_exists(
        ((q, 0) for q in sorted(a.initial)),
        successors,
        lambda node: node[0] in a.accepting and node[1] >= n_pre,
    )


def trim(a: BuchiAutomaton) -> BuchiAutomaton:
    """Keep accessible and co-accessible states, renumbered in order."""
    keep = sorted(a.useful_states())
    if len(keep) == a.n_states:
        return a
    index = {q: i for i, q in enumerate(keep)}
    edges = [(index[s], x, index[t]) for s, x, t in a.edges if s in index and t in index]
    return BuchiAutomaton.build(
        len(keep),
        a.alphabet,
        edges,
        {index[q] for q in a.initial if q in index},
        {index[q] for q in a.accepting if q in index},
    )


def girth(a: BuchiAutomaton) -> int | None:
    """Length of the shortest cycle, None when acyclic."""
    best = None
    for q in a.states:
        dist = {q: 0}
        queue = deque([q])
        while queue:
            u = queue.popleft()
            if best is not None and dist[u] + 1 >= best:
                break
            for v in a._graph.successors(u):
                if v == q:
                    best = dist[u] + 1 if best is None else min(best, dist[u] + 1)
                elif v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
    return best


def _shortest_word(a: BuchiAutomaton, sources: Iterable[int], target: int) -> tuple | None:
    parent: dict[int, tuple[int, Symbol] | None] = {s: None for s in sources}
    queue = deque(parent)
    while queue:
        u = queue.popleft()
        if u == target:
            break
        for sym, v in a.out_edges(u):
            if v not in parent:
                parent[v] = (u, sym)
                queue.append(v)
    if target not in parent:
        return None
    word = []
    node = target
    while parent[node] is not None:
        u, sym = parent[node]
        word.append(sym)
        node = u
    return tuple(reversed(word))


def lasso_samples(a: BuchiAutomaton, limit: int = 100) -> list[UltimatelyPeriodicWord]:
    """
    Accepted ultimately periodic words: for each live accepting state q and each
    edge leaving q inside its component, the shortest path to q followed by the
    loop through that edge.
    """
    out: list[UltimatelyPeriodicWord] = []
    seen = set()
    reach = a.reachable()
    comp_of = {q: c for c in a.components for q in c}
    for q in sorted(a.accepting & reach):
        comp = comp_of[q]
        if not a._is_cyclic(comp):
            continue
        prefix = _shortest_word(a, a.initial, q)
        if prefix is None:
            continue
        for sym, r in sorted(a.out_edges(q), key=lambda e: (symbol_key(e[0]), e[1])):
            if r not in comp:
                continue
            back = _shortest_word(a, [r], q)
            if back is None:
                continue
            w = UltimatelyPeriodicWord.of(prefix, (sym,) + back)
            if w not in seen:
                seen.add(w)
                out.append(w)
                if len(out) >= limit:
                    return out
    return out


# ── Construction by exploration ────────────────────────────


def explore(
    roots: Iterable[Hashable],
    successors: Callable[[Hashable], Iterable[tuple[Symbol, Hashable]]],
    is_accepting: Callable[[Hashable], bool],
    alphabet: Iterable[Symbol],
    cap: int | None = None,
    what: str = "automaton construction",
) -> tuple[BuchiAutomaton, list[Hashable]]:
    """
    Breadth-first construction from labelled roots.

    Returns:
        The automaton and the label of each state index
    """
    index: dict[Hashable, int] = {}
    labels: list[Hashable] = []
    queue = deque()

    def visit(label) -> int:
        i = index.get(label)
        if i is None:
            if cap is not None and len(labels) >= cap:
                raise CapExceededError(what, cap)
            i = len(labels)
            index[label] = i
            labels.append(label)
            queue.append(label)
        return i

    initial = {visit(r) for r in roots}
    edges = []
    while queue:
        label = queue.popleft()
        s = index[label]
        for sym, target in successors(label):
            edges.append((s, sym, visit(target)))
    accepting = {i for i, label in enumerate(labels) if is_accepting(label)}
    automaton = BuchiAutomaton.build(len(labels), alphabet, edges, initial, accepting)
    logger.debug(f"{what}: {automaton.n_states} states, {len(automaton.edges)} edges")
    return automaton, labels

# betarec/automata/ops.py
"""
Closure operations: products, unions, projections, morphisms, the cyclic
unrolling A^(M), completion and Moore quotients.
"""

import logging
from collections.abc import Callable, Iterable, Mapping

from ..errors import AlphabetError
from .buchi import BuchiAutomaton, Symbol, explore, sort_symbols, trim

logger = logging.getLogger(__name__)


def _check_arity(a: BuchiAutomaton, b: BuchiAutomaton) -> None:
    if a.alphabet and b.alphabet and a.arity != b.arity:
        raise AlphabetError(f"arity mismatch: {a.arity} vs {b.arity}")


def intersect(a: BuchiAutomaton, b: BuchiAutomaton, cap: int | None = None) -> BuchiAutomaton:
    """
    Product automaton for L(a) ∩ L(b).

    When either side is weak the plain product with accepting = F_a × F_b is
    exact; otherwise a phase bit alternates between waiting for F_a and F_b.
    """
    _check_arity(a, b)
    alphabet = sort_symbols(set(a.alphabet) & set(b.alphabet))
    if a.is_weak or b.is_weak:

        def succ(pq):
            p, q = pq
            for sym, p2 in a.out_edges(p):
                for q2 in b.successors(q, sym):
                    yield sym, (p2, q2)

        roots = [(p, q) for p in sorted(a.initial) for q in sorted(b.initial)]
        result, _ = explore(
            roots, succ, lambda pq: pq[0] in a.accepting and pq[1] in b.accepting, alphabet, cap, "intersection"
        )
        return result

    def succ_phased(pqi):
        p, q, i = pqi
        if i == 0 and p in a.accepting:
            j = 1
        elif i == 1 and q in b.accepting:
            j = 0
        else:
            j = i
        for sym, p2 in a.out_edges(p):
            for q2 in b.successors(q, sym):
                yield sym, (p2, q2, j)

    roots = [(p, q, 0) for p in sorted(a.initial) for q in sorted(b.initial)]
    result, _ = explore(
        roots, succ_phased, lambda pqi: pqi[2] == 1 and pqi[1] in b.accepting, alphabet, cap, "intersection"
    )
    return result


def union(a: BuchiAutomaton, b: BuchiAutomaton) -> BuchiAutomaton:
    """Disjoint union; b's states are shifted past a's."""
    _check_arity(a, b)
    k = a.n_states
    edges = list(a.edges) + [(s + k, x, t + k) for s, x, t in b.edges]
    return BuchiAutomaton.build(
        a.n_states + b.n_states,
        set(a.alphabet) | set(b.alphabet),
        edges,
        set(a.initial) | {q + k for q in b.initial},
        set(a.accepting) | {q + k for q in b.accepting},
    )


def union_product(a: BuchiAutomaton, b: BuchiAutomaton, cap: int | None = None) -> BuchiAutomaton:
    """
    Union as a product of the completed automata, accepting when either side
    does. Keeps determinism and weakness of the inputs.
    """
    _check_arity(a, b)
    alphabet = set(a.alphabet) | set(b.alphabet)
    a, b = complete(a, alphabet), complete(b, alphabet)

    def succ(pq):
        p, q = pq
        for sym, p2 in a.out_edges(p):
            for q2 in b.successors(q, sym):
                yield sym, (p2, q2)

    roots = [(p, q) for p in sorted(a.initial) for q in sorted(b.initial)]
    result, _ = explore(
        roots, succ, lambda pq: pq[0] in a.accepting or pq[1] in b.accepting, alphabet, cap, "union product"
    )
    return result


def relabel(a: BuchiAutomaton, f: Callable[[Symbol], Symbol]) -> BuchiAutomaton:
    """Apply a letter-to-letter map to every edge label."""
    return BuchiAutomaton.build(
        a.n_states,
        {f(x) for x in a.alphabet},
        [(s, f(x), t) for s, x, t in a.edges],
        a.initial,
        a.accepting,
    )


def project(a: BuchiAutomaton, keep: Iterable[int]) -> BuchiAutomaton:
    """
    Keep the listed tracks (0-based, in the given order). The star vector
    projects to the star vector.

    Raises:
        AlphabetError: empty or out-of-range track list
    """
    keep = tuple(keep)
    if not keep or any(not 0 <= i < a.arity for i in keep):
        raise AlphabetError(f"tracks {keep} out of range for arity {a.arity}")
    return relabel(a, lambda x: tuple(x[i] for i in keep))


def pullback(a: BuchiAutomaton, alphabet: Iterable[Symbol], f: Callable[[Symbol], Symbol]) -> BuchiAutomaton:
    """Inverse image under a letter-to-letter map f from `alphabet` to a's alphabet."""
    alphabet = sort_symbols(alphabet)
    pre: dict[Symbol, list[Symbol]] = {}
    for x in alphabet:
        pre.setdefault(f(x), []).append(x)
    edges = [(s, y, t) for s, x, t in a.edges for y in pre.get(x, ())]
    return BuchiAutomaton.build(a.n_states, alphabet, edges, a.initial, a.accepting)


def map_alphabet(a: BuchiAutomaton, h: Mapping[Symbol, tuple[Symbol, ...]]) -> BuchiAutomaton:
    """
    Morphic image h(L(a)); each edge is subdivided into a path reading h(x).

    Raises:
        AlphabetError: a letter without image, or with the empty image
    """
    for x in a.alphabet:
        if x not in h:
            raise AlphabetError(f"morphism undefined on {x!r}")
        if not h[x]:
            raise AlphabetError(f"morphism maps {x!r} to the empty word")
    n = a.n_states
    edges = []
    for s, x, t in a.edges:
        image = h[x]
        prev = s
        for y in image[:-1]:
            edges.append((prev, y, n))
            prev = n
            n += 1
        edges.append((prev, image[-1], t))
    alphabet = {y for x in a.alphabet for y in h[x]}
    return BuchiAutomaton.build(n, alphabet, edges, a.initial, a.accepting)


def inverse_map(
    a: BuchiAutomaton, h: Mapping[Symbol, tuple[Symbol, ...]], alphabet: Iterable[Symbol] | None = None
) -> BuchiAutomaton:
    """
    Inverse image h^-1(L(a)) by edge composition. A state (q, seen) records
    whether the last composed path met an accepting state after its source.
    """
    domain = sort_symbols(alphabet if alphabet is not None else h.keys())
    for x in domain:
        if not h.get(x):
            raise AlphabetError(f"morphism undefined or empty on {x!r}")

    def run(q: int, word: tuple[Symbol, ...]) -> set[tuple[int, bool]]:
        current = {(q, False)}
        for y in word:
            current = {(t, seen or t in a.accepting) for p, seen in current for t in a.successors(p, y)}
        return current

    def succ(node):
        q, _ = node
        for x in domain:
            for target in sorted(run(q, h[x])):
                yield x, target

    result, _ = explore(
        [(q, False) for q in sorted(a.initial)], succ, lambda node: node[1], domain, None, "inverse morphism"
    )
    return result


def cyclic_unroll(a: BuchiAutomaton, m: int) -> BuchiAutomaton:
    """
    A^(M): M copies of a, every edge advancing the copy index mod M. State
    (q, i) has index i * |Q| + q; initial states live in copy 0.
    """
    if m < 1:
        raise ValueError(f"unrolling factor must be >= 1, got {m}")
    n = a.n_states
    edges = [(i * n + s, x, ((i + 1) % m) * n + t) for i in range(m) for s, x, t in a.edges]
    accepting = {i * n + q for i in range(m) for q in a.accepting}
    return BuchiAutomaton.build(n * m, a.alphabet, edges, a.initial, accepting)


def complete(a: BuchiAutomaton, alphabet: Iterable[Symbol] | None = None) -> BuchiAutomaton:
    """Add a rejecting sink so that every state reads every symbol."""
    alphabet = sort_symbols(alphabet) if alphabet is not None else a.alphabet
    if a.is_complete and set(alphabet) == set(a.alphabet):
        return a
    sink = a.n_states
    edges = list(a.edges)
    for q in range(a.n_states):
        for x in alphabet:
            if not a.successors(q, x):
                edges.append((q, x, sink))
    edges.extend((sink, x, sink) for x in alphabet)
    initial = a.initial or {sink}
    return BuchiAutomaton.build(a.n_states + 1, alphabet, edges, initial, a.accepting)


def minimize(a: BuchiAutomaton) -> BuchiAutomaton:
    """
    Moore quotient of a deterministic automaton after trimming. Nondeterministic
    inputs are only trimmed.
    """
    a = trim(a)
    if not a.is_deterministic or a.n_states == 0:
        return a
    block = [int(q in a.accepting) for q in a.states]
    count = len(set(block))
    while True:
        signatures = {}
        new_block = []
        for q in a.states:
            sig = (block[q],) + tuple(
                block[a.successors(q, x)[0]] if a.successors(q, x) else -1 for x in a.alphabet
            )
            new_block.append(signatures.setdefault(sig, len(signatures)))
        if len(signatures) == count:
            break
        block, count = new_block, len(signatures)
    order: dict[int, int] = {}
    for q in sorted(a.initial) + list(a.states):
        order.setdefault(block[q], len(order))
    edges = {(order[block[s]], x, order[block[t]]) for s, x, t in a.edges}
    result = BuchiAutomaton.build(
        len(order),
        a.alphabet,
        edges,
        {order[block[q]] for q in a.initial},
        {order[block[q]] for q in a.accepting},
    )
    logger.debug(f"Minimized {a.n_states} -> {result.n_states} states")
    return result

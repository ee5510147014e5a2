# tests/test_automata.py

import random
from collections import defaultdict

import pytest

from betarec.automata import (
    BuchiAutomaton,
    UltimatelyPeriodicWord,
    accepts,
    complement,
    cyclic_unroll,
    determinize_weak,
    equivalent,
    explore,
    girth,
    included,
    intersect,
    is_empty,
    lasso_samples,
    minimize,
    project,
    rank_complement,
    star,
    to_dot,
    trim,
    union,
    weak_marking,
)
from betarec.errors import AlphabetError, CapExceededError

ZERO, ONE = (0,), (1,)
BITS = [ZERO, ONE]


def lasso(prefix: str, loop: str) -> UltimatelyPeriodicWord:
    return UltimatelyPeriodicWord.of([(int(c),) for c in prefix], [(int(c),) for c in loop])


@pytest.fixture
def infinitely_many_ones() -> BuchiAutomaton:
    """Deterministic, not weak: state 1 means the last bit was 1."""
    edges = [(q, (b,), b) for q in (0, 1) for b in (0, 1)]
    return BuchiAutomaton.build(2, BITS, edges, {0}, {1})


@pytest.fixture
def finitely_many_ones() -> BuchiAutomaton:
    """Nondeterministic weak: guess the last 1, then read zeros in state 1."""
    edges = [(0, ZERO, 0), (0, ONE, 0), (0, ZERO, 1), (1, ZERO, 1)]
    return BuchiAutomaton.build(2, BITS, edges, {0}, {1})


WORDS = [lasso("", "0"), lasso("", "1"), lasso("1", "0"), lasso("0", "01"), lasso("110", "100"), lasso("", "0001")]


class TestStructure:
    def test_build_sorts_and_dedupes(self):
        a = BuchiAutomaton.build(1, [ONE, ZERO], [(0, ONE, 0), (0, ONE, 0), (0, ZERO, 0)], {0}, {0})
        assert a.alphabet == (ZERO, ONE)
        assert len(a.edges) == 2

    def test_build_rejects_unknown_symbol(self):
        with pytest.raises(AlphabetError):
            BuchiAutomaton.build(1, [ZERO], [(0, ONE, 0)], {0}, {0})

    def test_mixed_arity(self):
        with pytest.raises(AlphabetError):
            BuchiAutomaton.build(1, [ZERO, (0, 0)], [], {0}, set())

    def test_from_edges(self):
        a = BuchiAutomaton.from_edges(BITS, [("a", ZERO, "b"), ("b", ONE, "a")], {"a"}, {"b"})
        assert a.n_states == 2
        assert a.initial == frozenset({0})
        assert a.accepting == frozenset({1})

    def test_flags(self, infinitely_many_ones, finitely_many_ones):
        assert infinitely_many_ones.is_deterministic
        assert not infinitely_many_ones.is_weak
        assert finitely_many_ones.is_weak
        assert not finitely_many_ones.is_deterministic
        assert not finitely_many_ones.is_closed
        assert finitely_many_ones.open_cycle_states() == [0]

    def test_star(self):
        assert star(2) == ("*", "*")

    def test_girth(self, finitely_many_ones):
        assert girth(finitely_many_ones) == 1


class TestLanguages:
    def test_accepts(self, infinitely_many_ones, finitely_many_ones):
        for w in WORDS:
            ones_forever = any(x == ONE for x in w.loop)
            assert accepts(infinitely_many_ones, w) == ones_forever
            assert accepts(finitely_many_ones, w) == (not ones_forever)

    def test_accepts_checks_arity(self, infinitely_many_ones):
        with pytest.raises(AlphabetError):
            accepts(infinitely_many_ones, UltimatelyPeriodicWord.of((), ((0, 0),)))

    def test_emptiness(self, infinitely_many_ones):
        assert not is_empty(infinitely_many_ones)
        dead = BuchiAutomaton.build(2, BITS, [(0, ZERO, 1)], {0}, {1})
        assert is_empty(dead)
        assert trim(dead).n_states == 0

    def test_lasso_samples_are_accepted(self, finitely_many_ones):
        samples = lasso_samples(finitely_many_ones)
        assert samples
        assert all(accepts(finitely_many_ones, w) for w in samples)

    def test_union_and_intersection(self, infinitely_many_ones, finitely_many_ones):
        both = intersect(infinitely_many_ones, finitely_many_ones)
        assert is_empty(both)
        either = union(infinitely_many_ones, finitely_many_ones)
        assert all(accepts(either, w) for w in WORDS)

    def test_projection(self):
        pairs = BuchiAutomaton.build(1, [(0, 1), (1, 0)], [(0, (0, 1), 0), (0, (1, 0), 0)], {0}, {0})
        first = project(pairs, [0])
        assert first.alphabet == (ZERO, ONE)
        with pytest.raises(AlphabetError):
            project(pairs, [2])

    def test_cyclic_unroll_preserves_language(self, infinitely_many_ones):
        for m in (1, 2, 3):
            unrolled = cyclic_unroll(infinitely_many_ones, m)
            assert unrolled.n_states == 2 * m
            assert all(accepts(unrolled, w) == accepts(infinitely_many_ones, w) for w in WORDS)

    def test_cyclic_unroll_factor(self, infinitely_many_ones):
        with pytest.raises(ValueError):
            cyclic_unroll(infinitely_many_ones, 0)

    def test_minimize_merges_copies(self, infinitely_many_ones):
        assert minimize(cyclic_unroll(infinitely_many_ones, 3)).n_states == 2

    def test_explore_cap(self):
        def succ(n):
            yield ZERO, n + 1

        with pytest.raises(CapExceededError):
            explore([0], succ, lambda n: True, BITS, cap=5)


class TestComplement:
    def test_deterministic_buchi(self, infinitely_many_ones, finitely_many_ones):
        co = complement(infinitely_many_ones)
        assert all(accepts(co, w) != accepts(infinitely_many_ones, w) for w in WORDS)
        assert equivalent(co, finitely_many_ones)

    def test_weak_breakpoint(self, infinitely_many_ones, finitely_many_ones):
        co = complement(finitely_many_ones)
        assert all(accepts(co, w) != accepts(finitely_many_ones, w) for w in WORDS)
        assert equivalent(co, infinitely_many_ones)

    def test_rank_based(self, infinitely_many_ones, finitely_many_ones):
        co = rank_complement(finitely_many_ones, 10_000)
        assert co.n_states == 5
        assert all(accepts(co, w) != accepts(finitely_many_ones, w) for w in WORDS)
        assert equivalent(co, infinitely_many_ones)
        assert equivalent(complement(infinitely_many_ones, method="rank"), finitely_many_ones)

    def test_rank_based_union_is_universal(self, infinitely_many_ones, finitely_many_ones):
        both = union(infinitely_many_ones, finitely_many_ones)
        assert weak_marking(both) is None
        assert is_empty(complement(both))

    @pytest.mark.slow
    def test_rank_output_covers_the_rest(self, finitely_many_ones):
        co = rank_complement(finitely_many_ones)
        assert is_empty(intersect(co, finitely_many_ones))
        assert is_empty(complement(union(co, finitely_many_ones)))

    def test_rank_cap(self, finitely_many_ones):
        with pytest.raises(CapExceededError):
            complement(finitely_many_ones, cap=1, method="rank")

    def test_inclusion(self, finitely_many_ones):
        zeros = BuchiAutomaton.build(1, [ZERO], [(0, ZERO, 0)], {0}, {0})
        assert included(zeros, finitely_many_ones)
        assert not included(finitely_many_ones, zeros)

    def test_determinize_weak(self):
        # some 1 occurs: weak, nondeterministic
        edges = [(0, ZERO, 0), (0, ONE, 0), (0, ONE, 1), (1, ZERO, 1), (1, ONE, 1)]
        some_one = BuchiAutomaton.build(2, BITS, edges, {0}, {1})
        d = determinize_weak(some_one)
        assert d.is_deterministic
        assert d.is_weak
        assert equivalent(d, some_one)

    def test_determinize_weak_keeps_non_deterministic_languages(self, finitely_many_ones):
        assert determinize_weak(finitely_many_ones) is finitely_many_ones

    def test_weak_marking(self, infinitely_many_ones, finitely_many_ones):
        assert weak_marking(infinitely_many_ones) is None
        assert weak_marking(finitely_many_ones) is finitely_many_ones


class TestDot:
    def test_dot(self, infinitely_many_ones):
        text = to_dot(infinitely_many_ones, "ones")
        assert text.startswith('digraph "ones" {')
        assert "1 [shape=doublecircle" in text
        assert "__start0 -> 0;" in text
        assert '0 -> 1 [label="1"];' in text
        assert to_dot(infinitely_many_ones, "ones") == text


def lasso_oracle(a: BuchiAutomaton, w: UltimatelyPeriodicWord) -> bool:
    """Acceptance by search over loop boundaries: an accepting cycle must read whole loops."""
    step = defaultdict(set)
    for s, x, t in a.edges:
        step[s, x].add(t)

    def read_loop(q):
        frontier = {(q, False)}
        for x in w.loop:
            frontier = {(t, seen or t in a.accepting) for s, seen in frontier for t in step[s, x]}
        return frontier

    states = set(a.initial)
    for x in w.prefix:
        states = {t for s in states for t in step[s, x]}
    graph, todo = {}, list(states)
    while todo:
        q = todo.pop()
        if q in graph:
            continue
        graph[q] = read_loop(q)
        todo.extend(t for t, _ in graph[q])

    def reaches(src, dst):
        seen, todo = set(), [src]
        while todo:
            q = todo.pop()
            if q == dst:
                return True
            if q not in seen:
                seen.add(q)
                todo.extend(t for t, _ in graph[q])
        return False

    return any(flag and reaches(t, p) for p in graph for t, flag in graph[p])


def random_automaton(rng: random.Random) -> BuchiAutomaton:
    n = rng.randint(1, 4)
    edges = [(s, x, t) for s in range(n) for x in BITS for t in range(n) if rng.random() < 0.35]
    accepting = {q for q in range(n) if rng.random() < 0.5}
    return BuchiAutomaton.build(n, BITS, edges, {0}, accepting)


def random_lasso(rng: random.Random) -> UltimatelyPeriodicWord:
    prefix = "".join(rng.choice("01") for _ in range(rng.randint(0, 3)))
    loop = "".join(rng.choice("01") for _ in range(rng.randint(1, 3)))
    return lasso(prefix, loop)


@pytest.fixture
def some_one() -> BuchiAutomaton:
    edges = [(0, ZERO, 0), (0, ONE, 0), (0, ONE, 1), (1, ZERO, 1), (1, ONE, 1)]
    return BuchiAutomaton.build(2, BITS, edges, {0}, {1})


class TestRandomized:
    @pytest.mark.parametrize("seed", range(5))
    def test_accepts_matches_loop_search(self, seed):
        rng = random.Random(seed)
        for _ in range(30):
            a, w = random_automaton(rng), random_lasso(rng)
            assert accepts(a, w) == lasso_oracle(a, w)

    def test_de_morgan(self, some_one, finitely_many_ones):
        a, b = some_one, finitely_many_ones
        assert equivalent(complement(union(a, b)), intersect(complement(a), complement(b)))
        assert equivalent(complement(intersect(a, b)), union(complement(a), complement(b)))

    @pytest.mark.parametrize("seed", [7, 8])
    def test_boolean_operations_pointwise(self, seed, some_one, finitely_many_ones, infinitely_many_ones):
        rng = random.Random(seed)
        a, b = some_one, finitely_many_ones
        co_union = complement(union(a, b))
        co_inf = complement(infinitely_many_ones)
        for _ in range(20):
            w = random_lasso(rng)
            in_a, in_b = accepts(a, w), accepts(b, w)
            assert accepts(union(a, b), w) == (in_a or in_b)
            assert accepts(intersect(a, b), w) == (in_a and in_b)
            assert accepts(co_union, w) == (not in_a and not in_b)
            assert accepts(co_inf, w) != lasso_oracle(infinitely_many_ones, w)

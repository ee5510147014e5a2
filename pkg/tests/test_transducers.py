# tests/test_transducers.py

import pytest

from betarec.algebraic import parse_base
from betarec.automata import STAR, UltimatelyPeriodicWord, accepts
from betarec.errors import AlphabetError, CapExceededError, NotPisotError
from betarec.limits import Limits
from betarec.numeration import (
    decode_columns,
    format_word,
    greedy_expand,
    is_admissible_pointed,
    parse_signed_word,
    value_of,
)
from betarec.numeration.words import PointedWord
from betarec.transducers import (
    LetterTransducer,
    balance_bounds,
    build_fractional_converter,
    build_normalizer,
    eliminate_initial_function,
    lead_bound,
    normalizer_relation,
    relation_automaton,
    transduce_word,
)


def signed_value(text: str, base):
    """Exact value of a word whose digits may mix signs."""
    word = parse_signed_word(text)
    point = word.prefix.index(("*",))
    head = [d for (d,) in word.prefix[:point]]
    tail = [d for (d,) in word.prefix[point + 1 :]]
    loop = [d for (d,) in word.loop]
    beta = base.value
    total = base.field.zero
    for d in head:
        total = total * beta + d
    scale = base.field.one
    for d in tail:
        scale = scale / beta
        total = total + scale * d
    block = base.field.zero
    weight = base.field.one
    for d in loop:
        weight = weight / beta
        block = block + weight * d
    return total + scale * block / (1 - beta ** (-len(loop)))


def normalized(t: LetterTransducer, text: str) -> PointedWord:
    (out,) = transduce_word(t, parse_signed_word(text), limit=2)
    (track,) = decode_columns(out)
    return PointedWord.of(track.integer_part, track.fractional_part)


class TestBounds:
    def test_balance_bounds(self, golden, phi):
        lo, hi = balance_bounds(golden, [-1, 0, 1])
        assert lo == -phi
        assert hi == 2 * phi

    def test_lead_bound(self, golden, binary):
        assert lead_bound(golden, 1) == 1
        assert lead_bound(binary, 1) == 0
        assert lead_bound(binary, 3) == 1

    def test_lead_bound_needs_positive(self, golden):
        with pytest.raises(AlphabetError):
            lead_bound(golden, 0)


class TestConverter:
    def test_states_stay_within_bounds(self, golden):
        t = build_fractional_converter(golden, [-1, 0, 1])
        lo, hi = balance_bounds(golden, [-1, 0, 1])
        assert t.state_values is not None
        assert all(lo <= r <= hi for r in t.state_values)
        assert t.value(0) == golden.field.zero

    def test_digits_need_zero(self, golden):
        with pytest.raises(AlphabetError):
            build_fractional_converter(golden, [1, 2])

    def test_not_pisot(self, monkeypatch):
        monkeypatch.setattr("betarec.algebraic.base.get_limits", lambda: Limits(orbit_cap=50))
        with pytest.raises(NotPisotError):
            build_fractional_converter(parse_base("poly:-2,0,1@(1,2)"), [0, 1])

    def test_cap(self, tribonacci):
        with pytest.raises(CapExceededError):
            build_fractional_converter(tribonacci, [-2, -1, 0, 1, 2], cap=3)


class TestNormalizer:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("1,1*", "100*(0)"),
            ("2*", "10*01(0)"),
            ("0*(1)", "10*(0)"),
            ("1,-1*1", "1*001(0)"),
        ],
    )
    def test_golden(self, golden, text, expected):
        t = build_normalizer(golden, [-1, 0, 1, 2])
        assert format_word(normalized(t, text)) == expected

    @pytest.mark.parametrize("text", ["1,-1,1*0,1", "2,0,2*(1,0,-1)", "-1,-2*1", "0*(2,-1)"])
    def test_output_is_the_expansion(self, golden, text):
        t = build_normalizer(golden, [-2, -1, 0, 1, 2])
        value = signed_value(text, golden)
        out = normalized(t, text)
        assert value_of(out, golden) == value
        assert out == greedy_expand(value, golden)
        assert is_admissible_pointed(out, golden)

    def test_binary(self, binary):
        t = build_normalizer(binary, [-1, 0, 1])
        assert format_word(normalized(t, "1,-1*1")) == "1*1(0)"

    def test_eliminating_the_initial_function(self, golden):
        t = build_normalizer(golden, [-1, 0, 1])
        plain = eliminate_initial_function(t)
        assert not plain.initial_function
        assert eliminate_initial_function(plain) is plain
        for text in ("1,1*", "0*(1,-1)", "-1*1"):
            word = parse_signed_word(text)
            assert transduce_word(t, word) == transduce_word(plain, word)

    def test_closure_relation_accepts_quasi_greedy_outputs(self, golden):
        greedy_only = normalizer_relation(golden, [0, 1])
        closure = normalizer_relation(golden, [0, 1], closure=True)
        # input 001* is 1: the greedy output is 001*, the closure also allows 000*(10)
        pair = UltimatelyPeriodicWord.of([(0, 0), (0, 0), (1, 1), ("*", "*")], [(0, 0)])
        alt = UltimatelyPeriodicWord.of([(0, 0), (0, 0), (1, 0), ("*", "*")], [(0, 1), (0, 0)])
        assert accepts(greedy_only, pair)
        assert accepts(closure, pair)
        assert accepts(closure, alt)
        assert not accepts(greedy_only, alt)


class TestInitialFunction:
    @pytest.fixture
    def delay(self):
        # copies its input one letter late, after writing a star
        return LetterTransducer(
            n_states=1,
            input_alphabet=((0,), (1,)),
            output_alphabet=((0,), (1,)),
            edges=((0, (0,), (0,), 0), (0, (1,), (1,), 0)),
            initial=frozenset(),
            accepting=frozenset({0}),
            initial_function=((0, ((STAR,),)),),
        )

    def test_queue_heads_join_the_alphabet(self, delay):
        relation = relation_automaton(delay)
        assert (1, STAR) in relation.alphabet
        assert (0, STAR) in relation.alphabet

    def test_output_is_delayed(self, delay):
        relation = relation_automaton(delay)
        shifted = UltimatelyPeriodicWord.of([(1, STAR), (0, 1)], [(0, 0)])
        aligned = UltimatelyPeriodicWord.of([(1, 1)], [(0, 0)])
        assert accepts(relation, shifted)
        assert not accepts(relation, aligned)

    def test_normalizer_reads_digits_against_pending_star(self, golden):
        relation = relation_automaton(build_normalizer(golden, [-1, 0, 1]))
        assert (1, STAR) in relation.alphabet
        assert (-1, STAR) in relation.alphabet

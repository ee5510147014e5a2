# tests/test_numeration.py

import random
from fractions import Fraction

import pytest

from betarec.algebraic import compare
from betarec.automata import UltimatelyPeriodicWord, accepts
from betarec.errors import AlphabetError
from betarec.numeration import (
    EventuallyPeriodicWord,
    PointedWord,
    admissibility_gap_constant,
    bertrand_automaton,
    decode_columns,
    encode_columns,
    format_word,
    greedy_expand,
    is_admissible,
    is_admissible_pointed,
    lexicographic_compare,
    parse_signed_word,
    parse_word,
    quasi_greedy_tail,
    synchronize,
    value_of,
)


def word(text: str) -> PointedWord:
    return parse_word(text)


def abs_element(x):
    return -x if x.sign() < 0 else x


def pointed_compare(u: PointedWord, v: PointedWord) -> int:
    """Lexicographic order of two nonnegative pointed words, integer parts aligned."""
    a, b = synchronize([u, v])
    if a.integer_part != b.integer_part:
        return 1 if a.integer_part > b.integer_part else -1
    return lexicographic_compare(a.fractional_part, b.fractional_part)


class TestWords:
    def test_canonical_form(self):
        w = EventuallyPeriodicWord.of((1, 0, 1, 0), (1, 0, 1, 0))
        assert w.preperiod == ()
        assert w.period == (1, 0)

    def test_format_and_parse(self):
        w = word("101*01(01)")
        assert w.integer_part == (1, 0, 1)
        assert format_word(w) == "101*(01)"

    def test_negative_digits(self):
        w = word("-1,0*0(0,-1,0)")
        assert w.sign == -1
        assert w.integer_part == (-1, 0)

    def test_mixed_signs_rejected(self):
        with pytest.raises(AlphabetError):
            word("1,-1*(0)")

    def test_lexicographic_compare(self):
        a = EventuallyPeriodicWord.of((), (1, 0))
        b = EventuallyPeriodicWord.of((1, 0, 0), (0,))
        assert lexicographic_compare(a, b) == 1
        assert lexicographic_compare(b, a) == -1
        assert lexicographic_compare(a, a) == 0

    def test_digit_at(self):
        w = word("12*34(5)")
        assert w.digit_at(1) == 1
        assert w.digit_at(0) == 2
        assert w.digit_at(-1) == 3
        assert w.digit_at(-4) == 5
        assert w.digit_at(7) == 0

    def test_signed_word(self):
        w = parse_signed_word("1,-1*0(1,0)")
        assert w.prefix == ((1,), (-1,), ("*",))
        assert w.loop == ((0,), (1,))


class TestGreedy:
    def test_golden_half_of_beta(self, golden, phi):
        assert format_word(greedy_expand(phi / 2, golden)) == "0*(100)"

    def test_golden_one(self, golden):
        assert format_word(greedy_expand(golden.field.one, golden)) == "1*(0)"

    def test_binary_third(self, binary):
        assert format_word(greedy_expand(binary.field.scalar(Fraction(1, 3)), binary)) == "0*(01)"

    def test_negative(self, binary):
        w = greedy_expand(binary.field.scalar(Fraction(-5, 2)), binary)
        assert w.integer_part == (-1, 0)
        assert w.fractional_part.preperiod == (-1,)

    @pytest.mark.parametrize("value", [Fraction(0), Fraction(1, 2), Fraction(7, 3), Fraction(-11, 5), Fraction(13)])
    def test_value_of_inverts_greedy(self, golden, value):
        x = golden.field.scalar(value)
        assert value_of(greedy_expand(x, golden), golden) == x

    def test_value_of_in_field(self, tribonacci):
        x = tribonacci.field.element((Fraction(1, 3), Fraction(-1, 2), Fraction(1, 7)))
        assert value_of(greedy_expand(x, tribonacci), tribonacci) == x

    def test_greedy_is_admissible(self, golden, phi):
        for x in (phi / 2, phi * 3 - 1, golden.field.scalar(Fraction(5, 7))):
            assert is_admissible_pointed(greedy_expand(x, golden), golden)

    def test_random_elements(self, golden):
        rng = random.Random(20)
        for _ in range(25):
            x = golden.field.element([Fraction(rng.randint(-40, 40), rng.randint(1, 12)) for _ in range(2)])
            w = greedy_expand(x, golden)
            assert value_of(w, golden) == x
            assert is_admissible_pointed(w, golden)

    def test_random_tribonacci_elements(self, tribonacci):
        rng = random.Random(21)
        for _ in range(15):
            x = tribonacci.field.element([Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(3)])
            w = greedy_expand(x, tribonacci)
            assert value_of(w, tribonacci) == x
            assert is_admissible_pointed(w, tribonacci)

    @pytest.mark.parametrize("seed", [3, 4])
    def test_greedy_preserves_order(self, golden, tribonacci, seed):
        rng = random.Random(seed)
        for base in (golden, tribonacci):
            d = base.field.degree
            for _ in range(20):
                x, y = (
                    abs_element(base.field.element([Fraction(rng.randint(-30, 30), rng.randint(1, 8)) for _ in range(d)]))
                    for _ in range(2)
                )
                assert pointed_compare(greedy_expand(x, base), greedy_expand(y, base)) == compare(x, y)


class TestAdmissibility:
    def test_golden(self, golden):
        assert is_admissible(EventuallyPeriodicWord.of((), (1, 0, 0)), golden)
        assert not is_admissible(EventuallyPeriodicWord.of((0, 1, 1), (0,)), golden)
        # the quasi-greedy expansion itself is not a shift-strict word
        assert not is_admissible(EventuallyPeriodicWord.of((), (1, 0)), golden)

    def test_digits_outside_alphabet(self, golden):
        with pytest.raises(AlphabetError):
            is_admissible(EventuallyPeriodicWord.of((2,), (0,)), golden)

    def test_gap_constant(self, golden, tribonacci, binary):
        assert admissibility_gap_constant(golden) == 2
        assert admissibility_gap_constant(tribonacci) == 3
        assert admissibility_gap_constant(binary) == 1

    def test_quasi_greedy_tail(self, golden):
        alt = quasi_greedy_tail(word("1*"), golden)
        assert format_word(alt) == "0*(10)"
        assert value_of(alt, golden) == golden.field.one
        assert quasi_greedy_tail(word("0*(10)"), golden) is None

    def test_bertrand_automaton(self, golden):
        closed = bertrand_automaton(golden)
        ok = UltimatelyPeriodicWord.of((), ((1,), (0,), (0,)))
        bad = UltimatelyPeriodicWord.of(((1,), (1,)), ((0,),))
        assert accepts(closed, ok)
        assert not accepts(closed, bad)
        strict = bertrand_automaton(golden, strict=True)
        assert not accepts(strict, UltimatelyPeriodicWord.of((), ((1,), (0,))))
        assert accepts(strict, ok)


class TestColumns:
    def test_encode_decode(self):
        words = synchronize([word("101*(01)"), word("0*1")])
        column_word = encode_columns(words)
        assert column_word[3] == ("*", "*")
        assert decode_columns(column_word) == words

    def test_unsynchronized(self):
        with pytest.raises(AlphabetError):
            encode_columns([word("10*"), word("1*")])

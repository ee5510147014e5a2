# tests/test_algebraic.py

import math
import random
from fractions import Fraction

import pytest

from betarec.algebraic import (
    IntPolynomial,
    ParryClass,
    compare,
    conjugate_moduli,
    integer_base,
    is_mult_independent,
    is_pisot,
    isolate_root,
    make_base,
    parse_base,
    parse_element,
)
from betarec.errors import BaseSpecError
from betarec.limits import Limits


class TestField:
    def test_golden_relation(self, golden, phi):
        assert phi * phi == phi + 1

    def test_inverse(self, golden, phi):
        assert phi.inverse() == phi - 1
        assert phi * phi.inverse() == golden.field.one

    def test_signs_and_floor(self, golden, phi):
        assert (phi - 2).sign() < 0
        assert (phi - Fraction(3, 2)).sign() > 0
        assert phi.floor() == 1
        assert (phi * phi).floor() == 2
        assert (-phi).ceil() == -1

    def test_compare(self, golden, phi):
        assert compare(phi, golden.field.scalar(2)) == -1
        assert compare(phi * phi, phi + 1) == 0

    def test_division_by_zero(self, golden):
        with pytest.raises(ZeroDivisionError):
            golden.field.zero.inverse()

    def test_integer_elements(self, golden, phi):
        assert (phi * phi - 3).is_integer_element()
        assert not (phi / 2).is_integer_element()
        assert (phi / 2).is_rational is False

    def test_format_and_parse(self, golden, phi):
        x = phi / 2
        assert x.format() == "q:[0,1/2]"
        assert parse_element(golden.field, x.format()) == x
        assert parse_element(golden.field, "3/4") == golden.field.scalar(Fraction(3, 4))

    def test_bad_element(self, golden):
        with pytest.raises(BaseSpecError):
            parse_element(golden.field, "q:1,2")


class TestClassification:
    def test_conjugates(self, golden, tribonacci):
        assert conjugate_moduli(golden.beta) == pytest.approx([(math.sqrt(5) - 1) / 2])
        moduli = conjugate_moduli(tribonacci.beta)
        assert len(moduli) == 2
        assert moduli[0] == pytest.approx(moduli[1])
        assert moduli[0] < 1

    def test_golden(self, golden):
        assert golden.is_pisot
        assert golden.parry_class == ParryClass.SIMPLE
        assert golden.renyi_digits == ((1, 1), ())
        assert str(golden.renyi_star) == "(10)"
        assert golden.canonical_alphabet == (0, 1)
        assert golden.signed_alphabet == (-1, 0, 1)

    def test_tribonacci(self, tribonacci):
        assert tribonacci.is_pisot
        assert tribonacci.parry_class == ParryClass.SIMPLE
        assert str(tribonacci.renyi_star) == "(110)"

    def test_integer(self, ternary):
        assert ternary.is_integer
        assert ternary.pisot.status == "trivial"
        assert str(ternary.renyi_star) == "(2)"

    def test_non_simple_parry(self):
        # x^2 - 3x + 1, beta = (3 + sqrt 5) / 2 = phi^2: d(1) = 2(1)
        base = parse_base("poly:1,-3,1@(2,3)")
        assert base.is_pisot
        assert base.parry_class == ParryClass.NON_SIMPLE
        assert base.renyi_digits == ((2,), (1,))

    def test_not_pisot(self, monkeypatch):
        # x^2 - 2: the conjugate -sqrt 2 lies outside the unit disk
        monkeypatch.setattr("betarec.algebraic.base.get_limits", lambda: Limits(orbit_cap=50))
        base = parse_base("poly:-2,0,1@(1,2)")
        assert not base.is_pisot
        assert base.pisot.max_modulus == pytest.approx(2**0.5)

    def test_power_profile(self, golden):
        square = golden.power(2)
        assert float(square.value) == pytest.approx(float(golden.value) ** 2)
        assert square.beta.defining == IntPolynomial.of(1, -3, 1)


class TestBaseStrings:
    @pytest.mark.parametrize("text", ["int:2", "int:10", "poly:-1,-1,1@(1,2)", "poly:-1,-1,-1,1@(1,2)"])
    def test_describe_round_trip(self, text):
        assert parse_base(parse_base(text).describe()) == parse_base(text)

    @pytest.mark.parametrize("text", ["int:1", "int:x", "poly:1,2", "nope", "poly:-1,-1,2@(1,2)"])
    def test_rejected(self, text):
        with pytest.raises(BaseSpecError):
            parse_base(text)

    def test_reducible(self):
        with pytest.raises(BaseSpecError):
            make_base(IntPolynomial.of(-4, 0, 1), (Fraction(1), Fraction(3)))


class TestIndependence:
    def test_powers_are_dependent(self):
        assert not is_mult_independent(4, 8)
        assert not is_mult_independent(9, 27)

    def test_independent(self):
        assert is_mult_independent(2, 3)
        assert is_mult_independent(6, 12)

    def test_rejects_small(self):
        with pytest.raises(BaseSpecError):
            is_mult_independent(1, 3)


def random_element(rng: random.Random, base):
    return base.field.element([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(base.field.degree)])


class TestFieldAxioms:
    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_ring_laws(self, golden, tribonacci, seed):
        rng = random.Random(seed)
        for base in (golden, tribonacci):
            for _ in range(20):
                a, b, c = (random_element(rng, base) for _ in range(3))
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c
                assert a * b == b * a
                assert a + b == b + a
                if a != base.field.zero:
                    assert a * a.inverse() == base.field.one

    @pytest.mark.parametrize("seed", [4, 5])
    def test_sign_and_order_match_floats(self, golden, tribonacci, seed):
        rng = random.Random(seed)
        for base in (golden, tribonacci):
            for _ in range(25):
                a, b = random_element(rng, base), random_element(rng, base)
                approx = float(a) - float(b)
                if abs(approx) > 1e-9:
                    assert (a - b).sign() == (1 if approx > 0 else -1)
                    assert compare(a, b) == (1 if approx > 0 else -1)
                assert compare(a, b) == -compare(b, a)


class TestPisot:
    def test_root_discs(self):
        discs = IntPolynomial.of(-1, -1, 1).root_discs()
        assert len(discs) == 2
        assert all(r < 1e-40 for _, r in discs)

    def test_reciprocal(self):
        assert IntPolynomial.of(1, -1, -1, -1, 1).is_reciprocal
        assert IntPolynomial.of(1, -3, 1).is_reciprocal
        assert not IntPolynomial.of(-1, -1, 1).is_reciprocal

    def test_salem_number_is_not_pisot(self):
        # x^4 - x^3 - x^2 - x + 1 has two conjugates on the unit circle
        cert = is_pisot(isolate_root(IntPolynomial.of(1, -1, -1, -1, 1), Fraction(3, 2), Fraction(2)))
        assert not cert.is_pisot
        assert cert.status == "certified"
        assert cert.max_modulus == pytest.approx(1.0)

    @pytest.mark.parametrize("coefficients", [(-1, -1, 0, 1), (-1, 0, 0, -1, 1)])
    def test_smallest_pisot_numbers(self, coefficients):
        cert = is_pisot(isolate_root(IntPolynomial(coefficients), Fraction(1), Fraction(2)))
        assert cert.is_pisot
        assert cert.status == "certified"
        assert 0.8 < cert.max_modulus < 1

    @pytest.mark.parametrize("n", range(2, 21))
    def test_multinacci(self, n):
        cert = is_pisot(isolate_root(IntPolynomial((-1,) * n + (1,)), Fraction(1), Fraction(2)))
        assert cert.is_pisot
        assert cert.status == "certified"

    @pytest.mark.parametrize("n", range(2, 21))
    def test_roots_of_two(self, n):
        cert = is_pisot(isolate_root(IntPolynomial((-2,) + (0,) * (n - 1) + (1,)), Fraction(1), Fraction(2)))
        assert not cert.is_pisot
        assert cert.status == "certified"
        assert cert.max_modulus == pytest.approx(2 ** (1 / n))

    @pytest.mark.parametrize("b", range(2, 21))
    def test_integers(self, b):
        assert integer_base(b).is_pisot

# betarec/algebraic/field.py
"""
Exact arithmetic in Q(beta) for an algebraic integer beta > 1.

Elements are coordinate vectors in the power basis 1, beta, ..., beta^(d-1).
Signs are decided by interval evaluation over a refined isolating interval
of beta; equality is coordinatewise and never needs refinement.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from ..errors import BaseSpecError, CapExceededError
from ..limits import get_limits
from .polynomial import AlgebraicReal

_X = sympy.Symbol("x")

Scalar = int | Fraction


@dataclass(frozen=True)
class BetaField:
    """The number field Q(beta), beta given as an AlgebraicReal with monic defining polynomial."""
    beta: AlgebraicReal

    def __post_init__(self):
        if not self.beta.defining.is_monic:
            raise BaseSpecError("beta must be an algebraic integer (monic defining polynomial)")

    @property
    def degree(self) -> int:
        return self.beta.defining.degree

    def element(self, coords) -> "FieldElement":
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) > self.degree:
            return _reduce(self, coords)
        return FieldElement(self, coords + (Fraction(0),) * (self.degree - len(coords)))

    def scalar(self, value: Scalar) -> "FieldElement":
        return self.element((Fraction(value),))

    @property
    def zero(self) -> "FieldElement":
        return self.scalar(0)

    @property
    def one(self) -> "FieldElement":
        return self.scalar(1)

    @property
    def gen(self) -> "FieldElement":
        """beta itself."""
        if self.degree == 1:
            return self.scalar(-self.beta.defining.coefficients[0])
        return self.element((0, 1))

    def power(self, k: int) -> "FieldElement":
        return self.gen**k


def _reduce(field: BetaField, coeffs: tuple[Fraction, ...]) -> "FieldElement":
    d = field.degree
    low = field.beta.defining.coefficients[:-1]
    buf = list(coeffs)
    for k in range(len(buf) - 1, d - 1, -1):
        c = buf[k]
        if c:
            buf[k] = Fraction(0)
            for i, ci in enumerate(low):
                if ci:
                    buf[k - d + i] -= c * ci
    buf = buf[:d] + [Fraction(0)] * (d - len(buf[:d]))
    return FieldElement(field, tuple(buf))


@dataclass(frozen=True)
class FieldElement:
    """
    An exact element of Q(beta).

    Attributes:
        field: Ambient field
        coords: Rational coordinates in the power basis, length = degree
    """
    field: BetaField
    coords: tuple[Fraction, ...]

    # ── Arithmetic ─────────────────────────────────────────

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise BaseSpecError("elements of different fields")
            return other
        if isinstance(other, int | Fraction):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        return _reduce(self.field, tuple(prod))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in Q(beta)")
        if self.field.degree == 1:
            return self.field.scalar(1 / self.coords[0])
        p = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coords)], _X,
                       domain=sympy.QQ)
        m = self.field.beta.defining.to_sympy().set_domain(sympy.QQ)
        inv = sympy.invert(p, m)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        return self.field.element(coeffs)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.scalar(other) * self.inverse()

    def __pow__(self, k: int) -> "FieldElement":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ── Order ──────────────────────────────────────────────

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def sign(self) -> int:
        return _sign(self.field, self.coords)

    def compare(self, other) -> int:
        """-1, 0, 1 as self <, =, > other."""
        return (self - other).sign()

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def floor(self) -> int:
        lo, _ = _enclosure(self.field, self.coords, 16)
        n = math.floor(lo)
        while self.compare(n) < 0:
            n -= 1
        while self.compare(n + 1) >= 0:
            n += 1
        return n

    def ceil(self) -> int:
        return -((-self).floor())

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def is_integer_element(self) -> bool:
        """Whether the element lies in Z[beta]."""
        return all(c.denominator == 1 for c in self.coords)

    def approx(self, digits: int = 30) -> Fraction:
        steps = 16
        while True:
            lo, hi = _enclosure(self.field, self.coords, steps)
            if hi - lo <= Fraction(1, 10**digits) or steps > get_limits().refine_cap:
                return (lo + hi) / 2
            steps *= 2

    def __float__(self) -> float:
        return float(self.approx(20))

    def format(self) -> str:
        """CLI syntax q:[c0,c1,...]."""
        return "q:[" + ",".join(str(c) for c in self.coords) + "]"

    def __repr__(self) -> str:
        return f"FieldElement({self.format()}~{float(self):.6g})"


def _enclosure(field: BetaField, coords: tuple[Fraction, ...], steps: int) -> tuple[Fraction, Fraction]:
    """Interval containing the value, from beta's interval after `steps` bisections."""
    lo_b, hi_b = field.beta.interval(steps)
    lo_b = max(lo_b, Fraction(0))
    lo = hi = Fraction(0)
    p_lo = p_hi = Fraction(1)
    for c in coords:
        if c > 0:
            lo += c * p_lo
            hi += c * p_hi
        elif c < 0:
            lo += c * p_hi
            hi += c * p_lo
        p_lo *= lo_b
        p_hi *= hi_b
    return lo, hi


@lru_cache(maxsize=1 << 16)
def _sign(field: BetaField, coords: tuple[Fraction, ...]) -> int:
    if not any(coords):
        return 0
    if not any(coords[1:]):
        return (coords[0] > 0) - (coords[0] < 0)
    cap = get_limits().refine_cap
    steps = 8
    while steps <= cap:
        lo, hi = _enclosure(field, coords, steps)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        steps *= 2
    raise CapExceededError("sign determination", cap, steps)


def parse_element(field: BetaField, text: str) -> FieldElement:
    """Parse `q:[c0,c1,...]` or a plain rational like `1/2`."""
    text = text.strip()
    if text.startswith("q:"):
        body = text[2:].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise BaseSpecError(f"bad field element {text!r}")
        parts = [p for p in body[1:-1].split(",") if p.strip()]
        return field.element([Fraction(p.strip()) for p in parts])
    try:
        return field.scalar(Fraction(text))
    except (ValueError, ZeroDivisionError) as e:
        raise BaseSpecError(f"bad field element {text!r}") from e

# betarec/algebraic/polynomial.py
"""
Integer polynomials and real algebraic numbers given by isolating intervals.

Coefficients are stored lowest degree first. Interval refinement is plain
bisection over exact rationals; sympy is used for the questions bisection
cannot answer (irreducibility, root counting); mpmath gives the conjugate
discs used by the Pisot test.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
import sympy

from ..errors import BaseSpecError, CapExceededError

_X = sympy.Symbol("x")


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, lowest degree first."""
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) < 2:
            raise BaseSpecError("polynomial must have degree >= 1")
        if self.coefficients[-1] == 0:
            raise BaseSpecError("leading coefficient must be nonzero")

    @classmethod
    def of(cls, *coefficients: int) -> "IntPolynomial":
        return cls(tuple(int(c) for c in coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return self.coefficients[-1] == 1

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def to_sympy(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.coefficients)), _X, domain=sympy.ZZ)

    def is_irreducible(self) -> bool:
        return bool(self.to_sympy().is_irreducible)

    def count_roots(self, lo: Fraction, hi: Fraction) -> int:
        """Number of real roots in the closed interval [lo, hi]."""
        return int(self.to_sympy().count_roots(sympy.Rational(lo.numerator, lo.denominator),
                                               sympy.Rational(hi.numerator, hi.denominator)))

    @property
    def is_reciprocal(self) -> bool:
        """x^n p(1/x) = ±p(x): roots come in pairs z, 1/z."""
        c = self.coefficients
        flipped = tuple(reversed(c))
        return c == flipped or c == tuple(-x for x in flipped)

    def root_discs(self, digits: int = 50) -> list[tuple[mpmath.mpc, mpmath.mpf]] | None:
        """
        Approximate roots with inclusion radii n|p(z)/p'(z)|; each disc holds
        a root, and pairwise disjoint discs hold one root each.

        Returns:
            (center, radius) per root, or None when the iteration did not
            converge at `digits` or two discs overlap
        """
        n = self.degree
        coeffs = [int(c) for c in reversed(self.coefficients)]
        with mpmath.workdps(digits):
            try:
                roots = mpmath.polyroots(coeffs, maxsteps=max(50, 4 * digits), extraprec=digits)
            except mpmath.NoConvergence:
                return None
        discs = []
        with mpmath.workdps(2 * digits):
            for z in roots:
                value, slope = mpmath.polyval(coeffs, mpmath.mpc(z), derivative=True)
                if slope == 0:
                    return None
                discs.append((mpmath.mpc(z), n * abs(value) / abs(slope)))
            for i, (z, r) in enumerate(discs):
                for w, s in discs[i + 1 :]:
                    if abs(z - w) <= r + s:
                        return None
        return discs

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x^{i}")
        return " + ".join(reversed(terms)) or "0"


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


@lru_cache(maxsize=4096)
def _bisect(coefficients: tuple[int, ...], lo: Fraction, hi: Fraction, steps: int) -> tuple[Fraction, Fraction]:
    poly = IntPolynomial(coefficients)
    s_lo = _sign(poly(lo))
    for _ in range(steps):
        if lo == hi:
            break
        mid = (lo + hi) / 2
        s_mid = _sign(poly(mid))
        if s_mid == 0:
            return mid, mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


@dataclass(frozen=True)
class AlgebraicReal:
    """
    A real root of `defining`, pinned down by an isolating interval.

    Attributes:
        defining: Polynomial vanishing at the number
        lo, hi: Rational bounds with exactly one root of `defining` in [lo, hi]
    """
    defining: IntPolynomial
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise BaseSpecError(f"empty isolating interval [{self.lo}, {self.hi}]")
        if self.lo != self.hi:
            p_lo, p_hi = self.defining(self.lo), self.defining(self.hi)
            if p_lo * p_hi > 0:
                raise BaseSpecError("isolating interval has no sign change")

    @property
    def is_rational(self) -> bool:
        return self.lo == self.hi

    def interval(self, steps: int) -> tuple[Fraction, Fraction]:
        """Interval after `steps` bisections (cached)."""
        if self.is_rational:
            return self.lo, self.hi
        return _bisect(self.defining.coefficients, self.lo, self.hi, steps)

    def refine(self, width: Fraction, cap: int = 1_000_000) -> "AlgebraicReal":
        """New value with an isolating interval no wider than `width`."""
        steps = 0
        lo, hi = self.lo, self.hi
        while hi - lo > width:
            steps += 32
            if steps > cap:
                raise CapExceededError("interval refinement", cap, steps)
            lo, hi = self.interval(steps)
        return AlgebraicReal(self.defining, lo, hi)

    def approx(self, digits: int = 30) -> Fraction:
        r = self.refine(Fraction(1, 10**digits))
        return (r.lo + r.hi) / 2

    def __float__(self) -> float:
        return float(self.approx(20))


def isolate_root(poly: IntPolynomial, lo: Fraction, hi: Fraction) -> AlgebraicReal:
    """
    Isolate the unique root of `poly` in [lo, hi].

    Raises:
        BaseSpecError: zero or several roots in the interval
    """
    count = poly.count_roots(lo, hi)
    if count != 1:
        raise BaseSpecError(f"expected exactly one real root in [{lo}, {hi}], found {count}")
    if poly(lo) == 0:
        return AlgebraicReal(poly, lo, lo)
    if poly(hi) == 0:
        return AlgebraicReal(poly, hi, hi)
    return AlgebraicReal(poly, lo, hi)

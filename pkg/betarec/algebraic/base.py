# betarec/algebraic/base.py
"""
Base profiles: a real algebraic integer beta > 1 with its classification.

A profile carries the field Q(beta), the canonical alphabet {0..ceil(beta)-1},
the Pisot certificate and the Parry class computed from the greedy orbit of 1.
"""

import logging
import math
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING

import mpmath
import sympy

from ..errors import BaseSpecError, NotParryError
from ..limits import get_limits
from .field import BetaField, FieldElement
from .polynomial import AlgebraicReal, IntPolynomial, isolate_root

if TYPE_CHECKING:
    from ..numeration.words import EventuallyPeriodicWord

logger = logging.getLogger(__name__)

# precision range of the conjugate discs, in decimal digits
_PISOT_DIGITS = 50
_PISOT_MAX_DIGITS = 1600


class ParryClass(str, Enum):
    SIMPLE = "simple"
    NON_SIMPLE = "non_simple"
    NOT_PARRY = "not_parry"
    UNKNOWN = "unknown(cap)"


@dataclass(frozen=True)
class PisotCertificate:
    is_pisot: bool
    status: str  # "certified" | "boundary" | "trivial"
    max_modulus: float


@dataclass(frozen=True)
class BaseProfile:
    """
    A numeration base.

    Attributes:
        beta: The base as an algebraic real
        field: Q(beta)
        pisot: Pisot certificate
        parry_class: Simple / non-simple Parry, or unknown when the orbit cap was hit
        renyi_digits: Greedy digits of 1 after the point, as (preperiod, period);
            period is () for a finite expansion
        renyi_star: d*_beta(1), or None when the class is unknown
    """
    beta: AlgebraicReal
    field: BetaField
    pisot: PisotCertificate
    parry_class: ParryClass
    renyi_digits: tuple[tuple[int, ...], tuple[int, ...]] | None
    renyi_star: "EventuallyPeriodicWord | None" = field(default=None, compare=False)

    @property
    def is_pisot(self) -> bool:
        return self.pisot.is_pisot

    @property
    def is_parry(self) -> bool:
        return self.parry_class in (ParryClass.SIMPLE, ParryClass.NON_SIMPLE)

    @property
    def is_integer(self) -> bool:
        return self.field.degree == 1

    @property
    def value(self) -> FieldElement:
        return self.field.gen

    @property
    def canonical_max(self) -> int:
        """ceil(beta) - 1, the largest canonical digit."""
        return self.value.ceil() - 1

    @property
    def canonical_alphabet(self) -> tuple[int, ...]:
        return tuple(range(self.canonical_max + 1))

    @property
    def signed_alphabet(self) -> tuple[int, ...]:
        m = self.canonical_max
        return tuple(range(-m, m + 1))

    def element(self, coords) -> FieldElement:
        return self.field.element(coords)

    def power(self, k: int) -> "BaseProfile":
        """Profile of beta^k, itself represented in its own power basis."""
        if k < 1:
            raise BaseSpecError("power must be >= 1")
        if k == 1:
            return self
        return _power_profile(self, k)

    def require_parry(self) -> None:
        if not self.is_parry:
            raise NotParryError(f"base {self.describe()} is not (detectably) Parry: {self.parry_class.value}")

    def require_pisot(self) -> None:
        from ..errors import NotPisotError

        if not self.is_pisot:
            raise NotPisotError(f"base {self.describe()} is not Pisot")

    def describe(self) -> str:
        if self.is_integer:
            return f"int:{self.value.coords[0]}"
        coeffs = ",".join(str(c) for c in self.beta.defining.coefficients)
        return f"poly:{coeffs}@({self.beta.lo},{self.beta.hi})"

    def __str__(self) -> str:
        return self.describe()


# ── Classification ─────────────────────────────────────────


def _conjugate_discs(beta: AlgebraicReal, digits: int) -> list[tuple[mpmath.mpc, mpmath.mpf]] | None:
    """Discs of the roots other than beta, or None when beta's disc is not pinned down."""
    discs = beta.defining.root_discs(digits)
    if discs is None:
        return None
    with mpmath.workdps(2 * digits):
        lo = mpmath.mpf(beta.lo.numerator) / beta.lo.denominator
        hi = mpmath.mpf(beta.hi.numerator) / beta.hi.denominator
        hits = [
            i for i, (z, r) in enumerate(discs) if abs(z.imag) <= r and lo - r <= z.real <= hi + r
        ]
    if len(hits) != 1:
        return None
    return [d for i, d in enumerate(discs) if i != hits[0]]


def _refined_discs(beta: AlgebraicReal, digits: int = _PISOT_DIGITS):
    """Conjugate discs at doubling precision, up to _PISOT_MAX_DIGITS."""
    while digits <= _PISOT_MAX_DIGITS:
        discs = _conjugate_discs(beta, digits)
        if discs is not None:
            yield digits, discs
        digits *= 2


def conjugate_moduli(beta: AlgebraicReal, digits: int = _PISOT_DIGITS) -> list[float]:
    """Moduli of the conjugates of beta other than beta itself, largest first."""
    for _, discs in _refined_discs(beta, digits):
        return sorted((float(abs(z)) for z, _ in discs), reverse=True)
    raise BaseSpecError(f"could not isolate the roots of {beta.defining}")


def is_pisot(beta: AlgebraicReal) -> PisotCertificate:
    """
    Pisot test: every conjugate other than beta has modulus < 1.

    Each conjugate is enclosed in a disc; precision doubles until no disc
    meets the unit circle. A reciprocal polynomial of degree > 2 pairs every
    conjugate z with 1/z, so one of them has modulus >= 1. Discs still meeting
    the circle at the precision cap give status "boundary", answered False.
    """
    poly = beta.defining
    if not poly.is_monic:
        raise BaseSpecError("Pisot test needs a monic polynomial")
    if poly.degree == 1:
        return PisotCertificate(True, "trivial", 0.0)
    if poly.degree > 2 and poly.is_reciprocal:
        return PisotCertificate(False, "certified", conjugate_moduli(beta)[0])
    top = math.nan
    for digits, discs in _refined_discs(beta):
        with mpmath.workdps(2 * digits):
            top = float(max(abs(z) for z, _ in discs))
            if all(abs(abs(z) - 1) > r for z, r in discs):
                return PisotCertificate(all(abs(z) < 1 for z, _ in discs), "certified", top)
        logger.debug(f"Conjugate discs of {poly} meet the unit circle at {digits} digits")
    logger.warning(f"Pisot test for {poly} undecided at {_PISOT_MAX_DIGITS} digits")
    return PisotCertificate(False, "boundary", top)


def _renyi_orbit(fld: BetaField, cap: int) -> tuple[ParryClass, tuple[tuple[int, ...], tuple[int, ...]] | None]:
    """Greedy digits of 1: t_i = floor(beta r_{i-1}), r_i = beta r_{i-1} - t_i, r_0 = 1."""
    beta = fld.gen
    r = fld.one
    seen: dict[FieldElement, int] = {}
    digits: list[int] = []
    for i in range(cap):
        if r.is_zero and i > 0:
            return ParryClass.SIMPLE, (tuple(digits), ())
        if i > 0:
            if r in seen:
                j = seen[r]
                return ParryClass.NON_SIMPLE, (tuple(digits[:j]), tuple(digits[j:]))
            seen[r] = i
        y = beta * r
        t = y.floor()
        digits.append(t)
        r = y - t
    return ParryClass.UNKNOWN, None


def _quasi_greedy(digits: tuple[tuple[int, ...], tuple[int, ...]]):
    from ..numeration.words import EventuallyPeriodicWord

    pre, per = digits
    if per:
        return EventuallyPeriodicWord.of(pre, per)
    finite = list(pre)
    finite[-1] -= 1
    return EventuallyPeriodicWord.of((), tuple(finite))


def _build_profile(beta: AlgebraicReal) -> BaseProfile:
    fld = BetaField(beta)
    if fld.gen.compare(1) <= 0:
        raise BaseSpecError("base must be > 1")
    cert = is_pisot(beta)
    parry, digits = _renyi_orbit(fld, get_limits().orbit_cap)
    star = _quasi_greedy(digits) if digits is not None else None
    profile = BaseProfile(beta, fld, cert, parry, digits, star)
    logger.info(f"Base {profile.describe()}: pisot={cert.is_pisot} parry={parry.value}")
    return profile


def make_base(defining: IntPolynomial, root_selector: tuple[Fraction, Fraction]) -> BaseProfile:
    """
    Build a base profile from a monic irreducible polynomial and a rational
    interval selecting its unique real root > 1.

    Raises:
        BaseSpecError: non-monic, reducible, or no unique root > 1 in the selector
    """
    if not defining.is_monic:
        raise BaseSpecError(f"polynomial {defining} is not monic")
    if not defining.is_irreducible():
        raise BaseSpecError(f"polynomial {defining} is reducible")
    lo, hi = (Fraction(v) for v in root_selector)
    if defining.degree == 1:
        root = Fraction(-defining.coefficients[0])
        if not lo <= root <= hi or root <= 1:
            raise BaseSpecError(f"no root > 1 of {defining} in [{lo}, {hi}]")
        return _cached_profile(AlgebraicReal(defining, root, root))
    lo = max(lo, Fraction(1))
    if hi <= lo:
        raise BaseSpecError("root selector does not meet (1, +inf)")
    if defining(lo) == 0 and defining.degree > 1:
        raise BaseSpecError("root selector endpoint is a root")
    beta = isolate_root(defining, lo, hi)
    if beta.is_rational and beta.lo <= 1:
        raise BaseSpecError("base must be > 1")
    return _cached_profile(beta)


@lru_cache(maxsize=64)
def _cached_profile(beta: AlgebraicReal) -> BaseProfile:
    return _build_profile(beta)


def integer_base(b: int) -> BaseProfile:
    if b < 2:
        raise BaseSpecError(f"integer base must be >= 2, got {b}")
    return make_base(IntPolynomial.of(-b, 1), (Fraction(b), Fraction(b)))


def golden_base() -> BaseProfile:
    return make_base(IntPolynomial.of(-1, -1, 1), (Fraction(1), Fraction(2)))


def tribonacci_base() -> BaseProfile:
    return make_base(IntPolynomial.of(-1, -1, -1, 1), (Fraction(1), Fraction(2)))


@lru_cache(maxsize=32)
def _power_profile(base: BaseProfile, k: int) -> BaseProfile:
    if base.is_integer:
        return integer_base(base.value.coords[0].numerator ** k)
    x = sympy.Symbol("x")
    alpha = sympy.CRootOf(base.beta.defining.to_sympy().as_expr(), _root_index(base))
    minpoly = sympy.Poly(sympy.minimal_polynomial(alpha**k, x), x)
    coeffs = tuple(int(c) for c in reversed(minpoly.all_coeffs()))
    poly = IntPolynomial(coeffs)
    lo, hi = base.beta.lo ** k, base.beta.hi ** k
    steps = 0
    while poly.count_roots(lo, hi) != 1:
        steps += 8
        a, b = base.beta.interval(steps)
        lo, hi = a**k, b**k
    return make_base(poly, (lo, hi))


def _root_index(base: BaseProfile) -> int:
    """Index of beta among the real roots in sympy's CRootOf ordering."""
    poly = base.beta.defining
    bound = 1 + max(abs(c) for c in poly.coefficients)
    return poly.count_roots(Fraction(-bound), base.beta.lo)


# ── Comparison & independence ─────────────────────────────


def compare(a: FieldElement, b: FieldElement) -> int:
    """Exact trichotomy: -1 (LT), 0 (EQ), 1 (GT)."""
    if a.field != b.field:
        raise BaseSpecError("mismatched bases")
    return a.compare(b)


def _primitive_root(n: int) -> int:
    factors = sympy.factorint(n)
    g = 0
    for e in factors.values():
        g = math.gcd(g, e)
    root = 1
    for p, e in factors.items():
        root *= p ** (e // g)
    return root


def is_mult_independent(b: int, b2: int) -> bool:
    """Integers b, b2 >= 2 are multiplicatively dependent iff they are powers of one integer."""
    if b < 2 or b2 < 2:
        raise BaseSpecError("multiplicative independence needs integers >= 2")
    return _primitive_root(b) != _primitive_root(b2)


# ── Base strings ───────────────────────────────────────────

_POLY_RE = re.compile(r"^poly:\s*([-+0-9,\s]+)@\(\s*([-0-9/.]+)\s*,\s*([-0-9/.]+)\s*\)$")


def parse_base(text: str) -> BaseProfile:
    """Parse `int:<b>` or `poly:<c0,c1,...,1>@(<lo>,<hi>)`."""
    text = text.strip()
    if text.startswith("int:"):
        try:
            return integer_base(int(text[4:]))
        except ValueError as e:
            raise BaseSpecError(f"bad integer base {text!r}") from e
    m = _POLY_RE.match(text)
    if not m:
        raise BaseSpecError(f"bad base specification {text!r}")
    coeffs = tuple(int(c) for c in m.group(1).split(",") if c.strip())
    return make_base(IntPolynomial(coeffs), (Fraction(m.group(2)), Fraction(m.group(3))))

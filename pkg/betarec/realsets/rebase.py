# betarec/realsets/rebase.py
"""
Change of base between beta and beta^k.

A word W over the digits of beta^k is read in base beta through the morphism
zeta_k: i -> 0^(k-1) i (the star is kept): digit W_j lands at position kj, so
val_beta(zeta_k(W)) = val_{beta^k}(W). Going up pairs such images with the
points of X and pulls back through zeta_k; going down pushes X through zeta_k
and normalizes by value equality.
"""

import logging
from fractions import Fraction

import sympy

from ..algebraic.base import BaseProfile
from ..algebraic.field import FieldElement
from ..automata.buchi import is_star, star
from ..automata.ops import intersect, inverse_map, map_alphabet, project, pullback
from ..errors import AlphabetError, BaseSpecError
from .constructions import DOWN, UP, track_pairs
from .model import RealSetAutomaton, set_alphabet, zero_column
from .padding import settle

logger = logging.getLogger(__name__)


def _zeta(big: BaseProfile, n: int, k: int) -> dict:
    zero = zero_column(n)
    image = {col: (zero,) * (k - 1) + (col,) for col in set_alphabet(big, n) if not is_star(col)}
    image[star(n)] = (star(n),)
    return image


def to_power_field(x: FieldElement, base: BaseProfile, k: int) -> FieldElement:
    """
    The same real number as an element of Q(beta^k), in the power basis of beta^k.

    Raises:
        AlphabetError: x does not lie in Q(beta^k)
    """
    big = base.power(k)
    gamma = base.value**k
    d = big.field.degree
    powers = [gamma**j for j in range(d)]
    matrix = sympy.Matrix(base.field.degree, d, lambda i, j: sympy.Rational(str(powers[j].coords[i])))
    rhs = sympy.Matrix([sympy.Rational(str(c)) for c in x.coords])
    try:
        solution, params = matrix.gauss_jordan_solve(rhs)
    except ValueError as e:
        raise AlphabetError(f"{x.format()} is not in Q(beta^{k})") from e
    if params.shape[0]:
        raise AlphabetError(f"degenerate basis for Q(beta^{k})")
    return big.field.element([Fraction(int(v.p), int(v.q)) for v in solution])


def from_power_field(y: FieldElement, base: BaseProfile, k: int) -> FieldElement:
    """Inverse of to_power_field."""
    gamma = base.value**k
    acc = base.field.zero
    for j, c in enumerate(y.coords):
        acc = acc + gamma**j * c
    return acc


def rebase_power(
    x: RealSetAutomaton,
    k: int,
    direction: str = UP,
    root: BaseProfile | None = None,
    cap: int | None = None,
) -> RealSetAutomaton:
    """
    The same set, recognized in base beta^k (up) or in base beta (down).

    Args:
        x: Set over beta (up) or over beta^k (down)
        k: Exponent, >= 1
        direction: "up" (beta -> beta^k) or "down" (beta^k -> beta)
        root: The base beta, required for "down"

    Raises:
        NotPisotError: the small base is not Pisot
        BaseSpecError: root^k is not the base of x
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if direction not in (UP, DOWN):
        raise ValueError(f"direction must be {UP!r} or {DOWN!r}, got {direction!r}")
    if k == 1:
        return x
    n = x.arity
    if direction == UP:
        small, big = x.base, x.base.power(k)
    else:
        if root is None:
            raise BaseSpecError("rebasing down needs the root base")
        small, big = root, x.base
        if small.power(k) != big:
            raise BaseSpecError(f"{big} is not the {k}-th power of {small}")
    small.require_pisot()
    m = big.canonical_max
    wide = range(-m, m + 1)
    zeros = [small.field.zero] * n
    zeta = _zeta(big, n, k)

    if direction == UP:
        # (w, x) with val_beta(w) = val_beta(x), x in X; keep w, pull back through zeta_k
        pairs = track_pairs(small, n, zeros, wide, cap)
        lifted = pullback(x.machine, pairs.alphabet, lambda s: s[n:])
        images = project(intersect(pairs, lifted, cap), range(n))
        result = settle(big, n, inverse_map(images, zeta, set_alphabet(big, n)), cap)
    else:
        images = map_alphabet(x.machine, {sym: zeta[sym] for sym in x.machine.alphabet})
        pairs = track_pairs(small, n, zeros, wide, cap)
        lifted = pullback(images, pairs.alphabet, lambda s: s[:n])
        result = settle(small, n, project(intersect(pairs, lifted, cap), range(n, 2 * n)), cap)
    logger.info(f"Rebased {direction} by k={k}: {x.n_states} -> {result.n_states} states")
    return result

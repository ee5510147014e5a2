# betarec/logic/helpers.py
"""
Derived predicates, written in the base language with 1, <=, + and X_beta.
Bound variables are named after the arguments, so nesting two builders on
distinct variables never captures.
"""

from ..realsets.linear import Relation
from .ast import And, DigitAt, Equal, Exists, Forall, Formula, Implies, Less, Linear, Not, conjunction


def power_of_base(x: str) -> Formula:
    """x = beta^i for some integer i: x carries a 1 at its own position."""
    p = f"{x}_p"
    return Exists(p, And(DigitAt(1, x, p), Equal(x, p)))


def negative_power(y: str) -> Formula:
    return And(power_of_base(y), Linear.of(((y, 1),), -1, Relation.LT))


def beta_integer(z: str) -> Formula:
    """z has no nonzero digit below the star."""
    y = f"{z}_y"
    return Forall(y, Implies(negative_power(y), DigitAt(0, z, y)))


def next_power(b: str, e: str) -> Formula:
    """e = beta * b with b a power of beta."""
    c = f"{b}_{e}_c"
    between = And(Less(b, c), Less(c, e))
    return conjunction([
        power_of_base(b),
        power_of_base(e),
        Less(b, e),
        Forall(c, Implies(power_of_base(c), Not(between))),
    ])


def previous_power(c: str, d: str) -> Formula:
    """d = c / beta with c a power of beta."""
    return next_power(d, c)


def times_base(x: str, y: str, digits) -> Formula:
    """
    y = beta * x: every digit of x moves one position up.

    Args:
        digits: The signed digit alphabet of the base
    """
    b, e = f"{x}_{y}_b", f"{x}_{y}_e"
    moves = [Implies(DigitAt(a, x, b), Exists(e, And(next_power(b, e), DigitAt(a, y, e)))) for a in digits]
    return Forall(b, Implies(power_of_base(b), conjunction(moves)))

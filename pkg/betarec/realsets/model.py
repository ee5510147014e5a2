# betarec/realsets/model.py
"""
RealSetAutomaton: a Büchi automaton over synchronized signed digit columns
together with the base and the padding convention it follows.
"""

from dataclasses import dataclass, replace
from enum import Enum
from itertools import product

from ..algebraic.base import BaseProfile
from ..algebraic.field import FieldElement
from ..automata.buchi import BuchiAutomaton, Symbol, star
from ..errors import AlphabetError


class PaddingMode(str, Enum):
    """How many representations of a point the machine accepts."""
    EXACT = "exact"  # d_beta(x) only, minimal padding
    ZERO_PADDED = "zero_padded"  # every admissible-closure representation, any number of leading zeros


@dataclass(frozen=True)
class RealSetAutomaton:
    """
    A beta-recognizable subset of R^n.

    Attributes:
        base: Numeration base
        arity: Dimension n
        machine: Automaton over signed digit columns and the star column
        padding_mode: Acceptance convention
    """
    base: BaseProfile
    arity: int
    machine: BuchiAutomaton
    padding_mode: PaddingMode = PaddingMode.ZERO_PADDED

    def __post_init__(self):
        if self.arity < 1:
            raise AlphabetError(f"arity must be >= 1, got {self.arity}")
        if self.machine.alphabet and self.machine.arity != self.arity:
            raise AlphabetError(f"machine reads arity {self.machine.arity}, set declares {self.arity}")

    def with_machine(self, machine: BuchiAutomaton, padding_mode: PaddingMode | None = None) -> "RealSetAutomaton":
        return replace(self, machine=machine, padding_mode=padding_mode or self.padding_mode)

    @property
    def n_states(self) -> int:
        return self.machine.n_states


def digit_columns(base: BaseProfile, n: int) -> list[Symbol]:
    """All columns of n signed canonical digits."""
    return list(product(base.signed_alphabet, repeat=n))


def set_alphabet(base: BaseProfile, n: int) -> list[Symbol]:
    """Signed digit columns plus the star column."""
    return digit_columns(base, n) + [star(n)]


def zero_column(n: int) -> Symbol:
    return (0,) * n


def coerce_point(base: BaseProfile, point) -> tuple[FieldElement, ...]:
    """
    Field elements of the base from a vector of FieldElements or rationals.

    Raises:
        AlphabetError: a component lives in another field
    """
    out = []
    for x in point:
        if isinstance(x, FieldElement):
            if x.field != base.field:
                raise AlphabetError(f"component {x!r} is not in Q(beta) of {base}")
            out.append(x)
        else:
            out.append(base.field.scalar(x))
    return tuple(out)

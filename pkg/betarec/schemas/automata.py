# betarec/schemas/automata.py
"""
JSON documents for automata, transducers and set automata.

Symbols are lists of integers, with "*" standing for a star component.
Every dump lists states, symbols and edges in sorted order, so equal
machines serialize to equal text.
"""

from pydantic import BaseModel, Field

from ..algebraic.base import parse_base
from ..algebraic.field import parse_element
from ..automata.buchi import BuchiAutomaton, Symbol
from ..realsets.model import PaddingMode, RealSetAutomaton
from ..transducers.letter import LetterTransducer

SymbolModel = list[int | str]


def symbol_to_json(x: Symbol) -> SymbolModel:
    return list(x)


def symbol_from_json(x: SymbolModel) -> Symbol:
    return tuple(d if d == "*" else int(d) for d in x)


class AutomatonModel(BaseModel):
    n_states: int = Field(description="States are 0..n_states-1")
    alphabet: list[SymbolModel]
    edges: list[tuple[int, SymbolModel, int]] = Field(description="(source, symbol, target)")
    initial: list[int]
    accepting: list[int]

    model_config = {"from_attributes": True}

    @classmethod
    def from_domain(cls, a: BuchiAutomaton) -> "AutomatonModel":
        return cls(
            n_states=a.n_states,
            alphabet=[symbol_to_json(x) for x in a.alphabet],
            edges=[(s, symbol_to_json(x), t) for s, x, t in a.edges],
            initial=sorted(a.initial),
            accepting=sorted(a.accepting),
        )

    def to_domain(self) -> BuchiAutomaton:
        return BuchiAutomaton.build(
            self.n_states,
            [symbol_from_json(x) for x in self.alphabet],
            [(s, symbol_from_json(x), t) for s, x, t in self.edges],
            self.initial,
            self.accepting,
        )


class TransducerModel(BaseModel):
    base: str | None = Field(default=None, description="Base of the state values, when there are any")
    n_states: int
    input_alphabet: list[SymbolModel]
    output_alphabet: list[SymbolModel]
    edges: list[tuple[int, SymbolModel, SymbolModel, int]] = Field(description="(source, input, output, target)")
    initial: list[int]
    accepting: list[int]
    initial_function: list[tuple[int, list[SymbolModel]]] = Field(default_factory=list)
    state_values: list[str] | None = Field(default=None, description="q:[...] value of each state")

    model_config = {"from_attributes": True}

    @classmethod
    def from_domain(cls, t: LetterTransducer, base=None) -> "TransducerModel":
        """
        Raises:
            ValueError: the transducer has state values and no base is given
        """
        if t.state_values is not None and base is None:
            raise ValueError("state values need a base")
        return cls(
            base=base.describe() if t.state_values is not None else None,
            n_states=t.n_states,
            input_alphabet=[symbol_to_json(x) for x in t.input_alphabet],
            output_alphabet=[symbol_to_json(x) for x in t.output_alphabet],
            edges=[(s, symbol_to_json(x), symbol_to_json(y), q) for s, x, y, q in t.edges],
            initial=sorted(t.initial),
            accepting=sorted(t.accepting),
            initial_function=[(q, [symbol_to_json(x) for x in w]) for q, w in t.initial_function],
            state_values=[v.format() for v in t.state_values] if t.state_values is not None else None,
        )

    def to_domain(self) -> LetterTransducer:
        values = None
        if self.state_values is not None:
            if self.base is None:
                raise ValueError("state values need a base")
            field = parse_base(self.base).field
            values = tuple(parse_element(field, v) for v in self.state_values)
        return LetterTransducer(
            self.n_states,
            tuple(symbol_from_json(x) for x in self.input_alphabet),
            tuple(symbol_from_json(x) for x in self.output_alphabet),
            tuple((s, symbol_from_json(x), symbol_from_json(y), q) for s, x, y, q in self.edges),
            frozenset(self.initial),
            frozenset(self.accepting),
            tuple((q, tuple(symbol_from_json(x) for x in w)) for q, w in self.initial_function),
            values,
        )


class RealSetModel(BaseModel):
    base: str = Field(description="int:<b> or poly:<coefficients>@(<lo>,<hi>)")
    arity: int
    padding_mode: PaddingMode = PaddingMode.ZERO_PADDED
    automaton: AutomatonModel

    model_config = {"from_attributes": True}

    @classmethod
    def from_domain(cls, x: RealSetAutomaton) -> "RealSetModel":
        return cls(
            base=x.base.describe(),
            arity=x.arity,
            padding_mode=x.padding_mode,
            automaton=AutomatonModel.from_domain(x.machine),
        )

    def to_domain(self) -> RealSetAutomaton:
        return RealSetAutomaton(parse_base(self.base), self.arity, self.automaton.to_domain(), self.padding_mode)

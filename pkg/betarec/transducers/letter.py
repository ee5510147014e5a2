# betarec/transducers/letter.py
"""
Letter-to-letter transducers, optionally with an initial function that emits
a finite output word before the first input symbol.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property

from ..algebraic.field import FieldElement
from ..automata.buchi import (
    BuchiAutomaton,
    Symbol,
    UltimatelyPeriodicWord,
    explore,
    lasso_samples,
    sort_symbols,
    symbol_key,
    trim,
)
from ..automata.export import dot_lines, format_symbol
from ..automata.ops import intersect, project, pullback
from ..errors import AlphabetError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LetterTransducer:
    """
    A letter-to-letter transducer.

    Attributes:
        n_states: States are 0..n_states-1
        input_alphabet: Input symbols (tuples of arity k)
        output_alphabet: Output symbols (tuples of arity m)
        edges: (source, input, output, target)
        initial: Plain initial states; ignored when initial_function is set
        accepting: Büchi accepting states
        initial_function: (state, pending output word) pairs
        state_values: Balance value of each state, for converters
    """
    n_states: int
    input_alphabet: tuple[Symbol, ...]
    output_alphabet: tuple[Symbol, ...]
    edges: tuple[tuple[int, Symbol, Symbol, int], ...]
    initial: frozenset[int]
    accepting: frozenset[int]
    initial_function: tuple[tuple[int, tuple[Symbol, ...]], ...] = ()
    state_values: tuple[FieldElement, ...] | None = field(default=None, compare=False)

    @classmethod
    def from_relation(
        cls,
        relation: BuchiAutomaton,
        input_arity: int,
        initial_function: dict[int, tuple[Symbol, ...]] | None = None,
        state_values: list[FieldElement] | None = None,
    ) -> "LetterTransducer":
        """Split the pair symbols of a relation automaton into input and output."""
        k = input_arity
        edges = tuple((s, x[:k], x[k:], t) for s, x, t in relation.edges)
        return cls(
            relation.n_states,
            sort_symbols(x[:k] for x in relation.alphabet),
            sort_symbols(x[k:] for x in relation.alphabet),
            edges,
            relation.initial,
            relation.accepting,
            tuple(sorted((initial_function or {}).items())),
            tuple(state_values) if state_values is not None else None,
        )

    @property
    def alpha(self) -> dict[int, tuple[Symbol, ...]]:
        return dict(self.initial_function)

    @property
    def start_states(self) -> frozenset[int]:
        return frozenset(self.alpha) if self.initial_function else self.initial

    @cached_property
    def _out(self) -> dict[int, list[tuple[Symbol, Symbol, int]]]:
        table: dict[int, list[tuple[Symbol, Symbol, int]]] = defaultdict(list)
        for s, x, y, t in self.edges:
            table[s].append((x, y, t))
        return table

    def out_edges(self, q: int) -> list[tuple[Symbol, Symbol, int]]:
        return self._out.get(q, [])

    @property
    def input_arity(self) -> int:
        return len(self.input_alphabet[0]) if self.input_alphabet else 0

    def value(self, q: int) -> FieldElement | None:
        return self.state_values[q] if self.state_values is not None else None

    def to_dot(self, name: str = "transducer") -> str:
        grouped: dict[tuple[int, int], list[tuple]] = defaultdict(list)
        for s, x, y, t in self.edges:
            grouped[(s, t)].append((x, y))
        labelled = {
            k: [f"{format_symbol(x)}|{format_symbol(y)}" for x, y in sorted(v, key=lambda p: symbol_key(p[0] + p[1]))]
            for k, v in grouped.items()
        }
        labels = None
        if self.state_values is not None:
            labels = [f"{q}: {float(v):.4g}" for q, v in enumerate(self.state_values)]
        lines = dot_lines(self.n_states, self.start_states, self.accepting, labelled, name, labels)
        return "\n".join(lines) + "\n"


def eliminate_initial_function(t: LetterTransducer) -> LetterTransducer:
    """
    Plain-initial transducer for the same relation. Each state carries the
    output still pending from the initial function; every step emits the head
    of that queue and appends the current output.
    """
    if not t.initial_function:
        return t
    k = t.input_arity

    def succ(node):
        q, pending = node
        for x, y, target in t.out_edges(q):
            if pending:
                yield x + pending[0], (target, pending[1:] + (y,))
            else:
                yield x + y, (target, ())

    roots = [(q, tuple(u)) for q, u in t.initial_function]
    # the queue head is any output letter or any letter of an initial word
    heads = set(t.output_alphabet) | {y for _, u in t.initial_function for y in u}
    alphabet = {x + y for x in t.input_alphabet for y in heads}
    relation, labels = explore(roots, succ, lambda node: node[0] in t.accepting, alphabet, None, "initial function")
    values = [t.value(q) for q, _ in labels] if t.state_values is not None else None
    result = LetterTransducer.from_relation(relation, k, None, values)
    logger.debug(f"Eliminated initial function: {t.n_states} -> {result.n_states} states")
    return result


def relation_automaton(t: LetterTransducer) -> BuchiAutomaton:
    """Büchi automaton over input+output symbols for the relation R_T."""
    t = eliminate_initial_function(t)
    return BuchiAutomaton.build(
        t.n_states,
        {x + y for _, x, y, _ in t.edges},
        [(s, x + y, q) for s, x, y, q in t.edges],
        t.initial,
        t.accepting,
    )


def apply(t: LetterTransducer, language: BuchiAutomaton) -> BuchiAutomaton:
    """
    The largest M with L × M ⊆ R_T, as an automaton over output symbols.

    Raises:
        AlphabetError: input arity of T differs from the arity of L
    """
    k = t.input_arity
    if language.alphabet and language.arity != k:
        raise AlphabetError(f"transducer reads arity {k}, language has arity {language.arity}")
    relation = relation_automaton(t)
    lifted = pullback(language, relation.alphabet, lambda x: x[:k])
    product = intersect(relation, lifted)
    m = relation.arity - k
    return trim(project(product, range(k, k + m)))


def word_automaton(word: UltimatelyPeriodicWord) -> BuchiAutomaton:
    """Single-word automaton: a chain for the prefix closing on the loop."""
    n_pre, n = len(word.prefix), len(word.prefix) + len(word.loop)
    edges = [(i, word[i], i + 1 if i + 1 < n else n_pre) for i in range(n)]
    return BuchiAutomaton.build(n, word.symbols(), edges, {0}, set(range(n_pre, n)))


def transduce_word(t: LetterTransducer, word: UltimatelyPeriodicWord, limit: int = 8) -> list[UltimatelyPeriodicWord]:
    """Outputs of T on one ultimately periodic input."""
    return lasso_samples(apply(t, word_automaton(word)), limit)

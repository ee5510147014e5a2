# betarec/logic/compiler.py
"""
Compilation of formulas to set automata, sentence decision and exact
evaluation of quantifier-free formulas at points.

Every subformula compiles to either a boolean (it has no free variables) or
a set automaton whose tracks are its free variables in sorted order. Binary
connectives cylindrify both sides to the merged variables first.
"""

import logging
from dataclasses import dataclass

from ..algebraic.base import BaseProfile
from ..algebraic.field import FieldElement
from ..automata.complement import Method
from ..errors import CapExceededError, UnboundVariableError
from ..numeration.expansion import greedy_expand
from ..realsets.algebra import complement_set, cylindrify, intersection, is_empty_set, project_set, union_set
from ..realsets.constructions import empty_set, member
from ..realsets.digits import digit_predicate
from ..realsets.linear import Relation, linear_relation
from ..realsets.model import RealSetAutomaton, coerce_point
from ..realsets.universe import universe
from .ast import (
    And,
    DigitAt,
    Exists,
    Forall,
    Formula,
    Implies,
    Linear,
    Not,
    Or,
    conjunction,
    disjunction,
    format_formula,
    walk,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Tracks:
    names: tuple[str, ...]
    set: RealSetAutomaton


_Result = bool | _Tracks


# ── Miniscoping ────────────────────────────────────────────


def _flatten(phi: Formula, node: type) -> list[Formula]:
    if isinstance(phi, node):
        return _flatten(phi.left, node) + _flatten(phi.right, node)
    return [phi]


def _scoped(var: str, parts: list[Formula], quantifier: type, joiner) -> Formula:
    inside = [p for p in parts if var in p.free_vars()]
    outside = [p for p in parts if var not in p.free_vars()]
    if not inside:
        return joiner(outside)
    bound = quantifier(var, joiner(inside))
    return joiner(outside + [bound]) if outside else bound


def miniscope(phi: Formula) -> Formula:
    """
    Push quantifiers inward: E distributes over | and skips conjuncts that do
    not mention its variable; A dually over & and |.
    """
    match phi:
        case Not(body=b):
            return Not(miniscope(b))
        case And(left=a, right=b):
            return And(miniscope(a), miniscope(b))
        case Or(left=a, right=b):
            return Or(miniscope(a), miniscope(b))
        case Implies(left=a, right=b):
            return Implies(miniscope(a), miniscope(b))
        case Exists(var=v, body=b):
            body = miniscope(b)
            if v not in body.free_vars():
                return body
            if isinstance(body, Or):
                return disjunction([miniscope(Exists(v, p)) for p in _flatten(body, Or)])
            if isinstance(body, And):
                return _scoped(v, _flatten(body, And), Exists, conjunction)
            return Exists(v, body)
        case Forall(var=v, body=b):
            body = miniscope(b)
            if v not in body.free_vars():
                return body
            if isinstance(body, And):
                return conjunction([miniscope(Forall(v, p)) for p in _flatten(body, And)])
            if isinstance(body, Or):
                return _scoped(v, _flatten(body, Or), Forall, disjunction)
            return Forall(v, body)
    return phi


# ── Compilation ────────────────────────────────────────────


class _Compiler:
    def __init__(self, base: BaseProfile, cap: int | None, method: Method):
        self.base = base
        self.cap = cap
        self.method = method
        self.digits: dict[int, RealSetAutomaton] = {}
        self.memo: dict[Formula, _Result] = {}

    def align(self, part: _Tracks, names: tuple[str, ...]) -> RealSetAutomaton:
        if part.names == names:
            return part.set
        return cylindrify(part.set, [names.index(v) for v in part.names], len(names))

    def run(self, phi: Formula) -> _Result:
        if phi not in self.memo:
            self.memo[phi] = self.compile(phi)
        return self.memo[phi]

    def compile(self, phi: Formula) -> _Result:
        match phi:
            case Linear():
                return self.linear(phi)
            case DigitAt(digit=a, x=x, y=y):
                if a not in self.digits:
                    self.digits[a] = digit_predicate(self.base, a)
                names = tuple(sorted({x, y}))
                return _Tracks(names, self.align(_Tracks((x, y), self.digits[a]), names))
            case Not(body=b):
                return self.negate(b)
            case And(left=a, right=b):
                return self.combine(self.run(a), self.run(b), conjunctive=True)
            case Or(left=a, right=b):
                return self.combine(self.run(a), self.run(b), conjunctive=False)
            case Implies(left=a, right=b):
                return self.combine(self.negate(a), self.run(b), conjunctive=False)
            case Exists(var=v, body=b):
                return self.project(v, self.run(b))
            case Forall(var=v, body=b):
                return self.negate(Exists(v, Not(b)))
        raise TypeError(f"not a formula: {phi!r}")

    def linear(self, phi: Linear) -> _Result:
        if not phi.terms:
            return phi.truth()
        order = sorted(range(len(phi.terms)), key=lambda i: phi.terms[i][0])
        names = tuple(phi.terms[i][0] for i in order)
        coeffs = tuple(phi.terms[i][1] for i in order)
        offset = self.base.field.scalar(phi.const)
        return _Tracks(names, linear_relation(self.base, coeffs, offset, phi.rel, self.cap))

    def negate(self, body: Formula) -> _Result:
        inner = self.run(body)
        if isinstance(inner, bool):
            return not inner
        try:
            return _Tracks(inner.names, complement_set(inner.set, self.cap, self.method))
        except CapExceededError as e:
            raise CapExceededError(f"complement of {format_formula(body)}", e.cap, e.required) from e

    def combine(self, left: _Result, right: _Result, conjunctive: bool) -> _Result:
        if isinstance(left, bool) or isinstance(right, bool):
            if isinstance(left, bool) and isinstance(right, bool):
                return (left and right) if conjunctive else (left or right)
            flag, other = (left, right) if isinstance(left, bool) else (right, left)
            return other if flag == conjunctive else flag
        names = tuple(sorted(set(left.names) | set(right.names)))
        a, b = self.align(left, names), self.align(right, names)
        merged = intersection(a, b, self.cap) if conjunctive else union_set(a, b, self.cap)
        return _Tracks(names, merged)

    def project(self, var: str, inner: _Result) -> _Result:
        if isinstance(inner, bool) or var not in inner.names:
            return inner
        if inner.names == (var,):
            return not is_empty_set(inner.set)
        keep = [i for i, v in enumerate(inner.names) if v != var]
        return _Tracks(tuple(inner.names[i] for i in keep), project_set(inner.set, keep, self.cap))


def compile_formula(
    phi: Formula,
    base: BaseProfile,
    cap: int | None = None,
    method: Method = "auto",
) -> RealSetAutomaton:
    """
    The set defined by phi, with one track per free variable in
    phi.free_vars() order. A sentence compiles over one dummy track to R or
    to the empty set.

    Raises:
        NotPisotError: base is not Pisot
        CapExceededError: a complement or a carry automaton hit its cap
    """
    base.require_pisot()
    names = phi.free_vars()
    scoped = miniscope(phi)
    result = _Compiler(base, cap, method).run(scoped)
    n = max(len(names), 1)
    if isinstance(result, bool):
        out = universe(base, n) if result else empty_set(base, n)
    elif result.names == names:
        out = result.set
    else:
        out = cylindrify(result.set, [names.index(v) for v in result.names], n)
    logger.info(f"Compiled formula with {len(names)} free variables over {base}: {out.n_states} states")
    return out


def decide_sentence(
    phi: Formula,
    base: BaseProfile,
    cap: int | None = None,
    method: Method = "auto",
) -> bool:
    """
    Truth of a sentence.

    Raises:
        UnboundVariableError: phi has free variables
    """
    free = phi.free_vars()
    if free:
        raise UnboundVariableError(f"not a sentence, free variables: {', '.join(free)}")
    return not is_empty_set(compile_formula(phi, base, cap, method))


# ── Exact evaluation ───────────────────────────────────────


def power_index(y: FieldElement, base: BaseProfile) -> int | None:
    """i with y = beta^i, or None when y is not a power of beta."""
    if y.sign() <= 0:
        return None
    w = greedy_expand(y, base)
    if y >= base.field.one:
        i = len(w.integer_part) - 1
    else:
        frac = w.fractional_part
        span = len(frac.preperiod) + len(frac.period)
        first = next((j for j in range(span) if frac[j] != 0), None)
        if first is None:
            return None
        i = -first - 1
    return i if base.value**i == y else None


def evaluate_linear(phi: Formula, point: dict, base: BaseProfile) -> bool:
    """
    Exact truth value of a quantifier-free formula under an assignment of
    field elements (or rationals) to its free variables.

    Raises:
        UnboundVariableError: a free variable without a value
        ValueError: phi has quantifiers
    """
    missing = [v for v in phi.free_vars() if v not in point]
    if missing:
        raise UnboundVariableError(f"no value for {', '.join(missing)}")
    values = dict(zip(point, coerce_point(base, list(point.values())), strict=True))
    return _evaluate(phi, values, base)


def _evaluate(phi: Formula, values: dict[str, FieldElement], base: BaseProfile) -> bool:
    match phi:
        case Linear():
            total = base.field.scalar(phi.const)
            for v, c in phi.terms:
                total = total + values[v] * c
            s = total.sign()
            return {
                Relation.EQ: s == 0,
                Relation.LT: s < 0,
                Relation.LEQ: s <= 0,
                Relation.GT: s > 0,
                Relation.GEQ: s >= 0,
            }[phi.rel]
        case DigitAt(digit=a, x=x, y=y):
            i = power_index(values[y], base)
            return i is not None and greedy_expand(values[x], base).digit_at(i) == a
        case Not(body=b):
            return not _evaluate(b, values, base)
        case And(left=a, right=b):
            return _evaluate(a, values, base) and _evaluate(b, values, base)
        case Or(left=a, right=b):
            return _evaluate(a, values, base) or _evaluate(b, values, base)
        case Implies(left=a, right=b):
            return not _evaluate(a, values, base) or _evaluate(b, values, base)
    raise ValueError(f"cannot evaluate quantified formula {format_formula(phi)}")


def evaluate(phi: Formula, point: dict, base: BaseProfile, cap: int | None = None) -> bool:
    """Truth value of any formula at a point: exact when quantifier-free, by compilation otherwise."""
    if not any(isinstance(node, Exists | Forall) for node in walk(phi)):
        return evaluate_linear(phi, point, base)
    names = phi.free_vars()
    compiled = compile_formula(phi, base, cap)
    if not names:
        return not is_empty_set(compiled)
    return member(compiled, [point[v] for v in names])

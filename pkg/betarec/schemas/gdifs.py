# betarec/schemas/gdifs.py
"""
JSON documents for GDIFS and kernel reports.
"""

from pydantic import BaseModel, Field

from ..algebraic.base import parse_base
from ..gdifs.kernel import KernelFamily, KernelStatus
from ..gdifs.model import Gdifs


class GdifsModel(BaseModel):
    base: str
    alphabet_c: int = Field(description="Translations are drawn from {-c..c}^arity")
    arity: int
    vertices: list[str]
    edges: list[tuple[str, str, list[int]]] = Field(description="(u, v, a): S_a(K_v) is part of K_u")
    selected: list[str]

    model_config = {"from_attributes": True}

    @classmethod
    def from_domain(cls, g: Gdifs) -> "GdifsModel":
        return cls(
            base=g.base.describe(),
            alphabet_c=g.c,
            arity=g.arity,
            vertices=[g.label(q) for q in range(g.n_vertices)],
            edges=[(g.label(u), g.label(v), list(a)) for u, v, a in g.edges],
            selected=[g.label(q) for q in sorted(g.selected)],
        )

    def to_domain(self) -> Gdifs:
        index = {name: i for i, name in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise ValueError("vertex names must be distinct")
        mentioned = {u for u, _, _ in self.edges} | {v for _, v, _ in self.edges} | set(self.selected)
        unknown = sorted(mentioned - set(index))
        if unknown:
            raise ValueError(f"unknown vertices {unknown}")
        edges = [(index[u], index[v], tuple(a)) for u, v, a in self.edges]
        return Gdifs.build(
            parse_base(self.base),
            self.alphabet_c,
            self.arity,
            len(self.vertices),
            edges,
            {index[q] for q in self.selected},
            self.vertices,
        )


class KernelClassModel(BaseModel):
    index: int
    depth: int
    offset: list[str] = Field(description="q:[...] components of the offset b")
    states: int
    empty: bool
    label: str | None = None


class KernelReport(BaseModel):
    base: str
    c: int
    status: KernelStatus
    classes: list[KernelClassModel]
    transitions: list[tuple[int, list[int], int]] = Field(description="(class, digit column, class)")

    model_config = {"from_attributes": True}

    @classmethod
    def from_domain(cls, family: KernelFamily) -> "KernelReport":
        return cls(
            base=family.base.describe(),
            c=family.c,
            status=family.status,
            classes=[
                KernelClassModel(
                    index=i,
                    depth=k.depth,
                    offset=[b.format() for b in k.offset],
                    states=k.set.n_states,
                    empty=k.is_empty,
                    label=k.label,
                )
                for i, k in enumerate(family.classes)
            ],
            transitions=[(i, list(a), j) for (i, a), j in sorted(family.transitions.items())],
        )

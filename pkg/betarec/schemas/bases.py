# betarec/schemas/bases.py

from pydantic import BaseModel, Field

from ..algebraic.base import BaseProfile, parse_base
from ..numeration.words import format_fraction


class BaseReport(BaseModel):
    base: str
    pisot: bool
    pisot_status: str = Field(description="certified, boundary or trivial")
    max_modulus: float = Field(description="Largest modulus among the other conjugates")
    parry: str
    canonical_alphabet: list[int]
    renyi: str | None = Field(default=None, description="d_beta(1) after the point")
    dstar: str | None = Field(default=None, description="d*_beta(1), the quasi-greedy expansion of 1")

    model_config = {"from_attributes": True}

    @classmethod
    def from_domain(cls, base: BaseProfile) -> "BaseReport":
        renyi = None
        if base.renyi_digits is not None:
            pre, per = base.renyi_digits
            renyi = "".join(map(str, pre)) + (f"({''.join(map(str, per))})" if per else "")
        return cls(
            base=base.describe(),
            pisot=base.is_pisot,
            pisot_status=base.pisot.status,
            max_modulus=base.pisot.max_modulus,
            parry=base.parry_class.value,
            canonical_alphabet=list(base.canonical_alphabet),
            renyi=renyi,
            dstar=format_fraction(base.renyi_star) if base.renyi_star is not None else None,
        )

    def to_domain(self) -> BaseProfile:
        return parse_base(self.base)

    def summary(self) -> str:
        """One line: pisot=<bool> parry=<class> dstar=<word>."""
        pisot = "true" if self.pisot else "false"
        return f"pisot={pisot} parry={self.parry} dstar={self.dstar or '-'}"

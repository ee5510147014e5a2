# betarec/algebraic/__init__.py
"""
Exact arithmetic and classification for real algebraic bases beta > 1.
"""

from .base import (
    BaseProfile,
    ParryClass,
    PisotCertificate,
    compare,
    conjugate_moduli,
    golden_base,
    integer_base,
    is_mult_independent,
    is_pisot,
    make_base,
    parse_base,
    tribonacci_base,
)
from .field import BetaField, FieldElement, parse_element
from .polynomial import AlgebraicReal, IntPolynomial, isolate_root

__all__ = [
    "AlgebraicReal",
    "BaseProfile",
    "BetaField",
    "FieldElement",
    "IntPolynomial",
    "ParryClass",
    "PisotCertificate",
    "compare",
    "conjugate_moduli",
    "golden_base",
    "integer_base",
    "is_mult_independent",
    "is_pisot",
    "isolate_root",
    "make_base",
    "parse_base",
    "parse_element",
    "tribonacci_base",
]

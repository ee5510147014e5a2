# betarec/schemas/__init__.py
"""
Pydantic documents for everything the command line reads and writes.
"""

from .automata import AutomatonModel, RealSetModel, TransducerModel, symbol_from_json, symbol_to_json
from .bases import BaseReport
from .gdifs import GdifsModel, KernelClassModel, KernelReport

__all__ = [
    "AutomatonModel",
    "BaseReport",
    "GdifsModel",
    "KernelClassModel",
    "KernelReport",
    "RealSetModel",
    "TransducerModel",
    "symbol_from_json",
    "symbol_to_json",
]

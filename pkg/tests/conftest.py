# tests/conftest.py

import pytest

from betarec.algebraic import golden_base, integer_base, tribonacci_base
from betarec.algebraic.base import BaseProfile


@pytest.fixture(scope="session")
def golden() -> BaseProfile:
    return golden_base()


@pytest.fixture(scope="session")
def tribonacci() -> BaseProfile:
    return tribonacci_base()


@pytest.fixture(scope="session")
def binary() -> BaseProfile:
    return integer_base(2)


@pytest.fixture(scope="session")
def ternary() -> BaseProfile:
    return integer_base(3)


@pytest.fixture
def phi(golden):
    """beta itself as a field element of the golden base."""
    return golden.field.gen

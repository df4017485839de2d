"""Finite Coxeter systems, the Solomon descent algebra, and exact
verification of its character-side identities."""

from ._coxsolomon import (
    CoxsolomonError,
    System,
    compare_fixture,
    fixture,
    fixture_names,
)

__all__ = [
    "CoxsolomonError",
    "System",
    "compare_fixture",
    "fixture",
    "fixture_names",
]

"""Exact extactic divisors of polynomial foliations."""

from ._core import (
    Error,
    HypothesisNotMetError,
    ParseError,
    Polynomial,
    ResourceGuardError,
    VectorField,
    bounds,
    check_invariance,
    corpus,
    extactic,
    first_integral,
    run_cli,
)

__all__ = [
    "Error",
    "HypothesisNotMetError",
    "ParseError",
    "Polynomial",
    "ResourceGuardError",
    "VectorField",
    "bounds",
    "check_invariance",
    "corpus",
    "extactic",
    "first_integral",
    "run_cli",
]

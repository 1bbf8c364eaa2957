"""Exact analysis of sender-receiver games with misaligned utilities.

Matrices are square nested sequences indexed U[recovered][source]. Entries may
be ints, Fractions or rational literals such as "1/3"; every rational result
comes back as a fractions.Fraction.
"""

from fractions import Fraction

from . import _core
from ._core import (
    DimensionError,
    DomainError,
    Error,
    IoError,
    ParseError,
    SizeLimitError,
    UnsupportedError,
    classify,
)

__all__ = [
    "DimensionError",
    "DomainError",
    "Error",
    "IoError",
    "ParseError",
    "SizeLimitError",
    "UnsupportedError",
    "class_existence",
    "classify",
    "classify_pi",
    "duality_report",
    "equilibrium_partitions",
    "extraction_capacity",
    "grid_search",
    "informativeness",
    "is_equilibrium",
    "max_recovery_sets",
    "min_best_response",
    "normalize",
    "strong_graph",
    "weak_graph",
    "worst_case_utility",
]


def _literal(x):
    if isinstance(x, str):
        return x
    if isinstance(x, float):
        raise TypeError("floats are inexact; pass a Fraction or a string literal")
    return str(Fraction(x))


def _table(rows):
    return [[_literal(x) for x in row] for row in rows]


def _fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def normalize(u):
    return _fractions(_core.normalize(_table(u)))


def strong_graph(u):
    return [tuple(e) for e in _core.strong_graph(_table(u))]


def weak_graph(u):
    return [tuple(e) for e in _core.weak_graph(_table(u))]


def informativeness(u):
    return _core.informativeness(_table(u))


def extraction_capacity(u):
    return _core.extraction_capacity(_table(u))


def equilibrium_partitions(u):
    return _core.equilibrium_partitions(_table(u))


def is_equilibrium(s, u):
    return _core.is_equilibrium(list(s), _table(u))


def worst_case_utility(s, u):
    return [Fraction(x) for x in _core.worst_case_utility(list(s), _table(u))]


def duality_report(u):
    return _core.duality_report(_table(u))


def class_existence(u):
    return _core.class_existence(_table(u))


def max_recovery_sets(pi):
    return _core.max_recovery_sets(_table(pi))


def classify_pi(pi):
    return _core.classify_pi(_table(pi))


def min_best_response(pi, u, prior=None):
    p = None if prior is None else [_literal(x) for x in prior]
    r = _core.min_best_response(_table(pi), _table(u), p)
    r["value"] = Fraction(r["value"])
    return r


def grid_search(u, denominator, prior=None, max_points=100_000_000, use_symmetry=True):
    p = None if prior is None else [_literal(x) for x in prior]
    r = _core.grid_search(_table(u), denominator, p, max_points, use_symmetry)
    for key in ("max_value", "limit_value", "sup_estimate"):
        r[key] = Fraction(r[key])
    for key in ("argmax", "limit_point"):
        r[key] = _fractions(r[key])
    return r

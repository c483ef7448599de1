"""Exact splitting types of vector bundles on the projective line.

Matrices are nested lists whose entries are Laurent polynomials in ``x``
written as strings (``"x^-1 + 3/2*x^2"``) or plain integers.
"""

import json

from . import _core
from ._core import (
    ConsistencyFailure,
    DimensionMismatch,
    DomainError,
    Error,
    InvalidBundle,
    NotFuchsian,
    ParseError,
    ResonantExponents,
)

__all__ = [
    "ConsistencyFailure",
    "DimensionMismatch",
    "DomainError",
    "Error",
    "InvalidBundle",
    "NotFuchsian",
    "ParseError",
    "ResonantExponents",
    "bolibrukh",
    "degree",
    "factor",
    "h0",
    "h1",
    "is_isomorphic",
    "riemann_roch",
    "run",
    "splitting_type",
    "verify",
]


def _text(matrix):
    return [[str(entry) for entry in row] for row in matrix]


def splitting_type(matrix):
    return _core.splitting_type(_text(matrix))


def factor(matrix):
    return _core.factor(_text(matrix))


def verify(matrix, factorization):
    """Check a factorization dict with keys B, C and exponents.

    Returns (valid, failed_clause, detail).
    """
    return _core.verify(
        _text(matrix),
        _text(factorization["B"]),
        _text(factorization["C"]),
        list(factorization["exponents"]),
    )


def h0(matrix, k=0):
    return _core.h0(_text(matrix), k)


def h1(matrix, k=0):
    return _core.h1(_text(matrix), k)


def riemann_roch(matrix, k=0):
    return _core.riemann_roch(_text(matrix), k)


def degree(matrix):
    return _core.degree(_text(matrix))


def is_isomorphic(a, b):
    return _core.is_isomorphic(_text(a), _text(b))


def bolibrukh(generators):
    return _core.bolibrukh([_text(g) for g in generators])


def run(command, *documents, k=0, truncation=8, point=None):
    """Run a CLI command on document texts; returns the parsed result document."""
    out = _core.run(command, list(documents), k, truncation, point, "json")
    return json.loads(out)

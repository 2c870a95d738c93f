"""Python bindings for the ecid toolkit.

Fields, groups and elements are given as dicts (or JSON text, or a path to a JSON file)
in the same shapes the command-line tool accepts. Reports come back as dicts.
"""

import json

from . import _ecid
from ._ecid import (
    BudgetExceeded,
    DomainError,
    Error,
    HypothesisRequired,
    MismatchError,
    ParseError,
    b0,
    run,
    wedderburn_solver,
)

__version__ = _ecid.__version__

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "Error",
    "HypothesisRequired",
    "MismatchError",
    "ParseError",
    "b0",
    "classify",
    "code",
    "min_distance",
    "orbits",
    "run",
    "search",
    "wedderburn_solver",
]


def _arg(value):
    if value is None:
        return ""
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    return str(value)


def classify(field, group, wedderburn=None, assert_splitting=False, modular_exhaustive=False,
             budget=100_000_000):
    """Classification report of F_q H as a dict."""
    text = _ecid.classify(_arg(field), _arg(group), _arg(wedderburn), assert_splitting,
                          modular_exhaustive, budget)
    return json.loads(text)


def orbits(field, group):
    """q-orbit data of an abelian group."""
    return json.loads(_ecid.orbits(_arg(field), _arg(group)))


def code(field, group, idempotent, budget=100_000_000, threads=0, certify=False, primitive=False):
    """Code report of F_q G e. With certify=True the ambient algebra is classified first."""
    text = _ecid.code(_arg(field), _arg(group), _arg(idempotent), budget, threads, certify, primitive)
    return json.loads(text)


def search(field, group, budget=100_000_000, threads=0):
    """Every idempotent of F_q H, with dimension and primitivity."""
    return json.loads(_ecid.search(_arg(field), _arg(group), budget, threads))


def min_distance(field, rows, budget=100_000_000, threads=0):
    """Minimum distance of the code spanned by linearly independent rows of field codes."""
    return _ecid.min_distance(_arg(field), [list(r) for r in rows], budget, threads)

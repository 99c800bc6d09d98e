"""Mind-swap machine solvers, verifiers and the exhaustive plan oracle."""

import json

from ._core import (
    BudgetExceeded,
    ParseError,
    Permutation,
    UnsolvableError,
    UnsupportedComposition,
    finitary_two_step,
    lower_bound,
    membership_check,
    outsider_pool_size,
    search_min_plan,
    shift3,
    solve_document,
    verify_document,
)

__all__ = [
    "BudgetExceeded",
    "ParseError",
    "Permutation",
    "UnsolvableError",
    "UnsupportedComposition",
    "finitary_two_step",
    "lower_bound",
    "membership_check",
    "outsider_pool_size",
    "search_min_plan",
    "shift3",
    "solve",
    "solve_document",
    "verify",
    "verify_document",
]


def solve(target, m=2, solver="auto"):
    """Plan document for ``target`` as a dict."""
    return json.loads(solve_document(target, m, solver))


def verify(document, target=""):
    """Verification block for a plan document given as a dict or JSON text."""
    text = document if isinstance(document, str) else json.dumps(document)
    return json.loads(verify_document(text, target))["verification"]

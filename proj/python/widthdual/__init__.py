"""Tree-or-tangle duality for graph and matroid width parameters."""

import json

from . import _core
from ._core import EngineError, InputError, ResourceError, UsageError


def _edges(edges):
    return [tuple(sorted(map(int, e))) for e in edges]


def solve(n, edges, mode="tree", k=2, w=0):
    """Return the witness as a dict with keys side, width_param and the tree or tangle."""
    return json.loads(_core.solve_json(n, _edges(edges), mode, k, w))


def verify(n, edges, witness, mode="tree", k=2, w=0):
    """Problems found in a witness; an empty list means it is valid."""
    text = witness if isinstance(witness, str) else json.dumps(witness)
    return _core.verify_json(n, _edges(edges), mode, k, w, text)


def treewidth(n, edges):
    return _core.treewidth(n, _edges(edges))


def pathwidth(n, edges):
    return _core.pathwidth(n, _edges(edges))


def branchwidth(n, edges):
    return _core.branchwidth(n, _edges(edges))


def branch_summary(n, edges):
    bw, tangles = _core.branch_summary(n, _edges(edges))
    return {"branch_width": bw, "tangle_number": tangles}


__all__ = [
    "solve", "verify", "treewidth", "pathwidth", "branchwidth", "branch_summary",
    "EngineError", "InputError", "ResourceError", "UsageError",
]

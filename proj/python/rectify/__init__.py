"""Exact rectification of small subsets of F_p into algebraic extensions of Q.

Thin Python wrapper over the compiled ``_rectify`` module.  Big integers
cross the boundary as decimal strings and structured results as dicts
(decoded from the JSON documents the core library emits).
"""

import json as _json

from ._rectify import (  # noqa: F401
    BoundAbortError,
    resultant,
    sharpness_lattice,
    sparse_square_terms,
)
from . import _rectify as _core

__all__ = [
    "BoundAbortError",
    "rectify",
    "verify_document",
    "lift_linear",
    "resultant",
    "subresultant",
    "build_chain",
    "special_chain",
    "verify_chain",
    "adversarial_set",
    "transfer_report",
    "sharpness_lattice",
    "sparse_square_terms",
]


def _strs(values):
    return [str(v) for v in values]


def rectify(set_, p, k, force=False, t=0):
    """Rectify ``set_`` in F_p preserving (k, t)-bounded relations.

    Returns the full result document as a dict.  Raises BoundAbortError if
    the exact bound check fails (unless ``force``).
    """
    return _json.loads(_core.rectify(_strs(set_), str(p), str(k), force, str(t)))


def verify_document(document):
    """Re-verify a result document (dict or JSON string) independently."""
    if not isinstance(document, str):
        document = _json.dumps(document)
    return _json.loads(_core.verify_document(document))


def lift_linear(set_, p, k, force=False):
    """Integer lift preserving bounded linear relations; returns a dict."""
    return _json.loads(_core.lift_linear(_strs(set_), str(p), str(k), force))


def subresultant(f, g, var, i):
    """Subresultant polynomial S_i of f and g in x<var>, as text."""
    return _core.subresultant(f, g, var, i)


def build_chain(target, k):
    """Constructibility chain reaching ``target`` with k-bounded steps."""
    return _json.loads(_core.build_chain(str(target), str(k)))


def special_chain(p, form):
    """Short chain for a Mersenne or Fermat prime (form in those two words)."""
    return _json.loads(_core.special_chain(str(p), form))


def verify_chain(document):
    """Independently verify a chain document (dict or JSON string)."""
    if not isinstance(document, str):
        document = _json.dumps(document)
    return _core.verify_chain(document)


def adversarial_set(p, k):
    """Chain-residue subset of F_p with its witness chain, as a dict."""
    return _json.loads(_core.adversarial_set(str(p), str(k)))


def transfer_report(set_, p, mode, poly=""):
    """Set-cardinality transfer report for ``mode``; returns a dict."""
    return _json.loads(_core.transfer_report(_strs(set_), str(p), mode, poly))

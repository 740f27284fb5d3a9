"""Finite quasi-metric spaces and preorders: completions, flatness, filters.

Documents are plain dicts in the same JSON shape the ``qcat`` command line
tool reads and writes. Cost values are strings such as ``"1/3"`` or ``"inf"``.
"""

import json
import os

from . import _qcat
from ._qcat import QcatError, cost_hom, cost_tensor

__all__ = [
    "QcatError",
    "check",
    "check_dcpo",
    "classify",
    "complete",
    "cost_hom",
    "cost_tensor",
    "filter_distance",
    "ideal_complete",
    "kan",
    "reflect",
    "representative",
    "validate",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def _dir(base):
    return os.fspath(base) if base is not None else ""


def validate(doc, base=None):
    """Validation report for a space, module, functor or filter document."""
    return json.loads(_qcat.validate(_text(doc), _dir(base)))


def classify(module, base=None):
    """Flatness verdicts {"p1", "omega", "adjoint"} of a left module."""
    return json.loads(_qcat.classify(_text(module), _dir(base)))


def complete(space, kind="type1", base=None):
    return json.loads(_qcat.complete(_text(space), kind, _dir(base)))


def filter_distance(f1, f2, base=None):
    return _qcat.filter_distance(_text(f1), _text(f2), _dir(base))


def representative(filter_doc, base=None):
    return _qcat.representative(_text(filter_doc), _dir(base))


def kan(module, functor, base=None):
    return json.loads(_qcat.kan(_text(module), _text(functor), _dir(base)))


def ideal_complete(preorder, base=None):
    return json.loads(_qcat.ideal_complete(_text(preorder), _dir(base)))


def reflect(preorder, base=None):
    return json.loads(_qcat.reflect(_text(preorder), _dir(base)))


def check_dcpo(a, b, base=None):
    return _qcat.check_dcpo(_text(a), _text(b), _dir(base))


def check(seed=42, max_objects=4):
    """Run the seeded theorem suite; returns the summary document."""
    return json.loads(_qcat.check(seed, max_objects))

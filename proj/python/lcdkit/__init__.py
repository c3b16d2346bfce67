"""Python interface to lcdkit.

Complexes, model sets and branched manifolds are passed as documents: either
a dict of the form {"format_version": 1, "kind": ..., "payload": ...} or its
JSON text. Functions that produce documents return dicts.
"""

import json

from . import _core
from ._core import LcdkitError, catalog_names, eval_word, factor_matrix, format_version

__all__ = [
    "LcdkitError",
    "build_universal",
    "bundle_certificate",
    "canonical",
    "catalog",
    "catalog_names",
    "eval_word",
    "factor_matrix",
    "find_immersion",
    "format_version",
    "is_modeled_on",
    "load",
    "manifold_status",
    "standard_subdivide",
    "validate_branched",
    "verify_equivalence",
]


def _text(document):
    return document if isinstance(document, str) else json.dumps(document)


def load(path):
    """Reads a document file and returns it in canonical form."""
    with open(path, encoding="utf-8") as f:
        return json.loads(_core.canonical(f.read()))


def canonical(document):
    """Canonical serialization of a document, as text."""
    return _core.canonical(_text(document))


def catalog(name):
    return json.loads(_core.catalog(name))


def manifold_status(complex_doc):
    return _core.manifold_status(_text(complex_doc))


def validate_branched(branched_doc):
    """List of violations; empty when the branched manifold is valid."""
    return _core.validate_branched(_text(branched_doc))


def is_modeled_on(complex_doc, models_doc):
    return _core.is_modeled_on(_text(complex_doc), _text(models_doc))


def find_immersion(complex_doc, target_doc):
    """An immersion document, or None when there is none."""
    result = _core.find_immersion(_text(complex_doc), _text(target_doc))
    return None if result is None else json.loads(result)


def build_universal(models_doc, witnesses, radius=None):
    return json.loads(_core.build_universal(_text(models_doc), [_text(w) for w in witnesses], radius))


def verify_equivalence(models_doc, target_doc, max_vertices):
    return _core.verify_equivalence(_text(models_doc), _text(target_doc), max_vertices)


def standard_subdivide(complex_doc, ordered, big_n):
    return json.loads(_core.standard_subdivide(_text(complex_doc), [str(v) for v in ordered], big_n))


def bundle_certificate(word):
    cert = _core.bundle_certificate(word)
    cert["cycle"] = json.loads(cert["cycle"])
    cert["immersion"] = json.loads(cert["immersion"])
    return cert

"""Algebraic entropy of three-point mappings with exact arithmetic.

Numbers go in as strings ("5", "22/7", "inf") and results come back as the
JSON documents described in docs/formats.md, decoded to dicts.
"""

import json as _json

from . import _algentropy
from ._algentropy import AlgentropyError, Mapping

__all__ = [
    "AlgentropyError",
    "Mapping",
    "analyze",
    "catalog",
    "classify",
    "degrees",
    "dioph",
    "expected_integrable",
    "express",
    "express_patterns",
    "express_raw",
    "iterates",
    "late_limit",
    "load_mapping",
    "trace",
]


def _as_mapping(m, variant=""):
    if isinstance(m, Mapping):
        return m
    return Mapping.from_catalog(m, variant)


def _doc(d):
    return d if isinstance(d, str) else _json.dumps(d)


def catalog():
    """Built-in mappings with their variants (default first)."""
    return _json.loads(_algentropy.catalog())["mappings"]


expected_integrable = _algentropy.expected_integrable


def load_mapping(path):
    """Reads a mapping file."""
    with open(path, encoding="utf-8") as f:
        return Mapping.from_json(f.read())


def degrees(mapping, n, x0="5", variant="", degree_cap=5000):
    """Degrees d_0..d_n of the iterates from x_0 = x0, x_1 = z."""
    return _json.loads(_algentropy.degrees(_as_mapping(mapping, variant), n, str(x0), degree_cap))


def classify(degree_list):
    return _json.loads(_algentropy.classify(list(degree_list)))


def iterates(mapping, n, x0="5", variant=""):
    """x_0..x_n as rational functions of z, printed."""
    return _algentropy.iterates(_as_mapping(mapping, variant), n, str(x0))


def trace(mapping, entering="", n=1, max_steps=24, variant=""):
    """Singularity patterns; all singular values when entering is empty."""
    return _json.loads(_algentropy.trace(_as_mapping(mapping, variant), str(entering), n, max_steps))["patterns"]


def express(name, variant="", precision_bits=40):
    """Express verdict of a catalog entry."""
    return _json.loads(_algentropy.express_catalog(name, variant, precision_bits))


def express_patterns(document, symbols=None, precision_bits=40):
    return _json.loads(_algentropy.express_patterns(_doc(document), symbols or {}, precision_bits))


def express_raw(document, symbols=None, precision_bits=40):
    return _json.loads(_algentropy.express_raw(_doc(document), symbols or {}, precision_bits))


def late_limit(document, ell_from=0, ell_to=0, precision_bits=40):
    return _json.loads(_algentropy.late_limit(_doc(document), ell_from, ell_to, precision_bits))


def dioph(mapping, x0="5", x1="22/7", iters=25, variant="", bit_budget=10_000_000, retries=5):
    """Exact orbit heights h_n and their ratios."""
    return _json.loads(
        _algentropy.dioph(_as_mapping(mapping, variant), str(x0), str(x1), iters, bit_budget, retries)
    )


def analyze(mapping, variant="", *, degrees=False, degree_steps=0, singularities=False, express=False,
            dioph=False, iters=12, x0="5", x1="22/7", patterns=None, precision_bits=40, timestamp=False):
    """Runs the selected stages (all when none is selected) and compares the methods.

    A catalog name selects the catalog recipe for the express stage; a Mapping
    object needs patterns for it.
    """
    name = "" if isinstance(mapping, Mapping) else mapping
    m = _as_mapping(mapping, variant)
    out = _algentropy.analyze(m, name, variant if name else "", degrees, degree_steps, singularities, express,
                              dioph, iters, str(x0), str(x1), _doc(patterns) if patterns else "",
                              precision_bits, timestamp)
    return _json.loads(out)

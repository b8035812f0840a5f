"""Sphere representations of geometric lattices.

Every function takes and returns plain dicts and lists in the same JSON
shapes the ``hsr`` command-line tool reads and writes. A flag is either
``None`` (the default flag) or ``{"chain": [[...], ...]}``.
"""

import json

from . import _core

InputError = _core.InputError

__all__ = [
    "InputError",
    "compare_flags",
    "covectors",
    "homology",
    "poset_map_search",
    "represent",
    "validate",
    "verify",
    "weak_map",
]


def _text(value):
    return "" if value is None else json.dumps(value)


def validate(matroid):
    """Geometric-lattice axioms as {"passed", "checks"}."""
    return json.loads(_core.validate(_text(matroid)))


def represent(matroid, flag=None):
    """S_G for every flat G, with the flag used."""
    return json.loads(_core.represent(_text(matroid), _text(flag)))


def verify(matroid, flag=None, exact_nerve=False):
    """Arrangement axioms, intersection law and lattice roundtrip."""
    return json.loads(_core.verify(_text(matroid), _text(flag), exact_nerve))


def homology(maximal_faces):
    """Reduced integer homology of the complex generated by the faces."""
    return json.loads(_core.homology(json.dumps(maximal_faces)))


def covectors(config):
    return json.loads(_core.covectors(_text(config)))


def weak_map(source, target):
    """Weak-map test between two matroids or two vector configurations."""
    return json.loads(_core.weak_map(_text(source), _text(target)))


def poset_map_search(source, target, flag=None, max_assignments=10_000_000):
    return json.loads(_core.poset_map_search(_text(source), _text(target), _text(flag), max_assignments))


def compare_flags(matroid, first=None, second=None):
    """Cross-coatom selection and retraction checks for two flags."""
    return json.loads(_core.compare_flags(_text(matroid), _text(first), _text(second)))

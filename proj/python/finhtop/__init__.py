"""Finite posets as finite topological spaces.

Objects are plain dicts in the library's JSON formats: posets are
``{"elements": [...], "relations": [[x, y], ...]}``, complexes are
``{"vertices": [...], "facets": [[...], ...]}``, diagrams are
``{"index": poset, "fibers": {p: fiber}, "transitions": {"p->q": {x: y}}}``
and maps are ``{"source": ..., "target": ..., "map": {x: y}}``.
"""

import json

from . import _core
from ._core import FinhtopError

__all__ = [
    "FinhtopError",
    "barycentric",
    "check",
    "collapse",
    "complex_homology",
    "core",
    "face_poset",
    "hocolim",
    "is_contractible",
    "mapping_cylinder",
    "order_complex",
    "poset_homology",
    "random_checks",
    "theorem_ids",
    "to_dot",
    "triviality",
]

DEFAULT_BUDGET = _core.default_budget()


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"))


def theorem_ids():
    return list(_core.theorem_ids())


def core(poset):
    """Stong core and the beat points removed to reach it."""
    return json.loads(_core.core(_dump(poset)))


def is_contractible(poset):
    return _core.is_contractible(_dump(poset))


def poset_homology(poset):
    """Integral homology of the order complex as [{degree, betti, torsion}]."""
    return json.loads(_core.poset_homology(_dump(poset)))


def order_complex(poset):
    return json.loads(_core.order_complex(_dump(poset)))


def to_dot(poset):
    return _core.to_dot(_dump(poset))


def collapse(poset, budget=DEFAULT_BUDGET):
    return json.loads(_core.collapse(_dump(poset), budget))


def triviality(poset, budget=DEFAULT_BUDGET):
    """Three-valued verdict: trivial, nontrivial or unknown, with evidence."""
    return json.loads(_core.triviality(_dump(poset), budget))


def complex_homology(complex_):
    return json.loads(_core.complex_homology(_dump(complex_)))


def face_poset(complex_):
    return json.loads(_core.face_poset(_dump(complex_)))


def barycentric(complex_):
    return json.loads(_core.barycentric(_dump(complex_)))


def hocolim(diagram):
    return json.loads(_core.hocolim(_dump(diagram)))


def mapping_cylinder(poset_map):
    return json.loads(_core.mapping_cylinder(_dump(poset_map)))


def check(theorem, instance, p="", q="", budget=DEFAULT_BUDGET):
    """Run one theorem check on an instance and return the report."""
    return json.loads(_core.check(theorem, _dump(instance), p, q, budget))


def random_checks(theorem, count, seed=0, budget=DEFAULT_BUDGET, jobs=1):
    return json.loads(_core.random_checks(theorem, count, seed, budget, jobs))

"""Constrained topological sorting and shuffle solver."""

import json

from ._core import (
    CapExceeded,
    ParseError,
    PreconditionError,
    filter_aabb_from_ab,
    filter_ab_from_power,
    filter_ustar_from_ab,
    gen_unary3partition,
    in_shuffle,
    solver_tags,
    three_partition_exists,
)
from . import _core

__all__ = [
    "CapExceeded",
    "ParseError",
    "PreconditionError",
    "classify",
    "filter_aabb_from_ab",
    "filter_ab_from_power",
    "filter_ustar_from_ab",
    "gen_unary3partition",
    "in_shuffle",
    "monoid",
    "solve",
    "solver_tags",
    "three_partition_exists",
]


def _instance_text(instance):
    if isinstance(instance, str):
        return instance
    if isinstance(instance, (list, tuple)):
        return json.dumps({"strings": list(instance)})
    return json.dumps(instance)


def _caps_text(caps):
    if caps is None:
        return ""
    if isinstance(caps, dict):
        return ",".join(f"{k}={v}" for k, v in caps.items())
    return caps


def solve(instance, language=None, *, regex=None, solver="", insertions=0, caps=None):
    """Decide whether some topological sort of `instance` spells a word of the language.

    `instance` is a JSON dict, a list of strings, or text ("strings: ab,ba" or
    JSON). Give either `language` (a spec dict) or `regex`. Returns the run
    report as a dict; a positive answer carries the witness order.
    """
    if (language is None) == (regex is None):
        raise ValueError("give exactly one of language or regex")
    spec = {"regex": regex} if regex is not None else language
    text = _core.solve_json(_instance_text(instance), json.dumps(spec), solver, insertions, _caps_text(caps))
    return json.loads(text)


def _automaton_args(regex, alphabet, semiautomaton):
    if (regex is None) == (semiautomaton is None):
        raise ValueError("give exactly one of regex or semiautomaton")
    sa = "" if semiautomaton is None else json.dumps(semiautomaton)
    return regex or "", alphabet or "", sa


def classify(regex=None, *, alphabet=None, semiautomaton=None, caps=None):
    """Variety memberships and complexity verdicts for a language's transition monoid."""
    r, a, s = _automaton_args(regex, alphabet, semiautomaton)
    return json.loads(_core.classify_json(r, a, s, _caps_text(caps)))


def monoid(regex=None, *, alphabet=None, semiautomaton=None, caps=None):
    """Transition monoid: elements, multiplication table, omega."""
    r, a, s = _automaton_args(regex, alphabet, semiautomaton)
    return json.loads(_core.monoid_json(r, a, s, _caps_text(caps)))

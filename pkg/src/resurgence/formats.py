"""Text and JSON formats for ideals, graphs and hypergraphs.

Ideal text: the first line lists the variables; each further line is one
generator written as ``x1^2 x3`` (``1`` for the unit monomial).

Graph text: ``vertices: a b c`` followed by one ``edge: a b`` line per edge.
Hypergraph edges may list more than two vertices. Blank lines and lines
starting with ``#`` are ignored. The JSON form is
``{"vertices": [...], "edges": [[...], ...]}``.
"""
from __future__ import annotations

import json
from pathlib import Path

from .graphs import Graph, Hypergraph
from .ideal import MonomialIdeal, VariableSet, format_monomial, parse_monomial


class FormatError(ValueError):
    pass


def _lines(text: str) -> list:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def parse_ideal(text: str) -> MonomialIdeal:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty ideal file")
    try:
        ring = VariableSet(tuple(lines[0].split()))
        gens = [parse_monomial(ring, ln) for ln in lines[1:]]
    except (KeyError, ValueError) as e:
        raise FormatError(str(e)) from None
    return MonomialIdeal.from_generators(ring, gens)


def format_ideal(I: MonomialIdeal) -> str:
    out = [" ".join(I.ring.names)]
    out += [format_monomial(I.ring, g) for g in I.generators]
    return "\n".join(out) + "\n"


def _parse_incidence(text: str):
    verts, edges = None, []
    for ln in _lines(text):
        key, sep, rest = ln.partition(":")
        if not sep:
            raise FormatError(f"expected 'vertices:' or 'edge:' in {ln!r}")
        key = key.strip().lower()
        if key == "vertices":
            if verts is not None:
                raise FormatError("vertices given twice")
            verts = rest.split()
        elif key == "edge":
            edges.append(rest.split())
        else:
            raise FormatError(f"unknown key {key!r}")
    if verts is None:
        raise FormatError("missing 'vertices:' line")
    return verts, edges


def _incidence_from_json(text: str):
    try:
        data = json.loads(text)
        return list(data["vertices"]), [list(e) for e in data["edges"]]
    except (ValueError, KeyError, TypeError) as e:
        raise FormatError(f"bad JSON graph: {e}") from None


def _incidence(text: str):
    return _incidence_from_json(text) if text.lstrip().startswith("{") else _parse_incidence(text)


def parse_graph(text: str) -> Graph:
    verts, edges = _incidence(text)
    if any(len(e) != 2 for e in edges):
        raise FormatError("graph edges need exactly two vertices")
    try:
        return Graph.from_names(verts, edges)
    except (KeyError, ValueError) as e:
        raise FormatError(str(e)) from None


def parse_hypergraph(text: str) -> Hypergraph:
    verts, edges = _incidence(text)
    try:
        return Hypergraph.from_names(verts, edges)
    except (KeyError, ValueError) as e:
        raise FormatError(str(e)) from None


def format_graph(G) -> str:
    out = ["vertices: " + " ".join(G.vertices)]
    out += ["edge: " + " ".join(e) for e in G.named_edges()]
    return "\n".join(out) + "\n"


def graph_to_json(G) -> str:
    return json.dumps({"vertices": list(G.vertices), "edges": [list(e) for e in G.named_edges()]})


def read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from None


RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}

_ESTIMATE = {
    "type": "object",
    "required": ["provenance"],
    "properties": {
        "exact": RATIONAL,
        "interval": {"type": "array", "minItems": 2, "maxItems": 2,
                     "items": {"anyOf": [RATIONAL, {"type": "null"}]}},
        "provenance": {"type": "array", "items": {
            "type": "object",
            "required": ["value", "tag", "bound", "inputs"],
            "properties": {"value": RATIONAL, "tag": {"type": "string"},
                           "bound": {"enum": ["exact", "lower", "upper"]},
                           "inputs": {"type": "object"}},
        }},
    },
    "oneOf": [{"required": ["exact"]}, {"required": ["interval"]}],
}

_IDEAL = {
    "type": "object",
    "required": ["variables", "generators"],
    "properties": {"variables": {"type": "array", "items": {"type": "string"}},
                   "generators": {"type": "array", "items": {"type": "string"}}},
}

_CELL = {"type": "object", "required": ["s", "t", "holds"],
         "properties": {"s": {"type": "integer"}, "t": {"type": "integer"},
                        "holds": {"type": ["boolean", "null"]}}}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["ideal", "rho", "rho_a", "witnesses", "containments", "flags", "truncated"],
    "properties": {
        "ideal": _IDEAL,
        "description": {"type": "string"},
        "rho": _ESTIMATE,
        "rho_a": _ESTIMATE,
        "witnesses": {"type": "array", "items": {
            "type": "object", "required": ["s", "t", "monomial"],
            "properties": {"s": {"type": "integer"}, "t": {"type": "integer"}, "monomial": {"type": "string"}}}},
        "containments": {"type": "array", "items": _CELL},
        "flags": {"type": "array", "items": {"type": "string"}},
        "truncated": {"type": "boolean"},
    },
}

SCHEMAS = {
    "resurgence": REPORT_SCHEMA,
    "invariants": {
        "type": "object",
        "required": ["vertices", "edges", "chromatic_number", "clique_number", "independence_number",
                     "bipartite", "kinds"],
    },
    "ideal": {
        "type": "object",
        "required": ["ideal", "alpha", "squarefree"],
        "properties": {"ideal": _IDEAL, "alpha": {"type": ["integer", "null"]}, "squarefree": {"type": "boolean"}},
    },
    "symbolic": {
        "type": "object",
        "required": ["s", "ideal", "symbolic", "alpha"],
        "properties": {"s": {"type": "integer"}, "ideal": _IDEAL, "symbolic": _IDEAL, "alpha": {"type": "integer"}},
    },
    "containment": {
        "type": "object",
        "required": ["s", "t", "holds", "truncated"],
        "properties": {"s": {"type": "integer"}, "t": {"type": "integer"},
                       "holds": {"type": ["boolean", "null"]}, "witness": {"type": ["string", "null"]},
                       "certificate": {"type": ["object", "null"]}, "truncated": {"type": "boolean"}},
    },
    "sweep": {
        "type": "object",
        "required": ["s_max", "t_max", "cells", "lower", "truncated"],
        "properties": {"cells": {"type": "array", "items": _CELL},
                       "lower": {"anyOf": [RATIONAL, {"type": "null"}]}, "truncated": {"type": "boolean"}},
    },
    "verify-suite": {
        "type": "object",
        "required": ["criteria", "passed"],
        "properties": {"criteria": {"type": "array", "items": {
            "type": "object", "required": ["name", "passed", "detail"],
            "properties": {"name": {"type": "string"}, "passed": {"type": "boolean"}, "detail": {"type": "string"}}}},
            "passed": {"type": "boolean"}},
    },
}

"""JSON documents for fields, arrangements, graphs, complexes and ideals."""

from __future__ import annotations

import json
from typing import Any

from .casalg.ideals import Ideal
from .casalg.poly import Poly
from .exactfield import field_create
from .graphs import Graph
from .nerve import SimplicialComplex, complex_from_facets
from .projgeom import Arrangement, ProjLine


class FormatError(ValueError):
    """A JSON document that does not match any known schema."""


def arrangement_to_json(a: Arrangement) -> dict:
    return {"field": a.field.to_json(), "n": a.n, "lines": [ln.to_json() for ln in a.lines]}


def arrangement_from_json(obj: dict) -> Arrangement:
    try:
        f = field_create(obj["field"])
        n = int(obj["n"])
        lines = []
        for span in obj["lines"]:
            if len(span) != 2 or any(len(r) != n + 1 for r in span):
                raise FormatError(f"each line needs two rows of length {n + 1}")
            lines.append(ProjLine.from_rows(f, span[0], span[1]))
        return Arrangement(f, n, tuple(lines))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed arrangement document: {exc}") from None


def ideal_to_json(i: Ideal, names=None) -> dict:
    if not i.field.is_rational and i.field.k > 1:
        raise FormatError("polynomial text is only available over Q and prime fields")
    return {"field": i.field.to_json(), "nvars": i.nvars, "gens": [g.to_str(names) for g in i.gens]}


def ideal_from_json(obj: dict) -> Ideal:
    try:
        f = field_create(obj["field"])
        nvars = int(obj["nvars"])
        return Ideal(f, nvars, [Poly.parse(s, f, nvars) for s in obj["gens"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed ideal document: {exc}") from None


def to_json(obj: Any) -> dict:
    if isinstance(obj, Arrangement):
        return arrangement_to_json(obj)
    if isinstance(obj, (Graph, SimplicialComplex)):
        return obj.to_json()
    if isinstance(obj, Ideal):
        return ideal_to_json(obj)
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def from_json(obj: Any):
    """Decode an arrangement, graph, complex or ideal, recognised by its keys."""
    if not isinstance(obj, dict):
        raise FormatError("expected a JSON object")
    try:
        if "lines" in obj:
            return arrangement_from_json(obj)
        if "vcount" in obj:
            return Graph.from_json(obj)
        if "facets" in obj:
            return complex_from_facets(obj["facets"], obj.get("n"))
        if "gens" in obj:
            return ideal_from_json(obj)
    except (ValueError, TypeError, KeyError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc)) from None
    raise FormatError("unrecognised document: expected lines, vcount, facets or gens")


def dumps(obj: Any) -> str:
    """Deterministic JSON text (sorted keys, two-space indent, trailing newline)."""
    payload = obj if isinstance(obj, (dict, list)) else to_json(obj)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def loads(text: str):
    if not text.strip():
        raise FormatError("empty input")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return from_json(obj)


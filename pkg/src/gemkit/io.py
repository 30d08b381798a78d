"""Reading and writing colored graphs.

Two lossless on-disk forms are supported.  The JSON form is an object
with keys "dimension", "vertices" and "matchings" (one involution array
per color).  The compact text form has a header line ``d n`` followed by
one ``u v c`` line per edge.  Both round-trip exactly.
"""

from __future__ import annotations

import json
from typing import TextIO

from .core import ColoredGraph


def to_json_dict(g: ColoredGraph) -> dict:
    return {
        "dimension": g.dimension,
        "vertices": g.vertex_count,
        "matchings": [list(m) for m in g.matchings],
    }


def to_json(g: ColoredGraph, indent: int | None = None) -> str:
    return json.dumps(to_json_dict(g), indent=indent)


def from_json_dict(data: object) -> ColoredGraph:
    if not isinstance(data, dict):
        raise ValueError("gem JSON must be an object")
    try:
        d = data["dimension"]
        n = data["vertices"]
        matchings = data["matchings"]
    except KeyError as exc:
        raise ValueError(f"gem JSON is missing key {exc.args[0]!r}") from None
    if not isinstance(d, int) or not isinstance(n, int):
        raise ValueError("dimension and vertices must be integers")
    if not isinstance(matchings, list) or len(matchings) != d + 1:
        raise ValueError(f"expected {d + 1} matchings")
    for m in matchings:
        if not isinstance(m, list) or len(m) != n:
            raise ValueError(f"each matching must list {n} vertices")
    return ColoredGraph(matchings)


def from_json(text: str) -> ColoredGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    return from_json_dict(data)


def to_text(g: ColoredGraph) -> str:
    lines = [f"{g.dimension} {g.vertex_count}"]
    lines.extend(f"{u} {v} {c}" for u, v, c in g.edges())
    return "\n".join(lines) + "\n"


def from_text(text: str) -> ColoredGraph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty gem file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header line {lines[0]!r}, expected 'd n'")
    d, n = (int(x) for x in head)
    matchings = [[-1] * n for _ in range(d + 1)]
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"bad edge line {ln!r}, expected 'u v c'")
        u, v, c = (int(x) for x in parts)
        if not (0 <= u < n and 0 <= v < n and 0 <= c <= d):
            raise ValueError(f"edge line {ln!r} out of range")
        if matchings[c][u] != -1 or matchings[c][v] != -1:
            raise ValueError(f"vertex revisited by color {c} in line {ln!r}")
        matchings[c][u] = v
        matchings[c][v] = u
    for c, m in enumerate(matchings):
        if -1 in m:
            raise ValueError(f"color {c} does not cover every vertex")
    return ColoredGraph(matchings)


def loads(text: str) -> ColoredGraph:
    """Parse either supported format, sniffing by the leading character."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json(text)
    return from_text(text)


def load(fh: TextIO) -> ColoredGraph:
    return loads(fh.read())


def to_dot(g: ColoredGraph) -> str:
    """DOT multigraph with a ``color`` attribute per edge."""
    lines = ["graph gem {"]
    for u, v, c in g.edges():
        lines.append(f"  {u} -- {v} [color={c}];")
    lines.append("}")
    return "\n".join(lines) + "\n"

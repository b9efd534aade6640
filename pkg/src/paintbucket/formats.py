"""Interchange formats: grid text, graph/bipartite JSON documents, AE JSON.

Documents are plain dicts; file handling stays in the CLI/service
layer. Parsers validate aggressively and raise FormatError with a
human-readable reason.
"""

from __future__ import annotations

from .ae import AePosition, Player, RESERVED_CELL
from .core import BipartitePosition, BoardError, Color, ColoredGraph, GridPosition
from .reduction import ReductionInstance

GRID_CHARS = {"B": Color.BLACK, "W": Color.WHITE}


class FormatError(ValueError):
    """Unparseable or invariant-violating input document."""


def parse_grid(text: str) -> GridPosition:
    """One line per row, 'B' and 'W' only; rejects ragged rows."""
    lines = text.splitlines()
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty grid")
    width = len(lines[0])
    rows = []
    for lineno, line in enumerate(lines, start=1):
        if len(line) != width or width == 0:
            raise FormatError(f"line {lineno}: expected {width} pixels, got {len(line)}")
        try:
            rows.append(tuple(GRID_CHARS[ch] for ch in line))
        except KeyError:
            bad = next(ch for ch in line if ch not in GRID_CHARS)
            raise FormatError(f"line {lineno}: invalid pixel character {bad!r}") from None
    return GridPosition(len(rows), width, tuple(rows))


def grid_to_text(g: GridPosition) -> str:
    return "".join(
        "".join("B" if c is Color.BLACK else "W" for c in row) + "\n"
        for row in g.pixels
    )


def _parse_color(value) -> Color:
    if value == "black":
        return Color.BLACK
    if value == "white":
        return Color.WHITE
    raise FormatError(f"invalid color {value!r}; expected 'black' or 'white'")


def _parse_vertices_edges(doc) -> tuple[dict[int, Color], list[tuple[int, int]]]:
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    try:
        vertices = doc["vertices"]
        edges = doc["edges"]
    except (KeyError, TypeError):
        raise FormatError("document needs 'vertices' and 'edges' fields") from None
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise FormatError("'vertices' and 'edges' must be arrays")
    colors: dict[int, Color] = {}
    for entry in vertices:
        if not isinstance(entry, dict) or "id" not in entry or "color" not in entry:
            raise FormatError(f"vertex entry {entry!r} needs 'id' and 'color'")
        vid = entry["id"]
        if not isinstance(vid, int) or isinstance(vid, bool):
            raise FormatError(f"vertex id {vid!r} must be an integer")
        if vid in colors:
            raise FormatError(f"duplicate vertex id {vid}")
        colors[vid] = _parse_color(entry["color"])
    pairs = []
    for entry in edges:
        if not isinstance(entry, list) or len(entry) != 2:
            raise FormatError(f"edge entry {entry!r} must be a pair of ids")
        a, b = entry
        if a not in colors or b not in colors:
            raise FormatError(f"edge [{a}, {b}] references an unknown vertex")
        pairs.append((a, b))
    return colors, pairs


def parse_graph_document(doc) -> ColoredGraph:
    colors, pairs = _parse_vertices_edges(doc)
    try:
        return ColoredGraph(colors, pairs)
    except BoardError as e:
        raise FormatError(str(e)) from None


def graph_to_document(g: ColoredGraph) -> dict:
    return {
        "vertices": [{"id": v, "color": g.color(v).value} for v in g.vertex_ids],
        "edges": [list(e) for e in sorted(g.edges)],
    }


def parse_bipartite_document(doc) -> BipartitePosition:
    """Graph document that must additionally be a valid contracted position."""
    colors, pairs = _parse_vertices_edges(doc)
    black = {v for v, c in colors.items() if c is Color.BLACK}
    white = {v for v, c in colors.items() if c is Color.WHITE}
    edges = set()
    for a, b in pairs:
        if colors[a] is colors[b]:
            raise FormatError(f"edge [{a}, {b}] joins two {colors[a]} vertices")
        edges.add((a, b) if colors[a] is Color.BLACK else (b, a))
    try:
        return BipartitePosition(black, white, edges)
    except BoardError as e:
        raise FormatError(str(e)) from None


def bipartite_to_document(p: BipartitePosition) -> dict:
    vertices = [{"id": v, "color": "black"} for v in sorted(p.black)]
    vertices += [{"id": v, "color": "white"} for v in sorted(p.white)]
    return {"vertices": vertices, "edges": [list(e) for e in sorted(p.edges)]}


def parse_ae_document(doc, allow_reserved: bool = False) -> AePosition:
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    for field in ("cells", "sets", "to_move"):
        if field not in doc:
            raise FormatError(f"AE document needs the '{field}' field")
    cells = doc["cells"]
    sets = doc["sets"]
    if not isinstance(cells, list) or not all(isinstance(c, str) for c in cells):
        raise FormatError("'cells' must be an array of strings")
    if len(set(cells)) != len(cells):
        raise FormatError("duplicate cell names")
    if not allow_reserved:
        for c in cells:
            if RESERVED_CELL.match(c):
                raise FormatError(f"cell name {c!r} is reserved for normalization")
    if not isinstance(sets, list):
        raise FormatError("'sets' must be an array of arrays")
    parsed_sets = []
    for entry in sets:
        if not isinstance(entry, list) or not all(isinstance(c, str) for c in entry):
            raise FormatError(f"avoider set {entry!r} must be an array of strings")
        unknown = set(entry) - set(cells)
        if unknown:
            raise FormatError(f"avoider set members {sorted(unknown)} are not cells")
        parsed_sets.append(frozenset(entry))
    if doc["to_move"] == "avoider":
        to_move = Player.AVOIDER
    elif doc["to_move"] == "enforcer":
        to_move = Player.ENFORCER
    else:
        raise FormatError("'to_move' must be 'avoider' or 'enforcer'")
    return AePosition(frozenset(cells), tuple(parsed_sets), to_move)


def ae_to_document(p: AePosition) -> dict:
    return {
        "cells": sorted(p.cells),
        "sets": [sorted(s) for s in p.sets],
        "to_move": p.to_move.value,
    }


def roles_to_document(ri: ReductionInstance) -> dict:
    roles = {}
    for vid in sorted(ri.roles):
        role = ri.roles[vid]
        entry = {"type": role.type}
        for name in ("i", "j", "k"):
            value = getattr(role, name)
            if value is not None:
                entry[name] = value
        roles[str(vid)] = entry
    return {"roles": roles}

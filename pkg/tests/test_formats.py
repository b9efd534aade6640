"""Interchange formats: parsing, validation, round-trips."""

import pytest

from paintbucket.ae import AePosition, Player
from paintbucket.core import BipartitePosition, Color, ColoredGraph, GridPosition
from paintbucket.formats import (
    FormatError,
    ae_to_document,
    bipartite_to_document,
    graph_to_document,
    grid_to_text,
    parse_ae_document,
    parse_bipartite_document,
    parse_graph_document,
    parse_grid,
    roles_to_document,
)
from paintbucket.reduction import build_reduction

B, W = Color.BLACK, Color.WHITE


def test_parse_grid_round_trip():
    text = "WBW\nBWB\nWBW\n"
    grid = parse_grid(text)
    assert grid.rows == 3 and grid.cols == 3
    assert grid_to_text(grid) == text


def test_parse_grid_rejects_ragged_and_bad_chars():
    with pytest.raises(FormatError):
        parse_grid("BW\nB\n")
    with pytest.raises(FormatError):
        parse_grid("BX\nWW\n")
    with pytest.raises(FormatError):
        parse_grid("")
    with pytest.raises(FormatError):
        parse_grid("\n\n")


def test_graph_document_round_trip():
    g = ColoredGraph({0: B, 1: W, 5: B}, [(0, 1), (5, 1)])
    doc = graph_to_document(g)
    assert doc["vertices"] == [
        {"id": 0, "color": "black"},
        {"id": 1, "color": "white"},
        {"id": 5, "color": "black"},
    ]
    assert parse_graph_document(doc) == g
    assert graph_to_document(parse_graph_document(doc)) == doc


def test_graph_document_validation():
    with pytest.raises(FormatError):
        parse_graph_document({"vertices": []})
    with pytest.raises(FormatError):
        parse_graph_document({"vertices": [{"id": 0, "color": "red"}], "edges": []})
    with pytest.raises(FormatError):
        parse_graph_document({"vertices": [{"id": "a", "color": "black"}], "edges": []})
    with pytest.raises(FormatError):
        parse_graph_document(
            {"vertices": [{"id": 0, "color": "black"}], "edges": [[0, 1]]}
        )
    with pytest.raises(FormatError):
        parse_graph_document(
            {"vertices": [{"id": 0, "color": "black"},
                          {"id": 0, "color": "white"}], "edges": []}
        )


def test_bipartite_document_round_trip():
    pos = BipartitePosition({0, 2}, {1}, [(0, 1), (2, 1)])
    doc = bipartite_to_document(pos)
    assert parse_bipartite_document(doc) == pos
    assert bipartite_to_document(parse_bipartite_document(doc)) == doc


def test_bipartite_document_enforces_position_invariants():
    with pytest.raises(FormatError):
        parse_bipartite_document(
            {"vertices": [{"id": 0, "color": "black"},
                          {"id": 1, "color": "black"}],
             "edges": [[0, 1]]}
        )
    with pytest.raises(FormatError):
        parse_bipartite_document(
            {"vertices": [{"id": 0, "color": "black"},
                          {"id": 1, "color": "white"},
                          {"id": 2, "color": "white"}],
             "edges": [[0, 1]]}
        )  # disconnected


def test_bipartite_document_accepts_either_edge_order():
    doc = {
        "vertices": [{"id": 0, "color": "black"}, {"id": 1, "color": "white"}],
        "edges": [[1, 0]],
    }
    pos = parse_bipartite_document(doc)
    assert pos.edges == frozenset({(0, 1)})


def test_ae_document_round_trip():
    p = AePosition.make({"c1", "c2"}, [{"c1"}, {"c1", "c2"}], Player.ENFORCER)
    doc = ae_to_document(p)
    assert doc == {
        "cells": ["c1", "c2"],
        "sets": [["c1"], ["c1", "c2"]],
        "to_move": "enforcer",
    }
    parsed = parse_ae_document(doc)
    assert parsed.cells == p.cells
    assert parsed.sets == p.sets
    assert parsed.to_move is p.to_move
    assert ae_to_document(parsed) == doc


def test_ae_document_validation():
    with pytest.raises(FormatError):
        parse_ae_document({"cells": ["c1"], "sets": []})
    with pytest.raises(FormatError):
        parse_ae_document({"cells": ["c1", "c1"], "sets": [], "to_move": "avoider"})
    with pytest.raises(FormatError):
        parse_ae_document({"cells": ["c1"], "sets": [["c9"]], "to_move": "avoider"})
    with pytest.raises(FormatError):
        parse_ae_document({"cells": ["c1"], "sets": [], "to_move": "nobody"})


def test_ae_document_rejects_reserved_cells():
    doc = {"cells": ["x0"], "sets": [], "to_move": "avoider"}
    with pytest.raises(FormatError):
        parse_ae_document(doc)
    parsed = parse_ae_document(doc, allow_reserved=True)
    assert parsed.cells == frozenset({"x0"})
    # names that merely start with x are fine
    ok = parse_ae_document({"cells": ["xy", "x"], "sets": [], "to_move": "avoider"})
    assert ok.cells == frozenset({"xy", "x"})


def test_roles_sidecar_shape():
    ri = build_reduction(AePosition.make({"c1"}, [{"c1"}], Player.AVOIDER), 2)
    doc = roles_to_document(ri)
    assert doc["roles"]["0"] == {"type": "r"}
    assert doc["roles"]["1"] == {"type": "s"}
    assert doc["roles"]["2"] == {"type": "v", "i": 1}
    assert doc["roles"]["3"] == {"type": "u", "i": 1}
    assert doc["roles"]["4"] == {"type": "w", "k": 1}
    assert doc["roles"]["6"] == {"type": "t", "j": 1, "k": 1}
    assert len(doc["roles"]) == ri.graph.vertex_count

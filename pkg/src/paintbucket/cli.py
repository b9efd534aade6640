"""Command-line front door: solve, reduce, verify, convert, serve.

Exit codes for solve: 0 when Black/Avoider wins, 1 when White/Enforcer
wins, 2 on input errors, 3 when the node budget runs out.
"""

from __future__ import annotations

import json
import sys

import click

from .ae import Player, ae_solve, with_to_move
from .canon import ISO, LABELED
from .core import BoardError, Color, contract, grid_to_colored_graph
from .formats import (
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
from .reduction import build_reduction, default_k, normalize_for_reduction
from .solver import BudgetExceededError, DEFAULT_NODE_BUDGET, SolveOptions, solve
from .verify import run_suite

BOARD_FORMATS = ("grid", "graph", "bipartite")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from None


def _parse_board(text: str, fmt: str):
    if fmt == "grid":
        return contract(grid_to_colored_graph(parse_grid(text)))
    if fmt == "graph":
        return contract(parse_graph_document(_load_json(text)))
    if fmt == "bipartite":
        return parse_bipartite_document(_load_json(text))
    raise FormatError(f"unknown format {fmt!r}")


@click.group()
def main():
    """Solve, translate, and serve Paintbucket and avoider-enforcer games."""


@main.command("solve")
@click.argument("input_file")
@click.option("--format", "fmt", type=click.Choice(["grid", "graph", "bipartite", "ae"]),
              default="grid", show_default=True, help="Input format.")
@click.option("--to-move", "to_move",
              type=click.Choice(["black", "white", "avoider", "enforcer"]),
              default=None, help="Player to move (default: black, or the AE "
                                 "document's own to_move).")
@click.option("--memo", type=click.Choice([LABELED, ISO]), default=LABELED,
              show_default=True, help="Transposition-table key mode.")
@click.option("--budget", type=int, default=DEFAULT_NODE_BUDGET, show_default=True,
              help="Node expansion budget.")
@click.option("--threads", type=int, default=1, show_default=True,
              help="Worker threads for the root split.")
def cmd_solve(input_file, fmt, to_move, memo, budget, threads):
    """Solve a position and print winner, pv, and search counters."""
    try:
        text = _read_text(input_file)
        if fmt == "ae":
            if to_move in ("black", "white"):
                raise FormatError("AE positions take --to-move avoider|enforcer")
            ae = parse_ae_document(_load_json(text))
            if to_move is not None:
                ae = with_to_move(ae, Player(to_move))
            outcome = ae_solve(ae)
            click.echo(f"winner: {outcome.winner}")
            click.echo("pv: " + " ".join(f"{p}@{c}" for p, c in outcome.pv))
            sys.exit(0 if outcome.winner is Player.AVOIDER else 1)
        if to_move in ("avoider", "enforcer"):
            raise FormatError("board positions take --to-move black|white")
        pos = _parse_board(text, fmt)
        mover = Color(to_move) if to_move else Color.BLACK
        opts = SolveOptions(memo=memo, node_budget=budget, threads=threads)
        result = solve(pos, mover, opts)
    except BudgetExceededError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(3)
    except (FormatError, BoardError, OSError, ValueError) as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(2)
    click.echo(f"winner: {result.winner}")
    click.echo("pv: " + " ".join(str(m) for m in result.pv))
    click.echo(f"nodes: {result.nodes_expanded}")
    click.echo(f"hits: {result.table_hits}")
    sys.exit(0 if result.winner is Color.BLACK else 1)


@main.command("reduce")
@click.argument("ae_file")
@click.option("--K", "k_spec", default="auto", show_default=True,
              help="Cluster size: 'auto' normalizes and uses |C|+2.")
@click.option("-o", "--output", required=True, help="Output board path (JSON).")
def cmd_reduce(ae_file, k_spec, output):
    """Translate an AE instance into a Paintbucket board plus role sidecar."""
    try:
        ae = parse_ae_document(_load_json(_read_text(ae_file)))
        if k_spec == "auto":
            normalized, steps = normalize_for_reduction(ae)
            k = default_k(normalized)
            for step in steps:
                click.echo(f"normalization: {step}")
        else:
            normalized, steps = ae, []
            try:
                k = int(k_spec)
            except ValueError:
                raise FormatError("--K must be 'auto' or a positive integer") from None
            if k < 1:
                raise FormatError("--K must be 'auto' or a positive integer")
            if k < len(normalized.cells) + 2:
                click.echo(
                    f"warning: winner equivalence needs K >= |C|+2 = "
                    f"{len(normalized.cells) + 2}; building with K={k} anyway",
                    err=True,
                )
        ri = build_reduction(normalized, k)
        base = output[:-5] if output.endswith(".json") else output
        sidecar = base + ".roles.json"
        _write_text(output, json.dumps(bipartite_to_document(ri.graph), indent=2) + "\n")
        _write_text(sidecar, json.dumps(roles_to_document(ri), indent=2) + "\n")
    except (FormatError, BoardError, OSError, ValueError) as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(2)
    click.echo(f"K: {k}")
    click.echo(f"vertices: {ri.graph.vertex_count} "
               f"({len(ri.graph.black)} black, {len(ri.graph.white)} white)")
    click.echo(f"edges: {len(ri.graph.edges)}")
    click.echo(f"wrote {output} and {sidecar}")


# flags each suite understands, mapped to its keyword arguments
_SUITE_PARAMS = {
    "claw": {"count": "count", "seed": "seed"},
    "neighbors": {"count": "count", "seed": "seed"},
    "complete": {"max": "max_side"},
    "shenanigans": {"cells": "max_cells", "sets": "max_sets"},
    "simulation": {"cells": "max_cells", "sets": "max_sets"},
    "proposition": {"cells": "max_cells", "sets": "max_sets"},
    "normalization": {"cells": "max_cells", "sets": "max_sets"},
    "representation": {},
}


@main.command("verify")
@click.argument("suite")
@click.option("--max", "max_", type=int, default=None, help="Largest side for complete boards.")
@click.option("--cells", type=int, default=None, help="Largest AE cell count.")
@click.option("--sets", "sets_", type=int, default=None, help="Largest avoider-set count.")
@click.option("--count", type=int, default=None, help="Randomized case count.")
@click.option("--seed", type=int, default=None, help="Random seed.")
@click.option("--quiet", is_flag=True, help="Print failures and the summary only.")
def cmd_verify(suite, max_, cells, sets_, count, seed, quiet):
    """Run a property suite and report pass/fail per case."""
    if suite not in _SUITE_PARAMS:
        click.echo(f"error: unknown suite {suite!r}; expected one of "
                   f"{', '.join(sorted(_SUITE_PARAMS))}", err=True)
        sys.exit(2)
    given = {"max": max_, "cells": cells, "sets": sets_, "count": count, "seed": seed}
    params = {
        kw: given[flag]
        for flag, kw in _SUITE_PARAMS[suite].items()
        if given[flag] is not None
    }
    report = run_suite(suite, **params)
    for case in report.cases:
        if case.passed and quiet:
            continue
        status = "PASS" if case.passed else "FAIL"
        detail = f" ({case.detail})" if case.detail and not case.passed else ""
        click.echo(f"{status} {case.name}{detail}")
    click.echo(report.summary())
    sys.exit(0 if report.passed else 1)


@main.command("convert")
@click.argument("input_file")
@click.option("--from", "src", type=click.Choice(["grid", "graph", "bipartite", "ae"]),
              default="grid", show_default=True)
@click.option("--to", "dst", type=click.Choice(["grid", "graph", "bipartite", "ae"]),
              required=True)
@click.option("-o", "--output", default="-", show_default=True)
def cmd_convert(input_file, src, dst, output):
    """Convert between formats (grid -> graph -> bipartite are one-way)."""
    order = {"grid": 0, "graph": 1, "bipartite": 2}
    try:
        text = _read_text(input_file)
        if (src == "ae") != (dst == "ae"):
            raise FormatError("AE positions do not convert to or from boards")
        if src == "ae":
            out = json.dumps(ae_to_document(parse_ae_document(_load_json(text))),
                             indent=2) + "\n"
        elif order[dst] < order[src]:
            raise FormatError(f"cannot convert {src} back to {dst}")
        else:
            if src == "grid":
                grid = parse_grid(text)
                if dst == "grid":
                    out = grid_to_text(grid)
                else:
                    graph = grid_to_colored_graph(grid)
                    doc = graph_to_document(graph) if dst == "graph" \
                        else bipartite_to_document(contract(graph))
                    out = json.dumps(doc, indent=2) + "\n"
            elif src == "graph":
                graph = parse_graph_document(_load_json(text))
                doc = graph_to_document(graph) if dst == "graph" \
                    else bipartite_to_document(contract(graph))
                out = json.dumps(doc, indent=2) + "\n"
            else:
                pos = parse_bipartite_document(_load_json(text))
                out = json.dumps(bipartite_to_document(pos), indent=2) + "\n"
        _write_text(output, out)
    except (FormatError, BoardError, OSError, ValueError) as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(2)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def cmd_serve(host, port):
    """Run the local HTTP/JSON game service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()

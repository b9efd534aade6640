"""Property suites that mechanically check the game-theoretic claims.

Each suite returns a SuiteReport with one entry per checked case; the
CLI `verify` command prints them. Randomized suites are reproducible
from their seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .ae import AePosition, Player, ae_solve, normalize_avoider_first, normalize_even, \
    with_to_move
from .canon import ISO
from .core import (
    BipartitePosition,
    Color,
    ColoredGraph,
    GridPosition,
    Move,
    apply_move,
    contract,
    grid_to_colored_graph,
)
from .reduction import build_reduction, default_k, verify_proposition, \
    verify_shenanigans, verify_simulation_step
from .solver import SolveOptions, solve_winner


@dataclass
class CaseResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def check(self, name: str, ok: bool, detail: str = ""):
        self.cases.append(CaseResult(name, ok, detail))

    def summary(self) -> str:
        good = sum(1 for c in self.cases if c.passed)
        return f"suite {self.suite}: {good}/{len(self.cases)} passed"


# ---------------------------------------------------------------------------
# generators

def random_connected_bipartite(rng: random.Random, n_black: int, n_white: int,
                               extra_edge_chance: float = 0.3) -> BipartitePosition:
    """Random connected position with the given side sizes, ids 0..n-1."""
    n = n_black + n_white
    if n < 1:
        raise ValueError("need at least one vertex")
    if n > 1 and (n_black == 0 or n_white == 0):
        raise ValueError("a connected position with 2+ vertices needs both colors")
    colors = [Color.BLACK] * n_black + [Color.WHITE] * n_white
    rng.shuffle(colors)
    if n > 1 and colors[1] is colors[0]:
        other = next(i for i, c in enumerate(colors) if c is not colors[0])
        colors[1], colors[other] = colors[other], colors[1]
    edges = set()
    for v in range(1, n):
        anchors = [u for u in range(v) if colors[u] is not colors[v]]
        u = rng.choice(anchors)
        edges.add((u, v) if colors[u] is Color.BLACK else (v, u))
    for b in range(n):
        for w in range(n):
            if colors[b] is Color.BLACK and colors[w] is Color.WHITE \
                    and rng.random() < extra_edge_chance:
                edges.add((b, w))
    black = {v for v in range(n) if colors[v] is Color.BLACK}
    white = set(range(n)) - black
    return BipartitePosition(black, white, edges)


def attach_leaves(p: BipartitePosition, hub: int, count: int) -> BipartitePosition:
    """Fresh black leaves hanging off a white hub vertex."""
    start = max(p.black | p.white) + 1
    leaves = set(range(start, start + count))
    edges = set(p.edges) | {(leaf, hub) for leaf in leaves}
    return BipartitePosition(p.black | leaves, p.white, edges)


def plant_twins(rng: random.Random, p: BipartitePosition,
                copies: int) -> tuple[BipartitePosition, int, list[int]]:
    """Duplicate one vertex's neighborhood into fresh same-colored twins."""
    adj = p.adjacency()
    original = rng.choice(sorted(v for v in adj if adj[v]))
    color = p.color_of(original)
    start = max(p.black | p.white) + 1
    twins = list(range(start, start + copies - 1))
    edges = set(p.edges)
    for t in twins:
        for nb in adj[original]:
            edges.add((t, nb) if color is Color.BLACK else (nb, t))
    black, white = set(p.black), set(p.white)
    (black if color is Color.BLACK else white).update(twins)
    return BipartitePosition(black, white, edges), original, twins


def complete_bipartite(m: int, n: int) -> BipartitePosition:
    black = set(range(m))
    white = set(range(m, m + n))
    return BipartitePosition(black, white, {(b, w) for b in black for w in white})


def all_families(cells: tuple[str, ...], max_sets: int):
    """Every multiset of at most max_sets avoider sets over the cells."""
    subsets = sorted(
        (frozenset(c) for r in range(len(cells) + 1)
         for c in combinations(cells, r)),
        key=lambda s: (len(s), tuple(sorted(s))),
    )
    for size in range(max_sets + 1):
        yield from combinations_with_replacement(subsets, size)


def all_ae_positions(max_cells: int, max_sets: int, to_move: Player):
    for n in range(max_cells + 1):
        cells = tuple(f"c{i}" for i in range(1, n + 1))
        for family in all_families(cells, max_sets):
            yield AePosition(frozenset(cells), tuple(family), to_move)


def ae_label(p: AePosition) -> str:
    sets = " ".join("{" + ",".join(sorted(s)) + "}" for s in p.sets) or "-"
    return f"C={{{','.join(sorted(p.cells))}}} A=[{sets}]"


def all_grids(rows: int, cols: int):
    for bits in range(2 ** (rows * cols)):
        pixels = tuple(
            tuple(
                Color.BLACK if bits >> (r * cols + c) & 1 else Color.WHITE
                for c in range(cols)
            )
            for r in range(rows)
        )
        yield GridPosition(rows, cols, pixels)


# ---------------------------------------------------------------------------
# direct colored-graph solving (independent of the contracted engine)

def colored_winner(g: ColoredGraph, to_move: Color) -> Color:
    """Exact winner of the group-flip game played directly on the graph."""
    ids = g.vertex_ids
    index = {v: i for i, v in enumerate(ids)}
    adj = [tuple(index[u] for u in g.neighbors(v)) for v in ids]
    memo: dict[tuple, Color] = {}

    def flip_groups(colors: tuple[Color, ...], target_color: Color):
        seen = [False] * len(ids)
        for i in range(len(ids)):
            if seen[i] or colors[i] is not target_color:
                continue
            comp = [i]
            seen[i] = True
            stack = [i]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if not seen[y] and colors[y] is target_color:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            yield comp

    def rec(colors: tuple[Color, ...], mover: Color) -> Color:
        first = colors[0]
        if all(c is first for c in colors):
            return first
        key = (colors, mover)
        hit = memo.get(key)
        if hit is not None:
            return hit
        result = mover.opposite
        for comp in flip_groups(colors, mover.opposite):
            flipped = list(colors)
            for i in comp:
                flipped[i] = mover
            if rec(tuple(flipped), mover.opposite) is mover:
                result = mover
                break
        memo[key] = result
        return result

    return rec(tuple(g.color(v) for v in ids), to_move)


# ---------------------------------------------------------------------------
# suites

def suite_claw(count: int = 200, max_graph_vertices: int = 10,
               max_leaves: int = 6, seed: int = 0,
               opts: SolveOptions | None = None) -> SuiteReport:
    """Black wins from a white hub with enough black leaves attached.

    With m white vertices and k >= m leaves Black wins moving first;
    with k > m Black wins regardless of who starts.
    """
    report = SuiteReport("claw")
    rng = random.Random(seed)
    opts = opts or SolveOptions(memo=ISO, table={})
    for case in range(count):
        m = rng.randint(1, min(max_leaves, max_graph_vertices))
        n_black = rng.randint(0 if m == 1 else 1, max_graph_vertices - m)
        k = rng.randint(m, max_leaves)
        g = random_connected_bipartite(rng, n_black, m)
        hub = rng.choice(sorted(g.white))
        pos = attach_leaves(g, hub, k)
        name = f"case {case}: m={m} k={k} |G|={n_black + m}"
        ok = solve_winner(pos, Color.BLACK, opts) is Color.BLACK
        if ok and k > m:
            ok = solve_winner(pos, Color.WHITE, opts) is Color.BLACK
        report.check(name, ok)
    return report


def suite_neighbors(count: int = 200, seed: int = 0) -> SuiteReport:
    """Playing one of several same-neighborhood vertices turns the others
    into leaves that all hang off the played vertex."""
    report = SuiteReport("neighbors")
    rng = random.Random(seed)
    for case in range(count):
        n_black = rng.randint(1, 5)
        n_white = rng.randint(1, 5)
        base = random_connected_bipartite(rng, n_black, n_white)
        copies = rng.randint(2, 4)
        pos, original, twins = plant_twins(rng, base, copies)
        mover = pos.color_of(original).opposite
        child = apply_move(pos, Move(mover, original))
        adj = child.adjacency()
        ok = all(adj.get(t) == frozenset({original}) for t in twins)
        report.check(f"case {case}: {copies} twins at {original}", ok)
    return report


def expected_complete_winner(m: int, n: int, to_move: Color) -> Color:
    if m == 1 and n == 1:
        return to_move
    if n == 1:
        return Color.BLACK
    if m == 1:
        return Color.WHITE
    return to_move.opposite


def suite_complete(max_side: int = 4, opts: SolveOptions | None = None) -> SuiteReport:
    """All four outcome clauses for complete bipartite boards.

    One case per board, solving for both players to move.
    """
    report = SuiteReport("complete")
    opts = opts or SolveOptions(memo=ISO, table={})
    for m in range(1, max_side + 1):
        for n in range(1, max_side + 1):
            pos = complete_bipartite(m, n)
            details = []
            for mover in (Color.BLACK, Color.WHITE):
                got = solve_winner(pos, mover, opts)
                want = expected_complete_winner(m, n, mover)
                if got is not want:
                    details.append(f"{mover} to move: expected {want}, got {got}")
            report.check(f"K_{{{m},{n}}} both movers", not details, "; ".join(details))
    return report


def suite_shenanigans(max_cells: int = 2, max_sets: int = 2,
                      opts: SolveOptions | None = None) -> SuiteReport:
    """Off-pair moves lose for both players on every small gadget board."""
    report = SuiteReport("shenanigans")
    opts = opts or SolveOptions(memo=ISO, table={})
    for ae in all_ae_positions(max_cells, max_sets, Player.AVOIDER):
        ri = build_reduction(ae, default_k(ae))
        label = ae_label(ae)
        report.check(f"white off-pair loses: {label}",
                     verify_shenanigans(ri, Color.WHITE, opts))
        if ae.sets:
            report.check(f"black off-pair loses: {label}",
                         verify_shenanigans(ri, Color.BLACK, opts))
    return report


def suite_simulation(max_cells: int = 3, max_sets: int = 2) -> SuiteReport:
    """Pair moves mirror avoider/enforcer moves up to isomorphism."""
    report = SuiteReport("simulation")
    for ae in all_ae_positions(max_cells, max_sets, Player.AVOIDER):
        ri = build_reduction(ae, default_k(ae))
        label = ae_label(ae)
        for cell in sorted(ae.cells):
            for player in (Color.BLACK, Color.WHITE):
                report.check(
                    f"{player} mirrors {cell}: {label}",
                    verify_simulation_step(ri, cell, player),
                )
    return report


def suite_proposition(max_cells: int = 2, max_sets: int = 2,
                      opts: SolveOptions | None = None) -> SuiteReport:
    """Winner equivalence between AE instances and their gadget boards."""
    report = SuiteReport("proposition")
    opts = opts or SolveOptions(memo=ISO, table={})
    for ae in all_ae_positions(max_cells, max_sets, Player.AVOIDER):
        report.check(
            f"winner equivalence: {ae_label(ae)}",
            verify_proposition(ae, default_k(ae), opts),
        )
    return report


def suite_normalization(max_cells: int = 4, max_sets: int = 3) -> SuiteReport:
    """First-player and parity padding both preserve the AE winner."""
    report = SuiteReport("normalization")
    for ae in all_ae_positions(max_cells, max_sets, Player.ENFORCER):
        normalized = normalize_avoider_first(ae)
        report.check(
            f"avoider-first keeps winner: {ae_label(ae)}",
            ae_solve(ae).winner is ae_solve(normalized).winner,
        )
    for ae in all_ae_positions(max_cells, max_sets, Player.AVOIDER):
        if len(ae.cells) % 2 == 0:
            continue
        padded = normalize_even(ae)
        report.check(
            f"parity padding keeps winner: {ae_label(ae)}",
            ae_solve(ae).winner is ae_solve(padded).winner,
        )
    return report


def suite_representation(opts: SolveOptions | None = None) -> SuiteReport:
    """Direct colored-graph play and contracted play pick the same winner
    on every 2x2 and 2x3 board."""
    report = SuiteReport("representation")
    opts = opts or SolveOptions(memo=ISO, table={})
    for rows, cols in ((2, 2), (2, 3)):
        for grid in all_grids(rows, cols):
            graph = grid_to_colored_graph(grid)
            pos = contract(graph)
            board = "".join(
                "B" if c is Color.BLACK else "W" for row in grid.pixels for c in row
            )
            for mover in (Color.BLACK, Color.WHITE):
                direct = colored_winner(graph, mover)
                contracted = solve_winner(pos, mover, opts)
                report.check(
                    f"{rows}x{cols} {board} {mover} to move",
                    direct is contracted,
                    f"direct {direct}, contracted {contracted}",
                )
    return report


SUITES = {
    "claw": suite_claw,
    "neighbors": suite_neighbors,
    "complete": suite_complete,
    "shenanigans": suite_shenanigans,
    "simulation": suite_simulation,
    "proposition": suite_proposition,
    "normalization": suite_normalization,
    "representation": suite_representation,
}


def run_suite(name: str, **params) -> SuiteReport:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(
            f"unknown suite {name!r}; expected one of {', '.join(sorted(SUITES))}"
        ) from None
    return suite(**params)

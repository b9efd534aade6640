"""Hardness gadget: avoider-enforcer instances as Paintbucket boards.

For a position (C, A) and cluster size K the built board has one
black/white pair (v_i, u_i) per cell, a cluster of K black vertices
w_1..w_K, a cluster of K white vertices t_{j,1}..t_{j,K} per avoider
set (joined completely to the w cluster), a universal black vertex r
adjacent to every white vertex, and a universal white vertex s adjacent
to every black vertex including r. t vertices attach to exactly the v's
whose cell belongs to their set. With K >= |C| + 2 any move outside the
u/v pairs loses on the spot, and moves on the pairs mirror the
avoider-enforcer game, which makes the winner carry over.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ae import AeError, AePosition, Player, ae_apply, ae_solve, normalize_avoider_first, \
    normalize_even, with_to_move
from .canon import ISO, isomorphic
from .core import BipartitePosition, Color, Move, apply_move
from .solver import SolveOptions, solve_winner


@dataclass(frozen=True)
class Role:
    type: str               # one of r, s, v, u, w, t
    i: int | None = None    # 1-based cell index for v/u
    j: int | None = None    # 1-based avoider-set index for t
    k: int | None = None    # 1-based cluster index for w/t


@dataclass
class ReductionInstance:
    ae: AePosition
    k: int
    graph: BipartitePosition
    roles: dict[int, Role]

    @property
    def cell_order(self) -> list[str]:
        return sorted(self.ae.cells)

    def vertex(self, type: str, i: int | None = None, j: int | None = None,
               k: int | None = None) -> int:
        want = Role(type, i, j, k)
        for vid, role in self.roles.items():
            if role == want:
                return vid
        raise KeyError(f"no vertex with role {want}")


def default_k(ae: AePosition) -> int:
    """Cluster size large enough for the off-pair punishments: |C| + 2."""
    return len(ae.cells) + 2


def build_reduction(ae: AePosition, k: int) -> ReductionInstance:
    """Construct the gadget board for (C, A) with cluster size k.

    Vertex ids are dense from 0 in role order r, s, v_1..v_I, u_1..u_I,
    w_1..w_K, t_{1,1}..t_{J,K}; cells are taken in sorted order.
    """
    if k < 1:
        raise ValueError("cluster size must be at least 1")
    cells = sorted(ae.cells)
    big_i, big_j = len(cells), len(ae.sets)

    roles: dict[int, Role] = {0: Role("r"), 1: Role("s")}
    v_id = {i: 2 + (i - 1) for i in range(1, big_i + 1)}
    u_id = {i: 2 + big_i + (i - 1) for i in range(1, big_i + 1)}
    w_id = {kk: 2 + 2 * big_i + (kk - 1) for kk in range(1, k + 1)}
    t_id = {(j, kk): 2 + 2 * big_i + k + (j - 1) * k + (kk - 1)
            for j in range(1, big_j + 1) for kk in range(1, k + 1)}
    for i, vid in v_id.items():
        roles[vid] = Role("v", i=i)
    for i, vid in u_id.items():
        roles[vid] = Role("u", i=i)
    for kk, vid in w_id.items():
        roles[vid] = Role("w", k=kk)
    for (j, kk), vid in t_id.items():
        roles[vid] = Role("t", j=j, k=kk)

    black = {0} | set(v_id.values()) | set(w_id.values())
    white = {1} | set(u_id.values()) | set(t_id.values())

    edges = set()
    edges.add((0, 1))                                    # (r, s)
    for i in range(1, big_i + 1):
        edges.add((0, u_id[i]))                          # r universal over whites
        edges.add((v_id[i], u_id[i]))
        edges.add((v_id[i], 1))                          # s universal over blacks
    for (j, kk), tid in t_id.items():
        edges.add((0, tid))
        for kk2 in range(1, k + 1):                      # w x t complete bipartite
            edges.add((w_id[kk2], tid))
    for kk in range(1, k + 1):
        edges.add((w_id[kk], 1))
    for j, avoider_set in enumerate(ae.sets, start=1):
        for i, cell in enumerate(cells, start=1):
            if cell in avoider_set:
                for kk in range(1, k + 1):
                    edges.add((v_id[i], t_id[(j, kk)]))

    graph = BipartitePosition(black, white, edges)
    return ReductionInstance(ae, k, graph, roles)


def audit_reduction(ri: ReductionInstance) -> list[str]:
    """Structural problems with a built instance; empty when sound."""
    problems = []
    big_i, big_j, k = len(ri.ae.cells), len(ri.ae.sets), ri.k
    g = ri.graph
    if len(g.black) != big_i + k + 1:
        problems.append(f"black count {len(g.black)} != I+K+1")
    if len(g.white) != big_i + big_j * k + 1:
        problems.append(f"white count {len(g.white)} != I+J*K+1")
    adj = g.adjacency()
    by_type: dict[str, list[int]] = {}
    for vid, role in ri.roles.items():
        by_type.setdefault(role.type, []).append(vid)
    r, s = ri.vertex("r"), ri.vertex("s")
    if adj[r] != g.white:
        problems.append("r is not adjacent to every white vertex")
    if adj[s] != g.black:
        problems.append("s is not adjacent to every black vertex")
    for vid in by_type.get("u", []):
        i = ri.roles[vid].i
        if adj[vid] != frozenset({r, ri.vertex("v", i=i)}):
            problems.append(f"u_{i} is not adjacent to exactly r and v_{i}")
    tids = frozenset(by_type.get("t", []))
    for vid in by_type.get("w", []):
        if not tids <= adj[vid]:
            problems.append(f"w_{ri.roles[vid].k} misses part of the t cluster")
    cells = ri.cell_order
    for vid in by_type.get("v", []):
        i = ri.roles[vid].i
        cell = cells[i - 1]
        expected_t = frozenset(
            t for t in tids
            if cell in ri.ae.sets[ri.roles[t].j - 1]
        )
        if (adj[vid] & tids) != expected_t:
            problems.append(f"v_{i} to t wiring does not match set membership")
    return problems


def _pair_index(ri: ReductionInstance, cell: str) -> int:
    try:
        return ri.cell_order.index(cell) + 1
    except ValueError:
        raise AeError(f"unknown cell {cell!r}") from None


def verify_simulation_step(ri: ReductionInstance, cell: str, player: Color) -> bool:
    """Moving on the cell's pair mirrors the matching avoider-enforcer move.

    Black at u_i must yield (up to isomorphism) the gadget built from
    the avoider playing the cell; White at v_i likewise for the
    enforcer.
    """
    i = _pair_index(ri, cell)
    if player is Color.BLACK:
        target = ri.vertex("u", i=i)
        ae_player = Player.AVOIDER
    else:
        target = ri.vertex("v", i=i)
        ae_player = Player.ENFORCER
    moved = apply_move(ri.graph, Move(player, target))
    successor = ae_apply(with_to_move(ri.ae, ae_player), cell)
    expected = build_reduction(successor, ri.k).graph
    return isomorphic(moved, expected)


def _off_pair_targets(ri: ReductionInstance, player: Color) -> list[int]:
    wanted = "v" if player is Color.WHITE else "u"
    side = ri.graph.side(player.opposite)
    return sorted(v for v in side if ri.roles[v].type != wanted)


def verify_shenanigans(ri: ReductionInstance, player: Color,
                       opts: SolveOptions | None = None) -> bool:
    """Every off-pair move by the player hands the game to the opponent."""
    if ri.k < len(ri.ae.cells) + 2:
        raise ValueError("off-pair punishment needs K >= |C| + 2")
    if player is Color.BLACK and not ri.ae.sets:
        raise ValueError("the Black clause needs a nonempty avoider family")
    opts = opts or SolveOptions(memo=ISO)
    for target in _off_pair_targets(ri, player):
        child = apply_move(ri.graph, Move(player, target))
        if solve_winner(child, player.opposite, opts) is not player.opposite:
            return False
    return True


def verify_proposition(ae: AePosition, k: int,
                       opts: SolveOptions | None = None) -> bool:
    """Winner equivalence between (C, A) and its gadget board.

    Even |C|: Black moving first wins the board iff the avoider moving
    first wins (C, A). Odd |C|: the same with both second players.
    """
    if k < len(ae.cells) + 2:
        raise ValueError("winner equivalence needs K >= |C| + 2")
    opts = opts or SolveOptions(memo=ISO)
    graph = build_reduction(ae, k).graph
    if len(ae.cells) % 2 == 0:
        black_wins = solve_winner(graph, Color.BLACK, opts) is Color.BLACK
        avoider_wins = ae_solve(with_to_move(ae, Player.AVOIDER)).winner is Player.AVOIDER
    else:
        black_wins = solve_winner(graph, Color.WHITE, opts) is Color.BLACK
        avoider_wins = ae_solve(with_to_move(ae, Player.ENFORCER)).winner is Player.AVOIDER
    return black_wins == avoider_wins


def normalize_for_reduction(ae: AePosition) -> tuple[AePosition, list[str]]:
    """Make the instance avoider-first with an even cell count."""
    steps = []
    pos = ae
    if pos.to_move is Player.ENFORCER:
        pos = normalize_avoider_first(pos)
        steps.append("added throwaway cell x0 so the avoider moves first")
    if len(pos.cells) % 2 == 1:
        pos = normalize_even(pos)
        steps.append("added cell x1 with avoider set {x1} to even out the cell count")
    return pos, steps


def reduce_decision(ae: AePosition) -> tuple[BipartitePosition, Color]:
    """Decision-preserving translation to a Paintbucket position.

    Normalizes to avoider-first/even, picks K = |C| + 2, and returns
    the board with Black to move: Black wins it iff the avoider wins
    the input.
    """
    normalized, _ = normalize_for_reduction(ae)
    graph = build_reduction(normalized, default_k(normalized)).graph
    return graph, Color.BLACK

"""Acceptance gate: one test per acceptance criterion, at full bounds.

Each test prints a PASS line with its runtime once its assertions hold
(run with -s or check the -v report). Time limits are asserted against
wall-clock runtime of the checked work.
"""

import random
import time

from helpers import plain_winner, random_corpus
from paintbucket.ae import Player
from paintbucket.canon import ISO, LABELED, isomorphic
from paintbucket.core import (
    Color,
    Move,
    contract,
    flip_group,
    flip_pixel_group,
    grid_to_colored_graph,
    is_monochromatic,
    is_terminal,
    replay,
    winner_if_terminal,
)
from paintbucket.formats import parse_grid
from paintbucket.reduction import default_k, verify_proposition
from paintbucket.solver import SolveOptions, solve_winner
from paintbucket.verify import (
    all_ae_positions,
    run_suite,
)

B, W = Color.BLACK, Color.WHITE
X_PATTERN = "WBW\nBWB\nWBW\n"


class criterion:
    """Context manager: enforce a wall-clock limit and print one PASS line."""

    def __init__(self, name: str, limit_seconds: float):
        self.name = name
        self.limit = limit_seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is None:
            assert elapsed < self.limit, \
                f"{self.name}: took {elapsed:.1f}s, limit {self.limit:.0f}s"
            print(f"PASS {self.name} ({elapsed:.2f}s)")
        else:
            print(f"FAIL {self.name}")
        return False


def assert_suite_clean(report):
    failed = [c for c in report.cases if not c.passed]
    assert not failed, f"{len(failed)} counterexamples, first: {failed[0]}"


def test_complete_board_outcome_table():
    with criterion("complete-board outcome table (32 solves)", 1.0):
        report = run_suite("complete", max_side=4)
        assert len(report.cases) == 16  # one case per board, both movers solved
        assert_suite_clean(report)


def test_claw_positions_black_wins():
    with criterion("claw positions: 200 randomized instances", 60.0):
        report = run_suite("claw", count=200, max_graph_vertices=10,
                           max_leaves=6, seed=0)
        assert len(report.cases) >= 200
        assert_suite_clean(report)


def test_twin_neighborhood_collapse():
    with criterion("twin collapse: 200 randomized structural checks", 10.0):
        report = run_suite("neighbors", count=200, seed=0)
        assert len(report.cases) >= 200
        assert_suite_clean(report)


def test_off_pair_moves_lose():
    with criterion("off-pair moves lose (|C| <= 2, <= 2 sets, K=|C|+2)", 300.0):
        report = run_suite("shenanigans", max_cells=2, max_sets=2)
        assert_suite_clean(report)


def test_pair_moves_mirror_ae_moves():
    with criterion("pair moves mirror AE moves (|C| <= 3, <= 2 sets)", 120.0):
        report = run_suite("simulation", max_cells=3, max_sets=2)
        assert_suite_clean(report)


def test_winner_equivalence_exhaustive():
    with criterion("winner equivalence (|C| in {0,1,2}, <= 2 sets)", 600.0):
        report = run_suite("proposition", max_cells=2, max_sets=2)
        assert_suite_clean(report)


def test_winner_equivalence_three_cells_stretch():
    # stretch coverage beyond the exhaustive gate: randomized |C| = 3
    with criterion("winner equivalence stretch (randomized |C| = 3)", 600.0):
        rng = random.Random(2024)
        cells = ("c1", "c2", "c3")
        subsets = [
            frozenset(s) for n in range(4)
            for s in __import__("itertools").combinations(cells, n)
        ]
        opts = SolveOptions(memo=ISO, table={})
        from paintbucket.ae import AePosition

        for _ in range(10):
            family = tuple(rng.choice(subsets) for _ in range(rng.randint(0, 2)))
            ae = AePosition(frozenset(cells), family, Player.AVOIDER)
            assert verify_proposition(ae, default_k(ae), opts), ae


def test_normalizations_preserve_winner():
    with criterion("normalizations preserve AE winner (|C| <= 4, <= 3 sets)", 60.0):
        report = run_suite("normalization", max_cells=4, max_sets=3)
        assert_suite_clean(report)


def test_representation_equivalence():
    with criterion("representation equivalence (all 2x2 and 2x3 boards)", 120.0):
        report = run_suite("representation")
        assert len(report.cases) == (16 + 64) * 2
        assert_suite_clean(report)


def test_example_game_replay_all_representations():
    with criterion("example game replay in all three representations", 5.0):
        # grid view: the four recorded plies as flood-fill flips
        grid = parse_grid(X_PATTERN)
        grid_moves = [(B, 0, 2), (W, 2, 1), (B, 1, 1), (W, 0, 1)]
        for player, row, col in grid_moves:
            grid = flip_pixel_group(grid, player, row, col)
        assert grid.is_monochromatic()
        assert grid.pixels[0][0] is W
        assert grid_moves[-1][0] is W  # the last mover wins

        # colored-graph view: same plies as group flips on pixel vertices
        graph = grid_to_colored_graph(parse_grid(X_PATTERN))
        for player, row, col in grid_moves:
            graph = flip_group(graph, player, row * 3 + col)
        assert is_monochromatic(graph)
        assert graph.color(0) is W

        # contracted view: same game as merge moves
        pos = contract(grid_to_colored_graph(parse_grid(X_PATTERN)))
        end = replay(pos, [Move(B, 2), Move(W, 7), Move(B, 7), Move(W, 7)])
        assert is_terminal(end)
        assert winner_if_terminal(end) is W

        # the three lines stay in lockstep: contracting the flipped grid at
        # every ply is isomorphic to the merge-game position
        pos = contract(grid_to_colored_graph(parse_grid(X_PATTERN)))
        graph = grid_to_colored_graph(parse_grid(X_PATTERN))
        for (player, row, col), move in zip(
            grid_moves, [Move(B, 2), Move(W, 7), Move(B, 7), Move(W, 7)]
        ):
            graph = flip_group(graph, player, row * 3 + col)
            pos = replay(pos, [move])
            assert isomorphic(contract(graph), pos)


def test_memoized_solvers_match_plain_recursion():
    with criterion("oracle equivalence: 500 random positions, both modes", 300.0):
        corpus = random_corpus(seed=101, count=500, max_side=6)
        assert all(p.vertex_count <= 12 for p in corpus)
        labeled = SolveOptions(memo=LABELED, table={})
        iso = SolveOptions(memo=ISO, table={})
        for pos in corpus:
            for mover in (B, W):
                expected = plain_winner(pos, mover)
                assert solve_winner(pos, mover, labeled) is expected, (pos, mover)
                assert solve_winner(pos, mover, iso) is expected, (pos, mover)

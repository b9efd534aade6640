"""Exact play, solving, and hardness gadgets for Paintbucket on graphs."""

from .ae import AeOutcome, AePosition, Player, ae_apply, ae_solve, ae_winner_at_end, \
    normalize_avoider_first, normalize_even
from .canon import canonical_key, find_isomorphism, isomorphic
from .core import (
    BipartitePosition,
    BoardError,
    Color,
    ColoredGraph,
    GridPosition,
    IllegalMoveError,
    Move,
    apply_move,
    contract,
    flip_group,
    flip_pixel_group,
    grid_to_colored_graph,
    groups,
    is_terminal,
    legal_moves,
    replay,
    winner_if_terminal,
)
from .reduction import ReductionInstance, build_reduction, default_k, reduce_decision, \
    verify_proposition, verify_shenanigans, verify_simulation_step
from .solver import BudgetExceededError, SolveOptions, SolveResult, best_move, solve

__all__ = [
    "AeOutcome",
    "AePosition",
    "BipartitePosition",
    "BoardError",
    "BudgetExceededError",
    "Color",
    "ColoredGraph",
    "GridPosition",
    "IllegalMoveError",
    "Move",
    "Player",
    "ReductionInstance",
    "SolveOptions",
    "SolveResult",
    "ae_apply",
    "ae_solve",
    "ae_winner_at_end",
    "apply_move",
    "best_move",
    "build_reduction",
    "canonical_key",
    "contract",
    "default_k",
    "find_isomorphism",
    "flip_group",
    "flip_pixel_group",
    "grid_to_colored_graph",
    "groups",
    "is_terminal",
    "isomorphic",
    "legal_moves",
    "normalize_avoider_first",
    "normalize_even",
    "reduce_decision",
    "replay",
    "solve",
    "verify_proposition",
    "verify_shenanigans",
    "verify_simulation_step",
    "winner_if_terminal",
]

"""Perfect-play solving of Paintbucket positions.

Backward induction over the merge game with a transposition table.
Keys are canonical ("labeled" literal form, or "iso" isomorphism
class). Moves at twin vertices lead to isomorphic positions, so the
search expands one representative per twin class: the representative
is the smallest id in its class, which keeps the spec'd smallest-id
tie-breaks exact.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .canon import LABELED, MODES, canonical_key, twin_classes
from .core import (
    BipartitePosition,
    BoardError,
    Color,
    Move,
    apply_move,
)

DEFAULT_NODE_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """The node budget ran out before the position was solved."""


@dataclass
class SolveOptions:
    memo: str = LABELED          # "labeled" or "iso"
    node_budget: int = DEFAULT_NODE_BUDGET
    threads: int = 1
    table: dict | None = None    # share across solves to reuse work

    def __post_init__(self):
        if self.memo not in MODES:
            raise ValueError(f"unknown memo mode {self.memo!r}; expected one of {MODES}")
        if self.node_budget < 1:
            raise ValueError("node budget must be positive")
        if self.threads < 1:
            raise ValueError("thread count must be positive")


@dataclass
class SolveResult:
    winner: Color
    pv: list[Move] = field(default_factory=list)
    nodes_expanded: int = 0
    table_hits: int = 0
    elapsed: float = 0.0


class _Search:
    def __init__(self, opts: SolveOptions):
        self.mode = opts.memo
        self.budget = opts.node_budget
        self.table = opts.table if opts.table is not None else {}
        self.expanded = 0
        self.hits = 0
        self._lock = threading.Lock()
        self._parallel = opts.threads > 1

    def _count_expansion(self):
        if self._parallel:
            with self._lock:
                self.expanded += 1
                over = self.expanded > self.budget
        else:
            self.expanded += 1
            over = self.expanded > self.budget
        if over:
            raise BudgetExceededError(f"node budget of {self.budget} exhausted")

    def move_targets(self, p: BipartitePosition, color: Color) -> list[int]:
        """Smallest-id representative of each twin class on the given side."""
        side = p.side(color)
        return sorted(c[0] for c in twin_classes(p) if c[0] in side)

    def winner(self, p: BipartitePosition, to_move: Color) -> Color:
        terminal = p.single_vertex_color()
        if terminal is not None:
            return terminal
        key = (self.mode, canonical_key(p, self.mode), to_move)
        cached = self.table.get(key)
        if cached is not None:
            self.hits += 1
            return cached
        self._count_expansion()
        opponent = to_move.opposite
        result = opponent
        for target in self.move_targets(p, opponent):
            child = apply_move(p, Move(to_move, target))
            if self.winner(child, opponent) is to_move:
                result = to_move
                break
        self.table[key] = result
        return result

    def winner_parallel_root(self, p: BipartitePosition, to_move: Color,
                             threads: int) -> Color:
        terminal = p.single_vertex_color()
        if terminal is not None:
            return terminal
        opponent = to_move.opposite
        targets = self.move_targets(p, opponent)
        children = [apply_move(p, Move(to_move, t)) for t in targets]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(lambda c: self.winner(c, opponent), children))
        self._count_expansion()
        result = to_move if any(v is to_move for v in values) else opponent
        key = (self.mode, canonical_key(p, self.mode), to_move)
        self.table[key] = result
        return result

    def principal_variation(self, p: BipartitePosition, to_move: Color) -> list[Move]:
        """Walk the solved tree: smallest winning target, else smallest target."""
        line: list[Move] = []
        pos, mover = p, to_move
        while pos.single_vertex_color() is None:
            chosen = None
            fallback = None
            for target in self.move_targets(pos, mover.opposite):
                child = apply_move(pos, Move(mover, target))
                if fallback is None:
                    fallback = target
                if self.winner(child, mover.opposite) is mover:
                    chosen = target
                    break
            target = chosen if chosen is not None else fallback
            line.append(Move(mover, target))
            pos = apply_move(pos, Move(mover, target))
            mover = mover.opposite
        return line


def solve(p: BipartitePosition, to_move: Color,
          opts: SolveOptions | None = None) -> SolveResult:
    """Winner under optimal play, a witness line, and search statistics.

    The winner and pv are deterministic for given inputs regardless of
    thread count; node/hit statistics may differ in parallel mode.
    """
    opts = opts or SolveOptions()
    search = _Search(opts)
    start = time.perf_counter()
    if opts.threads > 1:
        winner = search.winner_parallel_root(p, to_move, opts.threads)
    else:
        winner = search.winner(p, to_move)
    pv = search.principal_variation(p, to_move)
    elapsed = time.perf_counter() - start
    return SolveResult(winner, pv, search.expanded, search.hits, elapsed)


def solve_winner(p: BipartitePosition, to_move: Color,
                 opts: SolveOptions | None = None) -> Color:
    """Winner only; skips the pv walk. Verification sweeps live on this."""
    opts = opts or SolveOptions()
    search = _Search(opts)
    if opts.threads > 1:
        return search.winner_parallel_root(p, to_move, opts.threads)
    return search.winner(p, to_move)


def best_move(p: BipartitePosition, to_move: Color,
              opts: SolveOptions | None = None) -> Move:
    """A winning move when one exists, else the smallest-id legal move."""
    if p.single_vertex_color() is not None:
        raise BoardError("no moves in a terminal position")
    return solve(p, to_move, opts).pv[0]

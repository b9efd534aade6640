"""The avoider-enforcer game in its cell-removal formulation.

A position is a finite cell set plus an ordered family of avoider sets
(duplicates allowed) and the player to move. The avoider's move removes
a cell from the cell set and from every avoider set; the enforcer's
move removes a cell and drops every avoider set containing it. Once no
cells remain, the avoider wins iff the family is empty.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable


class Player(Enum):
    AVOIDER = "avoider"
    ENFORCER = "enforcer"

    @property
    def opposite(self) -> "Player":
        return Player.ENFORCER if self is Player.AVOIDER else Player.AVOIDER

    def __str__(self) -> str:
        return self.value


class AeError(ValueError):
    """Invalid avoider-enforcer position or query."""


# fresh cells created by the normalizations below; user input must not
# use these names, so collisions are impossible
RESERVED_CELL = re.compile(r"^x\d+$")


@dataclass(frozen=True)
class AePosition:
    cells: frozenset[str]
    sets: tuple[frozenset[str], ...]
    to_move: Player

    def __post_init__(self):
        for s in self.sets:
            extra = s - self.cells
            if extra:
                raise AeError(f"avoider set members {sorted(extra)} are not cells")

    @classmethod
    def make(cls, cells: Iterable[str], sets: Iterable[Iterable[str]],
             to_move: Player) -> "AePosition":
        return cls(frozenset(cells), tuple(frozenset(s) for s in sets), to_move)


def ae_apply(p: AePosition, cell: str) -> AePosition:
    if cell not in p.cells:
        raise AeError(f"unknown cell {cell!r}")
    cells = p.cells - {cell}
    if p.to_move is Player.AVOIDER:
        sets = tuple(s - {cell} for s in p.sets)
    else:
        sets = tuple(s for s in p.sets if cell not in s)
    return AePosition(cells, sets, p.to_move.opposite)


def ae_winner_at_end(p: AePosition) -> Player:
    if p.cells:
        raise AeError("the game is not over: cells remain")
    # any surviving set is necessarily empty here
    return Player.AVOIDER if not p.sets else Player.ENFORCER


def _canonical_sets(sets: tuple[frozenset[str], ...]) -> tuple[tuple[str, ...], ...]:
    return tuple(sorted(tuple(sorted(s)) for s in sets))


def _decided(p: AePosition) -> Player | None:
    if not p.cells:
        return ae_winner_at_end(p)
    # an emptied avoider set can never be removed again: enforcer win
    if any(not s for s in p.sets):
        return Player.ENFORCER
    return None


@dataclass
class AeOutcome:
    winner: Player
    pv: list[tuple[Player, str]]


def ae_solve(p: AePosition) -> AeOutcome:
    """Winner under optimal play plus a witness line.

    Tie-break: lexicographically smallest winning cell, else smallest
    cell.
    """
    memo: dict[tuple, Player] = {}

    def value(pos: AePosition) -> Player:
        decided = _decided(pos)
        if decided is not None:
            return decided
        key = (pos.cells, _canonical_sets(pos.sets), pos.to_move)
        hit = memo.get(key)
        if hit is not None:
            return hit
        mover = pos.to_move
        result = mover.opposite
        for cell in sorted(pos.cells):
            if value(ae_apply(pos, cell)) is mover:
                result = mover
                break
        memo[key] = result
        return result

    winner = value(p)
    pv: list[tuple[Player, str]] = []
    pos = p
    while _decided(pos) is None:
        mover = pos.to_move
        chosen = None
        for cell in sorted(pos.cells):
            if value(ae_apply(pos, cell)) is mover:
                chosen = cell
                break
        if chosen is None:
            chosen = min(pos.cells)
        pv.append((mover, chosen))
        pos = ae_apply(pos, chosen)
    return AeOutcome(winner, pv)


def _fresh_cell(p: AePosition, index: int) -> str:
    name = f"x{index}"
    if name in p.cells:
        raise AeError(f"cell name {name!r} is reserved for normalization")
    return name


def normalize_avoider_first(p: AePosition) -> AePosition:
    """Enforcer-to-move position made avoider-first by one throwaway cell.

    The new cell belongs to no avoider set; taking it first is the
    avoider's best move, so the winner is unchanged.
    """
    if p.to_move is not Player.ENFORCER:
        raise AeError("position is already avoider-to-move")
    cell = _fresh_cell(p, 0)
    return AePosition(p.cells | {cell}, p.sets, Player.AVOIDER)


def normalize_even(p: AePosition) -> AePosition:
    """Odd avoider-first position padded to an even cell count.

    Adds a fresh cell plus the singleton avoider set over it; both
    players avoid the new cell until the end, so the winner is
    unchanged.
    """
    if p.to_move is not Player.AVOIDER:
        raise AeError("parity padding expects the avoider to move")
    if len(p.cells) % 2 == 0:
        raise AeError("cell count is already even")
    cell = _fresh_cell(p, 1)
    return AePosition(p.cells | {cell}, p.sets + (frozenset({cell}),), Player.AVOIDER)


def with_to_move(p: AePosition, player: Player) -> AePosition:
    return replace(p, to_move=player)

"""Independent oracles and generators shared by the test modules.

The solvers here are deliberately naive: plain recursion, every legal
move, no transposition table, no symmetry pruning. They exist to check
the engineered search paths against brute force.
"""

from __future__ import annotations

import random

from paintbucket.ae import AePosition, Player
from paintbucket.core import BipartitePosition, Color, Move, apply_move


def plain_winner(p: BipartitePosition, to_move: Color) -> Color:
    """Unmemoized, unpruned backward induction over all legal moves."""
    terminal = p.single_vertex_color()
    if terminal is not None:
        return terminal
    opponent = to_move.opposite
    for target in sorted(p.side(opponent)):
        if plain_winner(apply_move(p, Move(to_move, target)), opponent) is to_move:
            return to_move
    return opponent


def claiming_winner(p: AePosition) -> Player:
    """AE winner under the claiming reading: track the avoider's cells and
    evaluate 'completed some avoider set' only when every cell is claimed."""

    def rec(remaining: frozenset, avoider_has: frozenset, mover: Player) -> Player:
        if not remaining:
            completed = any(s <= avoider_has for s in p.sets)
            return Player.ENFORCER if completed else Player.AVOIDER
        for cell in sorted(remaining):
            if mover is Player.AVOIDER:
                result = rec(remaining - {cell}, avoider_has | {cell}, Player.ENFORCER)
            else:
                result = rec(remaining - {cell}, avoider_has, Player.AVOIDER)
            if result is mover:
                return mover
        return mover.opposite

    return rec(p.cells, frozenset(), p.to_move)


def random_corpus(seed: int, count: int, max_side: int = 6) -> list[BipartitePosition]:
    """Random connected positions, sizes 1..2*max_side vertices."""
    from paintbucket.verify import random_connected_bipartite

    rng = random.Random(seed)
    corpus = []
    for _ in range(count):
        n_black = rng.randint(1, max_side)
        n_white = rng.randint(1, max_side)
        corpus.append(random_connected_bipartite(rng, n_black, n_white))
    return corpus


def scramble_ids(rng: random.Random, p: BipartitePosition) -> BipartitePosition:
    """Relabel all vertices by a random bijection."""
    ids = sorted(p.black | p.white)
    shuffled = ids[:]
    rng.shuffle(shuffled)
    perm = dict(zip(ids, shuffled))
    return BipartitePosition(
        {perm[v] for v in p.black},
        {perm[v] for v in p.white},
        {(perm[b], perm[w]) for b, w in p.edges},
    )


def complete_position(m: int, n: int) -> BipartitePosition:
    black = set(range(m))
    white = set(range(m, m + n))
    return BipartitePosition(black, white, {(b, w) for b in black for w in white})

"""Avoider-enforcer game rules, solving, and normalizations."""

import pytest

from helpers import claiming_winner
from paintbucket.ae import (
    AeError,
    AePosition,
    Player,
    ae_apply,
    ae_solve,
    ae_winner_at_end,
    normalize_avoider_first,
    normalize_even,
    with_to_move,
)
from paintbucket.verify import all_ae_positions

A, E = Player.AVOIDER, Player.ENFORCER


def pos(cells, sets, to_move):
    return AePosition.make(cells, sets, to_move)


def test_player_opposite():
    assert A.opposite is E and E.opposite is A


def test_sets_must_be_subsets_of_cells():
    with pytest.raises(AeError):
        pos({"c1"}, [{"c2"}], A)


def test_apply_avoider_removes_cell_everywhere():
    after = ae_apply(pos({"c1", "c2"}, [{"c1", "c2"}], A), "c1")
    assert after.cells == frozenset({"c2"})
    assert after.sets == (frozenset({"c2"}),)
    assert after.to_move is E


def test_apply_enforcer_drops_containing_sets():
    after = ae_apply(pos({"c1", "c2"}, [{"c1", "c2"}], E), "c1")
    assert after.cells == frozenset({"c2"})
    assert after.sets == ()
    assert after.to_move is A


def test_apply_can_leave_empty_set_behind():
    after = ae_apply(pos({"c1"}, [{"c1"}], A), "c1")
    assert after.cells == frozenset()
    assert after.sets == (frozenset(),)
    assert ae_winner_at_end(after) is E


def test_apply_rejects_unknown_cell():
    with pytest.raises(AeError):
        ae_apply(pos({"c1"}, [], A), "zz")


def test_winner_at_end():
    assert ae_winner_at_end(pos(set(), [], A)) is A
    assert ae_winner_at_end(pos(set(), [set()], A)) is E
    assert ae_winner_at_end(pos(set(), [set(), set()], A)) is E
    with pytest.raises(AeError):
        ae_winner_at_end(pos({"c1"}, [], A))


def test_solve_forced_single_move():
    out = ae_solve(pos({"c1"}, [{"c1"}], A))
    assert out.winner is E
    assert out.pv == [(A, "c1")]


def test_solve_no_sets_avoider_wins():
    assert ae_solve(pos({"c1"}, [], A)).winner is A


def test_solve_avoider_dodges_singleton_set():
    # avoider takes c2; the enforcer is forced onto c1, deleting the set
    out = ae_solve(pos({"c1", "c2"}, [{"c1"}], A))
    assert out.winner is A
    assert out.pv[0] == (A, "c2")


def test_solve_pv_alternates_and_fits():
    for p in all_ae_positions(3, 2, A):
        out = ae_solve(p)
        assert len(out.pv) <= len(p.cells)
        movers = [m for m, _ in out.pv]
        assert movers == [A if i % 2 == 0 else E for i in range(len(movers))]


def test_avoider_moves_never_grow_sets_enforcer_keeps_survivors():
    p = pos({"c1", "c2", "c3"}, [{"c1", "c2"}, {"c3"}], A)
    after = ae_apply(p, "c2")
    assert [len(s) for s in after.sets] == [1, 1]
    after2 = ae_apply(with_to_move(p, E), "c2")
    assert after2.sets == (frozenset({"c3"}),)


def test_removal_formulation_matches_claiming_oracle():
    # exhaustive agreement across every position up to four cells
    for to_move in (A, E):
        for p in all_ae_positions(4, 2, to_move):
            assert ae_solve(p).winner is claiming_winner(p), p


def test_normalize_avoider_first():
    p = normalize_avoider_first(pos({"c1"}, [{"c1"}], E))
    assert p.cells == frozenset({"c1", "x0"})
    assert p.sets == (frozenset({"c1"}),)
    assert p.to_move is A
    empty = normalize_avoider_first(pos(set(), [], E))
    assert empty.cells == frozenset({"x0"})
    with pytest.raises(AeError):
        normalize_avoider_first(pos({"c1"}, [], A))


def test_normalize_even():
    p = normalize_even(pos({"c1"}, [], A))
    assert p.cells == frozenset({"c1", "x1"})
    assert p.sets == (frozenset({"x1"}),)
    three = normalize_even(pos({"c1", "c2", "c3"}, [{"c1"}], A))
    assert len(three.cells) == 4
    assert len(three.sets) == 2
    with pytest.raises(AeError):
        normalize_even(pos({"c1", "c2"}, [], A))
    with pytest.raises(AeError):
        normalize_even(pos({"c1"}, [], E))


def test_normalizations_preserve_winner_small():
    before = pos({"c1", "c2"}, [{"c1", "c2"}], E)
    assert ae_solve(before).winner is ae_solve(normalize_avoider_first(before)).winner


def test_game_length_is_cell_count():
    for p in all_ae_positions(3, 1, A):
        steps = 0
        cur = p
        while cur.cells:
            cur = ae_apply(cur, min(cur.cells))
            steps += 1
        assert steps == len(p.cells)

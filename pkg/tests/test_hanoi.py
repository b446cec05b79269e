from itertools import product

import pytest

from mengerwords.words import DyadicStage, parse_word
from mengerwords.graph import Vertex, base_vertex, neighbor, trace
from mengerwords.hanoi import (
    NOT_ALLOWABLE,
    apply_move,
    base_state,
    classical_solution,
    disk_direction,
    leading_disk,
    legal_moves,
    movable_disks,
    peg_positions,
    simulate,
    stage_of_positions,
    state_to_vertex,
    transition_disk,
    vertex_to_state,
)
from mengerwords.fixtures import ell

from conftest import random_word


def test_peg_positions_figure():
    assert peg_positions(DyadicStage.from_bits("101000")) == (2, 1, 0, 2, 2, 2)
    assert peg_positions(DyadicStage.from_bits("000000")) == (0,) * 6
    assert peg_positions(DyadicStage.from_bits("111111")) == (2,) * 6


def test_stage_of_positions():
    assert stage_of_positions((2, 1, 0, 2, 2, 2)).bits_str() == "101000"
    assert stage_of_positions((0, 0, 0)).bits_str() == "000"
    assert stage_of_positions((1, 0)) is NOT_ALLOWABLE


def test_peg_round_trip_all_stages():
    for bits in range(1, 11):
        for num in range(1 << bits):
            t = DyadicStage(num, bits)
            assert stage_of_positions(peg_positions(t)) == t


def test_allowable_count_small():
    for n1 in range(1, 8):
        count = sum(
            1
            for pegs in product((0, 1, 2), repeat=n1)
            if stage_of_positions(pegs) is not NOT_ALLOWABLE
        )
        assert count == 1 << n1


def test_transition_disk():
    # disk 3 arrives on peg 0 entering stage .101000
    assert transition_disk(DyadicStage.from_bits("101000")) == (3, 1, 0)
    assert transition_disk(DyadicStage.from_bits("1")) == (1, 0, 2)
    assert transition_disk(DyadicStage.from_bits("000001"))[0] == 6
    with pytest.raises(ValueError):
        transition_disk(DyadicStage(0, 4))


def _bfs_classical(n_disks: int):
    """Shortest solution of the unrestricted classical puzzle by BFS."""
    start = (0,) * n_disks
    goal = (2,) * n_disks
    prev = {start: None}
    frontier = [start]
    while goal not in prev:
        nxt = []
        for state in frontier:
            tops = {}
            for i in range(1, n_disks + 1):
                tops[state[i - 1]] = i
            for i in range(1, n_disks + 1):
                if tops[state[i - 1]] != i:
                    continue
                for target in range(3):
                    if target == state[i - 1]:
                        continue
                    blocker = tops.get(target)
                    if blocker is not None and blocker > i:
                        continue
                    new = list(state)
                    new[i - 1] = target
                    new_t = tuple(new)
                    if new_t not in prev:
                        prev[new_t] = state
                        nxt.append(new_t)
        frontier = nxt
    path = [goal]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return list(reversed(path))


@pytest.mark.parametrize("n_disks", [1, 2, 3, 4, 5])
def test_formula_solution_equals_bfs(n_disks):
    moves = classical_solution(n_disks)
    assert len(moves) == (1 << n_disks) - 1
    states = [peg_positions(DyadicStage(num, n_disks)) for num in range(1 << n_disks)]
    assert states == _bfs_classical(n_disks)
    for num, (disk, p_from, p_to) in enumerate(moves, start=1):
        before = states[num - 1]
        after = states[num]
        assert before[disk - 1] == p_from and after[disk - 1] == p_to
        changed = [i for i in range(n_disks) if before[i] != after[i]]
        assert changed == [disk - 1]


def test_leading_disk_matches_local_rule():
    for bits in range(1, 7):
        for num in range(1 << bits):
            t = DyadicStage(num, bits)
            movable = movable_disks(peg_positions(t))
            if num == (1 << bits) - 1:
                # final assembly: the reset move leads, lifting the tower
                assert leading_disk(t) == 1
                continue
            assert leading_disk(t) == min(i for i, _ in movable)


def test_disk_directions():
    assert disk_direction(1) == -1  # the largest disk moves left
    assert disk_direction(2) == 1


def test_state_vertex_bijection_examples():
    v = Vertex.parse("(.101001,ABAAB_)")
    s = vertex_to_state(v)
    assert s.hand == 6 and not s.all_off
    assert s.faces == ("A", "B", "A", "A", "B", "_")
    assert state_to_vertex(s) == v
    b = base_state(4)
    assert b.all_off and b.hand == 1
    assert state_to_vertex(b) == base_vertex(3)


def test_state_vertex_round_trip(rng):
    for _ in range(300):
        lvl = rng.randint(0, 6)
        v = trace(base_vertex(lvl), random_word(rng))
        assert state_to_vertex(vertex_to_state(v)) == v


def test_legal_moves_and_apply(rng):
    s = base_state(3)
    moves = legal_moves(s)
    assert len(moves) == 4
    assert {str(a) for a, _ in moves} == {"x", "X", "y", "Y"}
    for _ in range(200):
        lvl = rng.randint(0, 5)
        v = trace(base_vertex(lvl), random_word(rng))
        st = vertex_to_state(v)
        for a, nxt in legal_moves(st):
            assert state_to_vertex(nxt) == neighbor(v, a)
            assert apply_move(nxt, a.inverse()) == st


def test_reset_move_wraps():
    # from the vertex at stage .111, an advancing move re-enters stage .000
    v = trace(base_vertex(2), parse_word("xxxxxxx"))
    assert v.stage.bits_str() == "111"
    s = vertex_to_state(v)
    nxt = apply_move(s, parse_word("x").letters[0])
    assert nxt.stage.bits_str() == "000"


def test_figure_game_play():
    end = simulate(3, parse_word("xyxxxYxxyy"))
    assert state_to_vertex(end) == base_vertex(2)


def test_ell_disk_reading():
    # ell(k) turns exactly the k-th smallest disk over twice and carries
    # the stack across; between the turns only that disk shows black
    from mengerwords.words import Word

    for n in range(1, 7):
        for k in range(1, n + 1):
            n_disks = n + 1
            w = ell(k, n)
            assert state_to_vertex(simulate(n_disks, w)) == base_vertex(n)
            ys = [i for i, a in enumerate(w.letters) if a.is_y]
            mid = simulate(n_disks, Word(w.letters[: ys[1]]))
            blacks = [i + 1 for i, c in enumerate(mid.faces) if c == "B"]
            assert blacks == [n + 2 - k]

import itertools
import math
from collections import deque

import numpy as np
import pytest
from hypothesis import given, strategies as st

from toruspuzzle.core import FastBoard, Move, NaiveBoard, board_parity, is_sortable, is_sorted
from toruspuzzle.errors import StateCapError, UnsortableError
from toruspuzzle.oracle import (MovePolicy, ScrambleSpec, bfs_depths, bfs_reachable,
                                generator_moves, lehmer_digits, optimal_push_number,
                                parity_of_ranks, random_sortable_board, random_sortable_scramble,
                                rank, rank_many, replay_verify, scramble_moves, unrank,
                                unrank_many)
from toruspuzzle.permgroup import Parity, Permutation
from toruspuzzle.solver import solve


def dict_bfs(m, n):
    """Plain BFS over tuples with the naive engine."""
    start = tuple(range(1, m * n + 1))
    dist = {start: 0}
    q = deque([start])
    gens = generator_moves(m, n)
    while q:
        s = q.popleft()
        for mv in gens:
            b = NaiveBoard(np.array(s).reshape(m, n))
            b.apply_move(mv)
            t = b.one_line()
            if t not in dist:
                dist[t] = dist[s] + 1
                q.append(t)
    return dist


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2)])
def test_bfs_matches_dict_bfs(m, n):
    dist = dict_bfs(m, n)
    depth = bfs_depths(m, n)
    assert len(dist) == int((depth >= 0).sum())
    for s, d in dist.items():
        assert depth[rank(s)] == d


def test_reachable_counts():
    assert bfs_reachable(2, 2).reachable_count == 24
    assert bfs_reachable(2, 3).reachable_count == 720
    r = bfs_reachable(3, 3)
    assert r.reachable_count == 181440 == math.factorial(9) // 2
    assert (r.even_count, r.odd_count) == (181440, 0)
    assert sum(r.depth_histogram) == r.reachable_count


def test_report_output():
    r = bfs_reachable(2, 2)
    kv = dict(line.split("=") for line in r.lines())
    assert kv["reachable_count"] == "24" and kv["states"] == "24"
    csv = r.histogram_csv().splitlines()
    assert csv[0] == "depth,count" and csv[1] == "0,1"
    assert sum(int(x.split(",")[1]) for x in csv[1:]) == 24


def test_cap():
    with pytest.raises(StateCapError) as ei:
        bfs_reachable(3, 4)
    assert ei.value.required == math.factorial(12)
    with pytest.raises(StateCapError):
        bfs_reachable(2, 3, cap=100)


def test_optimal_examples():
    assert optimal_push_number(NaiveBoard.sorted(2, 2)) == 0
    b = NaiveBoard.sorted(2, 2)
    b.apply_move(Move.right(1))
    assert optimal_push_number(b) == 1
    hist = bfs_reachable(2, 3).depth_histogram
    hardest = max(optimal_push_number(NaiveBoard(np.array(p).reshape(2, 3)))
                  for p in itertools.permutations(range(1, 7)))
    assert hardest == len(hist) - 1
    with pytest.raises(UnsortableError):
        optimal_push_number(NaiveBoard([[1, 2, 3], [4, 5, 6], [7, 9, 8]]))


def test_solver_never_beats_oracle():
    for p in itertools.permutations(range(1, 7)):
        a = np.array(p).reshape(2, 3)
        opt = optimal_push_number(NaiveBoard(a))
        assert solve(FastBoard(a)).push >= opt


def test_rank_round_trip_bulk(rng):
    size = 9
    ranks = rng.integers(0, math.factorial(size), 100_000)
    perms = unrank_many(ranks, size)
    assert np.array_equal(rank_many(perms), ranks)
    assert (np.sort(perms, axis=1) == np.arange(1, size + 1)).all()


@given(st.integers(1, 10).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_rank_scalar(p):
    r = rank(p)
    assert unrank(r, len(p)) == tuple(p)
    assert rank_many(np.array([p]))[0] == r
    assert 0 <= r < math.factorial(len(p))


def test_rank_order():
    perms = list(itertools.permutations(range(1, 6)))
    assert [rank(p) for p in perms] == list(range(120))


def test_parity_of_ranks(rng):
    ranks = rng.integers(0, math.factorial(8), 500)
    par = parity_of_ranks(ranks, 8)
    for r, x in zip(ranks, par):
        assert Permutation(unrank(int(r), 8)).parity() == x
    assert (lehmer_digits(unrank_many(ranks, 8)).sum(axis=1) % 2 == par).all()


def test_scramble_examples():
    assert is_sorted(random_sortable_scramble(ScrambleSpec(4, 5, 1, 0)))
    s = ScrambleSpec(4, 5, 99, 60)
    assert random_sortable_scramble(s) == random_sortable_scramble(s)
    b = random_sortable_scramble(ScrambleSpec(3, 3, 5, 90))
    assert is_sortable(b) and board_parity(b) is Parity.EVEN


def test_scramble_stream():
    spec = ScrambleSpec(3, 4, 12345, 200)
    gens = generator_moves(3, 4)
    raw = np.random.PCG64(12345).random_raw(200)
    assert scramble_moves(spec) == [gens[int(v % 14)] for v in raw]
    b = NaiveBoard.sorted(3, 4)
    b.apply_moves(gens[int(v % 14)] for v in raw)
    assert random_sortable_scramble(spec) == b


def test_random_sortable_board():
    for seed in range(30):
        b = random_sortable_board(3, 5, seed)
        assert is_sortable(b)
    assert random_sortable_board(6, 6, 4) == random_sortable_board(6, 6, 4)


def test_replay_examples():
    r = replay_verify(NaiveBoard.sorted(3, 3), "")
    assert (r.final_sorted, r.push, r.drag, r.legal) == (True, 0, 0, True)
    r = replay_verify(np.arange(1, 7).reshape(2, 3), "r1 r1 d2")
    assert (r.push, r.drag, r.final_sorted) == (3, 2, False)


def test_replay_policy():
    b = NaiveBoard.sorted(2, 3)
    r = replay_verify(b, "r1 l1 d3 d3 r2 l2 u2 d2", MovePolicy.first_row_and_columns())
    assert r.final_sorted
    assert [i for i, _ in r.illegal] == [1, 4, 5, 6]
    assert not r.legal
    r = replay_verify(b, "r2 d1", MovePolicy.forward_only())
    assert r.legal
    assert "first_illegal" not in "".join(r.lines())


def test_solver_output_replays():
    for p in itertools.islice(itertools.permutations(range(1, 7)), 0, 720, 37):
        a = np.array(p).reshape(2, 3)
        assert replay_verify(a, solve(FastBoard(a)).log).final_sorted

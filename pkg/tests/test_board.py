import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from toruspuzzle.core import (Dims, FastBoard, Move, NaiveBoard, all_columns, board_parity,
                              column_predicates, is_sortable, is_sorted, make_board,
                              target_position)
from toruspuzzle.errors import DomainError
from toruspuzzle.permgroup import Parity

ENGINES = [NaiveBoard, FastBoard]


@st.composite
def boards(draw, max_m=6, max_n=6):
    m = draw(st.integers(2, max_m))
    n = draw(st.integers(2, max_n))
    perm = draw(st.permutations(range(1, m * n + 1)))
    return np.array(perm).reshape(m, n)


@st.composite
def moves_for(draw, m, n, max_len=20):
    k = draw(st.integers(0, max_len))
    out = []
    for _ in range(k):
        d = draw(st.sampled_from("rldu"))
        idx = draw(st.integers(1, m if d in "rl" else n))
        cnt = draw(st.integers(1, 2 * max(m, n)))
        out.append(Move.from_code(idx if d in "rl" else -idx, cnt if d in "rd" else -cnt))
    return out


def test_target_position():
    dims = Dims(3, 4)
    assert target_position(1, dims) == (1, 1)
    assert target_position(7, dims) == (2, 3)
    assert target_position(12, dims) == (3, 4)
    with pytest.raises(DomainError):
        target_position(13, dims)
    with pytest.raises(DomainError):
        target_position(0, dims)


def test_dims_reject_thin():
    with pytest.raises(DomainError):
        Dims(1, 5)
    with pytest.raises(DomainError):
        NaiveBoard([[1, 2, 3]])


def test_rejects_non_permutation():
    with pytest.raises(DomainError):
        FastBoard([[1, 1], [2, 3]])


@pytest.mark.parametrize("B", ENGINES)
def test_apply_move_examples(B):
    b = B([[1, 2], [3, 4]])
    b.apply_move(Move.right(1))
    assert b.to_rows() == [[2, 1], [3, 4]]
    b = B([[1, 2], [3, 4]])
    b.apply_move(Move.down(1, 2))
    assert b.to_rows() == [[1, 2], [3, 4]]
    b = B([[1, 2, 3], [4, 5, 6]])
    b.apply_move(Move.right(2))
    assert b.to_rows() == [[1, 2, 3], [6, 4, 5]]


@pytest.mark.parametrize("B", ENGINES)
def test_move_out_of_range(B):
    b = B.sorted(3, 4)
    with pytest.raises(DomainError):
        b.apply_move(Move.right(4))
    with pytest.raises(DomainError):
        b.apply_move(Move.down(5))


@pytest.mark.parametrize("B", ENGINES)
def test_column_predicates(B):
    assert column_predicates(B.sorted(3, 3), 2) == (True, True, True)
    # body {1}; the body-full target for column 1 is {3}
    assert column_predicates(B([[4, 2], [1, 3]]), 1) == (True, False, False)
    assert column_predicates(B([[3, 4], [1, 2]]), 1) == (True, False, False)
    b = B([[1, 2, 3], [7, 5, 6], [4, 8, 9]])
    assert column_predicates(b, 1) == (True, True, False)
    assert column_predicates(B([[1, 2, 3], [5, 4, 6], [7, 8, 9]]), 1) == (False, False, False)
    with pytest.raises(DomainError):
        column_predicates(b, 4)


@given(boards())
def test_predicate_chain(a):
    b = NaiveBoard(a)
    for j in range(1, b.n + 1):
        s = column_predicates(b, j)
        assert (not s.body_sorted) or s.body_full
        assert (not s.body_full) or s.near_full
    # per-column and whole-board forms agree
    for name in ("near_full", "body_full", "body_sorted"):
        assert all_columns(b, name) == all(getattr(column_predicates(b, j), name)
                                           for j in range(1, b.n + 1))


def test_is_sorted_examples():
    b = NaiveBoard.sorted(4, 4)
    assert is_sorted(b)
    b.apply_move(Move.right(1))
    assert not is_sorted(b)
    assert not is_sorted(NaiveBoard([[1, 2], [4, 3]]))


def test_parity_examples():
    b = NaiveBoard.sorted(3, 3)
    assert board_parity(b) is Parity.EVEN
    assert board_parity(NaiveBoard([[2, 1, 3], [4, 5, 6], [7, 8, 9]])) is Parity.ODD
    b.apply_move(Move.right(1))
    assert board_parity(b) is Parity.EVEN


def test_is_sortable_examples():
    for p in itertools.permutations(range(1, 7)):
        assert is_sortable(NaiveBoard(np.array(p).reshape(2, 3)))
    assert not is_sortable(NaiveBoard([[1, 2, 3], [4, 5, 6], [7, 9, 8]]))
    for mv in [Move.right(i) for i in (1, 2, 3)] + [Move.up(j) for j in (1, 2, 3)]:
        b = NaiveBoard.sorted(3, 3)
        b.apply_move(mv)
        assert is_sortable(b)


@pytest.mark.parametrize("B", ENGINES)
@given(a=boards(), data=st.data())
def test_rotation_inverse(B, a, data):
    b = B(a)
    m, n = b.m, b.n
    i = data.draw(st.integers(1, m))
    j = data.draw(st.integers(1, n))
    b.apply_move(Move.right(i))
    b.apply_move(Move.left(i))
    assert np.array_equal(b.to_array(), a)
    b.apply_move(Move.down(j))
    b.apply_move(Move.down(j, m - 1))
    assert np.array_equal(b.to_array(), a)
    b.apply_move(Move.right(i, n - 1))
    b.apply_move(Move.right(i))
    assert np.array_equal(b.to_array(), a)


@given(a=boards(), data=st.data())
def test_parity_change_rule(a, data):
    b = NaiveBoard(a)
    before = board_parity(b)
    m, n = b.m, b.n
    if data.draw(st.booleans()):
        b.apply_move(Move.right(data.draw(st.integers(1, m))))
        length = n
    else:
        b.apply_move(Move.down(data.draw(st.integers(1, n))))
        length = m
    changed = board_parity(b) is not before
    assert changed == ((length - 1) % 2 == 1)


@given(data=st.data())
def test_fast_matches_naive(data):
    a = data.draw(boards(8, 8))
    m, n = a.shape
    seq = data.draw(moves_for(m, n, 40))
    nb, fb = NaiveBoard(a), FastBoard(a)
    for mv in seq:
        nb.apply_move(mv)
        fb.apply_move(mv)
    assert np.array_equal(nb.to_array(), fb.to_array())
    assert sorted(fb.to_array().ravel()) == list(range(1, m * n + 1))
    assert fb.column(1) == nb.column(1) and fb.row(m) == nb.row(m)


def test_fast_normalize_and_assign(rng):
    a = (rng.permutation(20) + 1).reshape(4, 5)
    b = FastBoard(a)
    b.apply_moves([Move.right(1, 3), Move.down(2, 3), Move.up(5)])
    snap = b.to_array()
    b.normalize()
    assert np.array_equal(b.to_array(), snap)
    b.assign(a)
    assert np.array_equal(b.to_array(), a)
    with pytest.raises(DomainError):
        b.assign(np.arange(1, 21).reshape(5, 4))


def test_make_board():
    assert isinstance(make_board(np.arange(1, 5).reshape(2, 2), "naive"), NaiveBoard)
    with pytest.raises(DomainError):
        make_board(np.arange(1, 5).reshape(2, 2), "quantum")

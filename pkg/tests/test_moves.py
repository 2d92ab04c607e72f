import pytest
from hypothesis import given, strategies as st

from toruspuzzle.core import Direction, Move, MoveLog, expand_units, format_moves, parse_moves
from toruspuzzle.errors import DomainError

codes = st.lists(st.tuples(st.sampled_from([1, 2, -1, -3]), st.sampled_from([1, 2, -1, 3])),
                 max_size=60)


def test_basic_counts():
    log = MoveLog(parse_moves("r1 r1 d2"))
    assert log.push_count == 3
    assert log.drag_count == 2
    assert len(log) == 2
    assert str(log[0]) == "r1*2"


def test_opposite_directions_do_not_fold():
    log = MoveLog([Move.right(1), Move.left(1)])
    assert len(log) == 2
    assert (log.push_count, log.drag_count) == (2, 1)


def test_move_validation():
    with pytest.raises(DomainError):
        Move.right(0)
    with pytest.raises(DomainError):
        Move.down(1, 0)
    with pytest.raises(DomainError):
        Move.right(1, 4).normalized(3, 4)
    assert Move.down(2, 5).normalized(3, 4) == Move.down(2, 2)
    assert Move.up(3, 2).inverse() == Move.down(3, 2)
    assert Direction.LEFT.opposite() is Direction.RIGHT


@given(codes)
def test_incremental_matches_recount(pairs):
    log = MoveLog()
    for line, cnt in pairs:
        log.append_code(line, cnt)
    assert (log.push_count, log.drag_count) == log.recount()
    assert log.drag_count <= log.push_count
    # drag from scratch: maximal runs of the same line
    lines = [l for l, _ in pairs]
    runs = sum(1 for i, l in enumerate(lines) if i == 0 or l != lines[i - 1])
    assert log.drag_count == runs
    assert log.push_count == sum(abs(c) for _, c in pairs)


@given(codes, codes)
def test_extend_log_equals_appends(a, b):
    x, y = MoveLog(), MoveLog()
    for line, cnt in a:
        x.append_code(line, cnt)
    for line, cnt in b:
        y.append_code(line, cnt)
    z = x.copy()
    z.extend_log(y)
    w = MoveLog()
    for line, cnt in a + b:
        w.append_code(line, cnt)
    # extend does not fold across the seam beyond the first entry, counts still agree
    assert (z.push_count, z.drag_count) == (w.push_count, w.drag_count) == z.recount()


def test_expand_units():
    units = list(expand_units([Move.down(2, 3), Move.right(1)]))
    assert units == [Move.down(2)] * 3 + [Move.right(1)]


def test_format_round_trip():
    log = MoveLog(parse_moves("d3*2 r1 u2 l4*7"))
    text = format_moves(log)
    assert text == "d3*2 r1 u2 l4*7\n"
    assert list(MoveLog(parse_moves(text))) == list(log)
    assert format_moves(MoveLog()) == ""
    assert format_moves([Move.up(1, 2)]) == "u1*2\n"

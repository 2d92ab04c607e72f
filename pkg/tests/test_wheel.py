import numpy as np
import pytest

from toruspuzzle.errors import ContractError
from toruspuzzle.solver import EventWheel


def test_schedule_now():
    w = EventWheel(5)
    w.schedule(3, 0)
    assert w.advance() == [3]
    assert len(w) == 0


def test_horizon_boundary():
    n = 6
    w = EventWheel(n + 1)
    w.schedule(2, n)
    popped = [w.advance() for _ in range(n + 1)]
    assert popped[:n] == [[]] * n and popped[n] == [2]


def test_out_of_window():
    w = EventWheel(4)
    with pytest.raises(ContractError):
        w.schedule(1, 4)
    w.advance()
    with pytest.raises(ContractError):
        w.schedule(1, 0)


def test_pop_due_rejects_skip():
    w = EventWheel(8)
    w.schedule(1, 2)
    with pytest.raises(ContractError):
        w.pop_due(3)
    assert w.next_due() == 2
    assert w.pop_due(2) == [1]
    assert w.next_due() == -1


def test_pool_grows():
    w = EventWheel(3, capacity=1)
    for j in range(50):
        w.schedule(j, j % 3)
    assert len(w) == 50
    got = w.advance() + w.advance() + w.advance()
    assert sorted(got) == list(range(50))


def test_fuzz_against_sorted_list():
    rng = np.random.default_rng(7)
    horizon = 17
    w = EventWheel(horizon, capacity=4)
    ref = []
    now = 0
    for _ in range(100_000):
        if rng.random() < 0.6:
            t = now + int(rng.integers(0, horizon))
            j = int(rng.integers(0, 1000))
            w.schedule(j, t)
            ref.append((t, j))
        else:
            ref.sort()
            due = [j for t, j in ref if t == now]
            ref = [(t, j) for t, j in ref if t != now]
            assert w.advance() == due
            now += 1
        assert len(w) == len(ref)
    assert w.current_time == now

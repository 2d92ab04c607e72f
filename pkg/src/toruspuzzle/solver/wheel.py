"""Monotone bucketed scheduler keyed by row-rotation time.

Every event is scheduled less than ``horizon`` time steps ahead of the current
time, so a ring of ``horizon`` buckets replaces a general priority queue:
scheduling is O(1) and finding the next due time costs O(elapsed time).

The state lives in four arrays so the solver kernels can drive it without
leaving compiled code; ``EventWheel`` wraps them for Python callers.
"""
from __future__ import annotations

from typing import List

import numpy as np
from numba import njit

from ..errors import ContractError

OK = 0
OUT_OF_WINDOW = 2
POOL_FULL = 3

# All state sits in one int64 array; compiled helpers taking several arrays
# pay for reference counting on every call, which dominated run time.
# Layout: [time, pending, free head, horizon, capacity, 0, 0, 0,
#          heads(horizon), next(capacity), value(capacity), popped(capacity)]
_HDR = 8


@njit(cache=True)
def wheel_new(horizon, capacity):
    w = np.empty(_HDR + horizon + 3 * capacity, dtype=np.int64)
    w[:_HDR] = 0
    w[2] = 0
    w[3] = horizon
    w[4] = capacity
    nb = _HDR + horizon
    for i in range(horizon):
        w[_HDR + i] = -1
    for i in range(capacity - 1):
        w[nb + i] = i + 1
    w[nb + capacity - 1] = -1
    return w


@njit(cache=True)
def wheel_popped(w):
    """Offset of the slice holding the events returned by the last pop."""
    return _HDR + w[3] + 2 * w[4]


@njit(cache=True)
def wheel_schedule(w, t, v):
    h = w[3]
    status = OK
    if t < w[0] or t >= w[0] + h:
        status = OUT_OF_WINDOW
    elif w[2] < 0:
        status = POOL_FULL
    else:
        nb = _HDR + h
        node = w[2]
        w[2] = w[nb + node]
        w[nb + w[4] + node] = v
        b = _HDR + t % h
        w[nb + node] = w[b]
        w[b] = node
        w[1] += 1
    return status


@njit(cache=True)
def wheel_next_time(w):
    """Earliest time with a pending event, or -1 when nothing is pending."""
    t = -1
    if w[1] > 0:
        h = w[3]
        t = w[0]
        b = t % h
        while w[_HDR + b] < 0:
            t += 1
            b += 1
            if b == h:
                b = 0
    return t


@njit(cache=True)
def wheel_pop(w, t):
    """Remove the events due at ``t`` (ascending) into the popped slice; returns their count."""
    h = w[3]
    cap = w[4]
    nb = _HDR + h
    vb = nb + cap
    ob = vb + cap
    w[0] = t
    b = _HDR + t % h
    node = w[b]
    k = 0
    while node >= 0:
        w[ob + k] = w[vb + node]
        k += 1
        following = w[nb + node]
        w[nb + node] = w[2]
        w[2] = node
        node = following
    w[b] = -1
    w[1] -= k
    if k > 32:
        w[ob:ob + k].sort()
    else:
        # buckets are almost always tiny
        for i in range(ob + 1, ob + k):
            v = w[i]
            p = i - 1
            while p >= ob and w[p] > v:
                w[p + 1] = w[p]
                p -= 1
            w[p + 1] = v
    return k


class EventWheel:
    """Python face of the wheel: ``schedule(j, t)`` then ``advance()`` per step."""

    def __init__(self, horizon: int, capacity: int = 0):
        if horizon < 1:
            raise ValueError("horizon must be >= 1")
        self.horizon = horizon
        self._w = wheel_new(horizon, max(capacity, 4 * horizon))

    @property
    def current_time(self) -> int:
        return int(self._w[0])

    def __len__(self) -> int:
        return int(self._w[1])

    def schedule(self, j: int, t: int) -> None:
        status = wheel_schedule(self._w, t, j)
        if status == OUT_OF_WINDOW:
            now = self.current_time
            raise ContractError(f"time {t} outside window [{now}, {now + self.horizon})")
        if status == POOL_FULL:
            self._grow()
            self.schedule(j, t)

    def _grow(self) -> None:
        old = self._w
        h, cap = self.horizon, int(old[4])
        w = wheel_new(h, 2 * cap)
        w[:3] = old[:3]
        nb_old, nb = _HDR + h, _HDR + h
        w[_HDR:nb] = old[_HDR:nb_old]
        w[nb:nb + cap] = old[nb_old:nb_old + cap]
        w[nb + 2 * cap:nb + 3 * cap] = old[nb_old + cap:nb_old + 2 * cap]
        # fresh nodes cap..2cap-1 go in front of the old free list
        w[nb + 2 * cap - 1] = old[2]
        w[2] = cap
        self._w = w

    def pop_due(self, t: int) -> List[int]:
        """Indices scheduled at ``t``; the clock moves to ``t``."""
        now = self.current_time
        if t < now:
            raise ContractError(f"time {t} is in the past")
        if t >= now + self.horizon:
            raise ContractError(f"time {t} beyond the horizon")
        for s in range(now, t):
            if self._w[_HDR + s % self.horizon] >= 0:
                raise ContractError(f"events at time {s} were skipped")
        k = wheel_pop(self._w, t)
        ob = int(wheel_popped(self._w))
        return self._w[ob:ob + k].tolist()

    def advance(self) -> List[int]:
        """Pop the events due now, then step the clock by one."""
        t = self.current_time
        due = self.pop_due(t)
        self._w[0] = t + 1
        return due

    def next_due(self) -> int:
        """Earliest pending time, or -1 when empty."""
        return int(wheel_next_time(self._w))

"""Compiled event-driven versions of the four row-sweeping procedures.

Each kernel works directly on a ``FastBoard``'s arrays. Time is the number of
rotations of row 1 since the procedure (or sub-phase) started. Row 1 is
rotated lazily: its offset catches up to the current time before any column
is touched, and the pending rotations are written to the log only when a
column move follows (or at the end), so emitted logs match a step-by-step
execution entry for entry.

Kernels report a status code instead of raising. Small compiled helpers
take at most one branching array argument each: passing several arrays to a
helper with more than one exit path costs reference-count traffic per call.
"""
from __future__ import annotations

import numpy as np
from numba import njit

from ..errors import ContractError, InternalError
from .wheel import wheel_new, wheel_next_time, wheel_pop, wheel_popped, wheel_schedule

OK = 0
CAP_HIT = 1
CONTRACT = 2
INTERNAL = 3


@njit(cache=True)
def _emit(lg, line, cnt):
    # lg = [entries, capacity, line_0, count_0, line_1, ...]
    k = lg[0]
    ok = True
    if k > 0 and lg[2 * k] == line and (lg[2 * k + 1] > 0) == (cnt > 0):
        lg[2 * k + 1] += cnt
    elif k >= lg[1]:
        ok = False
    else:
        lg[2 * k + 2] = line
        lg[2 * k + 3] = cnt
        lg[0] = k + 1
    return ok


@njit(cache=True)
def _col(x, n):
    return (x - 1) % n + 1


@njit(cache=True)
def _row(x, n):
    return (x - 1) // n + 1


@njit(cache=True)
def _head(row1, ro, n, j):
    return row1[(j - 1 - ro) % n]


@njit(cache=True)
def _flush(lg, emitted, t):
    """Log pending row-1 rotations up to time t; returns the new mark or -1."""
    out = emitted
    if t > emitted:
        out = t if _emit(lg, 1, t - emitted) else -1
    return out


@njit(cache=True)
def _down(row1, body, boff, p, c):
    """Rotate column c down once; p is its row-1 slot. Returns the new head."""
    m1 = body.shape[1]
    s = (boff[c - 1] - 1) % m1
    z = body[c - 1, s]
    body[c - 1, s] = row1[p]
    boff[c - 1] = s
    row1[p] = z
    return z


@njit(cache=True)
def _up(row1, body, boff, p, c):
    m1 = body.shape[1]
    s = boff[c - 1]
    z = body[c - 1, s]
    body[c - 1, s] = row1[p]
    boff[c - 1] = (s + 1) % m1
    row1[p] = z
    return z


@njit(cache=True)
def fill_columns_kernel(row1, roff, body, boff, lg, cap_r):
    n = row1.shape[0]
    m1 = body.shape[1]
    ro = roff[0]
    bad = np.zeros(n + 1, dtype=np.int64)
    under = 0
    for j in range(1, n + 1):
        b = 0
        for s in range(m1):
            if _col(body[j - 1, s], n) != j:
                b += 1
        bad[j] = b
        if b > 0:
            under += 1
    if under == 0:
        return OK
    w = wheel_new(n + 1, n + 1)
    ob = wheel_popped(w)
    for j in range(1, n + 1):
        c = _col(_head(row1, ro, n, j), n)
        if bad[c] > 0:
            if wheel_schedule(w, (c - j) % n, c) != OK:
                return INTERNAL
    clock = 0
    emitted = 0
    status = OK
    while True:
        t = wheel_next_time(w)
        if t < 0:
            status = INTERNAL
            break
        if t > cap_r:
            status = CAP_HIT
            break
        ro = (ro + t - clock) % n
        clock = t
        k = wheel_pop(w, t)
        for q in range(k):
            c = w[ob + q]
            if bad[c] == 0:
                continue
            p = (c - 1 - ro) % n
            moved = 0
            while bad[c] > 0 and _col(row1[p], n) == c:
                if _col(_down(row1, body, boff, p, c), n) != c:
                    bad[c] -= 1
                moved += 1
            if moved == 0:
                status = INTERNAL
                break
            emitted = _flush(lg, emitted, t)
            if emitted < 0 or not _emit(lg, -c, moved):
                status = INTERNAL
                break
            if bad[c] == 0:
                under -= 1
            cz = _col(row1[p], n)
            if cz != c and bad[cz] > 0:
                if wheel_schedule(w, t + (cz - c) % n, cz) != OK:
                    status = INTERNAL
                    break
        if status != OK:
            break
        if under == 0:
            ro = (ro + 1) % n
            if _flush(lg, emitted, t + 1) < 0:
                status = INTERNAL
            break
    roff[0] = ro
    return status


@njit(cache=True)
def float_minimums_kernel(row1, roff, body, boff, lg):
    n = row1.shape[0]
    m1 = body.shape[1]
    ro = roff[0]
    w = wheel_new(n + 1, n + 1)
    ob = wheel_popped(w)
    for j in range(1, n + 1):
        c = _col(_head(row1, ro, n, j), n)
        if wheel_schedule(w, (c - j) % n, c) != OK:
            return INTERNAL
    clock = 0
    emitted = 0
    status = OK
    while status == OK:
        t = wheel_next_time(w)
        if t < 0:
            break
        ro = (ro + t - clock) % n
        clock = t
        k = wheel_pop(w, t)
        for q in range(k):
            c = w[ob + q]
            p = (c - 1 - ro) % n
            if _col(row1[p], n) != c:
                status = CONTRACT
                break
            cnt = 0
            while _row(row1[p], n) != 1 and cnt <= m1:
                _down(row1, body, boff, p, c)
                cnt += 1
            if cnt > m1:
                status = CONTRACT
                break
            if cnt:
                emitted = _flush(lg, emitted, t)
                if emitted < 0 or not _emit(lg, -c, cnt):
                    status = INTERNAL
                    break
    if status == OK:
        ro = (ro + n - clock) % n
        if _flush(lg, emitted, n) < 0:
            status = INTERNAL
    roff[0] = ro
    return status


@njit(cache=True)
def radix_sort_bodies_kernel(row1, roff, body, boff, cols, phases, lg):
    n = row1.shape[0]
    m1 = body.shape[1]
    k = cols.shape[0]
    ro = roff[0]
    w = wheel_new(n + 1, k * m1 + 1)
    ob = wheel_popped(w)
    rec_t = np.empty(k * m1, dtype=np.int64)
    rec_h = np.empty(k * m1, dtype=np.int64)
    rec_x = np.empty(k * m1, dtype=np.int64)
    clock = 0
    emitted = 0
    status = OK
    for ell in range(1, phases + 1):
        base = 3 * n * (ell - 1)
        w[0] = base
        # unload: column h rotates when the cell that started in R[i], i in I_h, reaches it
        for h in range(k):
            j = cols[h]
            for i in range(h * m1 + 1, (h + 1) * m1 + 1):
                if wheel_schedule(w, base + (j - i) % n, h) != OK:
                    return INTERNAL
        nrec = 0
        while status == OK:
            t = wheel_next_time(w)
            if t < 0:
                break
            ro = (ro + t - clock) % n
            clock = t
            kk = wheel_pop(w, t)
            for q in range(kk):
                h = w[ob + q]
                j = cols[h]
                emitted = _flush(lg, emitted, t)
                if emitted < 0 or not _emit(lg, -j, 1):
                    status = INTERNAL
                    break
                rec_t[nrec] = t - base
                rec_h[nrec] = h
                rec_x[nrec] = _down(row1, body, boff, (j - 1 - ro) % n, j)
                nrec += 1
        if status != OK:
            break
        ro = (ro + base + n - clock) % n
        clock = base + n
        # load set bits first, then clear bits; an unloaded element is back
        # over its column exactly n rotations after it left
        for sub in range(2):
            bit = 1 - sub
            start = base + n * (sub + 1)
            w[0] = start
            for r in range(nrec):
                if ((_row(rec_x[r], n) - 2) >> (ell - 1)) & 1 == bit:
                    if wheel_schedule(w, start + rec_t[r], rec_h[r]) != OK:
                        return INTERNAL
            while status == OK:
                t = wheel_next_time(w)
                if t < 0:
                    break
                ro = (ro + t - clock) % n
                clock = t
                kk = wheel_pop(w, t)
                for q in range(kk):
                    j = cols[w[ob + q]]
                    p = (j - 1 - ro) % n
                    x = row1[p]
                    if _col(x, n) != j or _row(x, n) < 2 or ((_row(x, n) - 2) >> (ell - 1)) & 1 != bit:
                        status = CONTRACT
                        break
                    emitted = _flush(lg, emitted, t)
                    if emitted < 0 or not _emit(lg, -j, 1):
                        status = INTERNAL
                        break
                    _down(row1, body, boff, p, j)
            if status != OK:
                break
            ro = (ro + start + n - clock) % n
            clock = start + n
        if status != OK:
            break
    if status == OK and _flush(lg, emitted, 3 * n * phases) < 0:
        status = INTERNAL
    roff[0] = ro
    return status


@njit(cache=True)
def swap_pairs_kernel(row1, roff, body, boff, triggers, aux, down, lg):
    """``triggers[p, h]`` is the start cell watched by pair h in phase p."""
    n = row1.shape[0]
    m1 = body.shape[1]
    k = aux.shape[0]
    ro = roff[0]
    w = wheel_new(n + 1, k + 1)
    ob = wheel_popped(w)
    clock = 0
    emitted = 0
    status = OK
    for ph in range(3):
        base = ph * n
        w[0] = base
        for h in range(k):
            if wheel_schedule(w, base + (aux[h] - triggers[ph, h]) % n, h) != OK:
                return INTERNAL
        # phases 0 and 2 move the column in direction d, phase 1 against it
        unit = (ph != 1) == down
        while status == OK:
            t = wheel_next_time(w)
            if t < 0:
                break
            ro = (ro + t - clock) % n
            clock = t
            kk = wheel_pop(w, t)
            for q in range(kk):
                j = aux[w[ob + q]]
                p = (j - 1 - ro) % n
                emitted = _flush(lg, emitted, t)
                if emitted < 0 or not _emit(lg, -j, 1 if unit else m1):
                    status = INTERNAL
                    break
                if unit:
                    _down(row1, body, boff, p, j)
                else:
                    _up(row1, body, boff, p, j)
        if status != OK:
            break
        ro = (ro + base + n - clock) % n
        clock = base + n
    if status == OK and _flush(lg, emitted, 3 * n) < 0:
        status = INTERNAL
    roff[0] = ro
    return status


# -- Python entry points ---------------------------------------------------


def _buffer(cap: int) -> np.ndarray:
    lg = np.zeros(2 * cap + 2, dtype=np.int64)
    lg[1] = cap
    return lg


def _finish(status, name, lg, log):
    if status == CONTRACT:
        raise ContractError(f"{name}: precondition violated")
    if status == CAP_HIT:
        raise InternalError(f"{name}: safety cap on row rotations reached")
    if status != OK:
        raise InternalError(f"{name}: kernel failed (status {status})")
    k = int(lg[0])
    pairs = lg[2:2 + 2 * k].reshape(k, 2)
    log.extend_codes(pairs[:, 0], pairs[:, 1])


def fill_columns_safety_cap(m: int, n: int) -> int:
    return int(8 * m * n * (2 + np.log2(n)))


def run_fill_columns(board, log) -> None:
    m, n = board.m, board.n
    lg = _buffer(2 * n * (m - 1) + 4)
    status = fill_columns_kernel(board.row1, board.roff, board.body, board.boff,
                                 lg, fill_columns_safety_cap(m, n))
    _finish(status, "fill_columns", lg, log)


def run_float_minimums(board, log) -> None:
    lg = _buffer(2 * board.n + 4)
    status = float_minimums_kernel(board.row1, board.roff, board.body, board.boff, lg)
    _finish(status, "float_minimums", lg, log)


def run_radix_sort_bodies(board, cols, phases: int, log) -> None:
    cols = np.asarray(cols, dtype=np.int64)
    lg = _buffer(phases * 3 * (2 * len(cols) * (board.m - 1) + 1) + 4)
    status = radix_sort_bodies_kernel(board.row1, board.roff, board.body, board.boff,
                                      cols, phases, lg)
    _finish(status, "radix_sort_bodies", lg, log)


def run_swap_pairs(board, firsts, seconds, aux, down: bool, log) -> None:
    firsts = np.asarray(firsts, dtype=np.int64)
    seconds = np.asarray(seconds, dtype=np.int64)
    triggers = np.ascontiguousarray(np.stack([firsts, seconds, firsts]).reshape(3, len(firsts)))
    aux = np.asarray(aux, dtype=np.int64)
    lg = _buffer(3 * (2 * len(aux) + 1) + 4)
    status = swap_pairs_kernel(board.row1, board.roff, board.body, board.boff,
                               triggers, aux, bool(down), lg)
    _finish(status, "swap_pairs", lg, log)

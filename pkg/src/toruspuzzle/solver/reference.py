"""Step-by-step versions of the procedures, written against the board API.

Each loop runs literally (one row-1 rotation per outer step, every column
examined at every step), so they take O(rotations of row 1 * n) time. They work on either engine and serve
as the second route that the compiled kernels are checked against.
"""
from __future__ import annotations

from typing import List, Optional, Sequence

from ..errors import ContractError, InternalError
from .kernels import fill_columns_safety_cap


def _col(x: int, n: int) -> int:
    return (x - 1) % n + 1


def _row(x: int, n: int) -> int:
    return (x - 1) // n + 1


def _rho(j: int, r: int, n: int) -> int:
    # start cell of whatever sits in R[j] after r rotations of row 1
    return (j - r - 1) % n + 1


def _underfull(board, j: int) -> bool:
    n = board.n
    return any(_col(board.get(i, j), n) != j for i in range(2, board.m + 1))


def _rot_r(board, log) -> None:
    board.rotate_row(1, 1)
    log.append_code(1, 1)


def _rot_c(board, j: int, log) -> None:
    board.rotate_col(j, 1)
    log.append_code(-j, 1)


def potential(board) -> int:
    n = board.n
    return sum(1 for j in range(1, n + 1) for i in range(2, board.m + 1)
               if _col(board.get(i, j), n) != j)


def _underfull_count(board) -> int:
    return sum(1 for j in range(1, board.n + 1) if _underfull(board, j))


def fill_columns(board, log, trace: Optional[List[int]] = None,
                 underfull: Optional[List[int]] = None) -> None:
    """``trace`` receives the potential before the first and after every outer step;
    ``underfull`` the number of underfull columns at the same instants."""
    m, n = board.m, board.n
    cap = fill_columns_safety_cap(m, n)
    if trace is not None:
        trace.append(potential(board))
    if underfull is not None:
        underfull.append(_underfull_count(board))
    steps = 0
    while any(_underfull(board, j) for j in range(1, n + 1)):
        for j in range(1, n + 1):
            while _col(board.get(1, j), n) == j and _underfull(board, j):
                _rot_c(board, j, log)
        _rot_r(board, log)
        steps += 1
        if trace is not None:
            trace.append(potential(board))
        if underfull is not None:
            underfull.append(_underfull_count(board))
        if steps > cap:
            raise InternalError("fill_columns: safety cap on row rotations reached")


def float_minimums(board, log) -> None:
    m, n = board.m, board.n
    for _ in range(n):
        for j in range(1, n + 1):
            if _col(board.get(1, j), n) == j:
                spins = 0
                while _row(board.get(1, j), n) != 1:
                    if spins == m - 1:
                        raise ContractError("float_minimums: column is not near-full")
                    _rot_c(board, j, log)
                    spins += 1
        _rot_r(board, log)


def radix_sort_bodies(board, cols: Sequence[int], phases: int, log) -> None:
    m, n = board.m, board.n
    m1 = m - 1
    for ell in range(1, phases + 1):
        for r in range(n):
            for h, j in enumerate(cols):
                if h * m1 < _rho(j, r, n) <= (h + 1) * m1:
                    _rot_c(board, j, log)
            _rot_r(board, log)
        for b in (1, 0):
            for _ in range(n):
                for j in cols:
                    x = board.get(1, j)
                    if _col(x, n) == j and _row(x, n) >= 2 and ((_row(x, n) - 2) >> (ell - 1)) & 1 == b:
                        _rot_c(board, j, log)
                _rot_r(board, log)


def swap_pairs(board, firsts: Sequence[int], seconds: Sequence[int],
               aux: Sequence[int], down: bool, log) -> None:
    m, n = board.m, board.n
    for phase, watched in enumerate((firsts, seconds, firsts)):
        forward = (phase != 1) == down
        for r in range(n):
            for h, j in enumerate(aux):
                if _rho(j, r, n) == watched[h]:
                    for _ in range(1 if forward else m - 1):
                        _rot_c(board, j, log)
            _rot_r(board, log)

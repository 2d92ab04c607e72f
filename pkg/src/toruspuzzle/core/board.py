"""Board engines, target arithmetic and structural predicates.

Positions and values are 1-based throughout: cell ``(i, j)`` of the sorted
board holds ``(i - 1) * n + j``.

Two engines share one interface:

``NaiveBoard``
    a list of rows; every rotation copies the rotated line.
``FastBoard``
    row 1 as a circular buffer with a head offset, and the body (rows
    ``2..m``) of each column as its own circular buffer. A rotation of row 1 by
    any amount is an offset change; a unit column rotation trades one value
    between row 1 and the column's body buffer. Compound column rotations run
    in ``min(k, m - k)`` unit steps. Rows other than row 1 are rebuilt in
    ``O(n)``; the solver touches them only in its transposed fix-up.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np
from numba import njit

from ..errors import DomainError
from ..permgroup import Parity
from .moves import Move, MoveLog


@dataclass(frozen=True)
class Dims:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise DomainError(f"board must be at least 2x2, got {self.m}x{self.n}")

    @property
    def size(self) -> int:
        return self.m * self.n

    def __str__(self) -> str:
        return f"{self.m}x{self.n}"


def target_position(x: int, dims: Dims) -> tuple:
    if not 1 <= x <= dims.size:
        raise DomainError(f"value {x} outside 1..{dims.size}")
    return (x - 1) // dims.n + 1, (x - 1) % dims.n + 1


def target_row(x: int, n: int) -> int:
    return (x - 1) // n + 1


def target_col(x: int, n: int) -> int:
    return (x - 1) % n + 1


def _validate_rows(rows) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64)
    if a.ndim != 2:
        raise DomainError("board must be a 2-D grid")
    m, n = a.shape
    Dims(m, n)
    flat = np.sort(a.ravel())
    if not np.array_equal(flat, np.arange(1, m * n + 1)):
        raise DomainError(f"cells are not a permutation of 1..{m * n}")
    return a


class _Board:
    """Behaviour shared by both engines."""

    m: int
    n: int

    @property
    def dims(self) -> Dims:
        return Dims(self.m, self.n)

    @classmethod
    def sorted(cls, m: int, n: int):
        return cls.from_array(np.arange(1, m * n + 1).reshape(m, n))

    @classmethod
    def from_rows(cls, rows):
        return cls.from_array(rows)

    def to_rows(self) -> list:
        return self.to_array().tolist()

    def one_line(self) -> tuple:
        return tuple(int(v) for v in self.to_array().ravel())

    def row(self, i: int) -> list:
        return [self.get(i, j) for j in range(1, self.n + 1)]

    def column(self, j: int) -> list:
        return [self.get(i, j) for i in range(1, self.m + 1)]

    def _check_line(self, move: Move) -> None:
        limit = self.m if move.is_row else self.n
        if not 1 <= move.index <= limit:
            kind = "row" if move.is_row else "column"
            raise DomainError(f"{kind} {move.index} out of range for {self.m}x{self.n}")

    def apply_move(self, move: Move, log: Optional[MoveLog] = None) -> None:
        self._check_line(move)
        if move.is_row:
            self.rotate_row(move.index, move.signed_count)
        else:
            self.rotate_col(move.index, move.signed_count)
        if log is not None:
            log.append(move)

    def apply_moves(self, moves: Iterable[Move], log: Optional[MoveLog] = None) -> None:
        for mv in moves:
            self.apply_move(mv, log)

    def apply_code(self, line: int, count: int) -> None:
        if line > 0:
            self.rotate_row(line, count)
        else:
            self.rotate_col(-line, count)

    def copy(self):
        return type(self).from_array(self.to_array())

    def assign(self, rows) -> None:
        """Overwrite the arrangement in place (dimensions must match)."""
        a = _validate_rows(rows)
        if a.shape != (self.m, self.n):
            raise DomainError(f"shape {a.shape} does not match {self.m}x{self.n}")
        self._load(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, _Board) and np.array_equal(self.to_array(), other.to_array())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_rows()})"

    def __str__(self) -> str:
        return format_grid(self.to_array())


def format_grid(a: np.ndarray) -> str:
    w = len(str(a.size))
    return "\n".join(" ".join(str(int(v)).rjust(w) for v in row) for row in a)


class NaiveBoard(_Board):
    def __init__(self, rows):
        self._load(_validate_rows(rows))

    def _load(self, a: np.ndarray) -> None:
        self.m, self.n = a.shape
        self._a = a.tolist()

    @classmethod
    def from_array(cls, a):
        return cls(a)

    def get(self, i: int, j: int) -> int:
        return self._a[i - 1][j - 1]

    def rotate_row(self, i: int, k: int) -> None:
        k %= self.n
        if k:
            r = self._a[i - 1]
            self._a[i - 1] = r[-k:] + r[:-k]

    def rotate_col(self, j: int, k: int) -> None:
        k %= self.m
        if k:
            a = self._a
            col = [row[j - 1] for row in a]
            col = col[-k:] + col[:-k]
            for row, v in zip(a, col):
                row[j - 1] = v

    def to_array(self) -> np.ndarray:
        return np.array(self._a, dtype=np.int64)


class FastBoard(_Board):
    """Circular-buffer engine; its arrays are shared with the solver kernels."""

    def __init__(self, rows):
        a = _validate_rows(rows)
        self._load(a)

    def _load(self, a: np.ndarray) -> None:
        m, n = a.shape
        self.m, self.n = m, n
        self.row1 = a[0].astype(np.int32).copy()
        self.body = np.ascontiguousarray(a[1:].T.astype(np.int32))
        self.boff = np.zeros(n, dtype=np.int64)
        self.roff = np.zeros(1, dtype=np.int64)

    @classmethod
    def from_array(cls, a):
        return cls(a)

    def get(self, i: int, j: int) -> int:
        if i == 1:
            return int(self.row1[(j - 1 - self.roff[0]) % self.n])
        return int(self.body[j - 1, (self.boff[j - 1] + i - 2) % (self.m - 1)])

    def _set(self, i: int, j: int, v: int) -> None:
        if i == 1:
            self.row1[(j - 1 - self.roff[0]) % self.n] = v
        else:
            self.body[j - 1, (self.boff[j - 1] + i - 2) % (self.m - 1)] = v

    def rotate_row(self, i: int, k: int) -> None:
        if i == 1:
            self.roff[0] = (self.roff[0] + k) % self.n
            return
        k %= self.n
        if k:
            vals = self.row(i)
            vals = vals[-k:] + vals[:-k]
            for j, v in enumerate(vals, 1):
                self._set(i, j, v)

    def rotate_col(self, j: int, k: int) -> None:
        m = self.m
        k %= m
        if k == 0:
            return
        if k <= m - k:
            for _ in range(k):
                col_down1(self.row1, self.roff, self.body, self.boff, self.n, j)
        else:
            for _ in range(m - k):
                col_up1(self.row1, self.roff, self.body, self.boff, self.n, j)

    def to_array(self) -> np.ndarray:
        m, n = self.m, self.n
        out = np.empty((m, n), dtype=np.int64)
        out[0] = self.row1[(np.arange(n) - self.roff[0]) % n]
        idx = (self.boff[:, None] + np.arange(m - 1)[None, :]) % (m - 1)
        out[1:] = np.take_along_axis(self.body, idx, axis=1).T
        return out

    def column(self, j: int) -> list:
        m1 = self.m - 1
        body = np.roll(self.body[j - 1], -int(self.boff[j - 1]))[:m1]
        return [self.get(1, j)] + body.tolist()

    def normalize(self) -> None:
        """Reset all offsets to zero without changing the arrangement."""
        self._load(self.to_array())


@njit(cache=True)
def col_down1(row1, roff, body, boff, n, j):
    """Rotate column ``j`` down by one; returns the value now at its head."""
    m1 = body.shape[1]
    p = (j - 1 - roff[0]) % n
    s = (boff[j - 1] - 1) % m1
    tail = body[j - 1, s]
    body[j - 1, s] = row1[p]
    boff[j - 1] = s
    row1[p] = tail
    return tail


@njit(cache=True)
def col_up1(row1, roff, body, boff, n, j):
    """Rotate column ``j`` up by one; returns the value now at its head."""
    m1 = body.shape[1]
    p = (j - 1 - roff[0]) % n
    s = boff[j - 1]
    nxt = body[j - 1, s]
    body[j - 1, s] = row1[p]
    boff[j - 1] = (s + 1) % m1
    row1[p] = nxt
    return nxt


ENGINES = {"naive": NaiveBoard, "fast": FastBoard}


def make_board(rows, engine: str = "fast"):
    try:
        cls = ENGINES[engine]
    except KeyError:
        raise DomainError(f"unknown engine {engine!r}") from None
    return cls.from_array(rows)


# -- predicates ------------------------------------------------------------


def is_sorted(board) -> bool:
    a = board.to_array()
    return bool(np.array_equal(a.ravel(), np.arange(1, a.size + 1)))


@njit(cache=True)
def _cycle_count(perm0):
    n = perm0.shape[0]
    seen = np.zeros(n, dtype=np.bool_)
    c = 0
    for s in range(n):
        if not seen[s]:
            c += 1
            x = s
            while not seen[x]:
                seen[x] = True
                x = perm0[x]
    return c


def arrangement_parity(values: Sequence[int]) -> Parity:
    """Parity of the permutation whose one-line form is ``values`` (1-based)."""
    p = np.asarray(values, dtype=np.int64) - 1
    return Parity((len(p) - _cycle_count(p)) % 2)


def board_parity(board) -> Parity:
    return arrangement_parity(board.to_array().ravel())


def sortable_for(m: int, n: int, parity: Parity) -> bool:
    return m % 2 == 0 or n % 2 == 0 or parity is Parity.EVEN


def is_sortable(board) -> bool:
    if board.m % 2 == 0 or board.n % 2 == 0:
        return True
    return board_parity(board) is Parity.EVEN


class ColumnState(NamedTuple):
    near_full: bool
    body_full: bool
    body_sorted: bool


def column_predicates(board, j: int) -> ColumnState:
    m, n = board.m, board.n
    if not 1 <= j <= n:
        raise DomainError(f"column {j} out of range for {m}x{n}")
    body = np.asarray(board.column(j)[1:])
    want = np.arange(2, m + 1) * n - n + j
    near = bool(np.all((body - 1) % n + 1 == j))
    full = near and bool(np.array_equal(np.sort(body), want))
    return ColumnState(near, full, full and bool(np.array_equal(body, want)))


def all_columns(board, predicate: str) -> bool:
    """True when every column satisfies ``predicate`` (a ColumnState field)."""
    a = board.to_array()
    m, n = a.shape
    body = a[1:]
    cols = np.arange(1, n + 1)
    near = bool(np.all((body - 1) % n + 1 == cols))
    if predicate == "near_full" or not near:
        return near
    want = (np.arange(2, m + 1)[:, None] - 1) * n + cols
    if predicate == "body_sorted":
        return bool(np.array_equal(body, want))
    if predicate == "body_full":
        return bool(np.array_equal(np.sort(body, axis=0), want))
    raise DomainError(f"unknown predicate {predicate!r}")

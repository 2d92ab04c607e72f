"""Transposed and mirrored views of a board.

A view relabels values so that the view is sorted exactly when the original
is. Moves made on the view translate back to the original through a
``MoveMapper``; only the four uniform direction choices (rows all rightward or
all leftward, columns all downward or all upward) are expressible this way.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .moves import Direction, Move, MoveLog


@dataclass(frozen=True)
class Orientation:
    transposed: bool = False
    row_mirrored: bool = False
    col_mirrored: bool = False

    @property
    def is_identity(self) -> bool:
        return not (self.transposed or self.row_mirrored or self.col_mirrored)

    def view_dims(self, m: int, n: int) -> Tuple[int, int]:
        return (n, m) if self.transposed else (m, n)

    def to_original(self, a: int, b: int, m: int, n: int) -> Tuple[int, int]:
        i, j = (b, a) if self.transposed else (a, b)
        if self.row_mirrored:
            i = m + 1 - i
        if self.col_mirrored:
            j = n + 1 - j
        return i, j

    def to_view(self, i: int, j: int, m: int, n: int) -> Tuple[int, int]:
        if self.row_mirrored:
            i = m + 1 - i
        if self.col_mirrored:
            j = n + 1 - j
        return (j, i) if self.transposed else (i, j)

    def transform(self, a: np.ndarray) -> np.ndarray:
        """Rearrange an original-frame grid into view positions."""
        if self.row_mirrored:
            a = a[::-1]
        if self.col_mirrored:
            a = a[:, ::-1]
        if self.transposed:
            a = a.T
        return np.ascontiguousarray(a)

    def untransform(self, v: np.ndarray) -> np.ndarray:
        if self.transposed:
            v = v.T
        if self.col_mirrored:
            v = v[:, ::-1]
        if self.row_mirrored:
            v = v[::-1]
        return np.ascontiguousarray(v)


def canonical_orientation(m: int, n: int, row_direction: Direction = Direction.RIGHT,
                          col_direction: Direction = Direction.DOWN) -> Orientation:
    """Orientation whose view has ``m <= n`` and needs only R-right / C-down."""
    if not row_direction.is_row or col_direction.is_row:
        raise ValueError("row_direction must be RIGHT/LEFT and col_direction DOWN/UP")
    return Orientation(
        transposed=m > n,
        row_mirrored=col_direction is Direction.UP,
        col_mirrored=row_direction is Direction.LEFT,
    )


class MoveMapper:
    """Bijection between view moves and original-frame moves."""

    def __init__(self, orientation: Orientation, m: int, n: int):
        self.orientation = orientation
        self.m, self.n = m, n
        vm, vn = orientation.view_dims(m, n)
        self.view_m, self.view_n = vm, vn
        o = orientation
        # tables indexed by view line code + vn (codes -vn..vm)
        size = vm + vn + 1
        line_to = np.zeros(size, dtype=np.int32)
        flip_to = np.ones(size, dtype=np.int32)
        for a in range(1, vm + 1):
            if o.transposed:
                j = n + 1 - a if o.col_mirrored else a
                line_to[a + vn] = -j
                flip_to[a + vn] = -1 if o.row_mirrored else 1
            else:
                i = m + 1 - a if o.row_mirrored else a
                line_to[a + vn] = i
                flip_to[a + vn] = -1 if o.col_mirrored else 1
        for b in range(1, vn + 1):
            if o.transposed:
                i = m + 1 - b if o.row_mirrored else b
                line_to[-b + vn] = i
                flip_to[-b + vn] = -1 if o.col_mirrored else 1
            else:
                j = n + 1 - b if o.col_mirrored else b
                line_to[-b + vn] = -j
                flip_to[-b + vn] = -1 if o.row_mirrored else 1
        self._line_to, self._flip = line_to, flip_to
        line_from = np.zeros(m + n + 1, dtype=np.int32)
        for vcode in list(range(1, vm + 1)) + list(range(-vn, 0)):
            line_from[line_to[vcode + vn] + n] = vcode
        self._line_from = line_from

    def to_original_codes(self, lines: np.ndarray, counts: np.ndarray):
        idx = np.asarray(lines, dtype=np.int64) + self.view_n
        return self._line_to[idx], (np.asarray(counts) * self._flip[idx]).astype(np.int32)

    def to_view_codes(self, lines: np.ndarray, counts: np.ndarray):
        vcode = self._line_from[np.asarray(lines, dtype=np.int64) + self.n]
        flip = self._flip[vcode.astype(np.int64) + self.view_n]
        return vcode, (np.asarray(counts) * flip).astype(np.int32)

    def to_original(self, move: Move) -> Move:
        l, c = self.to_original_codes(np.array([move.line_code]), np.array([move.signed_count]))
        return Move.from_code(int(l[0]), int(c[0]))

    def to_view(self, move: Move) -> Move:
        l, c = self.to_view_codes(np.array([move.line_code]), np.array([move.signed_count]))
        return Move.from_code(int(l[0]), int(c[0]))

    def map_log(self, log: MoveLog) -> MoveLog:
        out = MoveLog()
        out.extend_codes(*self.to_original_codes(log.lines(), log.counts()))
        return out

    def unmap_log(self, log: MoveLog) -> MoveLog:
        out = MoveLog()
        out.extend_codes(*self.to_view_codes(log.lines(), log.counts()))
        return out


def _labels(orientation: Orientation, m: int, n: int) -> np.ndarray:
    """``labels[x]`` = view value for original value ``x`` (index 0 unused)."""
    s = np.arange(1, m * n + 1).reshape(m, n)
    sv = orientation.transform(s)
    labels = np.zeros(m * n + 1, dtype=np.int64)
    labels[sv.ravel()] = np.arange(1, m * n + 1)
    return labels


def reorient(board, orientation: Orientation):
    """Return ``(view, mapper)``; the view uses the same engine as ``board``."""
    m, n = board.m, board.n
    labels = _labels(orientation, m, n)
    view = type(board).from_array(labels[orientation.transform(board.to_array())])
    return view, MoveMapper(orientation, m, n)


def pull_back(view, board, orientation: Orientation) -> None:
    """Write the view's arrangement back into ``board`` in original labels."""
    m, n = board.m, board.n
    labels = _labels(orientation, m, n)
    inverse = np.zeros_like(labels)
    inverse[labels[1:]] = np.arange(1, m * n + 1)
    board.assign(orientation.untransform(inverse[view.to_array()]))

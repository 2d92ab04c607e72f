"""Rotations of a single line and the push/drag-counting move log.

Internally a move is a pair of ints: a *line code* (``+i`` for row ``i``,
``-j`` for column ``j``) and a *signed count* (positive for rightward/downward,
negative for leftward/upward). ``MoveLog`` stores these in two ``int32``
arrays so that logs of tens of millions of moves stay compact.
"""
from __future__ import annotations

import enum
from array import array
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from ..errors import DomainError


class Direction(enum.Enum):
    RIGHT = "r"
    LEFT = "l"
    DOWN = "d"
    UP = "u"

    @property
    def is_row(self) -> bool:
        return self in (Direction.RIGHT, Direction.LEFT)

    @property
    def sign(self) -> int:
        return 1 if self in (Direction.RIGHT, Direction.DOWN) else -1

    def opposite(self) -> "Direction":
        return _OPPOSITE[self]


_OPPOSITE = {
    Direction.RIGHT: Direction.LEFT,
    Direction.LEFT: Direction.RIGHT,
    Direction.DOWN: Direction.UP,
    Direction.UP: Direction.DOWN,
}


@dataclass(frozen=True)
class Move:
    direction: Direction
    index: int
    count: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise DomainError(f"line index must be >= 1, got {self.index}")
        if self.count < 1:
            raise DomainError(f"move count must be >= 1, got {self.count}")

    @classmethod
    def right(cls, i: int, k: int = 1) -> "Move":
        return cls(Direction.RIGHT, i, k)

    @classmethod
    def left(cls, i: int, k: int = 1) -> "Move":
        return cls(Direction.LEFT, i, k)

    @classmethod
    def down(cls, j: int, k: int = 1) -> "Move":
        return cls(Direction.DOWN, j, k)

    @classmethod
    def up(cls, j: int, k: int = 1) -> "Move":
        return cls(Direction.UP, j, k)

    @classmethod
    def from_code(cls, line: int, count: int) -> "Move":
        if line == 0 or count == 0:
            raise DomainError(f"invalid move code ({line}, {count})")
        if line > 0:
            d = Direction.RIGHT if count > 0 else Direction.LEFT
        else:
            d = Direction.DOWN if count > 0 else Direction.UP
        return cls(d, abs(line), abs(count))

    @property
    def is_row(self) -> bool:
        return self.direction.is_row

    @property
    def line(self) -> tuple:
        return ("row" if self.is_row else "col", self.index)

    @property
    def line_code(self) -> int:
        return self.index if self.is_row else -self.index

    @property
    def signed_count(self) -> int:
        return self.direction.sign * self.count

    def line_length(self, m: int, n: int) -> int:
        return n if self.is_row else m

    def inverse(self) -> "Move":
        return Move(self.direction.opposite(), self.index, self.count)

    def normalized(self, m: int, n: int) -> "Move":
        """Same direction, count reduced modulo the line length.

        Raises ``DomainError`` when the move is the identity.
        """
        k = self.count % self.line_length(m, n)
        if k == 0:
            raise DomainError(f"{self} is the identity on a {m}x{n} board")
        return Move(self.direction, self.index, k)

    def __str__(self) -> str:
        tok = f"{self.direction.value}{self.index}"
        return tok if self.count == 1 else f"{tok}*{self.count}"


class MoveLog:
    """Ordered moves with incremental push/drag accounting.

    Appending a move on the same line and in the same direction as the last
    entry folds it into that entry, so ``R R`` is stored as ``R*2``. The push
    number (total unit rotations) and drag number (maximal runs of moves on
    one line) are unaffected by this folding.
    """

    def __init__(self, moves: Iterable[Move] = ()):
        self._lines = array("i")
        self._counts = array("i")
        self._push = 0
        self._drag = 0
        for mv in moves:
            self.append(mv)

    def append(self, move: Move) -> None:
        self.append_code(move.line_code, move.signed_count)

    def append_code(self, line: int, count: int) -> None:
        if count == 0:
            return
        lines, counts = self._lines, self._counts
        self._push += abs(count)
        if lines and lines[-1] == line:
            if (counts[-1] > 0) == (count > 0):
                counts[-1] += count
                return
        else:
            self._drag += 1
        lines.append(line)
        counts.append(count)

    def extend(self, moves: Iterable[Move]) -> None:
        for mv in moves:
            self.append(mv)

    def extend_codes(self, lines, counts) -> None:
        """Append encoded moves (already folded among themselves)."""
        lines = np.asarray(lines, dtype=np.int32)
        counts = np.asarray(counts, dtype=np.int32)
        if len(lines) == 0:
            return
        self.append_code(int(lines[0]), int(counts[0]))
        if len(lines) > 1:
            rest_l, rest_c = lines[1:], counts[1:]
            self._push += int(np.abs(rest_c, dtype=np.int64).sum())
            self._drag += int(np.count_nonzero(rest_l != lines[:-1]))
            self._lines.frombytes(rest_l.tobytes())
            self._counts.frombytes(rest_c.tobytes())

    def extend_log(self, other: "MoveLog") -> None:
        self.extend_codes(other.lines(), other.counts())

    # copies: a live buffer export would block further appends
    def lines(self) -> np.ndarray:
        return np.frombuffer(self._lines, dtype=np.int32).copy() if self._lines else np.zeros(0, np.int32)

    def counts(self) -> np.ndarray:
        return np.frombuffer(self._counts, dtype=np.int32).copy() if self._counts else np.zeros(0, np.int32)

    @property
    def push_count(self) -> int:
        return self._push

    @property
    def drag_count(self) -> int:
        return self._drag

    def recount(self) -> tuple:
        """Push and drag numbers recomputed from the stored moves."""
        lines, counts = self.lines(), self.counts()
        if len(lines) == 0:
            return 0, 0
        push = int(np.abs(counts, dtype=np.int64).sum())
        drag = 1 + int(np.count_nonzero(lines[1:] != lines[:-1]))
        return push, drag

    def __len__(self) -> int:
        return len(self._lines)

    def __iter__(self) -> Iterator[Move]:
        for line, count in zip(self._lines, self._counts):
            yield Move.from_code(line, count)

    def __getitem__(self, idx: int) -> Move:
        return Move.from_code(self._lines[idx], self._counts[idx])

    def __repr__(self) -> str:
        return f"<MoveLog entries={len(self)} push={self._push} drag={self._drag}>"

    def copy(self) -> "MoveLog":
        out = MoveLog()
        out._lines = array("i", self._lines)
        out._counts = array("i", self._counts)
        out._push, out._drag = self._push, self._drag
        return out


def expand_units(moves: Iterable[Move]) -> Iterator[Move]:
    """Yield every compound move as ``count`` unit moves."""
    for mv in moves:
        unit = Move(mv.direction, mv.index, 1)
        for _ in range(mv.count):
            yield unit

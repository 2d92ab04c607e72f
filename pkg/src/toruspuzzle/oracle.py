"""Ground truth for small boards and independent checking of solver output.

States are ranked by the Lehmer code of the row-major reading of the board,
so the sorted board has rank 0. Breadth-first search runs over all
``2(m + n)`` unit rotations (every row both ways, every column both ways);
the move set is closed under inverses, so the distance from the sorted board
equals the distance to it.

Random scrambles use NumPy's PCG64 bit generator (PCG XSL-RR 128/64) seeded
with the given integer; each step draws one raw 64-bit output and takes it
modulo ``2(m + n)`` to pick a generator in the order r1, l1, ..., rm, lm,
d1, u1, ..., dn, un.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .core.board import NaiveBoard, arrangement_parity, make_board, sortable_for
from .core.moves import Direction, Move
from .core.textio import parse_moves
from .errors import DomainError, StateCapError, UnsortableError

DEFAULT_STATE_CAP = 400_000


# -- ranking ---------------------------------------------------------------


def _factorials(size: int) -> np.ndarray:
    return np.array([math.factorial(k) for k in range(size)], dtype=np.int64)


def rank(values: Sequence[int]) -> int:
    """Lehmer rank of a one-line permutation of 1..N (identity -> 0)."""
    p = list(values)
    size = len(p)
    r = 0
    for i in range(size):
        smaller = sum(1 for j in range(i + 1, size) if p[j] < p[i])
        r += smaller * math.factorial(size - 1 - i)
    return r


def unrank(r: int, size: int) -> Tuple[int, ...]:
    if not 0 <= r < math.factorial(size):
        raise DomainError(f"rank {r} outside 0..{size}!-1")
    pool = list(range(1, size + 1))
    out = []
    for i in range(size):
        f = math.factorial(size - 1 - i)
        d, r = divmod(r, f)
        out.append(pool.pop(d))
    return tuple(out)


def lehmer_digits(perms: np.ndarray) -> np.ndarray:
    """Row-wise Lehmer digits of a (k, N) array of permutations."""
    perms = np.asarray(perms)
    size = perms.shape[1]
    digits = np.zeros(perms.shape, dtype=np.int64)
    for i in range(size - 1):
        digits[:, i] = (perms[:, i + 1:] < perms[:, i:i + 1]).sum(axis=1)
    return digits


def rank_many(perms: np.ndarray) -> np.ndarray:
    size = np.asarray(perms).shape[1]
    weights = _factorials(size)[::-1]
    return lehmer_digits(perms) @ weights


def unrank_many(ranks: np.ndarray, size: int) -> np.ndarray:
    ranks = np.asarray(ranks, dtype=np.int64).copy()
    k = len(ranks)
    facts = _factorials(size)
    used = np.zeros((k, size), dtype=bool)
    out = np.empty((k, size), dtype=np.int64)
    rows = np.arange(k)
    for i in range(size):
        f = facts[size - 1 - i]
        d = ranks // f
        ranks -= d * f
        # position of the (d+1)-th unused value
        free_rank = np.cumsum(~used, axis=1) - 1
        choice = np.argmax((free_rank == d[:, None]) & ~used, axis=1)
        out[:, i] = choice + 1
        used[rows, choice] = True
    return out


def parity_of_ranks(ranks: np.ndarray, size: int) -> np.ndarray:
    """0/1 parity of each ranked permutation (sum of Lehmer digits mod 2)."""
    ranks = np.asarray(ranks, dtype=np.int64).copy()
    facts = _factorials(size)
    par = np.zeros(len(ranks), dtype=np.int64)
    for i in range(size):
        f = facts[size - 1 - i]
        d = ranks // f
        ranks -= d * f
        par ^= d & 1
    return par


# -- generators ------------------------------------------------------------


def generator_moves(m: int, n: int) -> List[Move]:
    out = []
    for i in range(1, m + 1):
        out += [Move.right(i), Move.left(i)]
    for j in range(1, n + 1):
        out += [Move.down(j), Move.up(j)]
    return out


def generator_indices(m: int, n: int) -> np.ndarray:
    """``g[k]`` maps a row-major state to its successor: ``new = old[g[k]]``."""
    idx = np.arange(m * n).reshape(m, n)
    out = []
    for mv in generator_moves(m, n):
        b = NaiveBoard(idx + 1)
        b.apply_move(mv)
        out.append(b.to_array().ravel() - 1)
    return np.array(out, dtype=np.int64)


# -- breadth-first search --------------------------------------------------


@dataclass
class ReachabilityReport:
    m: int
    n: int
    reachable_count: int
    even_count: int
    odd_count: int
    depth_histogram: List[int]
    depth: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def gods_number(self) -> int:
        return len(self.depth_histogram) - 1

    def lines(self) -> List[str]:
        return [
            f"m={self.m}",
            f"n={self.n}",
            f"states={math.factorial(self.m * self.n)}",
            f"reachable_count={self.reachable_count}",
            f"even_count={self.even_count}",
            f"odd_count={self.odd_count}",
            f"max_depth={self.gods_number}",
        ]

    def histogram_csv(self) -> str:
        rows = ["depth,count"] + [f"{d},{c}" for d, c in enumerate(self.depth_histogram)]
        return "\n".join(rows) + "\n"


def _check_cap(m: int, n: int, cap: int) -> int:
    total = math.factorial(m * n)
    if total > cap:
        raise StateCapError(total, cap)
    return total


def bfs_depths(m: int, n: int, start: Optional[Sequence[int]] = None,
               cap: int = DEFAULT_STATE_CAP) -> np.ndarray:
    """Distance from ``start`` (default sorted) to every rank; -1 if unreachable."""
    total = _check_cap(m, n, cap)
    size = m * n
    gens = generator_indices(m, n)
    depth = np.full(total, -1, dtype=np.int8)
    s = 0 if start is None else rank(start)
    depth[s] = 0
    frontier = np.array([s], dtype=np.int64)
    d = 0
    while len(frontier):
        states = unrank_many(frontier, size)
        succ = states[:, gens].reshape(-1, size)
        ranks = np.unique(rank_many(succ))
        new = ranks[depth[ranks] < 0]
        d += 1
        if d > 127:
            raise DomainError("depth exceeds int8 range")
        depth[new] = d
        frontier = new
    return depth


def bfs_reachable(m: int, n: int, start: Optional[Sequence[int]] = None,
                  cap: int = DEFAULT_STATE_CAP, keep_depth: bool = False) -> ReachabilityReport:
    depth = bfs_depths(m, n, start, cap)
    reached = np.flatnonzero(depth >= 0)
    par = parity_of_ranks(reached, m * n)
    hist = np.bincount(depth[reached].astype(np.int64)).tolist()
    return ReachabilityReport(
        m=m, n=n, reachable_count=len(reached), even_count=int((par == 0).sum()),
        odd_count=int((par == 1).sum()), depth_histogram=hist,
        depth=depth if keep_depth else None,
    )


@lru_cache(maxsize=8)
def _depth_table(m: int, n: int, cap: int) -> np.ndarray:
    return bfs_depths(m, n, None, cap)


def optimal_push_number(board, cap: int = DEFAULT_STATE_CAP) -> int:
    """Fewest unit rotations (any line, either direction) that sort ``board``."""
    m, n = board.m, board.n
    _check_cap(m, n, cap)
    values = board.one_line()
    par = arrangement_parity(values)
    if not sortable_for(m, n, par):
        raise UnsortableError(m, n, par)
    return int(_depth_table(m, n, cap)[rank(values)])


# -- random instances ------------------------------------------------------


@dataclass(frozen=True)
class ScrambleSpec:
    m: int
    n: int
    seed: int
    steps: int

    def __post_init__(self):
        if self.steps < 0:
            raise DomainError("steps must be >= 0")
        if self.m < 2 or self.n < 2:
            raise DomainError(f"board must be at least 2x2, got {self.m}x{self.n}")


def scramble_moves(spec: ScrambleSpec) -> List[Move]:
    gens = generator_moves(spec.m, spec.n)
    bits = np.random.PCG64(spec.seed)
    return [gens[int(bits.random_raw()) % len(gens)] for _ in range(spec.steps)]


def random_sortable_scramble(spec: ScrambleSpec, engine: str = "naive"):
    board = make_board(np.arange(1, spec.m * spec.n + 1).reshape(spec.m, spec.n), engine)
    board.apply_moves(scramble_moves(spec))
    return board


def random_sortable_array(m: int, n: int, seed) -> np.ndarray:
    """Uniform arrangement, with the last two cells exchanged if it is unsortable."""
    rng = np.random.Generator(np.random.PCG64(seed))
    a = rng.permutation(m * n) + 1
    if not sortable_for(m, n, arrangement_parity(a)):
        a[-2], a[-1] = a[-1], a[-2]
    return a.reshape(m, n)


def random_sortable_board(m: int, n: int, seed, engine: str = "fast"):
    return make_board(random_sortable_array(m, n, seed), engine)


# -- replay ----------------------------------------------------------------


@dataclass(frozen=True)
class MovePolicy:
    """Allowed directions, optionally restricted to some row/column indices."""

    directions: frozenset = frozenset(Direction)
    rows: Optional[frozenset] = None
    cols: Optional[frozenset] = None

    @classmethod
    def unrestricted(cls) -> "MovePolicy":
        return cls()

    @classmethod
    def forward_only(cls) -> "MovePolicy":
        """Rows rightward, columns downward."""
        return cls(frozenset({Direction.RIGHT, Direction.DOWN}))

    @classmethod
    def first_row_and_columns(cls) -> "MovePolicy":
        """Row 1 rightward and any column downward."""
        return cls(frozenset({Direction.RIGHT, Direction.DOWN}), rows=frozenset({1}))

    def allows(self, move: Move) -> bool:
        if move.direction not in self.directions:
            return False
        if move.is_row:
            return self.rows is None or move.index in self.rows
        return self.cols is None or move.index in self.cols


@dataclass
class ReplayReport:
    final_sorted: bool
    push: int
    drag: int
    legal: bool
    illegal: List[Tuple[int, Move]] = field(default_factory=list)

    def lines(self) -> List[str]:
        out = [
            f"final_sorted={str(self.final_sorted).lower()}",
            f"push={self.push}",
            f"drag={self.drag}",
            f"legal={str(self.legal).lower()}",
            f"illegal_count={len(self.illegal)}",
        ]
        if self.illegal:
            i, mv = self.illegal[0]
            out.append(f"first_illegal={i}:{mv}")
        return out


def replay_verify(start, moves, policy: Optional[MovePolicy] = None) -> ReplayReport:
    """Replay ``moves`` (text, Move iterable or MoveLog) on a naive copy of ``start``."""
    if isinstance(start, np.ndarray) or isinstance(start, list):
        board = NaiveBoard(start)
    else:
        board = NaiveBoard(start.to_array())
    if isinstance(moves, str):
        moves = parse_moves(moves)
    policy = policy or MovePolicy.unrestricted()
    push = 0
    drag = 0
    last = None
    illegal = []
    for i, mv in enumerate(moves):
        if not policy.allows(mv):
            illegal.append((i, mv))
        board.apply_move(mv)
        push += mv.count
        line = (mv.is_row, mv.index)
        if line != last:
            drag += 1
            last = line
    a = board.to_array().ravel()
    done = bool((a == np.arange(1, a.size + 1)).all())
    return ReplayReport(final_sorted=done, push=push, drag=drag, legal=not illegal, illegal=illegal)

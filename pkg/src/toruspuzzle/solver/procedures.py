"""Public entry points for the sorting procedures.

Each procedure picks the compiled kernel when handed a ``FastBoard`` and the
step-by-step reference otherwise (or when ``literal=True``). Both routes emit
identical move logs. All procedures work in the canonical frame: ``m <= n``,
row 1 rotates rightward, columns rotate downward.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from numba import njit

from ..core.board import FastBoard, all_columns, column_predicates, target_row
from ..core.moves import MoveLog
from ..core.orient import Orientation, pull_back, reorient
from ..errors import ContractError, DomainError, InternalError
from ..permgroup import Permutation, involution_factorization
from . import kernels, reference
from .adjacent_swap import adjacent_swap_sequence

UP = "U"
DOWN = "D"


@dataclass
class PhaseTally:
    """Rotation counts of one procedure call, in the frame it ran in."""

    name: str
    row_rotations: int = 0
    column_rotations: int = 0
    per_column: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64))
    other_rows: int = 0

    @classmethod
    def of(cls, name: str, log: MoveLog, n: int) -> "PhaseTally":
        per = np.zeros(n + 1, dtype=np.int64)
        totals = np.zeros(3, dtype=np.int64)
        _tally(log.lines(), log.counts(), per, totals)
        return cls(name=name, row_rotations=int(totals[0]), column_rotations=int(totals[1]),
                   per_column=per[1:], other_rows=int(totals[2]))

    @property
    def push(self) -> int:
        return self.row_rotations + self.column_rotations + self.other_rows

    @property
    def max_per_column(self) -> int:
        return int(self.per_column.max()) if len(self.per_column) else 0


@njit(cache=True)
def _tally(lines, counts, per, totals):
    for i in range(lines.shape[0]):
        c = abs(counts[i])
        if lines[i] < 0:
            per[-lines[i]] += c
            totals[1] += c
        elif lines[i] == 1:
            totals[0] += c
        else:
            totals[2] += c


def _fast(board, literal: bool) -> bool:
    return isinstance(board, FastBoard) and not literal


def _need_canonical(board) -> None:
    if board.m > board.n:
        raise DomainError(f"procedure needs m <= n, got {board.m}x{board.n}")


def potential(board) -> int:
    """Body cells holding an element whose target column is elsewhere."""
    a = board.to_array()
    n = a.shape[1]
    return int(np.count_nonzero((a[1:] - 1) % n + 1 != np.arange(1, n + 1)))


def fill_columns(board, log: MoveLog, trace: Optional[List[int]] = None, literal: bool = False,
                 underfull: Optional[List[int]] = None) -> None:
    """Make every column near-full.

    With ``trace`` (or ``underfull``) the step-by-step route runs and records
    the potential (or the underfull-column count) before the first and after
    every row-1 rotation.
    """
    _need_canonical(board)
    if trace is not None or underfull is not None or not _fast(board, literal):
        reference.fill_columns(board, log, trace, underfull)
    else:
        kernels.run_fill_columns(board, log)


def float_minimums(board, log: MoveLog, literal: bool = False) -> None:
    """Turn near-full columns into body-full ones with exactly n row rotations."""
    _need_canonical(board)
    if not all_columns(board, "near_full"):
        raise ContractError("float_minimums needs every column near-full")
    if _fast(board, literal):
        kernels.run_float_minimums(board, log)
    else:
        reference.float_minimums(board, log)


def radix_phases(m: int) -> int:
    """ceil(log2(m - 1)); zero when the body is a single cell."""
    return (m - 2).bit_length()


def radix_sort_bodies(board, columns: Sequence[int], log: MoveLog, literal: bool = False) -> None:
    """Sort the bodies of ``columns`` (all body-full) by target row."""
    _need_canonical(board)
    m, n = board.m, board.n
    cols = [int(c) for c in columns]
    if len(set(cols)) != len(cols):
        raise DomainError("radix_sort_bodies: duplicate column index")
    if any(not 1 <= c <= n for c in cols):
        raise DomainError(f"radix_sort_bodies: column index out of range 1..{n}")
    if len(cols) > n // (m - 1):
        raise DomainError(f"radix_sort_bodies: at most {n // (m - 1)} columns at once, got {len(cols)}")
    for c in cols:
        if not column_predicates(board, c).body_full:
            raise ContractError(f"radix_sort_bodies: column {c} is not body-full")
    phases = radix_phases(m)
    if phases == 0 or not cols:
        # zero phases still means zero moves
        return
    if _fast(board, literal):
        kernels.run_radix_sort_bodies(board, cols, phases, log)
    else:
        reference.radix_sort_bodies(board, cols, phases, log)


def column_groups(m: int, n: int) -> List[List[int]]:
    """Consecutive groups of floor(n / (m - 1)) columns."""
    g = n // (m - 1)
    return [list(range(s, min(s + g, n + 1))) for s in range(1, n + 1, g)]


def sort_all_bodies(board, log: MoveLog, literal: bool = False,
                    tallies: Optional[List[PhaseTally]] = None) -> None:
    _need_canonical(board)
    m, n = board.m, board.n
    if m == 2:
        return
    if not all_columns(board, "body_full"):
        raise ContractError("sort_all_bodies needs every column body-full")
    for group in column_groups(m, n):
        sub = MoveLog()
        radix_sort_bodies(board, group, sub, literal)
        if tallies is not None:
            tallies.append(PhaseTally.of("radix_sort_bodies", sub, n))
        log.extend_log(sub)


def _direction(d) -> bool:
    d = str(d).upper()
    if d not in (UP, DOWN):
        raise DomainError(f"direction must be 'U' or 'D', got {d!r}")
    return d == DOWN


def swap_pairs(board, pairs: Sequence[Tuple[int, int]], d, log: MoveLog,
               aux: Optional[Sequence[int]] = None, literal: bool = False) -> None:
    """Swap R[c] and R[c'] for each pair; body of each auxiliary column shifts by one in ``d``.

    Exactly 3n rotations of row 1. Auxiliary columns default to 1..k.
    """
    n = board.n
    down = _direction(d)
    firsts = [int(a) for a, _ in pairs]
    seconds = [int(b) for _, b in pairs]
    k = len(firsts)
    flat = firsts + seconds
    if len(set(flat)) != len(flat):
        raise DomainError("swap_pairs: pair indices must all be distinct")
    if any(not 1 <= c <= n for c in flat):
        raise DomainError(f"swap_pairs: index out of range 1..{n}")
    aux = list(range(1, k + 1)) if aux is None else [int(a) for a in aux]
    if len(aux) != k or len(set(aux)) != k or any(not 1 <= a <= n for a in aux):
        raise DomainError("swap_pairs: need one distinct auxiliary column per pair")
    if _fast(board, literal):
        kernels.run_swap_pairs(board, firsts, seconds, aux, down, log)
    else:
        reference.swap_pairs(board, firsts, seconds, aux, down, log)


def apply_involution_to_line(board, perm: Permutation, d, log: MoveLog,
                             line: str = "row", literal: bool = False,
                             tallies: Optional[List[PhaseTally]] = None) -> None:
    """Permute row 1 (or column 1, through the transposed view) by an involution.

    The element at position i moves to ``perm(i)``; auxiliary lines
    1..a2(perm) have their bodies shifted one step in direction ``d``.
    """
    if not perm.is_involution():
        raise DomainError("apply_involution_to_line needs an involution")
    pairs = perm.transpositions()
    if line == "row":
        if perm.size != board.n:
            raise DomainError(f"involution size {perm.size} != row length {board.n}")
        sub = MoveLog()
        swap_pairs(board, pairs, d, sub, literal=literal)
        if tallies is not None:
            tallies.append(PhaseTally.of("swap_pairs", sub, board.n))
        log.extend_log(sub)
        return
    if line != "col":
        raise DomainError(f"line must be 'row' or 'col', got {line!r}")
    if perm.size != board.m:
        raise DomainError(f"involution size {perm.size} != column length {board.m}")
    turn = Orientation(transposed=True)
    view, mapper = reorient(board, turn)
    sub = MoveLog()
    swap_pairs(view, pairs, d, sub, literal=literal)
    if tallies is not None:
        tallies.append(PhaseTally.of("swap_pairs_transposed", sub, view.n))
    pull_back(view, board, turn)
    log.extend_log(mapper.map_log(sub))


def first_row_permutation(board) -> Permutation:
    """Row 1 read as a one-line permutation (valid once bodies are sorted)."""
    return Permutation(board.row(1))


def sort_first_row(board, log: MoveLog, restricted: bool = False, literal: bool = False,
                   tallies: Optional[List[PhaseTally]] = None) -> None:
    """Sort row 1 of a board whose columns are all body-sorted."""
    _need_canonical(board)
    m, n = board.m, board.n
    if not all_columns(board, "body_sorted"):
        raise ContractError("sort_first_row needs every column body-sorted")

    def involution(p, d, line="row"):
        apply_involution_to_line(board, p, d, log, line=line, literal=literal, tallies=tallies)

    q = first_row_permutation(board)
    if n % 2 == 0 and q.parity():
        board.rotate_row(1, 1)
        log.append_code(1, 1)
        q = first_row_permutation(board)
    f = involution_factorization(q)
    if f.tau is None:
        involution(f.sigma, UP)
        involution(f.upsilon, DOWN)
    else:
        if m % 2:
            raise ContractError(f"{m}x{n} board with odd row-1 permutation is unsortable")
        involution(f.sigma, UP)
        involution(f.upsilon, DOWN)
        involution(f.tau, UP)
        if restricted:
            involution(Permutation.transposition(n, 1, n), DOWN)
            tail = MoveLog(adjacent_swap_sequence(m, n, "m"))
            board.apply_moves(tail)
            if tallies is not None:
                tallies.append(PhaseTally.of("adjacent_swap", tail, n))
            log.extend_log(tail)
        else:
            q1 = Permutation(target_row(x, n) for x in board.column(1))
            f1 = involution_factorization(q1)
            if f1.tau is not None:
                raise InternalError("column-1 shift should be an even permutation")
            involution(f1.sigma, UP, "col")
            involution(f1.upsilon, DOWN, "col")
    if not np.array_equal(np.asarray(board.row(1)), np.arange(1, n + 1)):
        raise InternalError("sort_first_row finished with row 1 unsorted")

"""End-to-end solve with per-procedure tallies and bound checks."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np

from ..core.board import all_columns, board_parity, is_sortable, is_sorted
from ..core.moves import MoveLog
from ..core.orient import Orientation, canonical_orientation, pull_back, reorient
from ..errors import InternalError, UnsortableError
from . import procedures as P

# push <= BOUND_CONSTANT * m * n * log2(max(m, n) + 1); see README for the derivation
BOUND_CONSTANT = 36

STANDARD = "standard"
RESTRICTED = "restricted"


@dataclass
class SolveReport:
    log: MoveLog
    canonical_log: MoveLog
    orientation: Orientation
    m: int
    n: int
    mode: str
    phases: List[P.PhaseTally] = field(default_factory=list)
    bound_checks: Dict[str, bool] = field(default_factory=dict)
    bound_constant: int = BOUND_CONSTANT

    @property
    def push(self) -> int:
        return self.log.push_count

    @property
    def drag(self) -> int:
        return self.log.drag_count

    @property
    def bound(self) -> float:
        return self.bound_constant * self.m * self.n * math.log2(max(self.m, self.n) + 1)

    @property
    def bound_ratio(self) -> float:
        return self.push / (self.m * self.n * math.log2(max(self.m, self.n) + 1))

    def phase_totals(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for t in self.phases:
            out[t.name] = out.get(t.name, 0) + t.push
        return out

    def stats_lines(self) -> List[str]:
        o = self.orientation
        lines = [
            f"m={self.m}",
            f"n={self.n}",
            f"mode={self.mode}",
            f"transposed={int(o.transposed)}",
            f"push={self.push}",
            f"drag={self.drag}",
            f"entries={len(self.log)}",
            f"bound_constant={self.bound_constant}",
            f"bound_ratio={self.bound_ratio:.6f}",
        ]
        for name, push in self.phase_totals().items():
            lines.append(f"phase.{name}.push={push}")
        for name, ok in self.bound_checks.items():
            lines.append(f"check.{name}={'ok' if ok else 'FAIL'}")
        return lines


def _check_bounds(report: SolveReport, m: int, n: int, board_sorted: bool) -> None:
    """m, n are canonical-frame dimensions."""
    checks = report.bound_checks
    by = {}
    for t in report.phases:
        by.setdefault(t.name, []).append(t)
    L = P.radix_phases(m)
    fc = by.get("fill_columns", [])
    checks["fill_columns.per_column"] = all(t.max_per_column <= m - 1 for t in fc)
    checks["fill_columns.row"] = all(
        t.row_rotations <= 4 * m * n * (1 + int(math.floor(math.log2(n)))) for t in fc)
    fm = by.get("float_minimums", [])
    checks["float_minimums.row"] = all(t.row_rotations == n for t in fm)
    checks["float_minimums.per_column"] = all(t.max_per_column <= m - 1 for t in fm)
    rs = by.get("radix_sort_bodies", [])
    checks["radix_sort_bodies.row"] = all(t.row_rotations == 3 * n * L for t in rs)
    checks["radix_sort_bodies.per_column"] = all(t.max_per_column <= 2 * (m - 1) * L for t in rs)
    sp = by.get("swap_pairs", [])
    checks["swap_pairs.row"] = all(t.row_rotations == 3 * n for t in sp)
    spt = by.get("swap_pairs_transposed", [])
    checks["swap_pairs_transposed.row"] = all(t.row_rotations == 3 * m for t in spt)
    checks["push_bound"] = report.push <= report.bound
    checks["push_equals_phase_sum"] = report.push == sum(t.push for t in report.phases) \
        and report.canonical_log.push_count == report.push
    checks["sorted"] = board_sorted


def solve(board, mode: str = STANDARD, literal: bool = False) -> SolveReport:
    """Sort ``board`` in place and return the report.

    The log in the report is in the board's own coordinates; the canonical
    log is the same sequence in the frame with ``m <= n``.
    """
    if mode not in (STANDARD, RESTRICTED):
        raise ValueError(f"mode must be {STANDARD!r} or {RESTRICTED!r}")
    m, n = board.m, board.n
    if not is_sortable(board):
        raise UnsortableError(m, n, board_parity(board))
    orient = canonical_orientation(m, n)
    if orient.is_identity:
        view, mapper = board, None
    else:
        view, mapper = reorient(board, orient)
    cm, cn = view.m, view.n
    canon = MoveLog()
    phases: List[P.PhaseTally] = []

    def run(name, fn, *args, **kw):
        sub = MoveLog()
        fn(view, sub, *args, **kw)
        phases.append(P.PhaseTally.of(name, sub, cn))
        canon.extend_log(sub)

    run("fill_columns", P.fill_columns, literal=literal)
    if not all_columns(view, "near_full"):
        raise InternalError("fill_columns left an underfull column")
    run("float_minimums", P.float_minimums, literal=literal)
    if not all_columns(view, "body_full"):
        raise InternalError("float_minimums left a column not body-full")
    if cm > 2:
        P.sort_all_bodies(view, canon, literal=literal, tallies=phases)
    if not all_columns(view, "body_sorted"):
        raise InternalError("sort_all_bodies left a column unsorted")
    before = len(phases)
    sub = MoveLog()
    P.sort_first_row(view, sub, restricted=mode == RESTRICTED, literal=literal, tallies=phases)
    # the optional parity-fixing row rotation is not inside any tally
    covered = sum(t.push for t in phases[before:])
    if sub.push_count != covered:
        phases.append(P.PhaseTally(name="parity_rotation", row_rotations=sub.push_count - covered,
                                   per_column=np.zeros(cn, dtype=np.int64)))
    canon.extend_log(sub)

    if mapper is None:
        log = canon
    else:
        log = mapper.map_log(canon)
        pull_back(view, board, orient)
    report = SolveReport(log=log, canonical_log=canon, orientation=orient, m=m, n=n,
                         mode=mode, phases=phases)
    _check_bounds(report, cm, cn, is_sorted(board))
    if not report.bound_checks["sorted"]:
        raise InternalError("solve finished with an unsorted board")
    return report

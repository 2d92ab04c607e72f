"""Command-line entry point: ``toruspuzzle {solve,scramble,verify,oracle,bench}``.

Exit codes: 0 success, 1 bad input (parse, I/O, domain, state cap),
2 verification failure, 3 unsortable instance. Every failure prints one line
``error: <reason>: <detail>`` on stderr.

Bench CSV header: ``m,n,seed,push,drag,wall_time_ns,bound_ratio`` where
``bound_ratio = push / (m*n*log2(max(m, n) + 1))``.
"""
from __future__ import annotations

import argparse
import math
import sys
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .core.board import make_board
from .core.textio import format_instance, format_moves, parse_moves, read_instance
from .errors import (ContractError, InternalError, ParseError, StateCapError, TorusError,
                     UnsortableError)
from .oracle import (MovePolicy, ScrambleSpec, bfs_reachable, optimal_push_number,
                     random_sortable_board, random_sortable_scramble, replay_verify)
from .solver.pipeline import RESTRICTED, STANDARD, solve

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2
EXIT_UNSORTABLE = 3

BENCH_HEADER = "m,n,seed,push,drag,wall_time_ns,bound_ratio"

POLICIES = {
    "any": MovePolicy.unrestricted,
    "forward": MovePolicy.forward_only,
    "restricted": MovePolicy.first_row_and_columns,
}


class Failure(Exception):
    def __init__(self, code: int, reason: str, detail: str):
        self.code, self.reason, self.detail = code, reason, detail
        super().__init__(f"{reason}: {detail}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise Failure(EXIT_INPUT, "usage", message)


@dataclass(frozen=True)
class BenchRow:
    m: int
    n: int
    seed: int
    push: int
    drag: int
    wall_time_ns: int
    bound_ratio: float

    def csv(self) -> str:
        return (f"{self.m},{self.n},{self.seed},{self.push},{self.drag},"
                f"{self.wall_time_ns},{self.bound_ratio:.6f}")


def bound_ratio(push: int, m: int, n: int) -> float:
    return push / (m * n * math.log2(max(m, n) + 1))


def parse_sizes(text: str) -> List[Tuple[int, int]]:
    out = []
    for part in text.split(","):
        bits = part.strip().lower().split("x")
        if len(bits) != 2 or not all(b.isdigit() for b in bits):
            raise Failure(EXIT_INPUT, "usage", f"bad size {part!r}, expected <m>x<n>")
        m, n = int(bits[0]), int(bits[1])
        if m < 2 or n < 2:
            raise Failure(EXIT_INPUT, "usage", f"size {part!r} below 2x2")
        out.append((m, n))
    return out


def parse_seeds(text: str) -> List[int]:
    """Comma-separated integers or inclusive ranges ``a-b``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            if "-" in part[1:]:
                a, b = part.split("-", 1)
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise Failure(EXIT_INPUT, "usage", f"bad seed {part!r}") from None
    return out


def _write(path: Optional[str], text: str, default=None) -> None:
    if path is None or path == "-":
        (default or sys.stdout).write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load(path: str):
    try:
        return read_instance(path)
    except OSError as e:
        raise Failure(EXIT_INPUT, "io", f"{path}: {e.strerror}") from None


def _unsortable(e: UnsortableError) -> Failure:
    return Failure(EXIT_UNSORTABLE, "unsortable",
                   f"{e.m}x{e.n} parity={e.parity.name.lower()}; sortable only if m is even, "
                   f"n is even, or the arrangement is an even permutation")


# -- subcommands -----------------------------------------------------------


def cmd_solve(args) -> int:
    a = _load(args.instance)
    board = make_board(a, args.engine)
    try:
        report = solve(board, mode=args.mode)
    except UnsortableError as e:
        raise _unsortable(e) from None
    stats = report.stats_lines()
    if args.check:
        res = replay_verify(a, report.log)
        if not res.final_sorted:
            raise Failure(EXIT_VERIFY, "verify", "replay on the naive engine did not sort the board")
        stats.append("check.replay=ok")
    moves = format_moves(report.log)
    stats_text = "\n".join(stats) + "\n"
    if args.emit in ("moves", "both"):
        _write(args.output, moves)
    if args.emit == "stats":
        _write(args.stats or args.output, stats_text)
    elif args.emit == "both":
        # stats must not interleave with the move stream
        _write(args.stats, stats_text, default=sys.stderr)
    return EXIT_OK


def cmd_scramble(args) -> int:
    steps = args.steps if args.steps is not None else 10 * args.m * args.n
    try:
        spec = ScrambleSpec(args.m, args.n, args.seed, steps)
    except TorusError as e:
        raise Failure(EXIT_INPUT, "domain", str(e)) from None
    _write(args.output, format_instance(random_sortable_scramble(spec)))
    return EXIT_OK


def cmd_verify(args) -> int:
    a = _load(args.instance)
    try:
        text = sys.stdin.read() if args.moves == "-" else open(args.moves, encoding="utf-8").read()
    except OSError as e:
        raise Failure(EXIT_INPUT, "io", f"{args.moves}: {e.strerror}") from None
    moves = parse_moves(text)
    m, n = a.shape
    for i, mv in enumerate(moves):
        if mv.index > (m if mv.is_row else n):
            raise Failure(EXIT_INPUT, "domain", f"move {i} ({mv}) names a line outside {m}x{n}")
    res = replay_verify(a, moves, POLICIES[args.policy]())
    sys.stdout.write("\n".join(res.lines()) + "\n")
    if not res.final_sorted:
        raise Failure(EXIT_VERIFY, "verify", "final board is not sorted")
    if not res.legal:
        i, mv = res.illegal[0]
        raise Failure(EXIT_VERIFY, "verify", f"move {i} ({mv}) violates policy {args.policy}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.optimal:
        a = _load(args.optimal)
        if a.shape != (args.m, args.n):
            raise Failure(EXIT_INPUT, "domain", f"instance is {a.shape[0]}x{a.shape[1]}, "
                                                f"expected {args.m}x{args.n}")
        try:
            k = optimal_push_number(make_board(a, "naive"), cap=args.cap)
        except UnsortableError as e:
            raise _unsortable(e) from None
        sys.stdout.write(f"m={args.m}\nn={args.n}\npush_number={k}\n")
        return EXIT_OK
    rep = bfs_reachable(args.m, args.n, cap=args.cap)
    sys.stdout.write("\n".join(rep.lines()) + "\n")
    if args.histogram:
        _write(args.histogram, rep.histogram_csv())
    return EXIT_OK


def _warm_up(engine: str) -> None:
    # compile the kernels outside the timed region
    solve(random_sortable_board(5, 7, 0, engine))


def bench_rows(sizes: Sequence[Tuple[int, int]], seeds: Sequence[int], engine: str = "fast"):
    _warm_up(engine)
    for m, n in sizes:
        for seed in seeds:
            board = random_sortable_board(m, n, seed, engine)
            t0 = time.perf_counter_ns()
            report = solve(board)
            dt = time.perf_counter_ns() - t0
            yield BenchRow(m, n, seed, report.push, report.drag, dt,
                           bound_ratio(report.push, m, n))


def cmd_bench(args) -> int:
    sizes = parse_sizes(args.sizes)
    seeds = parse_seeds(args.seeds)
    rows = list(bench_rows(sizes, seeds, args.engine))
    csv = BENCH_HEADER + "\n" + "".join(r.csv() + "\n" for r in rows)
    _write(args.csv, csv)
    ratios = [r.bound_ratio for r in rows]
    lo, hi = min(ratios), max(ratios)
    summary = (f"rows={len(rows)} min_bound_ratio={lo:.6f} max_bound_ratio={hi:.6f} "
               f"spread={hi / lo:.6f}\n")
    # keep the CSV stream clean when it goes to stdout
    (sys.stdout if args.csv not in (None, "-") else sys.stderr).write(summary)
    return EXIT_OK


# -- wiring ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="toruspuzzle", description="Sort m x n torus puzzle instances.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="solve an instance file ('-' for stdin)")
    s.add_argument("instance")
    s.add_argument("--engine", choices=["naive", "fast"], default="fast")
    s.add_argument("--mode", choices=[STANDARD, RESTRICTED], default=STANDARD)
    s.add_argument("--emit", choices=["moves", "stats", "both"], default="moves")
    s.add_argument("--check", action="store_true", help="replay the moves on the naive engine")
    s.add_argument("-o", "--output", help="move (or stats) output path")
    s.add_argument("--stats", help="stats output path (default stderr with --emit both)")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("scramble", help="random sortable instance by unit rotations")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--steps", type=int, help="unit rotations (default 10*m*n)")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_scramble)

    s = sub.add_parser("verify", help="replay a move file on an instance")
    s.add_argument("instance")
    s.add_argument("moves")
    s.add_argument("--policy", choices=sorted(POLICIES), default="any")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", help="exhaustive search on tiny boards")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--reachable", action="store_true")
    g.add_argument("--optimal", metavar="INSTANCE")
    s.add_argument("--histogram", metavar="CSV", help="write the depth histogram ('-' for stdout)")
    s.add_argument("--cap", type=int, default=400_000)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("bench", help="time random instances and report bound ratios")
    s.add_argument("--sizes", required=True, help="e.g. 8x8,16x16")
    s.add_argument("--seeds", default="0", help="e.g. 0,1,2 or 0-19")
    s.add_argument("--csv", help="CSV output path (default stdout)")
    s.add_argument("--engine", choices=["naive", "fast"], default="fast")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except Failure as e:
        code, reason, detail = e.code, e.reason, e.detail
    except ParseError as e:
        code, reason, detail = EXIT_INPUT, "parse", str(e)
    except StateCapError as e:
        code, reason, detail = EXIT_INPUT, "cap", str(e)
    except UnsortableError as e:
        f = _unsortable(e)
        code, reason, detail = f.code, f.reason, f.detail
    except (InternalError, ContractError) as e:
        code, reason, detail = EXIT_VERIFY, "internal", str(e)
    except TorusError as e:
        code, reason, detail = EXIT_INPUT, "domain", str(e)
    except OSError as e:
        code, reason, detail = EXIT_INPUT, "io", str(e)
    sys.stderr.write(f"error: {reason}: {' '.join(str(detail).split())}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

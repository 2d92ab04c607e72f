"""Instance and move-sequence text formats.

Instance::

    m n
    a11 a12 ... a1n
    ...
    am1 ... amn

Moves: whitespace-separated tokens ``r<i> l<i> d<j> u<j>``, each optionally
followed by ``*<k>``, e.g. ``d3*2 r1``.
"""
from __future__ import annotations

import re
from typing import List

import numpy as np

from ..errors import ParseError
from .moves import Direction, Move, MoveLog

_TOKEN = re.compile(r"([rldu])([1-9][0-9]*)(?:\*([1-9][0-9]*))?\Z")


def _tokens(text: str):
    """Yield ``(token, line, col)`` with 1-based positions."""
    for ln, line in enumerate(text.splitlines(), 1):
        for mt in re.finditer(r"\S+", line):
            yield mt.group(), ln, mt.start() + 1


def parse_instance(text: str) -> np.ndarray:
    toks = list(_tokens(text))
    if len(toks) < 2:
        raise ParseError("missing header 'm n'", 1, 1)
    vals = []
    for tok, ln, col in toks:
        if not tok.isdigit():
            raise ParseError(f"expected a non-negative integer, got {tok!r}", ln, col)
        vals.append(int(tok))
    (_, hl, _), m, n = toks[0], vals[0], vals[1]
    if toks[1][1] != hl:
        raise ParseError("header must hold 'm n' on one line", toks[1][1], toks[1][2])
    if m < 2 or n < 2:
        raise ParseError(f"board must be at least 2x2, got {m}x{n}", hl, 1)
    body = toks[2:]
    if len(body) != m * n:
        ln, col = (body[-1][1], body[-1][2]) if body else (hl, 1)
        raise ParseError(f"expected {m * n} cells, found {len(body)}", ln, col)
    # each grid row on its own line
    rows_seen = sorted({t[1] for t in body})
    if len(rows_seen) != m:
        raise ParseError(f"expected {m} grid lines, found {len(rows_seen)}", body[0][1], 1)
    for r, ln in enumerate(rows_seen):
        cnt = sum(1 for t in body if t[1] == ln)
        if cnt != n:
            raise ParseError(f"grid line {r + 1} has {cnt} cells, expected {n}", ln, 1)
    seen = {}
    for (tok, ln, col), v in zip(body, vals[2:]):
        if not 1 <= v <= m * n:
            raise ParseError(f"value {v} outside 1..{m * n}", ln, col)
        if v in seen:
            raise ParseError(f"value {v} repeated", ln, col)
        seen[v] = True
    return np.array(vals[2:], dtype=np.int64).reshape(m, n)


def format_instance(a) -> str:
    a = np.asarray(a.to_array() if hasattr(a, "to_array") else a)
    m, n = a.shape
    lines = [f"{m} {n}"] + [" ".join(str(int(v)) for v in row) for row in a]
    return "\n".join(lines) + "\n"


def parse_moves(text: str) -> List[Move]:
    out = []
    for tok, ln, col in _tokens(text):
        mt = _TOKEN.match(tok)
        if not mt:
            raise ParseError(f"bad move token {tok!r}", ln, col)
        k = int(mt.group(3)) if mt.group(3) else 1
        out.append(Move(Direction(mt.group(1)), int(mt.group(2)), k))
    return out


def format_moves(moves, per_line: int = 32) -> str:
    """Move tokens, ``per_line`` per line; accepts a MoveLog or Move iterable."""
    if isinstance(moves, MoveLog):
        lines, counts = moves.lines(), moves.counts()
    else:
        moves = list(moves)
        lines = np.array([mv.line_code for mv in moves], dtype=np.int64)
        counts = np.array([mv.signed_count for mv in moves], dtype=np.int64)
    if len(lines) == 0:
        return ""
    letter = np.where(lines > 0, np.where(counts > 0, "r", "l"), np.where(counts > 0, "d", "u"))
    idx = np.abs(lines).astype(str)
    k = np.abs(counts)
    suffix = np.where(k == 1, "", np.char.add("*", k.astype(str)))
    toks = np.char.add(np.char.add(letter, idx), suffix).tolist()
    rows = [" ".join(toks[i:i + per_line]) for i in range(0, len(toks), per_line)]
    return "\n".join(rows) + "\n"


def read_instance(path: str) -> np.ndarray:
    return parse_instance(_read(path))


def read_moves(path: str) -> List[Move]:
    return parse_moves(_read(path))


def _read(path: str) -> str:
    import sys
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()

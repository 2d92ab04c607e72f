"""Rotation strings that exchange R[1] and R[n] and fix every other cell.

Only row 1 and column 1 are rotated, each in its forward direction, so the
strings are usable when only those two rotation types are allowed.
"""
from __future__ import annotations

from typing import List

from ..core.moves import Move
from ..errors import DomainError


def _word(*parts) -> List[Move]:
    return [Move.right(1, k) if kind == "R" else Move.down(1, k) for kind, k in parts]


def adjacent_swap_sequence(m: int, n: int, even_dim: str = "n") -> List[Move]:
    """``even_dim`` names the dimension whose evenness the string relies on."""
    if m < 2 or n < 2:
        raise DomainError(f"board must be at least 2x2, got {m}x{n}")
    even_dim = even_dim.lower()
    if even_dim == "n":
        if n % 2:
            raise DomainError(f"n={n} is odd")
        seq = _word(("C", 1), ("R", 2), ("C", m - 1), ("R", 1))
        for _ in range(n // 2 - 1):
            seq += _word(("C", 1), ("R", 1), ("C", m - 1), ("R", 1))
        return seq
    if even_dim == "m":
        if m % 2:
            raise DomainError(f"m={m} is odd")
        seq = _word(("C", m - 1), ("R", 2), ("C", 2), ("R", n - 1), ("C", 1))
        for _ in range(m // 2 - 1):
            seq += _word(("R", 1), ("C", 1), ("R", n - 1), ("C", 1))
        seq += _word(("R", n - 1), ("C", 1))
        return seq
    raise DomainError(f"even_dim must be 'n' or 'm', got {even_dim!r}")

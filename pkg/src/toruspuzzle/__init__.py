"""Sorting the Torus Puzzle with O(mn log max(m, n)) unit rotations."""
from .core import (Direction, FastBoard, Move, MoveLog, NaiveBoard, is_sortable, is_sorted,
                   make_board, parse_instance, parse_moves, format_instance, format_moves)
from .errors import (ContractError, DomainError, InternalError, ParseError, StateCapError,
                     TorusError, UnsortableError)
from .permgroup import Permutation, involution_factorization
from .solver import RESTRICTED, STANDARD, SolveReport, solve

__version__ = "0.1.0"

__all__ = [
    "Direction", "FastBoard", "Move", "MoveLog", "NaiveBoard", "is_sortable", "is_sorted",
    "make_board", "parse_instance", "parse_moves", "format_instance", "format_moves",
    "ContractError", "DomainError", "InternalError", "ParseError", "StateCapError",
    "TorusError", "UnsortableError", "Permutation", "involution_factorization",
    "RESTRICTED", "STANDARD", "SolveReport", "solve",
]

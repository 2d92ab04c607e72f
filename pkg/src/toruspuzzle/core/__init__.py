"""Boards, moves, orientations and file formats."""
from .board import (
    ENGINES,
    ColumnState,
    Dims,
    FastBoard,
    NaiveBoard,
    all_columns,
    arrangement_parity,
    board_parity,
    column_predicates,
    is_sortable,
    is_sorted,
    make_board,
    sortable_for,
    target_col,
    target_position,
    target_row,
)
from .moves import Direction, Move, MoveLog, expand_units
from .orient import MoveMapper, Orientation, canonical_orientation, pull_back, reorient
from .textio import format_instance, format_moves, parse_instance, parse_moves, read_instance, read_moves

__all__ = [
    "ENGINES", "ColumnState", "Dims", "FastBoard", "NaiveBoard", "all_columns",
    "arrangement_parity", "board_parity", "column_predicates", "is_sortable",
    "is_sorted", "make_board", "sortable_for", "target_col", "target_position",
    "target_row", "Direction", "Move", "MoveLog", "expand_units", "MoveMapper",
    "Orientation", "canonical_orientation", "pull_back", "reorient",
    "format_instance", "format_moves", "parse_instance", "parse_moves",
    "read_instance", "read_moves",
]

"""The sorting pipeline, its procedures and the event wheel."""
from .adjacent_swap import adjacent_swap_sequence
from .pipeline import BOUND_CONSTANT, RESTRICTED, STANDARD, SolveReport, solve
from .procedures import (
    DOWN,
    UP,
    PhaseTally,
    apply_involution_to_line,
    column_groups,
    fill_columns,
    first_row_permutation,
    float_minimums,
    potential,
    radix_phases,
    radix_sort_bodies,
    sort_all_bodies,
    sort_first_row,
    swap_pairs,
)
from .wheel import EventWheel

__all__ = [
    "adjacent_swap_sequence", "BOUND_CONSTANT", "RESTRICTED", "STANDARD", "SolveReport",
    "solve", "DOWN", "UP", "PhaseTally", "apply_involution_to_line", "column_groups",
    "fill_columns", "first_row_permutation", "float_minimums", "potential", "radix_phases",
    "radix_sort_bodies", "sort_all_bodies", "sort_first_row", "swap_pairs", "EventWheel",
]

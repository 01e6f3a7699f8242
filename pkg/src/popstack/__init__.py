"""Sorting permutations with stacks and pop-stacks.

Deterministic single-pass operators (stack, pop-stack, flip on binary
words), their nondeterministic counterparts with full output sets,
projection to binary words with the tumble relaxation, exhaustive
claim verifiers, and exact counting sweeps over S_n.
"""

from .core import (
    MAX_ENUM_N,
    Perm,
    Word,
    all_permutations,
    avoids,
    contains,
    decreasing_runs,
    format_permutation,
    format_permutation_compact,
    format_word,
    identity,
    is_binary_word,
    is_identity,
    is_permutation,
    parse_permutation,
    parse_word,
    permutations_with_first,
    project,
)
from .machines import (
    MACHINE_NAMES,
    descent_blocks,
    pop_stack_outputs,
    reach,
    sortable_in_series,
    stack_outputs,
    tumble_set,
    tumble_set_naive,
)
from .sorting import (
    OPERATOR_NAMES,
    PassBoundError,
    flip_pass,
    is_west_t_sortable,
    iterate,
    passes_to_sort,
    pop_stack_pass,
    pop_stack_pass_by_runs,
    stack_pass,
    stack_pass_recursive,
)
from .theory import (
    CountTable,
    VerificationReport,
    count_series_sortable,
    count_table,
    count_west_t,
    effective_cap,
    is_pop_stacked,
    max_pass_count,
    merge_reports,
    pass_histogram,
    pop_stack_sortable_by_pattern,
    stack_sortable_by_pattern,
    staircase_flip_count,
    verify_flip_monotone,
    verify_projection_tumble,
    verify_staircase,
    verify_theorem,
    verify_worst_tumble,
    west2_formula,
    zero_order_leq,
)

__all__ = [
    "MAX_ENUM_N",
    "MACHINE_NAMES",
    "OPERATOR_NAMES",
    "Perm",
    "Word",
    "PassBoundError",
    "VerificationReport",
    "CountTable",
    "all_permutations",
    "avoids",
    "contains",
    "count_series_sortable",
    "count_table",
    "count_west_t",
    "decreasing_runs",
    "descent_blocks",
    "effective_cap",
    "flip_pass",
    "format_permutation",
    "format_permutation_compact",
    "format_word",
    "identity",
    "is_binary_word",
    "is_identity",
    "is_permutation",
    "is_pop_stacked",
    "is_west_t_sortable",
    "iterate",
    "max_pass_count",
    "merge_reports",
    "parse_permutation",
    "parse_word",
    "pass_histogram",
    "passes_to_sort",
    "permutations_with_first",
    "pop_stack_outputs",
    "pop_stack_pass",
    "pop_stack_pass_by_runs",
    "pop_stack_sortable_by_pattern",
    "project",
    "reach",
    "sortable_in_series",
    "stack_outputs",
    "stack_pass",
    "stack_pass_recursive",
    "stack_sortable_by_pattern",
    "staircase_flip_count",
    "tumble_set",
    "tumble_set_naive",
    "verify_flip_monotone",
    "verify_projection_tumble",
    "verify_staircase",
    "verify_theorem",
    "verify_worst_tumble",
    "west2_formula",
    "zero_order_leq",
]

__version__ = "0.1.0"

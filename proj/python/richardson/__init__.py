"""Richardson elements in g_1 and birationality of the moment map for parabolics."""

from ._core import (
    RichardsonError,
    b_set,
    blocks_from_coloring,
    classify,
    coloring_from_blocks,
    covering_degree,
    dual_partition,
    exceptional_lookup,
    grading_dims,
    is_birational,
    is_nice,
    is_sl2,
    jordan_from_kernel_dims,
    n_odd,
    normal_closure,
    oracle_partition,
    orbit_dim,
    positive_roots,
    rank_and_kernel,
    richardson_partition,
    run_cli,
    transpose,
)

__all__ = [
    "RichardsonError",
    "b_set",
    "blocks_from_coloring",
    "classify",
    "coloring_from_blocks",
    "covering_degree",
    "dual_partition",
    "exceptional_lookup",
    "grading_dims",
    "is_birational",
    "is_nice",
    "is_sl2",
    "jordan_from_kernel_dims",
    "n_odd",
    "normal_closure",
    "oracle_partition",
    "orbit_dim",
    "positive_roots",
    "rank_and_kernel",
    "richardson_partition",
    "run_cli",
    "transpose",
]

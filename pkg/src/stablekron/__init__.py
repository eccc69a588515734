"""Stable Kronecker coefficients via Kronecker tableaux, with
character-theoretic and partition-algebra verification."""

from .partitions import (
    NotAPartition, Undefined, composition, dominates, intersect,
    is_copieri, is_horizontal, is_maximal_depth, minmax, pad,
    parse_partition, partial_sum, partition, partitions_of,
    skew_diff_sizes,
)
from .branching import (
    NotAPath, Tableau, dvir_removal_witness, enumerate_std,
    enumerate_std0, error_path, is_dvir, step_key, step_str, successors,
    swap_adjacent,
)
from .tableaux import (
    NotApplicable, SemistandardClass, ShapeMismatch, classical_lr,
    count_latticed, count_sstd, is_lattice, is_semistandard, james_tree,
    james_terminals, mu_classes, r_map, r_map_inverse, reading_word,
    ssyt_count, stable_kronecker,
)
from .oracle import (
    BudgetExceeded, StableResult, dvir_step, kronecker, mn_character,
    p_set, stable_kronecker_oracle,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

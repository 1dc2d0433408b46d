"""Exact probabilities that a random permutation fixes a k-subset.

The package computes, in exact arithmetic throughout:

* the limiting probability (as the degree grows) that a uniform random
  permutation fixes some k-subset, via a pruned enumeration of k-free
  cycle-type rows and an exact exponential-polynomial accumulation
  evaluated to any number of decimal places;
* the finite-degree probabilities by exhausting integer partitions;
* Monte Carlo estimates of both, for cross-validation.
"""

from .exppoly import ExpPoly
from .finite import (
    FiniteResult,
    exceptions,
    finite_fix_probability,
    finite_table,
    fixing_counts,
    partitions_of,
)
from .limits import (
    HighPrecisionDecimal,
    decay_exponent,
    efg_ratio,
    evaluate,
    limiting_fix_probability,
    limiting_survival,
    limiting_survival_with_stats,
    row_contribution,
    row_factor,
)
from .montecarlo import McEstimate, sample_finite_fix, sample_limit_survival
from .partitions import (
    centralizer_size,
    divisibility_free,
    is_k_free,
    subpartition_sums,
    universality_index,
)
from .table import TableStats, enumerate_rows, rows_count

__all__ = [
    "ExpPoly",
    "FiniteResult",
    "HighPrecisionDecimal",
    "McEstimate",
    "TableStats",
    "centralizer_size",
    "decay_exponent",
    "divisibility_free",
    "efg_ratio",
    "enumerate_rows",
    "evaluate",
    "exceptions",
    "finite_fix_probability",
    "finite_table",
    "fixing_counts",
    "is_k_free",
    "limiting_fix_probability",
    "limiting_survival",
    "limiting_survival_with_stats",
    "partitions_of",
    "row_contribution",
    "row_factor",
    "rows_count",
    "sample_finite_fix",
    "sample_limit_survival",
    "subpartition_sums",
    "universality_index",
]

__version__ = "0.1.0"

"""Skolem sequences, Langford sequences and Skolem circles.

A Skolem circle of order ``m`` labels the cycle on ``2m`` nodes with
``1..m``, each twice, so that the two copies of ``i`` are ``i`` steps apart
around the cycle.
"""

from .canonical import CanonicalCircle, canonicalize, equivalent, images, is_standard, reflect, rotate
from .catalog import (
    CountsTable,
    diff_counts,
    expected_counts,
    read_catalog,
    read_counts,
    write_catalog,
    write_counts,
)
from .constructions import (
    BoundsSummary,
    bounds,
    glue,
    junction_edges,
    langford_exists,
    langford_power3,
    skolem_labeled_cycle_exists,
    skolem_order_exists,
    theorem9_circle,
    theorem9_order,
)
from .core import (
    CircleLabeling,
    PairList,
    SkolemTypeSeq,
    ValidationReport,
    cut,
    pairs_from_symbols,
    symbols_from_pairs,
    validate_circle,
    validate_sequence,
    wrap,
)
from .enumeration import (
    ClassifiedCounts,
    ShardSpec,
    classify,
    enumerate_circles,
    enumerate_sequences,
    enumerate_shard,
    iter_circles,
    make_shards,
    merge,
    plan_shards,
    verify_partition,
)
from .removable import (
    removability,
    interior_mask,
    removable_count_weight,
    removable_edges_fast,
    removable_edges_oracle,
    sequences_of_circle,
)

__version__ = "0.1.0"

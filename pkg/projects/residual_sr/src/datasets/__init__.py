"""Dataset generators, CSV ingestion, transforms and astronomy helpers."""

from .astronomy import (
    CLASSICAL_RELATIONS,
    LOG_L_BOUNDS,
    LOG_M_BOUNDS,
    AffineRelation,
    ClassicalRelation,
    affine_coefficients,
    classical_relation_for,
    log_plane_relation,
    relation_from_normalized,
)
from .generators import (
    NGUYEN_BENCHMARKS,
    NguyenBenchmark,
    gen_contaminated_linear,
    gen_mixture,
    gen_nguyen,
    get_benchmark,
    ground_truth_tree,
)
from .loaders import load_csv
from .models import Dataset, TransformRecord
from .transforms import (
    TRANSFORM_SPECS,
    inverse_transform,
    invert_column,
    invert_values,
    transform,
)

__all__ = [
    "CLASSICAL_RELATIONS",
    "LOG_L_BOUNDS",
    "LOG_M_BOUNDS",
    "NGUYEN_BENCHMARKS",
    "TRANSFORM_SPECS",
    "AffineRelation",
    "ClassicalRelation",
    "Dataset",
    "NguyenBenchmark",
    "TransformRecord",
    "affine_coefficients",
    "classical_relation_for",
    "gen_contaminated_linear",
    "gen_mixture",
    "gen_nguyen",
    "get_benchmark",
    "ground_truth_tree",
    "inverse_transform",
    "invert_column",
    "invert_values",
    "load_csv",
    "log_plane_relation",
    "relation_from_normalized",
    "transform",
]

from yangso3.rmatrix._checks import (
    UnitarityScalar,
    check_structure,
    check_ybe,
    check_ybe_points,
    sample_points,
    unitarity_scalar,
    ybe_at_point,
)
from yangso3.rmatrix._family import RMatrixFamily, build_P, build_Q, build_R, partial_transpose
from yangso3.rmatrix._indexing import SoIndexing

__all__ = [
    "RMatrixFamily",
    "SoIndexing",
    "UnitarityScalar",
    "build_P",
    "build_Q",
    "build_R",
    "check_structure",
    "check_ybe",
    "check_ybe_points",
    "partial_transpose",
    "sample_points",
    "unitarity_scalar",
    "ybe_at_point",
]

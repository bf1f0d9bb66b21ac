"""Refined Brill-Noether stratification of trigonal curves by splitting type."""

from .errors import (
    ConsistencyError,
    ContractError,
    IncomparableError,
    NotApplicableError,
    OutOfRangeError,
    ResourceError,
    StrataError,
    ValidationError,
)
from .splitting import (
    DegreeDatum,
    SplittingType,
    dominance_leq,
    enumerate_types,
    expected_codim,
    h0_split,
    h1_split,
    hasse_edges,
    make_splitting_type,
)
from .theory import (
    TrigonalContext,
    alpha_of,
    bn_components,
    class_coefficient,
    class_coefficient_checked,
    classify,
    component_count,
    deduce_empty_open,
    point_count,
)

__all__ = [
    "ConsistencyError",
    "ContractError",
    "DegreeDatum",
    "IncomparableError",
    "NotApplicableError",
    "OutOfRangeError",
    "ResourceError",
    "SplittingType",
    "StrataError",
    "TrigonalContext",
    "ValidationError",
    "alpha_of",
    "bn_components",
    "class_coefficient",
    "class_coefficient_checked",
    "classify",
    "component_count",
    "deduce_empty_open",
    "dominance_leq",
    "enumerate_types",
    "expected_codim",
    "h0_split",
    "h1_split",
    "hasse_edges",
    "make_splitting_type",
    "point_count",
]

__version__ = "0.1.0"

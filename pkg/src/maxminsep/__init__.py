"""Exact max-min convex separation on the unit cube.

All arithmetic is rational (fractions.Fraction); every positive answer
carries a certificate and every negative answer carries a witness.
"""
from .core import (
    ONE,
    ZERO,
    Point,
    Scalar,
    as_scalar,
    greatest_meet_coefficient,
    join,
    scale_meet,
    segment_contains,
)
from .convex import (
    Box,
    GeneratedConvexSet,
    bounding_box,
    box_hull_witness,
    box_intersects_hull,
    greatest_below,
    hull_contains,
    hull_intersection_witness,
    principal_coefficients,
)
from .errors import (
    BoundaryError,
    DimensionError,
    ExhaustionError,
    InternalError,
    IntersectionError,
    MaxMinError,
    ParseError,
    ResourceLimitError,
)
from .semispaces import (
    HemispaceDescriptor,
    SemispaceDescriptor,
    SortedProfile,
    hemispace_avoids_box,
    hemispace_contains,
    semispace_avoids_box,
    semispace_contains,
    semispace_family,
    set_in_semispace,
    sorted_profile,
)
from .separation import (
    HEMISPACE,
    NOT_SEPARABLE,
    SEMISPACE,
    BoxProfile,
    PartitionProfile,
    PartitionStage,
    SeparationCertificate,
    TraceEntry,
    assert_nonseparable,
    box_profile,
    check_sep_cond,
    lower_partition,
    separate_box,
)
from .planar import (
    PlanarBoxCertificate,
    PlanarExtremes,
    RegionLabel,
    planar_extremes,
    region_classify,
    separate_box_semispace,
    separate_two_sets,
)
from .oracle import (
    Grid,
    brute_is_convex,
    brute_separation_search,
    grid_hull,
)

__version__ = "0.1.0"

__all__ = [
    "ONE",
    "ZERO",
    "Point",
    "Scalar",
    "as_scalar",
    "greatest_meet_coefficient",
    "join",
    "scale_meet",
    "segment_contains",
    "Box",
    "GeneratedConvexSet",
    "bounding_box",
    "box_hull_witness",
    "box_intersects_hull",
    "greatest_below",
    "hull_contains",
    "hull_intersection_witness",
    "principal_coefficients",
    "BoundaryError",
    "DimensionError",
    "ExhaustionError",
    "InternalError",
    "IntersectionError",
    "MaxMinError",
    "ParseError",
    "ResourceLimitError",
    "HemispaceDescriptor",
    "SemispaceDescriptor",
    "SortedProfile",
    "hemispace_avoids_box",
    "hemispace_contains",
    "semispace_avoids_box",
    "semispace_contains",
    "semispace_family",
    "set_in_semispace",
    "sorted_profile",
    "HEMISPACE",
    "NOT_SEPARABLE",
    "SEMISPACE",
    "BoxProfile",
    "PartitionProfile",
    "PartitionStage",
    "SeparationCertificate",
    "TraceEntry",
    "assert_nonseparable",
    "box_profile",
    "check_sep_cond",
    "lower_partition",
    "separate_box",
    "PlanarBoxCertificate",
    "PlanarExtremes",
    "RegionLabel",
    "planar_extremes",
    "region_classify",
    "separate_box_semispace",
    "separate_two_sets",
    "Grid",
    "brute_is_convex",
    "brute_separation_search",
    "grid_hull",
    "__version__",
]

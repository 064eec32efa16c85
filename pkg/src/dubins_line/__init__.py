"""Shortest CSC Dubins path from a pose to a target line with a prescribed
final heading."""

from .errors import (
    BoundaryHeadingError,
    DegenerateInstanceError,
    DiscontinuityStraddleError,
    DubinsLineError,
    InfeasibleTangentError,
    InvalidArgumentError,
    OutOfValidityError,
)
from .geometry import (
    PATH_TYPES,
    CanonicalProblem,
    FrameTransform,
    WorldProblem,
    make_canonical,
    mirror_path_type,
    normalize_angle,
)
from .lengths import (
    CircleCenters,
    PathEval,
    evaluate,
    length_lsl,
    length_lsr,
    length_rsl,
    length_rsr,
    length_slope,
    total_length,
    turn_centers,
)
from .optimizer import (
    Candidate,
    PlanResult,
    decision_table_lookup,
    extreme_candidate,
    optimal_path,
)
from .oracle import OracleReport, Tolerances, finite_diff, grid_search, verify
from .pathgen import (
    Arc,
    SegmentList,
    Straight,
    Waypoint,
    build_segments,
    polyline_length,
    sample_waypoints,
    segments_to_world,
)
from .svg import render_svg

__version__ = "0.1.0"

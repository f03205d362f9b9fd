"""Lattice width of lattice polygons, toric fibrations and adjoint chains of rational surfaces."""
from .errors import *  # noqa: F401,F403
from .picard import (
    ChainReport,
    DivisorClass,
    SurfaceModel,
    adjoint_chain,
    adjoint_step,
    canonical_class,
    classify_case_B,
    intersect,
    is_minimal_mprs,
    recognize_minimal,
    solve_min_degree,
    surface_from_basepoints,
)
from .polygon import (
    LatticePolygon,
    Point,
    UnimodularAffineMap,
    adjoint,
    boundary_count,
    convex_hull,
    double_area,
    equivalent,
    interior_count,
    interior_points,
    is_minimal,
    lattice_points,
    normalize,
    shoe,
)
from .toric import (
    FibrationDescriptor,
    MonomialEmbedding,
    family_degree,
    fiber_parametrization,
    fibration_exponents,
    optimal_toric_families,
)
from .width import (
    CaseLabel,
    Viewangle,
    WidthReport,
    classify_case,
    is_tight,
    lattice_width,
    solve,
    solve_bruteforce,
    width_of,
)

__version__ = "0.1.0"

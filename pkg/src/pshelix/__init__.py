"""pshelix: pseudospherical helicoids in closed form.

Synthesis, classification, and verification of the singular surfaces of
Gauss curvature -1 with screw symmetry, plus the inverse problem of
recovering (mu, r) from prescribed invariants (helicity, parity, wave
number, aspect ratio).
"""

__version__ = "0.1.0"

from .helicoid import (
    FundamentalForms,
    HelicoidClass,
    HelicoidParams,
    HelperValues,
    NearSingularError,
    SingularPointError,
    classify,
    closed_fundamental_forms,
    fd_fundamental_forms,
    gauss_curvature,
    helpers,
    mirror_pair_check,
    period,
    planar_profile,
    spatial_profile,
    surface_from_profile,
    surface_point,
)
from .invariants import (
    Invariants,
    NotTwistedColumnError,
    SpatialClass,
    SpatialKind,
    cusps,
    invariants,
    singular_helix_count,
    spatial_class,
)
from .mesh import (
    PlanarProfilePolyline,
    SurfaceMesh,
    sample_profile,
    sample_surface,
    write_obj,
    write_profile_csv,
)
from .sine_gordon import PotentialParams, potential, sg_residual
from .solver import SolveRequest, SolveResult, h_fn, r_of_m, series_table, solve

__all__ = [
    "__version__",
    "FundamentalForms",
    "HelicoidClass",
    "HelicoidParams",
    "HelperValues",
    "Invariants",
    "NearSingularError",
    "NotTwistedColumnError",
    "PlanarProfilePolyline",
    "PotentialParams",
    "SingularPointError",
    "SolveRequest",
    "SolveResult",
    "SpatialClass",
    "SpatialKind",
    "SurfaceMesh",
    "classify",
    "closed_fundamental_forms",
    "cusps",
    "fd_fundamental_forms",
    "gauss_curvature",
    "h_fn",
    "helpers",
    "invariants",
    "mirror_pair_check",
    "period",
    "planar_profile",
    "potential",
    "r_of_m",
    "sample_profile",
    "sample_surface",
    "series_table",
    "sg_residual",
    "singular_helix_count",
    "solve",
    "spatial_class",
    "spatial_profile",
    "surface_from_profile",
    "surface_point",
    "write_obj",
    "write_profile_csv",
]

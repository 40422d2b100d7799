"""Revolution surfaces in Lorentz-Minkowski 3-space with prescribed mean or
skew curvature: Lorentz-number algebra, closed-form generating-curve
solvers, and finite-difference round-trip verification."""

from .curvature import (
    CurvatureTriple,
    FundamentalForms,
    PrincipalData,
    curvatures_from_forms,
    euler_normal_curvature,
    forms_at,
    principal_curvatures,
    spacelike_moments,
    timelike_gaussian_moments,
)
from .curves import PlanarCurve
from .lorentz import CausalClass, LorentzNumber, lorentz_linear_ode
from .mean_solver import MeanSolveRequest, aux_fg_curvature_check, solve_mean
from .minkowski import AxisType, MinkVec3, cross, inner, rotation
from .numerics import Grid, SampledFunction, cumulative_integral, fd_derivative
from .pipeline import (
    SurfaceGrid,
    VerificationReport,
    build_surface,
    export_curve_csv,
    export_mesh_obj,
    read_curve_csv,
    verify_roundtrip,
)
from .profile_expr import CurvatureProfile, parse_profile
from .skew_solver import SkewSolveRequest, build_A_profile, detect_cylinder, solve_skew

__version__ = "0.1.0"

__all__ = [
    "AxisType",
    "CausalClass",
    "CurvatureProfile",
    "CurvatureTriple",
    "FundamentalForms",
    "Grid",
    "LorentzNumber",
    "MeanSolveRequest",
    "MinkVec3",
    "PlanarCurve",
    "PrincipalData",
    "SampledFunction",
    "SkewSolveRequest",
    "SurfaceGrid",
    "VerificationReport",
    "aux_fg_curvature_check",
    "build_A_profile",
    "build_surface",
    "cross",
    "cumulative_integral",
    "curvatures_from_forms",
    "detect_cylinder",
    "euler_normal_curvature",
    "export_curve_csv",
    "export_mesh_obj",
    "fd_derivative",
    "forms_at",
    "inner",
    "lorentz_linear_ode",
    "parse_profile",
    "principal_curvatures",
    "read_curve_csv",
    "rotation",
    "solve_mean",
    "solve_skew",
    "spacelike_moments",
    "timelike_gaussian_moments",
    "verify_roundtrip",
]

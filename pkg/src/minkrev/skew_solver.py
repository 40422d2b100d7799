"""Generating graphs for a prescribed skew-curvature profile.

For each non-lightlike rotation family the skew-curvature equation reduces
to a real linear first-order ODE for an auxiliary function A of the radial
coordinate v, with A = +-2 int S(v)/v dv + a0 (an extra eta factor appears
when the graph is taken over the along-axis coordinate).  The along-axis
coordinate of the curve then integrates v A / sqrt(radicand), where the
radicand depends on the family:

    timelike axis, xz plane:   eta + v^2 A^2
    spacelike axis, xz plane: -eta + v^2 A^2
    spacelike axis, xy plane:    1 - v^2 A^2

Samples are always indexed by the radial coordinate; the two graph
orientations of each family solve for the graph function or its inverse and
differ in the admissible causal characters.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .curves import PlanarCurve
from .errors import (
    DomainViolation,
    MixedCausalCharacter,
    SingularAxis,
    SingularRadicand,
)
from .numerics import Grid, SampledFunction, cumulative_integral, fd_derivative
from .profile_expr import CurvatureProfile

_RAD_TOL = 1e-12
_MIN_RADIUS = 1e-3

# family -> (radial coordinate, along-axis coordinate) point-column indices.
_FAMILY_COLUMNS = {
    "timelike_axis_xz": (0, 2),  # radius x, height z, plane xz
    "spacelike_axis_xz": (2, 0),  # radius z, axis coordinate x, plane xz
    "spacelike_axis_xy": (1, 0),  # radius y, axis coordinate x, plane xy
}

_FAMILY_PLANE = {
    "timelike_axis_xz": "xz",
    "spacelike_axis_xz": "xz",
    "spacelike_axis_xy": "xy",
}

_FAMILY_AXIS = {
    "timelike_axis_xz": "timelike",
    "spacelike_axis_xz": "spacelike",
    "spacelike_axis_xy": "spacelike",
}


@dataclass(frozen=True)
class SkewSolveRequest:
    """Inputs of one skew reconstruction.

    ``graph_var`` selects which coordinate the underlying graph treats as
    independent: ``"first"`` uses the radial coordinate, ``"second"`` the
    along-axis coordinate (solved through its inverse).  ``sign_a`` and
    ``sign_outer`` are the two independent sign choices of the solution
    formulas; different pairs give mirror solutions.  ``u_range`` must stay
    away from the axis since the integrand S(v)/v is singular at v = 0.
    """

    profile: CurvatureProfile
    family: str
    graph_var: str
    eta: int
    sign_a: int
    sign_outer: int
    a0: float
    offset0: float
    u_range: tuple[float, float]
    n: int = 2001
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in _FAMILY_COLUMNS:
            raise ValueError(f"unknown family {self.family!r}")
        if self.graph_var not in ("first", "second"):
            raise ValueError(f"graph_var must be 'first' or 'second', got {self.graph_var!r}")
        if self.eta not in (-1, 1) or self.sign_a not in (-1, 1) or self.sign_outer not in (-1, 1):
            raise ValueError("eta, sign_a and sign_outer must each be +1 or -1")
        if self.family == "spacelike_axis_xy" and self.eta != 1:
            # Curves in the spacelike plane are always spacelike.
            warnings.warn(
                "spacelike_axis_xy curves are always spacelike; eta=-1 ignored",
                stacklevel=2,
            )
            object.__setattr__(self, "eta", 1)

    def grid(self) -> Grid:
        lo, hi = self.u_range
        if lo < _MIN_RADIUS:
            raise SingularAxis(
                f"u_range must start at >= {_MIN_RADIUS} (S(v)/v is singular at the axis)"
            )
        return Grid.uniform_grid(lo, hi, self.n)

    @property
    def case(self) -> str:
        short = {
            "timelike_axis_xz": "t-xz",
            "spacelike_axis_xz": "s-xz",
            "spacelike_axis_xy": "s-xy",
        }[self.family]
        return f"skew-{short}-{1 if self.graph_var == 'first' else 2}"


def build_A_profile(req: SkewSolveRequest) -> SampledFunction:
    """Auxiliary function A(v) = sign * 2 [eta] int S(v)/v dv + a0.

    The eta factor enters only for the second graph orientation of the two
    timelike-plane families; it is absent for the spacelike plane.
    """
    grid = req.grid()
    s_vals = np.asarray(req.profile.sample_values(grid.points))
    factor = 2.0 * req.sign_a
    if req.graph_var == "second" and req.family != "spacelike_axis_xy":
        factor *= req.eta
    acc = cumulative_integral(SampledFunction(grid, s_vals / grid.points)).values
    return SampledFunction(grid, factor * acc + req.a0)


def _radicand(req: SkewSolveRequest, v: np.ndarray, a: np.ndarray) -> np.ndarray:
    va2 = (v * a) ** 2
    if req.family == "timelike_axis_xz":
        return req.eta + va2
    if req.family == "spacelike_axis_xz":
        return -req.eta + va2
    return 1.0 - va2


def reconstruct_graph(req: SkewSolveRequest, a: SampledFunction) -> PlanarCurve:
    """Integrate the along-axis coordinate and assemble the planar curve.

    The dependent coordinate is sign_outer * int v A / sqrt(radicand) dv
    + offset0, sampled against the radial coordinate v.  For the second
    graph orientation the reduction solves for the inverse of the graph
    function (the along-axis coordinate in terms of the radius), so the
    sample pairs are the same (radius, axis-coordinate) points either way.
    """
    grid = a.grid
    v = grid.points
    avals = np.asarray(a.values, dtype=float)
    radicand = _radicand(req, v, avals)
    scale = np.maximum(1.0, (v * avals) ** 2)
    tiny = np.abs(radicand) <= _RAD_TOL * scale
    if np.any(radicand < -_RAD_TOL * scale):
        node = int(np.argmax(radicand < -_RAD_TOL * scale))
        raise DomainViolation(
            f"radicand {radicand[node]:.3e} negative at node {node} "
            f"(v = {v[node]:.6g})",
            node=node,
        )
    if np.any(tiny):
        node = int(np.argmax(tiny))
        raise SingularRadicand(
            f"radicand vanishes at node {node} (v = {v[node]:.6g})", node=node
        )
    root = np.sqrt(radicand)
    hp = req.sign_outer * v * avals / root
    h = cumulative_integral(SampledFunction(grid, hp)).values + req.offset0

    i_rad, i_axis = _FAMILY_COLUMNS[req.family]
    points = np.zeros((grid.n, 3))
    points[:, i_rad] = v
    points[:, i_axis] = h
    velocity = np.zeros((grid.n, 3))
    velocity[:, i_rad] = 1.0
    velocity[:, i_axis] = hp

    eta_actual = _tangent_sign(req.family, hp)
    if req.family != "spacelike_axis_xy" and np.any(eta_actual != req.eta):
        node = int(np.argmax(eta_actual != req.eta))
        raise MixedCausalCharacter(
            f"requested eta={req.eta} but the reconstructed graph has "
            f"sign {int(eta_actual[node])} at node {node}"
        )
    return PlanarCurve(
        grid=grid,
        points=points,
        plane=_FAMILY_PLANE[req.family],
        eta=req.eta,
        meta={
            "case": req.case,
            "axis": _FAMILY_AXIS[req.family],
            "constants": (req.a0, req.offset0),
            "signs": (req.sign_a, req.sign_outer),
            "profile": req.profile.source,
            "which": "skew",
            **req.meta,
        },
        velocity=velocity,
    )


def _tangent_sign(family: str, hp: np.ndarray) -> np.ndarray:
    # Tangent w.r.t. the radial parameter: (1, h') arranged per family.
    if family == "timelike_axis_xz":
        q = 1.0 - hp * hp  # (1, 0, h')
    elif family == "spacelike_axis_xz":
        q = hp * hp - 1.0  # (h', 0, 1)
    else:
        q = hp * hp + 1.0  # (h', 1, 0), always spacelike
    return np.sign(q).astype(int)


def solve_skew(req: SkewSolveRequest) -> PlanarCurve:
    """Build A and reconstruct the generating graph in one call."""
    return reconstruct_graph(req, build_A_profile(req))


def detect_cylinder(curve_samples: SampledFunction, tol: float = 1e-10) -> bool:
    """True when the dependent coordinate is constant (the degenerate branch
    where the graph reduction divides by its derivative)."""
    d = fd_derivative(curve_samples, order=1).values
    return bool(np.all(np.abs(d) <= tol))

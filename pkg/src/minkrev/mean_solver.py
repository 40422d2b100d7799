"""Closed-form generating curves for a prescribed mean-curvature profile.

Each rotation family reduces the mean-curvature equation to a first-order
linear ODE over a hypercomplex ring, whose integrating-factor solution turns
into nested cumulative integrals of the profile.  The solvers below evaluate
those integrals on a uniform grid and assemble the curve together with its
analytic velocity; everything downstream (unit-speed checks, round-trip
curvature verification) re-derives derivatives independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .curves import PlanarCurve
from .errors import ConstantViolation, DomainViolation, IncompatiblePair
from .minkowski import AxisType
from .numerics import Grid, SampledFunction, cumulative_integral, fd_derivative, sample
from .profile_expr import CurvatureProfile

_RAD_TOL = 1e-12

# Admissible (axis, plane) pairs and the solver case tag for each.
_CASES = {
    (AxisType.TIMELIKE, "timelike_xz"): "thm2.1",
    (AxisType.SPACELIKE, "timelike_xz"): "thm2.2",
    (AxisType.SPACELIKE, "spacelike_xy"): "thm2.3",
    (AxisType.LIGHTLIKE, "timelike_yz"): "lightlike",
}


@dataclass(frozen=True)
class MeanSolveRequest:
    """Inputs of one reconstruction: profile H, rotation family, constants.

    ``constants`` is (a1, a2, a3) / (b1, b2, b3) / (c1, c2, c3) for the
    non-lightlike families and (a0, a1, b0, b1) for the lightlike axis.
    ``eta`` is the causal sign of the generating curve; it is ignored for
    the spacelike plane, where the curve is necessarily spacelike.
    """

    profile: CurvatureProfile
    axis: AxisType
    plane: str
    eta: int
    constants: tuple
    s_range: tuple[float, float]
    n: int = 2001
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if (self.axis, self.plane) not in _CASES:
            raise IncompatiblePair(f"no solver for ({self.axis}, {self.plane!r})")
        if self.eta not in (-1, 1):
            raise ValueError(f"eta must be +1 or -1, got {self.eta}")
        expected = 4 if self.axis is AxisType.LIGHTLIKE else 3
        if len(self.constants) != expected:
            raise ConstantViolation(
                f"{_CASES[self.axis, self.plane]} needs {expected} constants, "
                f"got {len(self.constants)}"
            )

    @property
    def case(self) -> str:
        return _CASES[self.axis, self.plane]

    def grid(self) -> Grid:
        return Grid.uniform_grid(self.s_range[0], self.s_range[1], self.n)


def _check_radicand(radicand: np.ndarray, scale: np.ndarray, what: str) -> None:
    bad = radicand <= _RAD_TOL * np.maximum(scale, 1.0)
    if np.any(bad):
        node = int(np.argmax(bad))
        raise DomainViolation(
            f"{what} radicand {radicand[node]:.3e} not positive at node {node}",
            node=node,
        )


def _hyperbolic_aux(profile, eta, grid):
    """f = int sinh(2 eta int H), g = int cosh(2 eta int H) and their exact
    derivatives (the integrands themselves)."""
    phi = cumulative_integral(sample(profile, grid)).values
    fp = np.sinh(2.0 * eta * phi)
    gp = np.cosh(2.0 * eta * phi)
    f = cumulative_integral(SampledFunction(grid, fp)).values
    g = cumulative_integral(SampledFunction(grid, gp)).values
    return f, g, fp, gp


def _circular_aux(profile, grid):
    """F = int sin(2 int H), G = int cos(2 int H) and exact derivatives."""
    psi = 2.0 * cumulative_integral(sample(profile, grid)).values
    fp = np.sin(psi)
    gp = np.cos(psi)
    f = cumulative_integral(SampledFunction(grid, fp)).values
    g = cumulative_integral(SampledFunction(grid, gp)).values
    return f, g, fp, gp


def solve_mean_timelike_axis(req: MeanSolveRequest) -> PlanarCurve:
    """Curve alpha = (x, 0, z), rotated about the timelike z-axis.

    x = sqrt(eta [(g1 + eta a1)^2 - (f1 + eta a2)^2]) and z integrates
    eta (g1' (f1 + eta a2) - f1' (g1 + eta a1)) / x from z(0) = a3.
    Initial point (sqrt(eta (a1^2 - a2^2)), 0, a3).
    """
    a1, a2, a3 = req.constants
    eta = req.eta
    if eta * (a1 * a1 - a2 * a2) <= 0:
        raise ConstantViolation(
            f"eta (a1^2 - a2^2) = {eta * (a1 * a1 - a2 * a2)} must be positive"
        )
    grid = req.grid()
    f1, g1, f1p, g1p = _hyperbolic_aux(req.profile, eta, grid)
    p = g1 + eta * a1
    q = f1 + eta * a2
    radicand = eta * (p * p - q * q)
    _check_radicand(radicand, p * p + q * q, "x^2")
    x = np.sqrt(radicand)
    zp = eta * (g1p * q - f1p * p) / x
    xp = eta * (p * g1p - q * f1p) / x
    z = cumulative_integral(SampledFunction(grid, zp)).values + a3
    zeros = np.zeros_like(x)
    return PlanarCurve(
        grid=grid,
        points=np.column_stack([x, zeros, z]),
        plane="xz",
        eta=eta,
        meta=_meta(req),
        velocity=np.column_stack([xp, zeros, zp]),
    )


def solve_mean_spacelike_axis_tl_plane(req: MeanSolveRequest) -> PlanarCurve:
    """Curve beta = (x, 0, z), rotated about the spacelike x-axis.

    z = sqrt(eta [(f2 - eta b1)^2 - (g2 - eta b2)^2]) and x integrates
    -eta (g2' (f2 - eta b1) - f2' (g2 - eta b2)) / z from x(0) = b3.
    """
    b1, b2, b3 = req.constants
    eta = req.eta
    if eta * (b1 * b1 - b2 * b2) <= 0:
        raise ConstantViolation(
            f"eta (b1^2 - b2^2) = {eta * (b1 * b1 - b2 * b2)} must be positive"
        )
    grid = req.grid()
    f2, g2, f2p, g2p = _hyperbolic_aux(req.profile, eta, grid)
    p = f2 - eta * b1
    q = g2 - eta * b2
    radicand = eta * (p * p - q * q)
    _check_radicand(radicand, p * p + q * q, "z^2")
    z = np.sqrt(radicand)
    xp = -eta * (g2p * p - f2p * q) / z
    zp = eta * (p * f2p - q * g2p) / z
    x = cumulative_integral(SampledFunction(grid, xp)).values + b3
    zeros = np.zeros_like(z)
    return PlanarCurve(
        grid=grid,
        points=np.column_stack([x, zeros, z]),
        plane="xz",
        eta=eta,
        meta=_meta(req),
        velocity=np.column_stack([xp, zeros, zp]),
    )


def solve_mean_spacelike_axis_sp_plane(req: MeanSolveRequest) -> PlanarCurve:
    """Curve gamma = (x, y, 0), rotated about the spacelike x-axis.

    y = sqrt((F - c1)^2 + (G + c2)^2) and x integrates
    (F' (G + c2) - G' (F - c1)) / y from x(0) = c3.  The curve is always
    spacelike, so the request's eta is ignored.
    """
    c1, c2, c3 = req.constants
    grid = req.grid()
    f, g, fp, gp = _circular_aux(req.profile, grid)
    p = f - c1
    q = g + c2
    radicand = p * p + q * q
    _check_radicand(radicand, np.ones_like(radicand), "y^2")
    y = np.sqrt(radicand)
    xp = (fp * q - gp * p) / y
    yp = (p * fp + q * gp) / y
    x = cumulative_integral(SampledFunction(grid, xp)).values + c3
    zeros = np.zeros_like(y)
    return PlanarCurve(
        grid=grid,
        points=np.column_stack([x, y, zeros]),
        plane="xy",
        eta=1,
        meta=_meta(req),
        velocity=np.column_stack([xp, yp, zeros]),
    )


def solve_mean_lightlike_axis(req: MeanSolveRequest) -> PlanarCurve:
    """Curve lambda = (0, y, z) with y > z, rotated about (0, 1, 1).

    The difference obeys (y - z)(y' - z') = (a0/2) e^{-2 eta int H}, so
    (y - z)^2 = a1 + a0 int e^{-2 eta int H}; the sum then integrates
    y' + z' = (y - z) b0 e^{2 eta int H} from y(0) + z(0) = b1.  Unit speed
    forces a0 b0 = 2 eta, which is validated up front.
    """
    a0, a1c, b0, b1 = req.constants
    eta = req.eta
    if abs(a0 * b0 - 2.0 * eta) > 1e-9:
        raise ConstantViolation(
            f"a0 b0 = {a0 * b0} must equal 2 eta = {2 * eta} for unit speed"
        )
    grid = req.grid()
    phi = cumulative_integral(sample(req.profile, grid)).values
    e_minus = np.exp(-2.0 * eta * phi)
    acc = cumulative_integral(SampledFunction(grid, e_minus)).values
    radicand = a1c + a0 * acc
    _check_radicand(radicand, np.abs(a1c) + np.abs(a0 * acc), "(y - z)^2")
    w = np.sqrt(radicand)

    e_plus = np.exp(2.0 * eta * phi)
    ypz = b1 + b0 * cumulative_integral(SampledFunction(grid, w * e_plus)).values
    y = 0.5 * (ypz + w)
    z = 0.5 * (ypz - w)

    wp = 0.5 * a0 * e_minus / w
    ypzp = b0 * w * e_plus
    zeros = np.zeros_like(w)
    return PlanarCurve(
        grid=grid,
        points=np.column_stack([zeros, y, z]),
        plane="yz",
        eta=eta,
        meta=_meta(req),
        velocity=np.column_stack(
            [zeros, 0.5 * (ypzp + wp), 0.5 * (ypzp - wp)]
        ),
    )


_SOLVERS = {
    "thm2.1": solve_mean_timelike_axis,
    "thm2.2": solve_mean_spacelike_axis_tl_plane,
    "thm2.3": solve_mean_spacelike_axis_sp_plane,
    "lightlike": solve_mean_lightlike_axis,
}


def solve_mean(req: MeanSolveRequest) -> PlanarCurve:
    """Dispatch to the solver for the request's rotation family."""
    return _SOLVERS[req.case](req)


def _meta(req: MeanSolveRequest) -> dict:
    return {
        "case": req.case,
        "axis": req.axis.value,
        "constants": tuple(req.constants),
        "profile": req.profile.source,
        "which": "mean",
        **req.meta,
    }


def aux_fg_curvature_check(
    profile: CurvatureProfile,
    eta: int,
    kind: str,
    grid: Grid,
) -> float:
    """Max deviation of the auxiliary plane curve's curvature from 2H.

    The hyperbolic pair (f, g) lives in a Lorentzian (+,-) plane where the
    curvature of a unit-speed curve is -<c', c'> ||c''||; the circular pair
    (F, G) lives in a Euclidean plane with curvature ||c''||.  Both should
    reproduce kappa = 2H; derivatives here are finite differences, which is
    what makes this an independent check.
    """
    if kind == "hyperbolic":
        f, g, _, _ = _hyperbolic_aux(profile, eta, grid)
    elif kind == "circular":
        f, g, _, _ = _circular_aux(profile, grid)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    def fd(values, order):
        return fd_derivative(SampledFunction(grid, values), order=order).values

    fpp, gpp = fd(f, 2), fd(g, 2)
    if kind == "hyperbolic":
        eta_c = np.sign(fd(f, 1) ** 2 - fd(g, 1) ** 2)
        kappa = -eta_c * np.sqrt(np.abs(fpp * fpp - gpp * gpp))
    else:
        kappa = np.sqrt(fpp * fpp + gpp * gpp)
    h_vals = 2.0 * np.asarray(profile.sample_values(grid.points))
    interior = slice(2, -2)
    return float(np.max(np.abs(kappa[interior] - h_vals[interior])))

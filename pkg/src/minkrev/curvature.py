"""Fundamental forms and curvatures of sampled surfaces.

All derivatives here come from central finite differences on a parametric
evaluator, never from the closed-form reconstruction, so this module is the
independent side of every round-trip check.  Curvatures follow the standard
index-one conventions: eps = <N, N> is -1 on spacelike and +1 on timelike
surfaces, K and H carry the eps factors, and the skew curvature is
S = sqrt(H^2 - eps*K), the half-discriminant of the shape operator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import minkowski
from .errors import (
    DegenerateMetric,
    InvalidParameter,
    LightlikeTangentPlane,
    NonDiagonalizable,
)
from .numerics import Grid, SampledFunction, integrate

_TOL = 1e-12


@dataclass(frozen=True)
class FundamentalForms:
    """First and second fundamental form coefficients at one point."""

    g11: float
    g12: float
    g22: float
    h11: float
    h12: float
    h22: float
    epsilon: int

    def __post_init__(self):
        if self.epsilon not in (-1, 1):
            raise InvalidParameter(f"epsilon must be +-1, got {self.epsilon}")
        det = self.g11 * self.g22 - self.g12 * self.g12
        scale = max(abs(self.g11 * self.g22), self.g12 * self.g12, 1.0)
        if abs(det) <= _TOL * scale:
            raise DegenerateMetric("first fundamental form is degenerate")
        # sgn(det g) = -eps: positive-definite metric <=> spacelike surface.
        if (det > 0) != (self.epsilon == -1):
            raise InvalidParameter(
                f"epsilon={self.epsilon} inconsistent with det g = {det}"
            )

    @property
    def det_g(self) -> float:
        return self.g11 * self.g22 - self.g12 * self.g12


@dataclass(frozen=True)
class CurvatureTriple:
    """Mean, Gaussian and skew curvature plus the shape-operator
    half-discriminant H^2 - eps*K."""

    H: float
    K: float
    S: float
    discriminant: float
    s_imaginary: bool = False


class PrincipalData(NamedTuple):
    kappa1: float
    kappa2: float
    spacelike_eigendirection_first: bool


def forms_at(
    surface: Callable[[float, float], object],
    u: float,
    theta: float,
    h: float = 1e-4,
) -> FundamentalForms:
    """Fundamental forms of ``surface`` at (u, theta) by central differences.

    ``surface`` maps two floats to a 3-point (MinkVec3, tuple, or array).
    Raises LightlikeTangentPlane when the normal direction is null.
    """

    def ev(a: float, b: float) -> np.ndarray:
        p = surface(a, b)
        if isinstance(p, minkowski.MinkVec3):
            return p.as_array()
        return np.asarray(p, dtype=float)

    x0 = ev(u, theta)
    xu = (ev(u + h, theta) - ev(u - h, theta)) / (2 * h)
    xt = (ev(u, theta + h) - ev(u, theta - h)) / (2 * h)
    xuu = (ev(u + h, theta) - 2 * x0 + ev(u - h, theta)) / (h * h)
    xtt = (ev(u, theta + h) - 2 * x0 + ev(u, theta - h)) / (h * h)
    xut = (
        ev(u + h, theta + h)
        - ev(u + h, theta - h)
        - ev(u - h, theta + h)
        + ev(u - h, theta - h)
    ) / (4 * h * h)

    w = minkowski.cross(xu, xt)
    ww = float(minkowski.inner(w, w))
    scale = float(np.dot(xu, xu) * np.dot(xt, xt))
    if abs(ww) < _TOL * max(scale, 1e-300):
        raise LightlikeTangentPlane(f"null normal direction at ({u}, {theta})")
    n = w / math.sqrt(abs(ww))
    eps = 1 if ww > 0 else -1
    return FundamentalForms(
        g11=float(minkowski.inner(xu, xu)),
        g12=float(minkowski.inner(xu, xt)),
        g22=float(minkowski.inner(xt, xt)),
        h11=float(minkowski.inner(xuu, n)),
        h12=float(minkowski.inner(xut, n)),
        h22=float(minkowski.inner(xtt, n)),
        epsilon=eps,
    )


def curvatures_from_forms(f: FundamentalForms) -> CurvatureTriple:
    """Gaussian, mean and skew curvature from form coefficients.

    K = eps (h11 h22 - h12^2) / det g,
    H = (eps/2)(g11 h22 - 2 g12 h12 + g22 h11) / det g,
    S = sqrt(H^2 - eps K) when the discriminant is nonnegative.
    """
    det = f.det_g
    eps = f.epsilon
    K = eps * (f.h11 * f.h22 - f.h12 * f.h12) / det
    H = 0.5 * eps * (f.g11 * f.h22 - 2.0 * f.g12 * f.h12 + f.g22 * f.h11) / det
    disc = H * H - eps * K
    scale = max(H * H, abs(K), 1.0)
    if disc >= 0.0:
        return CurvatureTriple(H, K, math.sqrt(disc), disc)
    if disc >= -_TOL * scale:
        # Roundoff-level negative: umbilic point.
        return CurvatureTriple(H, K, 0.0, disc)
    return CurvatureTriple(H, K, math.nan, disc, s_imaginary=True)


def principal_curvatures(f: FundamentalForms, tol: float = 1e-9) -> PrincipalData:
    """Eigenvalues of the shape operator I^-1 II.

    For diagonal forms these are h11/g11 and h22/g22 in that order; the flag
    records whether the first eigendirection is spacelike under I.
    """
    if f.g12 == 0.0 and f.h12 == 0.0:
        return PrincipalData(f.h11 / f.g11, f.h22 / f.g22, f.g11 > 0)
    det = f.det_g
    g_inv = np.array([[f.g22, -f.g12], [-f.g12, f.g11]]) / det
    shape_op = g_inv @ np.array([[f.h11, f.h12], [f.h12, f.h22]])
    tr = shape_op[0, 0] + shape_op[1, 1]
    dt = shape_op[0, 0] * shape_op[1, 1] - shape_op[0, 1] * shape_op[1, 0]
    disc = tr * tr - 4.0 * dt
    if disc < -tol * max(tr * tr, abs(dt), 1.0):
        raise NonDiagonalizable(f"negative discriminant {disc}")
    root = math.sqrt(max(disc, 0.0))
    k1, k2 = (tr + root) / 2.0, (tr - root) / 2.0
    # Causal character of the k1 eigendirection under the induced metric;
    # order so that the spacelike one (if any) comes first.
    v = _eigvec(shape_op, k1)
    q1 = f.g11 * v[0] ** 2 + 2 * f.g12 * v[0] * v[1] + f.g22 * v[1] ** 2
    if q1 < 0:
        k1, k2 = k2, k1
    return PrincipalData(k1, k2, True)


def _eigvec(m: np.ndarray, lam: float) -> np.ndarray:
    a = m - lam * np.eye(2)
    # Null vector of a rank-deficient 2x2: pick the larger row.
    r = a[0] if np.dot(a[0], a[0]) >= np.dot(a[1], a[1]) else a[1]
    if np.dot(r, r) == 0.0:
        return np.array([1.0, 0.0])
    v = np.array([-r[1], r[0]])
    return v / np.linalg.norm(v)


def euler_normal_curvature(
    pd: PrincipalData,
    surface_class: str,
    phi: float,
    branch: str = "unit_spacelike",
) -> float:
    """Normal curvature in the unit tangent direction at angle phi.

    Spacelike surfaces: cos^2(phi) k1 + sin^2(phi) k2 (branch ignored).
    Timelike surfaces: the hyperbolic-angle analogues, with k1 taken along
    the spacelike eigendirection.
    """
    k_sp, k_tl = pd.kappa1, pd.kappa2
    if not pd.spacelike_eigendirection_first:
        k_sp, k_tl = k_tl, k_sp
    if surface_class == "spacelike":
        return math.cos(phi) ** 2 * pd.kappa1 + math.sin(phi) ** 2 * pd.kappa2
    if surface_class == "timelike":
        if branch == "unit_spacelike":
            return math.cosh(phi) ** 2 * k_sp - math.sinh(phi) ** 2 * k_tl
        if branch == "unit_timelike":
            return math.sinh(phi) ** 2 * k_sp - math.cosh(phi) ** 2 * k_tl
        raise InvalidParameter(f"unknown branch {branch!r}")
    raise InvalidParameter(f"unknown surface class {surface_class!r}")


def spacelike_moments(pd: PrincipalData, n: int = 1024) -> tuple[float, float]:
    """Mean and standard deviation of the normal curvature over the unit
    circle of tangent directions, uniform density dphi / 2pi.

    Periodic trapezoid quadrature, which is exact for the trigonometric
    polynomials that occur here.  Closed forms: mu = (k1 + k2)/2 and
    sigma = |k1 - k2| / (2 sqrt 2).
    """
    phi = np.arange(n) * (2.0 * np.pi / n)
    kn = np.cos(phi) ** 2 * pd.kappa1 + np.sin(phi) ** 2 * pd.kappa2
    mu = float(kn.mean())
    sigma = float(np.sqrt(((kn - mu) ** 2).mean()))
    return mu, sigma


class GaussianMoments(NamedTuple):
    mean_a: float
    var_a: float
    mean_closed: float


def timelike_gaussian_moments(
    pd: PrincipalData, a: float, n: int = 4001
) -> GaussianMoments:
    """Gaussian-weighted moments of the normal curvature on a timelike
    surface, along the unit-spacelike branch cosh/sinh parameterization.

    The plain hyperbolic-angle integrals diverge, so the density is the
    Gaussian exp(-phi^2 / 2a^2) dphi / sqrt(2 pi a^2), truncated at +-8a
    (neglected tail below 1e-14 of the mass).  The closed form of the mean
    is k1 (e^{2a^2} + 1)/2 - k2 (e^{2a^2} - 1)/2.
    """
    if a <= 0:
        raise InvalidParameter(f"Gaussian width must be positive, got {a}")
    k_sp, k_tl = pd.kappa1, pd.kappa2
    if not pd.spacelike_eigendirection_first:
        k_sp, k_tl = k_tl, k_sp
    grid = Grid.uniform_grid(-8.0 * a, 8.0 * a, n)
    phi = grid.points
    weight = np.exp(-(phi**2) / (2.0 * a * a)) / math.sqrt(2.0 * math.pi * a * a)
    kn = np.cosh(phi) ** 2 * k_sp - np.sinh(phi) ** 2 * k_tl
    mean_a = float(integrate(SampledFunction(grid, kn * weight)))
    var_a = float(integrate(SampledFunction(grid, (kn - mean_a) ** 2 * weight)))
    e2 = math.exp(2.0 * a * a)
    mean_closed = k_sp * (e2 + 1.0) / 2.0 - k_tl * (e2 - 1.0) / 2.0
    return GaussianMoments(mean_a, var_a, mean_closed)


def curvature_grid(
    evaluator: Callable[[np.ndarray, np.ndarray], np.ndarray],
    u: np.ndarray,
    theta: np.ndarray,
    h: float = 1e-4,
) -> dict[str, np.ndarray]:
    """Vectorized curvature evaluation over a (u, theta) grid.

    ``evaluator`` must accept broadcastable arrays and return (..., 3)
    points.  Returns H, K, S, eps, discriminant and the squared normal
    <Xu x Xt, Xu x Xt> as arrays shaped like the broadcast grid, plus the
    two principal curvatures from the same form coefficients.
    """
    uu = np.asarray(u, dtype=float)[:, None]
    tt = np.asarray(theta, dtype=float)[None, :]

    x0 = evaluator(uu, tt)
    xu = (evaluator(uu + h, tt) - evaluator(uu - h, tt)) / (2 * h)
    xt = (evaluator(uu, tt + h) - evaluator(uu, tt - h)) / (2 * h)
    xuu = (evaluator(uu + h, tt) - 2 * x0 + evaluator(uu - h, tt)) / (h * h)
    xtt = (evaluator(uu, tt + h) - 2 * x0 + evaluator(uu, tt - h)) / (h * h)
    xut = (
        evaluator(uu + h, tt + h)
        - evaluator(uu + h, tt - h)
        - evaluator(uu - h, tt + h)
        + evaluator(uu - h, tt - h)
    ) / (4 * h * h)

    w = minkowski.cross(xu, xt)
    ww = minkowski.inner(w, w)
    n = w / np.sqrt(np.abs(ww))[..., None]
    eps = np.where(ww > 0, 1.0, -1.0)

    g11 = minkowski.inner(xu, xu)
    g12 = minkowski.inner(xu, xt)
    g22 = minkowski.inner(xt, xt)
    h11 = minkowski.inner(xuu, n)
    h12 = minkowski.inner(xut, n)
    h22 = minkowski.inner(xtt, n)

    det = g11 * g22 - g12 * g12
    K = eps * (h11 * h22 - h12 * h12) / det
    H = 0.5 * eps * (g11 * h22 - 2.0 * g12 * h12 + g22 * h11) / det
    disc = H * H - eps * K
    S = np.sqrt(np.clip(disc, 0.0, None))
    # Shape-operator eigenvalues from trace/determinant of I^-1 II.
    tr = 2.0 * eps * H
    root = np.sqrt(np.clip(tr * tr - 4.0 * eps * K, 0.0, None))
    return {
        "H": H,
        "K": K,
        "S": S,
        "eps": eps,
        "disc": disc,
        "normal_sq": ww,
        "kappa1": (tr + root) / 2.0,
        "kappa2": (tr - root) / 2.0,
    }

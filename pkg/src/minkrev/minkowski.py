"""Index-one metric, causal characters, Lorentzian cross product, rotations.

The ambient space is R^3 with inner product u1*v1 + u2*v2 - u3*v3 (the third
coordinate carries the negative signature).  Rotations split into three
one-parameter families according to the causal character of the fixed axis:
circular about (0,0,1), hyperbolic about (1,0,0), parabolic about (0,1,1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import MixedCausalCharacter
from .lorentz import CausalClass

_LIGHT_TOL = 1e-12


class AxisType(enum.Enum):
    """Causal character of a rotation axis, with its fixed direction."""

    TIMELIKE = "timelike"
    SPACELIKE = "spacelike"
    LIGHTLIKE = "lightlike"

    @property
    def direction(self) -> np.ndarray:
        return {
            AxisType.TIMELIKE: np.array([0.0, 0.0, 1.0]),
            AxisType.SPACELIKE: np.array([1.0, 0.0, 0.0]),
            AxisType.LIGHTLIKE: np.array([0.0, 1.0, 1.0]),
        }[self]


def inner(u, v) -> np.ndarray | float:
    """Index-one inner product; broadcasts over leading axes."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return u[..., 0] * v[..., 0] + u[..., 1] * v[..., 1] - u[..., 2] * v[..., 2]


def cross(u, v) -> np.ndarray:
    """Lorentzian cross product, orthogonal to both arguments under the
    index-one metric.  Components fixed by e1 x e2 = (0, 0, -1)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return np.stack(
        [
            u[..., 1] * v[..., 2] - u[..., 2] * v[..., 1],
            -(u[..., 0] * v[..., 2] - u[..., 2] * v[..., 0]),
            -(u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]),
        ],
        axis=-1,
    )


def classify(v) -> CausalClass:
    """Causal character of a single vector (zero counts as spacelike)."""
    v = np.asarray(v, dtype=float)
    q = float(inner(v, v))
    scale = float(np.dot(v, v))
    if abs(q) <= _LIGHT_TOL * max(1.0, scale):
        return CausalClass.SPACELIKE if scale == 0.0 else CausalClass.LIGHTLIKE
    return CausalClass.SPACELIKE if q > 0 else CausalClass.TIMELIKE


@dataclass(frozen=True)
class MinkVec3:
    """A point or vector of the ambient space; z carries the minus sign."""

    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def inner(self, other: "MinkVec3") -> float:
        return self.x * other.x + self.y * other.y - self.z * other.z

    def cross(self, other: "MinkVec3") -> "MinkVec3":
        return MinkVec3(*cross(self.as_array(), other.as_array()))

    def classify(self) -> CausalClass:
        return classify(self.as_array())


def rotation(axis: AxisType, theta: float) -> np.ndarray:
    """Rotation matrix of the one-parameter family fixing the given axis."""
    if axis is AxisType.TIMELIKE:
        c, s = np.cos(theta), np.sin(theta)
        return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
    if axis is AxisType.SPACELIKE:
        ch, sh = np.cosh(theta), np.sinh(theta)
        return np.array([[1.0, 0.0, 0.0], [0.0, ch, sh], [0.0, sh, ch]])
    t = float(theta)
    half = t * t / 2.0
    return np.array(
        [
            [1.0, t, -t],
            [-t, 1.0 - half, half],
            [-t, -half, 1.0 + half],
        ]
    )


def tangent_character(points: np.ndarray, spacing: float, tol: float = 1e-9) -> int:
    """Constant sign of <alpha', alpha'> along a sampled curve.

    Tangents come from central differences (one-sided at the ends).  A sign
    change or a near-zero value anywhere raises MixedCausalCharacter: the
    reconstruction formulas all assume a fixed causal character.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3 or pts.shape[0] < 3:
        raise ValueError("expected an (n, 3) array with n >= 3")
    d = np.empty_like(pts)
    d[1:-1] = (pts[2:] - pts[:-2]) / (2.0 * spacing)
    d[0] = (-3.0 * pts[0] + 4.0 * pts[1] - pts[2]) / (2.0 * spacing)
    d[-1] = (3.0 * pts[-1] - 4.0 * pts[-2] + pts[-3]) / (2.0 * spacing)
    q = inner(d, d)
    scale = np.maximum(1.0, np.einsum("ij,ij->i", d, d))
    if np.any(np.abs(q) <= tol * scale):
        raise MixedCausalCharacter("tangent is lightlike (or nearly so) at some node")
    signs = np.sign(q)
    if signs.min() != signs.max():
        raise MixedCausalCharacter("tangent causal character changes along the curve")
    return int(signs[0])

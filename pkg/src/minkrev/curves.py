"""Sampled planar generating curves."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import minkowski
from .numerics import Grid, SampledFunction, fd_derivative

# Which point component is identically zero for each coordinate plane.
PLANE_ZERO_COMPONENT = {"xz": 1, "xy": 2, "yz": 0}


@dataclass(frozen=True)
class PlanarCurve:
    """Generating curve samples in a coordinate plane.

    ``grid`` is the curve parameter (arc length for the mean-curvature
    solvers, the radial graph variable for the skew solvers).  ``velocity``
    holds the solver's analytic first derivative when available; the
    verification paths never use it and differentiate the points instead.
    """

    grid: Grid
    points: np.ndarray
    plane: str
    eta: int
    meta: dict = field(default_factory=dict)
    velocity: np.ndarray | None = None

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.shape != (self.grid.n, 3):
            raise ValueError(f"points shape {pts.shape} does not match grid")
        if self.plane not in PLANE_ZERO_COMPONENT:
            raise ValueError(f"unknown plane {self.plane!r}")
        dead = PLANE_ZERO_COMPONENT[self.plane]
        if np.any(pts[:, dead] != 0.0):
            raise ValueError(f"points leave the {self.plane}-plane (component {dead})")
        object.__setattr__(self, "points", pts)

    def coordinate(self, index: int) -> SampledFunction:
        return SampledFunction(self.grid, self.points[:, index])

    def tangent_character(self) -> int:
        """Constant sign of <alpha', alpha'> from finite differences."""
        return minkowski.tangent_character(self.points, self.grid.spacing)

    def unit_speed_deviation(self) -> float:
        """max | |<alpha', alpha'>| - 1 | with finite-difference tangents."""
        d = np.column_stack(
            [fd_derivative(self.coordinate(i)).values for i in range(3)]
        )
        q = minkowski.inner(d, d)
        return float(np.max(np.abs(np.abs(q) - 1.0)))

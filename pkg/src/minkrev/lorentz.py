"""Arithmetic and analysis in the commutative ring of Lorentz numbers.

Lorentz numbers (also called double or hyperbolic numbers) are a + b*l with
l*l = +1.  They are not a field: a +- a*l are zero divisors.  The module
provides the ring operations, causal classification, polar form, the
exponential, the 2x2 matrix representation, and a closed-form solver for
first-order linear ODEs with a purely hyperbolic coefficient, which is the
workhorse behind the prescribed-mean-curvature reconstruction.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .errors import InvalidGrid, NoPolarForm, NotInvertible
from .numerics import Grid, SampledFunction, cumulative_integral

# Relative tolerance for deciding that a squared modulus vanishes.
_LIGHT_TOL = 1e-12


class CausalClass(enum.Enum):
    """Causal character of a vector or Lorentz number."""

    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


@dataclass(frozen=True)
class LorentzNumber:
    """Element a + b*l of the Lorentz-number ring."""

    re: float
    hyp: float

    def __add__(self, other: "LorentzNumber") -> "LorentzNumber":
        return LorentzNumber(self.re + other.re, self.hyp + other.hyp)

    def __sub__(self, other: "LorentzNumber") -> "LorentzNumber":
        return LorentzNumber(self.re - other.re, self.hyp - other.hyp)

    def __mul__(self, other: "LorentzNumber") -> "LorentzNumber":
        # (a + b*l)(c + d*l) = (ac + bd) + (ad + bc)*l
        a, b = self.re, self.hyp
        c, d = other.re, other.hyp
        return LorentzNumber(a * c + b * d, a * d + b * c)

    def __neg__(self) -> "LorentzNumber":
        return LorentzNumber(-self.re, -self.hyp)

    def conj(self) -> "LorentzNumber":
        return LorentzNumber(self.re, -self.hyp)

    def modulus_sq(self) -> float:
        """Signed squared modulus w * conj(w) = a^2 - b^2."""
        return self.re * self.re - self.hyp * self.hyp

    def inverse(self) -> "LorentzNumber":
        m = self.modulus_sq()
        scale = self.re * self.re + self.hyp * self.hyp
        if abs(m) <= _LIGHT_TOL * max(1.0, scale):
            raise NotInvertible(f"{self} is lightlike (zero divisor)")
        return LorentzNumber(self.re / m, -self.hyp / m)

    def classify(self) -> CausalClass:
        m = self.modulus_sq()
        scale = self.re * self.re + self.hyp * self.hyp
        if abs(m) <= _LIGHT_TOL * max(1.0, scale):
            # Zero counts as spacelike; nonzero null numbers are lightlike.
            return CausalClass.SPACELIKE if scale == 0.0 else CausalClass.LIGHTLIKE
        return CausalClass.SPACELIKE if m > 0 else CausalClass.TIMELIKE

    def exp(self) -> "LorentzNumber":
        """exp(a + b*l) = e^a (cosh b + l sinh b)."""
        ea = math.exp(self.re)
        re = ea * math.cosh(self.hyp)
        hyp = ea * math.sinh(self.hyp)
        if not (math.isfinite(re) and math.isfinite(hyp)):
            raise OverflowError(f"exp({self}) exceeds the floating range")
        return LorentzNumber(re, hyp)

    def matrix(self) -> np.ndarray:
        """2x2 linear representation [[a, b], [b, a]]; det = modulus_sq."""
        return np.array([[self.re, self.hyp], [self.hyp, self.re]])

    def polar(self) -> "PolarForm":
        """Polar decomposition sign * r * (cosh t + l sinh t) for spacelike
        numbers, sign * r * (sinh t + l cosh t) for timelike ones."""
        cls = self.classify()
        a, b = self.re, self.hyp
        r = math.sqrt(abs(self.modulus_sq()))
        if cls is CausalClass.SPACELIKE and r > 0:
            sign = 1 if a > 0 else -1
            return PolarForm(r, math.atanh(b / a), False, sign)
        if cls is CausalClass.TIMELIKE:
            sign = 1 if b > 0 else -1
            return PolarForm(r, math.atanh(a / b), True, sign)
        raise NoPolarForm(f"{self} is lightlike or zero")

    def __repr__(self) -> str:
        op = "+" if self.hyp >= 0 else "-"
        return f"{self.re:g} {op} {abs(self.hyp):g}l"


class PolarForm(NamedTuple):
    r: float
    theta: float
    timelike: bool
    sign: int

    def reconstruct(self) -> LorentzNumber:
        c, s = math.cosh(self.theta), math.sinh(self.theta)
        if self.timelike:
            return LorentzNumber(self.sign * self.r * s, self.sign * self.r * c)
        return LorentzNumber(self.sign * self.r * c, self.sign * self.r * s)


ZERO = LorentzNumber(0.0, 0.0)
ONE = LorentzNumber(1.0, 0.0)
ELL = LorentzNumber(0.0, 1.0)


def _as_components(value) -> tuple[float, float]:
    if isinstance(value, LorentzNumber):
        return value.re, value.hyp
    return float(value), 0.0


def lorentz_linear_ode(
    p: Callable[[float], float],
    q: Callable[[float], "LorentzNumber | float"],
    w0: LorentzNumber,
    grid: Grid | np.ndarray,
) -> np.ndarray:
    """Solve w' + p(s)*l*w = q(s), w(s0) = w0, on a uniform grid.

    The solution is built in closed form with the integrating factor
    exp(l * int p): w = exp(-l*P) * (w0 + int exp(l*P) q), where P is the
    cumulative integral of p.  No time stepping is involved; accuracy is
    set purely by the quadrature.

    Returns an (n, 2) array of (re, hyp) component pairs.
    """
    if not isinstance(grid, Grid):
        grid = Grid(np.asarray(grid, dtype=float))
    if not grid.uniform:
        raise InvalidGrid("lorentz_linear_ode requires a uniform grid")
    s = grid.points
    p_vals = np.array([p(t) for t in s], dtype=float)
    big_p = cumulative_integral(SampledFunction(grid, p_vals)).values
    ch, sh = np.cosh(big_p), np.sinh(big_p)

    q_pairs = np.array([_as_components(q(t)) for t in s])
    # exp(l*P) * q, componentwise: (ch*qr + sh*qh, ch*qh + sh*qr)
    rhs = np.column_stack(
        [ch * q_pairs[:, 0] + sh * q_pairs[:, 1], ch * q_pairs[:, 1] + sh * q_pairs[:, 0]]
    )
    acc = cumulative_integral(SampledFunction(grid, rhs)).values
    ur = w0.re + acc[:, 0]
    uh = w0.hyp + acc[:, 1]
    # Multiply by exp(-l*P) = cosh P - l sinh P.
    return np.column_stack([ch * ur - sh * uh, ch * uh - sh * ur])

"""Lorentz algebra on the upper hyperboloid sheet.

Points live on the sheet {<X,X>_L = -1, X_0 > 0} of the Minkowski form
<U,V>_L = -U_0 V_0 + sum_{i>=1} U_i V_i.  The Riemannian metric of the
hyperbolic space of curvature -kappa^2 is the scaled form
<U,V>_X = kappa^-2 <U,V>_L on tangent spaces T_X = {U : <U,X>_L = 0}.

All values are immutable after construction and every operation is a pure
function, so everything here is safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    InvalidPointError,
    NumericValidityError,
    TangencyError,
)

# |<X,X>_L + 1| tolerance for accepting a point on the sheet, scaled by
# the squared sup-norm of the coordinates: a single rounding of the form
# already costs eps * |X|^2, so far-from-origin points need the headroom.
SHEET_TOL = 1e-9
# Relative tangency tolerance; calibrated to double-precision accumulation
# over dimensions up to ~64, scaled by both the vector and the base point.
TANGENCY_TOL = 1e-9


def _mink(u: np.ndarray, v: np.ndarray) -> float:
    # Unchecked Minkowski form for internal hot paths.
    return float(np.dot(u[1:], v[1:]) - u[0] * v[0])


def minkowski_inner(u, v) -> float:
    """Minkowski form -u0*v0 + sum_{i>=1} ui*vi."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.ndim != 1 or u.shape != v.shape:
        raise DimensionMismatchError(
            f"expected equal-length 1-d vectors, got shapes {u.shape} and {v.shape}"
        )
    return _mink(u, v)


def _stable_arcosh(c: float) -> float:
    """arcosh(c) for c >= 1, accurate near 1.

    Evaluates arcosh(1+delta) = log1p(delta + sqrt(delta*(delta+2))) to
    avoid the catastrophic cancellation of the naive log(c + sqrt(c^2-1))
    when delta is tiny.
    """
    delta = c - 1.0
    if delta < 0.0:
        delta = 0.0
    return math.log1p(delta + math.sqrt(delta * (delta + 2.0)))


def _theta_over_sinh(theta: float) -> float:
    # Removes the 0/0 at theta = 0; series error is O(theta^6).
    if theta < 1e-4:
        t2 = theta * theta
        return 1.0 - t2 / 6.0 + 7.0 * t2 * t2 / 360.0
    return theta / math.sinh(theta)


@dataclass(frozen=True)
class HyperboloidPoint:
    """A point of the curvature -kappa^2 hyperbolic space, as a (d+1)-vector
    on the unit hyperboloid sheet."""

    coords: np.ndarray
    kappa: float = 1.0

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=float)
        object.__setattr__(self, "coords", c)
        if c.ndim != 1 or c.size < 2:
            raise InvalidPointError(f"need a (d+1)-vector with d >= 1, got shape {c.shape}")
        if not np.all(np.isfinite(c)):
            raise InvalidPointError("point has non-finite coordinates")
        if not self.kappa > 0:
            raise InvalidPointError(f"curvature parameter must be positive, got {self.kappa}")
        if c[0] <= 0:
            raise InvalidPointError("point is not on the upper sheet (X0 <= 0)")
        q = _mink(c, c)
        sup = float(np.max(np.abs(c)))
        if abs(q + 1.0) > SHEET_TOL * (1.0 + sup * sup):
            raise InvalidPointError(f"<X,X>_L = {q!r} is off the sheet beyond tolerance")

    @property
    def d(self) -> int:
        return self.coords.size - 1


def origin(d: int, kappa: float = 1.0) -> HyperboloidPoint:
    """The canonical base point o = (1, 0, ..., 0)."""
    c = np.zeros(d + 1)
    c[0] = 1.0
    return HyperboloidPoint(c, kappa)


@dataclass(frozen=True)
class TangentVector:
    """A (d+1)-vector Lorentz-orthogonal to its base point."""

    base: HyperboloidPoint
    coords: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=float)
        object.__setattr__(self, "coords", c)
        if c.shape != self.base.coords.shape:
            raise DimensionMismatchError(
                f"tangent shape {c.shape} does not match base shape {self.base.coords.shape}"
            )
        if not np.all(np.isfinite(c)):
            raise TangencyError("tangent vector has non-finite coordinates")
        sup = float(np.max(np.abs(c)))
        base_sup = float(np.max(np.abs(self.base.coords)))
        if abs(_mink(c, self.base.coords)) > TANGENCY_TOL * (1.0 + sup) * (1.0 + base_sup):
            raise TangencyError("vector is not Lorentz-orthogonal to its base point")


def zero_tangent(x: HyperboloidPoint) -> TangentVector:
    return TangentVector(x, np.zeros_like(x.coords))


def riemannian_inner(g: TangentVector, h: TangentVector) -> float:
    """Metric pairing kappa^-2 <g,h>_L; both vectors must share a base point."""
    if g.base.kappa != h.base.kappa or not np.all(
        np.abs(g.base.coords - h.base.coords) <= 1e-12
    ):
        raise DimensionMismatchError("tangent vectors have different base points")
    k = g.base.kappa
    return _mink(g.coords, h.coords) / (k * k)


def riemannian_norm(g: TangentVector) -> float:
    q = _mink(g.coords, g.coords)
    return math.sqrt(max(q, 0.0)) / g.base.kappa


def _angle(x: HyperboloidPoint, y: HyperboloidPoint) -> float:
    """theta(X,Y) = arcosh(-<X,Y>_L), clamped when within 1e-9 below 1."""
    m = -_mink(x.coords, y.coords)
    if m < 1.0:
        if m < 1.0 - 1e-9 * (1.0 + x.coords[0] * y.coords[0]):
            raise NumericValidityError(f"-<X,Y>_L = {m!r} < 1 beyond tolerance")
        m = 1.0
    return _stable_arcosh(m)


def distance(x: HyperboloidPoint, y: HyperboloidPoint) -> float:
    """dist(X,Y) = kappa^-1 arcosh(-<X,Y>_L) in length units."""
    if x.kappa != y.kappa:
        raise DimensionMismatchError("points have different curvature parameters")
    return _angle(x, y) / x.kappa


def log_map(x: HyperboloidPoint, y: HyperboloidPoint) -> TangentVector:
    """log_X(Y) = (theta/sinh theta) (Y - cosh(theta) X), zero at Y = X."""
    if x.kappa != y.kappa:
        raise DimensionMismatchError("points have different curvature parameters")
    m = -_mink(x.coords, y.coords)  # = cosh(theta)
    theta = _stable_arcosh(max(m, 1.0))
    coeff = _theta_over_sinh(theta)
    w = coeff * (y.coords - max(m, 1.0) * x.coords)
    # Re-project: the subtraction leaves an eps * cosh(theta) * |X| residue
    # off T_X, which downstream normalization by a small distance amplifies.
    w = w + _mink(w, x.coords) * x.coords
    return TangentVector(x, w)


def exp_map(x: HyperboloidPoint, v: TangentVector) -> HyperboloidPoint:
    """cosh(t) X + sinh(t) v/t with t the Lorentz norm of v; t = 0 gives X.

    The result is renormalized back onto the sheet so the hyperboloid
    invariant stays machine-checkable over long runs.
    """
    if not np.all(np.abs(v.base.coords - x.coords) <= 1e-12):
        raise TangencyError("tangent vector is not based at the given point")
    t2 = _mink(v.coords, v.coords)
    t = math.sqrt(max(t2, 0.0))
    if t == 0.0:
        return x
    w = math.cosh(t) * x.coords + (math.sinh(t) / t) * v.coords
    return renormalize(w, x.kappa)


def renormalize(coords, kappa: float = 1.0) -> HyperboloidPoint:
    """Rescale a timelike upper-sheet vector onto the unit sheet.

    Accepts raw coordinates so that drifted points (|<X,X>_L + 1| beyond
    the construction tolerance) can be repaired.
    """
    w = np.asarray(coords, dtype=float)
    q = _mink(w, w)
    if q >= 0.0 or w[0] <= 0.0:
        raise InvalidPointError("vector is not timelike on the upper sheet")
    return HyperboloidPoint(w / math.sqrt(-q), kappa)


def project_to_tangent(x: HyperboloidPoint, w) -> TangentVector:
    """Lorentz-orthogonal projection w + <w,X>_L X onto T_X."""
    w = np.asarray(w, dtype=float)
    if w.shape != x.coords.shape:
        raise DimensionMismatchError(
            f"vector shape {w.shape} does not match point shape {x.coords.shape}"
        )
    return TangentVector(x, w + _mink(w, x.coords) * x.coords)

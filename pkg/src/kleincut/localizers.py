"""Euclidean localization bodies: central-cut ellipsoid and midpoint interval.

The central-cut ellipsoid update for E(c, Q) = {u : (u-c)^T Q^-1 (u-c) <= 1}
and a cut a^T(u - c) <= 0 is

    b  = Q a / sqrt(a^T Q a)
    c+ = c - b/(d+1)
    Q+ = d^2/(d^2-1) (Q - 2/(d+1) b b^T)

which contains the half-ellipsoid and shrinks volume by the fixed factor
d^d / ((d+1)(d^2-1)^((d-1)/2)) <= exp(-1/(2(d+1))).  The formula is
singular at d = 1, so one-dimensional problems use interval bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cuts import Cut
from .errors import DimensionMismatchError, NumericalBreakdownError

CONTAINS_SLACK = 1e-9


@dataclass(frozen=True)
class Ellipsoid:
    center: np.ndarray
    shape: np.ndarray  # symmetric positive definite

    def __post_init__(self):
        c = np.asarray(self.center, dtype=float)
        q = np.asarray(self.shape, dtype=float)
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "shape", q)
        d = c.size
        if q.shape != (d, d):
            raise DimensionMismatchError(f"shape matrix {q.shape} does not match center size {d}")
        if np.max(np.abs(q - q.T)) > 1e-12 * (1.0 + np.max(np.abs(q))):
            raise NumericalBreakdownError("shape matrix is not symmetric within tolerance")

    @property
    def d(self) -> int:
        return self.center.size

    def logdet(self) -> float:
        sign, val = np.linalg.slogdet(self.shape)
        if sign <= 0:
            raise NumericalBreakdownError("shape matrix has nonpositive determinant")
        return float(val)


def contains(E: Ellipsoid, u) -> bool:
    """Membership test via a Cholesky factorization of Q (no explicit inverse)."""
    diff = np.asarray(u, dtype=float) - E.center
    try:
        L = np.linalg.cholesky(E.shape)
    except np.linalg.LinAlgError as exc:
        raise NumericalBreakdownError("shape matrix lost positive definiteness") from exc
    y = np.linalg.solve(L, diff)
    return float(y @ y) <= 1.0 + CONTAINS_SLACK


def assert_positive_definite(E: Ellipsoid, step=None):
    """Factorization check; breakdown is an explicit error, never a reset."""
    try:
        np.linalg.cholesky(E.shape)
    except np.linalg.LinAlgError as exc:
        raise NumericalBreakdownError(
            "ellipsoid shape matrix lost positive definiteness", step=step
        ) from exc


def ellipsoid_update(E: Ellipsoid, cut: Cut, step=None) -> Ellipsoid:
    """Central-cut update; O(d^2) arithmetic.

    The cut must be central (anchored at the current center) and is
    renormalized to a unit normal, which keeps a^T Q a well-conditioned
    without changing the halfspace.
    """
    d = E.d
    if d < 2:
        raise DimensionMismatchError("ellipsoid update requires d >= 2; use the interval branch")
    if np.max(np.abs(np.asarray(cut.center, dtype=float) - E.center)) > 1e-10:
        raise ValueError("cut is not central: its anchor differs from the ellipsoid center")
    a = np.asarray(cut.normal, dtype=float)
    norm_a = float(np.linalg.norm(a))
    if norm_a == 0.0:
        raise ValueError("cut normal must be nonzero")
    a = a / norm_a
    Qa = E.shape @ a
    quad = float(a @ Qa)
    if quad <= 0.0:
        raise NumericalBreakdownError(
            f"a^T Q a = {quad!r} <= 0: shape matrix lost definiteness", step=step
        )
    b = Qa / math.sqrt(quad)
    c_new = E.center - b / (d + 1.0)
    Q_new = (d * d / (d * d - 1.0)) * (E.shape - (2.0 / (d + 1.0)) * np.outer(b, b))
    Q_new = 0.5 * (Q_new + Q_new.T)  # keep asymmetry from accumulating
    return Ellipsoid(c_new, Q_new)


def ellipsoid_volume_ratio(d: int) -> float:
    """Closed-form vol(E+)/vol(E) = d^d / ((d+1)(d^2-1)^((d-1)/2))."""
    if d < 2:
        raise ValueError("volume ratio is defined for d >= 2")
    log_ratio = d * math.log(d) - math.log(d + 1.0) - 0.5 * (d - 1) * math.log(d * d - 1.0)
    return math.exp(log_ratio)


@dataclass(frozen=True)
class IntervalState:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def length(self) -> float:
        return self.hi - self.lo


def interval_update(I: IntervalState, midpoint_sign: float) -> IntervalState:
    """Bisect at the midpoint: a > 0 keeps the left half, a < 0 the right."""
    if midpoint_sign == 0.0:
        raise ValueError("cut normal must be nonzero")
    mid = I.midpoint
    if midpoint_sign > 0:
        return IntervalState(I.lo, mid)
    return IntervalState(mid, I.hi)

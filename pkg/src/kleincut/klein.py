"""Beltrami-Klein coordinates and their metric distortion constants.

A Lorentz-orthonormal frame (E_0, ..., E_d) with E_0 the chart center
turns the projective chart into plain linear algebra:

    Phi(X)   = (<X,E_1>_L, ..., <X,E_d>_L) / (-<X,E_0>_L)
    X(u)     = (E_0 + sum_i u_i E_i) / sqrt(1 - ||u||^2)

Under the canonical frame at o this reduces to X -> Xbar/X_0.  Klein
points are plain d-vectors in the open unit ball; a ball of hyperbolic
radius r maps onto the Euclidean ball of radius tanh(kappa*r).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BoundaryError, DegenerateFrameError, DimensionMismatchError, InvalidPointError
from .lorentz import HyperboloidPoint, _mink, origin, renormalize

_FRAME_TOL = 1e-10


def _metric_signs(n: int) -> np.ndarray:
    eta = np.ones(n)
    eta[0] = -1.0
    return eta


@dataclass(frozen=True)
class LorentzFrame:
    """Rows basis[0..d] are E_0..E_d with Gram matrix diag(-1, 1, ..., 1)."""

    basis: np.ndarray
    kappa: float = 1.0

    def __post_init__(self):
        b = np.asarray(self.basis, dtype=float)
        object.__setattr__(self, "basis", b)
        if b.ndim != 2 or b.shape[0] != b.shape[1] or b.shape[0] < 2:
            raise DimensionMismatchError(f"frame basis must be square (d+1)x(d+1), got {b.shape}")
        eta = _metric_signs(b.shape[1])
        gram = b @ (b * eta).T
        target = np.diag(eta)
        if np.max(np.abs(gram - target)) > _FRAME_TOL:
            raise DegenerateFrameError("basis is not Lorentz-orthonormal within tolerance")
        if b[0, 0] <= 0:
            raise InvalidPointError("frame base point is not on the upper sheet")

    @property
    def d(self) -> int:
        return self.basis.shape[0] - 1

    @property
    def base_point(self) -> HyperboloidPoint:
        return HyperboloidPoint(self.basis[0], self.kappa)


def build_frame(x0: HyperboloidPoint, seed_directions=None) -> LorentzFrame:
    """Gram-Schmidt a Lorentz-orthonormal frame with E_0 = x0.

    Default seeds are the standard basis vectors e_1..e_d; explicit seeds
    are consumed in index order, skipping any whose pivot norm falls below
    1e-10, so the construction is deterministic given its inputs.
    """
    d = x0.d
    if seed_directions is None:
        seeds = np.eye(d + 1)[1:]
    else:
        seeds = [np.asarray(w, dtype=float) for w in seed_directions]
    rows = [x0.coords]
    for w in seeds:
        if w.shape != x0.coords.shape:
            raise DimensionMismatchError("seed direction has wrong dimension")
        v = w + _mink(w, rows[0]) * rows[0]  # project onto the tangent space
        for e in rows[1:]:
            v = v - _mink(v, e) * e
        pivot = _mink(v, v)
        if pivot <= 0.0 or math.sqrt(pivot) < 1e-10:
            continue
        rows.append(v / math.sqrt(pivot))
        if len(rows) == d + 1:
            break
    if len(rows) < d + 1:
        raise DegenerateFrameError(
            f"seed directions span only {len(rows) - 1} of {d} tangent dimensions"
        )
    return LorentzFrame(np.array(rows), x0.kappa)


def canonical_frame(d: int, kappa: float = 1.0) -> LorentzFrame:
    return build_frame(origin(d, kappa))


def to_klein(frame: LorentzFrame, x: HyperboloidPoint) -> np.ndarray:
    if x.kappa != frame.kappa:
        raise DimensionMismatchError("point and frame have different curvature parameters")
    eta = _metric_signs(frame.basis.shape[1])
    inner = frame.basis @ (eta * x.coords)  # <E_i, X>_L for each row
    den = -inner[0]
    if den < 1.0 - 1e-9:
        raise InvalidPointError("point is on the wrong sheet relative to the frame")
    return inner[1:] / den


def from_klein(frame: LorentzFrame, u) -> HyperboloidPoint:
    u = np.asarray(u, dtype=float)
    if u.shape != (frame.d,):
        raise DimensionMismatchError(f"expected a {frame.d}-vector, got shape {u.shape}")
    n = float(np.linalg.norm(u))
    if n > 1.0 - 1e-12:
        raise BoundaryError(f"||u|| = {n!r} too close to the unit sphere")
    w = (frame.basis[0] + u @ frame.basis[1:]) / math.sqrt(1.0 - n * n)
    return renormalize(w, frame.kappa)


def klein_radius(s: float) -> float:
    """Euclidean radius tanh(s) of the Klein image of a hyperbolic ball of
    dimensionless radius s."""
    if not s > 0:
        raise ValueError(f"dimensionless radius must be positive, got {s}")
    return math.tanh(s)


def pullback_lipschitz(M: float, kappa: float, s: float) -> float:
    """Lipschitz constant M*cosh(s)^2/kappa of the pulled-back objective on
    the Klein ball of radius tanh(s)."""
    if not (M > 0 and kappa > 0 and s > 0):
        raise ValueError("M, kappa and s must all be positive")
    c = math.cosh(s)
    return M * c * c / kappa


def klein_metric_norm(u, h, kappa: float = 1.0) -> float:
    """Riemannian length of the chart differential applied to h at u:

        kappa^-1 sqrt(||h||^2/(1-||u||^2) + (u.h)^2/(1-||u||^2)^2)

    The operator norm over unit h is 1/(kappa*(1-||u||^2)), attained for
    h parallel to u.  The metric matrix is never materialized.
    """
    u = np.asarray(u, dtype=float)
    h = np.asarray(h, dtype=float)
    rho = float(u @ u)
    if rho >= 1.0:
        raise BoundaryError("u is outside the open unit ball")
    one = 1.0 - rho
    q = float(u @ h)
    val = float(h @ h) / one + q * q / (one * one)
    return math.sqrt(val) / kappa

"""Exact Euclidean central cuts from Riemannian first-order information.

The identity behind everything here:

    <g, log_X(Y)>_X = (theta / (kappa^2 sinh theta)) <g, Y>_L,

whose right side has the sign of a^T(Phi(Y) - Phi(X)) with
a = (<g,E_1>_L, ..., <g,E_d>_L).  Riemannian subgradient halfspaces are
therefore affine halfspaces in Klein coordinates, with no approximation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, TangencyError
from .klein import LorentzFrame, _metric_signs, to_klein
from .lorentz import HyperboloidPoint, TangentVector, _mink, _stable_arcosh, _theta_over_sinh

# Relative threshold below which a spatial cut normal counts as zero and
# the queried point is certified optimal.
ZERO_SUBGRADIENT_TOL = 1e-12


class CutKind(enum.Enum):
    SUBGRADIENT = "subgradient"
    FEASIBILITY = "feasibility"


@dataclass(frozen=True)
class Cut:
    """Halfspace {u : normal^T (u - center) <= 0} anchored at a localizer center."""

    normal: np.ndarray
    center: np.ndarray
    kind: CutKind


@dataclass(frozen=True)
class OptimalCertificate:
    """Marker that the queried point is a global minimizer (zero subgradient)."""

    point: HyperboloidPoint


def subgradient_cut(frame: LorentzFrame, x: HyperboloidPoint, g: TangentVector):
    """Central cut at Phi(x) with normal (<g,E_1>_L, ..., <g,E_d>_L).

    Returns an OptimalCertificate instead when the spatial components
    vanish: tangency then forces g = 0, so x is globally optimal.
    """
    if not np.all(np.abs(g.base.coords - x.coords) <= 1e-12):
        raise TangencyError("subgradient is not tangent at the queried point")
    eta = _metric_signs(frame.basis.shape[1])
    a = frame.basis[1:] @ (eta * g.coords)
    sup = float(np.max(np.abs(g.coords))) if g.coords.size else 0.0
    if float(np.linalg.norm(a)) <= ZERO_SUBGRADIENT_TOL * (1.0 + sup):
        return OptimalCertificate(x)
    return Cut(a, to_klein(frame, x), CutKind.SUBGRADIENT)


def feasibility_cut(c, R_s: float) -> Cut:
    """Cut with normal c for an infeasible center ||c|| > R_s.

    The halfspace c^T(u - c) <= 0 contains the whole feasible ball
    B(0, R_s), hence the Klein image of the minimizer set.
    """
    c = np.asarray(c, dtype=float)
    if np.linalg.norm(c) <= R_s:
        raise ValueError("feasible centers must query the oracle, not emit a feasibility cut")
    return Cut(c.copy(), c.copy(), CutKind.FEASIBILITY)


def lorentz_pairing(g: TangentVector, y: HyperboloidPoint) -> float:
    """<g, log_X(Y)>_X evaluated as (theta/(kappa^2 sinh theta)) <g,Y>_L.

    Serves as the independent oracle for the direct log-map evaluation;
    the coefficient tends to kappa^-2 as Y -> X.
    """
    x = g.base
    if x.kappa != y.kappa:
        raise DimensionMismatchError("base point and target have different curvature parameters")
    m = max(-_mink(x.coords, y.coords), 1.0)
    theta = _stable_arcosh(m)
    k = x.kappa
    return _theta_over_sinh(theta) / (k * k) * _mink(g.coords, y.coords)

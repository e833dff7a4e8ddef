"""First-order oracles: single-target distance and the minimax benchmark.

The benchmark objective is the pointwise maximum of the 2d distances to
anchors Y_i^+- = cosh(tau) X* +- sinh(tau) v_i built from a Lorentz-unit
tangent frame {v_i} at a target X*.  It is geodesically convex and
1-Lipschitz with known optimum f* = tau/kappa attained at X*, which makes
both the accuracy guarantee and the cut-validity invariants auditable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InstanceConstructionError
from .klein import LorentzFrame, build_frame, canonical_frame, from_klein
from .lorentz import (
    HyperboloidPoint,
    _mink,
    _stable_arcosh,
    distance,
    log_map,
    origin,
    project_to_tangent,
    zero_tangent,
)


def distance_oracle(target: HyperboloidPoint):
    """Oracle for f(X) = dist(X, target): geodesically convex, 1-Lipschitz.

    The subgradient away from the target is -log_X(target)/dist, the unit
    vector pointing away from the target; at the target itself 0 is in
    the subdifferential and is returned.
    """

    def evaluate(x: HyperboloidPoint):
        dist = distance(x, target)
        if dist == 0.0:
            return 0.0, zero_tangent(x)
        step = log_map(x, target)
        return dist, project_to_tangent(x, step.coords * (-1.0 / dist))

    return evaluate


@dataclass(frozen=True)
class MinimaxInstance:
    d: int
    kappa: float
    s: float
    tau: float
    target_norm_fraction: float
    seed: int
    target: HyperboloidPoint
    frame_at_target: LorentzFrame
    anchors: np.ndarray  # rows ordered (i=1,+), (i=1,-), (i=2,+), ...
    fstar: float

    def manifest(self) -> dict:
        """JSON-ready description sufficient to rebuild bit-identically."""
        return {
            "d": self.d,
            "kappa": self.kappa,
            "s": self.s,
            "tau": self.tau,
            "fraction": self.target_norm_fraction,
            "seed": self.seed,
        }


def instance_from_manifest(m: dict) -> MinimaxInstance:
    return make_minimax_instance(
        m["d"], m["kappa"], m["s"], m["tau"], m["fraction"], m["seed"]
    )


def make_minimax_instance(
    d: int,
    kappa: float,
    s: float,
    tau: float,
    target_norm_fraction: float = 0.55,
    seed: int = 0,
) -> MinimaxInstance:
    """Seeded instance with ||Phi(X*)|| = fraction * tanh(s).

    Requires artanh(||Phi(X*)||) + tau <= s so that the anchors stay
    inside the feasible ball (triangle inequality in dimensionless
    distance).  Random directions are normalized seeded Gaussians.
    """
    if not (d >= 1 and kappa > 0 and s > 0 and tau > 0):
        raise InstanceConstructionError("d, kappa, s and tau must all be positive")
    if not 0.0 <= target_norm_fraction < 1.0:
        raise InstanceConstructionError(
            f"target norm fraction must lie in [0,1), got {target_norm_fraction!r}"
        )
    R = math.tanh(s)
    norm = target_norm_fraction * R
    if math.atanh(norm) + tau > s + 1e-12:
        raise InstanceConstructionError(
            f"artanh({norm:.6g}) + tau = {math.atanh(norm) + tau:.6g} exceeds s = {s:.6g}: "
            "anchors would escape the feasible ball"
        )
    rng = np.random.default_rng(seed)
    if d == 1:
        direction = np.array([1.0 if rng.standard_normal() >= 0 else -1.0])
    else:
        direction = rng.standard_normal(d)
        direction = direction / np.linalg.norm(direction)
    chart = canonical_frame(d, kappa)
    target = from_klein(chart, norm * direction)
    seed_dirs = rng.standard_normal((d, d + 1))
    frame_t = build_frame(target, seed_dirs)
    spatial = frame_t.basis[1:]
    ch, sh = math.cosh(tau), math.sinh(tau)
    anchors = np.empty((2 * d, d + 1))
    anchors[0::2] = ch * target.coords + sh * spatial
    anchors[1::2] = ch * target.coords - sh * spatial
    center = origin(d, kappa)
    for row in anchors:
        if abs(_mink(row, row) + 1.0) > 1e-10:
            raise InstanceConstructionError("anchor drifted off the hyperboloid sheet")
        if _stable_arcosh(max(-_mink(center.coords, row), 1.0)) > s + 1e-9:
            raise InstanceConstructionError("anchor escaped the feasible ball")
    return MinimaxInstance(
        d=d,
        kappa=kappa,
        s=s,
        tau=tau,
        target_norm_fraction=target_norm_fraction,
        seed=seed,
        target=target,
        frame_at_target=frame_t,
        anchors=anchors,
        fstar=tau / kappa,
    )


def minimax_oracle(instance: MinimaxInstance):
    """Oracle for the max of the 2d anchor distances.

    Ties pick the lowest anchor index i, then + before -; the anchors
    array is stored in exactly that order, so a plain argmax implements
    the rule.  At the target the returned subgradient is 0 (valid since
    0 is in the subdifferential there), which triggers the solver's
    optimality branch.
    """
    anchors = instance.anchors
    eta_anchors = anchors.copy()
    eta_anchors[:, 0] = -eta_anchors[:, 0]
    kappa = instance.kappa
    target_coords = instance.target.coords

    def evaluate(x: HyperboloidPoint):
        m = np.maximum(-(eta_anchors @ x.coords), 1.0)  # cosh of each anchor angle
        delta = m - 1.0
        theta = np.log1p(delta + np.sqrt(delta * (delta + 2.0)))
        value = float(np.max(theta)) / kappa
        delta_t = -_mink(x.coords, target_coords) - 1.0
        if delta_t < 1e-12 * (1.0 + x.coords[0] * target_coords[0]):
            return value, zero_tangent(x)
        j = int(np.argmax(theta))
        active = HyperboloidPoint(anchors[j], kappa)
        dist = theta[j] / kappa
        step = log_map(x, active)
        return value, project_to_tangent(x, step.coords * (-1.0 / dist))

    return evaluate

"""Seeded random generators shared across the test modules."""

import numpy as np

from kleincut.lorentz import HyperboloidPoint, TangentVector, exp_map, origin, project_to_tangent


def random_point(rng, d, kappa=1.0, max_dist=3.0):
    """Random on-sheet point via exp from the origin along a random tangent."""
    o = origin(d, kappa)
    direction = rng.standard_normal(d + 1)
    direction[0] = 0.0
    norm = np.linalg.norm(direction)
    if norm == 0.0:
        direction[1] = 1.0
        norm = 1.0
    # Lorentz norm t gives hyperbolic distance t/kappa; stay within max_dist.
    t = rng.uniform(0.0, max_dist * kappa)
    return exp_map(o, TangentVector(o, direction * (t / norm)))


def random_tangent(rng, x, scale=1.0):
    w = rng.standard_normal(x.coords.size) * scale
    return project_to_tangent(x, w)

import math

import numpy as np
import pytest

from kleincut.errors import BoundaryError, DegenerateFrameError
from kleincut.klein import (
    LorentzFrame,
    build_frame,
    canonical_frame,
    from_klein,
    klein_metric_norm,
    klein_radius,
    pullback_lipschitz,
    to_klein,
)
from kleincut.lorentz import (
    HyperboloidPoint,
    TangentVector,
    distance,
    exp_map,
    log_map,
    minkowski_inner,
    origin,
)

from helpers import random_point


def test_to_klein_examples():
    frame = canonical_frame(2)
    assert np.allclose(to_klein(frame, origin(2)), [0.0, 0.0])
    y = HyperboloidPoint(np.array([1.25, 0.75, 0.0]))
    assert np.allclose(to_klein(frame, y), [0.6, 0.0], atol=1e-12)
    shifted = build_frame(y)
    assert np.allclose(to_klein(shifted, y), [0.0, 0.0], atol=1e-12)


def test_from_klein_examples():
    frame = canonical_frame(2)
    assert np.allclose(from_klein(frame, [0.0, 0.0]).coords, [1.0, 0.0, 0.0])
    assert np.allclose(from_klein(frame, [0.6, 0.0]).coords, [1.25, 0.75, 0.0], atol=1e-12)
    expected = np.array([1.0, 0.5, 0.0]) / math.sqrt(0.75)
    assert np.allclose(from_klein(frame, [0.5, 0.0]).coords, expected, atol=1e-12)


def test_from_klein_boundary_guard():
    frame = canonical_frame(2)
    with pytest.raises(BoundaryError):
        from_klein(frame, [1.0 - 1e-13, 0.0])


def test_build_frame_canonical():
    frame = canonical_frame(2)
    assert np.allclose(frame.basis, np.eye(3))


@pytest.mark.parametrize("d", [1, 2, 4, 8])
def test_build_frame_gram_identity(d):
    rng = np.random.default_rng(42 + d)
    x0 = random_point(rng, d, max_dist=2.0)
    frame = build_frame(x0)
    eta = np.diag([-1.0] + [1.0] * d)
    gram = frame.basis @ eta @ frame.basis.T
    assert np.max(np.abs(gram - eta)) <= 1e-10
    assert np.allclose(frame.basis[0], x0.coords)


def test_build_frame_shifted_base_point():
    x0 = HyperboloidPoint(np.array([1.25, 0.75, 0.0]))
    frame = build_frame(x0)
    e1 = frame.basis[1]
    assert abs(minkowski_inner(e1, e1) - 1.0) <= 1e-12
    assert abs(minkowski_inner(e1, x0.coords)) <= 1e-12


def test_build_frame_rank_deficiency():
    x0 = origin(2)
    with pytest.raises(DegenerateFrameError):
        build_frame(x0, [np.array([0.0, 1.0, 0.0]), np.array([0.0, 2.0, 0.0])])


def test_klein_radius_examples():
    assert klein_radius(2.0) == pytest.approx(0.9640276, abs=1e-7)
    assert klein_radius(1e-6) == pytest.approx(1e-6, rel=1e-6)
    assert klein_radius(8.0) == pytest.approx(0.9999997749, abs=1e-10)


def test_pullback_lipschitz_examples():
    assert pullback_lipschitz(1.0, 1.0, 2.0) == pytest.approx(math.cosh(2.0) ** 2)
    assert pullback_lipschitz(1.0, 1.0, 1e-9) == pytest.approx(1.0)
    assert pullback_lipschitz(3.0, 2.0, 1.0) == pytest.approx(3 * math.cosh(1.0) ** 2 / 2)


def test_klein_metric_norm_examples():
    assert klein_metric_norm([0.0, 0.0], [1.0, 0.0]) == pytest.approx(1.0)
    # parallel direction: eigenvalue 1/(1-rho)
    assert klein_metric_norm([0.6, 0.0], [1.0, 0.0]) == pytest.approx(1.0 / 0.64, abs=1e-12)
    # perpendicular direction: sqrt(1/(1-rho))
    assert klein_metric_norm([0.6, 0.0], [0.0, 1.0]) == pytest.approx(1.25, abs=1e-12)


@pytest.mark.parametrize("d", [2, 3])
def test_chord_property(d):
    # Klein image of a geodesic point is collinear with the endpoint images.
    rng = np.random.default_rng(5 + d)
    frame = canonical_frame(d)
    for _ in range(50):
        x = random_point(rng, d, max_dist=2.0)
        y = random_point(rng, d, max_dist=2.0)
        p, q = to_klein(frame, x), to_klein(frame, y)
        step = log_map(x, y)
        for t in (0.25, 0.5, 0.75):
            z = exp_map(x, TangentVector(x, t * step.coords))
            w = to_klein(frame, z)
            a, b = q - p, w - p
            scale = np.linalg.norm(a) * np.linalg.norm(b) + 1e-300
            for i in range(d):
                for j in range(i + 1, d):
                    cross = a[i] * b[j] - a[j] * b[i]
                    assert abs(cross) / scale <= 1e-9


def test_radius_identity():
    rng = np.random.default_rng(11)
    for kappa in (1.0, 2.0):
        frame = canonical_frame(3, kappa)
        o = origin(3, kappa)
        for _ in range(30):
            u = rng.uniform(-0.5, 0.5, size=3)
            dist = distance(o, from_klein(frame, u))
            assert abs(dist - math.atanh(np.linalg.norm(u)) / kappa) <= 1e-10


def test_finite_difference_metric_check():
    rng = np.random.default_rng(13)
    frame = canonical_frame(3)
    t = 1e-5
    for _ in range(40):
        u = rng.uniform(-0.45, 0.45, size=3)
        h = rng.standard_normal(3)
        norm = klein_metric_norm(u, h)
        fd = distance(from_klein(frame, u), from_klein(frame, u + t * h)) / t
        assert abs(fd - norm) <= 1e-4 * norm


def test_round_trip():
    rng = np.random.default_rng(17)
    frame = canonical_frame(4)
    for _ in range(50):
        direction = rng.standard_normal(4)
        direction /= np.linalg.norm(direction)
        u = direction * rng.uniform(0.0, 0.999)
        back = to_klein(frame, from_klein(frame, u))
        assert np.max(np.abs(back - u)) <= 1e-10

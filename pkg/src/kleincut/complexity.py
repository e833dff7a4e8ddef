"""Closed-form query bounds and their asymptotic regimes.

The guaranteed budget for accuracy eps*M*r on a ball of dimensionless
radius s = kappa*r is

    N(d, s, eps) = ceil(2 d (d+1) * log(16 sinh(s) cosh(s) / (s eps))),

where the argument of the log is exactly 16 L_s R_s / eta.  The product
sinh(s)cosh(s) is evaluated as sinh(2s)/2 (one transcendental call, no
overflow until s ~ 355) with a Taylor fallback for tiny s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ComplexityInputs:
    d: int
    s: float
    eps: float

    def __post_init__(self):
        if not (isinstance(self.d, int) and self.d >= 1):
            raise ValueError(f"dimension must be an integer >= 1, got {self.d!r}")
        if not self.s > 0:
            raise ValueError(f"dimensionless radius must be positive, got {self.s!r}")
        if not 0.0 < self.eps < 1.0:
            raise ValueError(f"accuracy must lie in (0,1), got {self.eps!r}")


def _sinh_cosh_over_s(s: float) -> float:
    # sinh(s)cosh(s)/s; series keeps full precision for tiny s.
    if s < 1e-4:
        s2 = s * s
        return 1.0 + 2.0 * s2 / 3.0 + 2.0 * s2 * s2 / 15.0
    return math.sinh(2.0 * s) / (2.0 * s)


def log_factor(s: float, eps: float) -> float:
    """The exact factor log(16 sinh(s) cosh(s) / (s eps))."""
    if not s > 0:
        raise ValueError(f"dimensionless radius must be positive, got {s!r}")
    if not 0.0 < eps < 1.0:
        raise ValueError(f"accuracy must lie in (0,1), got {eps!r}")
    return math.log(16.0 * _sinh_cosh_over_s(s) / eps)


def query_bound(inp: ComplexityInputs) -> int:
    """N(d,s,eps) = ceil(2d(d+1) * log_factor(s, eps))."""
    return math.ceil(2.0 * inp.d * (inp.d + 1) * log_factor(inp.s, inp.eps))


def simple_upper_bound(inp: ComplexityInputs) -> int:
    """The coarser ceil(2d(d+1)(2s + log(16/eps))); dominates query_bound."""
    return math.ceil(2.0 * inp.d * (inp.d + 1) * (2.0 * inp.s + math.log(16.0 / inp.eps)))


def large_s_expansion(s: float, eps: float) -> float:
    """log(16/eps) + 2s - log(4s); equals log_factor up to O(e^{-4s}).

    The exact remainder is -log(1 - e^{-4s}), so the expansion always
    overestimates, by at most 2 e^{-4s} once s >= 1/4 or so.
    """
    if not s > 0:
        raise ValueError(f"dimensionless radius must be positive, got {s!r}")
    return math.log(16.0 / eps) + 2.0 * s - math.log(4.0 * s)


def small_s_expansion(s: float) -> float:
    """Taylor value 1 + (2/3)s^2 + (2/15)s^4 of sinh(s)cosh(s)/s.

    The next coefficient is 4/315, so the error is below 0.02 s^6 for
    s <= 0.5.
    """
    if not 0.0 < s <= 0.5:
        raise ValueError(f"expansion is stated for 0 < s <= 0.5, got {s!r}")
    s2 = s * s
    return 1.0 + 2.0 * s2 / 3.0 + 2.0 * s2 * s2 / 15.0


def euclidean_limit_bound(d: int, eps: float) -> int:
    """Zero-curvature limit ceil(2d(d+1) log(16/eps)) of the query bound."""
    if not (isinstance(d, int) and d >= 1):
        raise ValueError(f"dimension must be an integer >= 1, got {d!r}")
    if not 0.0 < eps < 1.0:
        raise ValueError(f"accuracy must lie in (0,1), got {eps!r}")
    return math.ceil(2.0 * d * (d + 1) * math.log(16.0 / eps))


def zeta(s: float) -> float:
    """Distortion ratio s/tanh(s), with the limit value 1 at s = 0."""
    if s < 0:
        raise ValueError(f"dimensionless radius must be nonnegative, got {s!r}")
    if s < 1e-8:
        return 1.0 + s * s / 3.0
    return s / math.tanh(s)

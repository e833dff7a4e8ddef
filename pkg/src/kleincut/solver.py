"""Cutting-plane solver loop over the Klein chart.

One localization body (ellipsoid for d >= 2, interval for d = 1) is
shrunk by exact central cuts.  Infeasible ellipsoid centers emit a
feasibility cut without touching the oracle; feasible centers are lifted
to the hyperboloid, queried, and cut by the Lorentz spatial components of
the returned subgradient.  The loop runs for the theorem budget N and
returns the best feasible query; there is no optimality certificate, so
there is no early stopping on the gap.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .complexity import ComplexityInputs, query_bound
from .cuts import Cut, CutKind, OptimalCertificate, subgradient_cut, feasibility_cut
from .errors import DimensionMismatchError, NumericalBreakdownError, OracleContractError
from .klein import LorentzFrame, from_klein, pullback_lipschitz
from .localizers import (
    Ellipsoid,
    IntervalState,
    assert_positive_definite,
    ellipsoid_update,
    interval_update,
)
from .lorentz import HyperboloidPoint, TangentVector

# First-order oracle: x -> (f(x), g) with g a subgradient tangent at x.
FirstOrderOracle = Callable[[HyperboloidPoint], tuple]


class Termination(enum.Enum):
    BUDGET = "budget"
    ZERO_SUBGRADIENT = "zero_subgradient"
    BREAKDOWN = "breakdown"


@dataclass(frozen=True)
class SolverConfig:
    d: int
    kappa: float
    r: float
    eps: float
    lipschitz_M: float = 1.0
    max_queries_override: Optional[int] = None
    record_trace: bool = False

    def __post_init__(self):
        if not (isinstance(self.d, int) and self.d >= 1):
            raise ValueError(f"dimension must be an integer >= 1, got {self.d!r}")
        if not (self.kappa > 0 and self.r > 0 and self.lipschitz_M > 0):
            raise ValueError("kappa, r and lipschitz_M must be positive")
        if not 0.0 < self.eps < 1.0:
            raise ValueError(f"accuracy must lie in (0,1), got {self.eps!r}")

    @property
    def s(self) -> float:
        return self.kappa * self.r

    @property
    def feasible_radius(self) -> float:
        return math.tanh(self.s)

    @property
    def pullback_L(self) -> float:
        return pullback_lipschitz(self.lipschitz_M, self.kappa, self.s)

    @property
    def target_gap(self) -> float:
        """Absolute accuracy eta = eps * M * r in objective units."""
        return self.eps * self.lipschitz_M * self.r

    @property
    def theorem_bound(self) -> int:
        return query_bound(ComplexityInputs(self.d, self.s, self.eps))


@dataclass(frozen=True)
class QueryRecord:
    index: int
    klein_center: np.ndarray
    feasible: bool
    value: Optional[float]
    cut_kind: Optional[CutKind]
    localizer_logdet_or_length: float


@dataclass
class SolverResult:
    best_point: HyperboloidPoint
    best_value: float
    queries_used: int
    theorem_bound: int
    terminated_by: Termination
    trace: list = field(default_factory=list)
    localizer_trace: list = field(default_factory=list)


def _checked_oracle_call(oracle, x: HyperboloidPoint):
    value, g = oracle(x)
    if not isinstance(g, TangentVector):
        raise OracleContractError("oracle must return a TangentVector subgradient")
    if not np.all(np.abs(g.base.coords - x.coords) <= 1e-9):
        raise OracleContractError("oracle returned a subgradient based at a different point")
    return float(value), g


def solve(config: SolverConfig, frame: LorentzFrame, oracle: FirstOrderOracle) -> SolverResult:
    """Run the cutting-plane loop for the full update budget.

    The budget counts localizer updates; oracle calls are fewer whenever
    infeasible centers occur, and both counts are recoverable from the
    trace.  max_queries_override replaces the theorem budget when set.
    """
    if frame.d != config.d:
        raise DimensionMismatchError(
            f"frame dimension {frame.d} does not match config dimension {config.d}"
        )
    if frame.kappa != config.kappa:
        raise DimensionMismatchError("frame and config disagree on the curvature parameter")
    if config.d == 1:
        return _solve_interval(config, frame, oracle)
    return _solve_ellipsoid(config, frame, oracle)


def _budget(config: SolverConfig) -> int:
    if config.max_queries_override is not None:
        return config.max_queries_override
    return config.theorem_bound


def _solve_interval(config, frame, oracle) -> SolverResult:
    state = IntervalState(-config.feasible_radius, config.feasible_radius)
    trace, snapshots = [], []
    best_value = math.inf
    best_point = None
    queries = 0
    terminated = Termination.BUDGET
    n = _budget(config)
    for k in range(n):
        c = state.midpoint
        x = from_klein(frame, np.array([c]))
        value, g = _checked_oracle_call(oracle, x)
        queries += 1
        if value < best_value:
            best_value, best_point = value, x
        result = subgradient_cut(frame, x, g)
        stopped = isinstance(result, OptimalCertificate)
        if not stopped:
            state = interval_update(state, float(result.normal[0]))
        if config.record_trace:
            trace.append(
                QueryRecord(
                    index=k,
                    klein_center=np.array([c]),
                    feasible=True,
                    value=value,
                    cut_kind=None if stopped else CutKind.SUBGRADIENT,
                    localizer_logdet_or_length=state.length,
                )
            )
            snapshots.append(state)
        if stopped:
            terminated = Termination.ZERO_SUBGRADIENT
            break
    return SolverResult(
        best_point=best_point,
        best_value=best_value,
        queries_used=queries,
        theorem_bound=config.theorem_bound,
        terminated_by=terminated,
        trace=trace,
        localizer_trace=snapshots,
    )


def _solve_ellipsoid(config, frame, oracle) -> SolverResult:
    d = config.d
    R = config.feasible_radius
    body = Ellipsoid(np.zeros(d), R * R * np.eye(d))
    trace, snapshots = [], []
    best_value = math.inf
    best_point = None
    queries = 0
    terminated = Termination.BUDGET
    n = _budget(config)

    def _partial():
        return SolverResult(
            best_point=best_point,
            best_value=best_value,
            queries_used=queries,
            theorem_bound=config.theorem_bound,
            terminated_by=Termination.BREAKDOWN,
            trace=trace,
            localizer_trace=snapshots,
        )

    for k in range(n):
        c = body.center
        norm_c = float(np.linalg.norm(c))
        value = None
        if norm_c > R + 1e-12:
            cut = feasibility_cut(c, R)
            stopped = False
        else:
            # The feasible ball is closed and the lift diverges at the unit
            # sphere, so centers inside the slack band are clamped radially.
            u = c if norm_c <= R else c * (R / norm_c)
            x = from_klein(frame, u)
            value, g = _checked_oracle_call(oracle, x)
            queries += 1
            if value < best_value:
                best_value, best_point = value, x
            cut = subgradient_cut(frame, x, g)
            stopped = isinstance(cut, OptimalCertificate)
        if not stopped:
            try:
                body = ellipsoid_update(body, cut, step=k)
                if (k + 1) % 50 == 0:
                    assert_positive_definite(body, step=k)
            except NumericalBreakdownError as exc:
                exc.partial_result = _partial()
                raise
        if config.record_trace:
            trace.append(
                QueryRecord(
                    index=k,
                    klein_center=c.copy(),
                    feasible=value is not None,
                    value=value,
                    cut_kind=None if stopped else cut.kind,
                    localizer_logdet_or_length=body.logdet(),
                )
            )
            snapshots.append(body)
        if stopped:
            terminated = Termination.ZERO_SUBGRADIENT
            break
    return SolverResult(
        best_point=best_point,
        best_value=best_value,
        queries_used=queries,
        theorem_bound=config.theorem_bound,
        terminated_by=terminated,
        trace=trace,
        localizer_trace=snapshots,
    )


def certify_gap(result: SolverResult, known_fstar: float, config: SolverConfig) -> float:
    """Normalized gap (best - f*) / (M r), checkable when f* is known."""
    if not math.isfinite(known_fstar):
        raise ValueError("known optimal value must be finite")
    return (result.best_value - known_fstar) / (config.lipschitz_M * config.r)

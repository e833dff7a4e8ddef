"""Cutting-plane minimization of geodesically convex functions on
hyperbolic balls, via exact Euclidean cuts in the Beltrami-Klein chart."""

__version__ = "0.1.0"

from .complexity import (
    ComplexityInputs,
    euclidean_limit_bound,
    log_factor,
    query_bound,
    simple_upper_bound,
    zeta,
)
from .cuts import Cut, CutKind, OptimalCertificate, feasibility_cut, lorentz_pairing, subgradient_cut
from .klein import (
    LorentzFrame,
    build_frame,
    canonical_frame,
    from_klein,
    klein_metric_norm,
    klein_radius,
    pullback_lipschitz,
    to_klein,
)
from .localizers import Ellipsoid, IntervalState, contains, ellipsoid_update, ellipsoid_volume_ratio, interval_update
from .lorentz import (
    HyperboloidPoint,
    TangentVector,
    distance,
    exp_map,
    log_map,
    minkowski_inner,
    origin,
    project_to_tangent,
    renormalize,
    riemannian_inner,
    riemannian_norm,
    zero_tangent,
)
from .oracles import MinimaxInstance, distance_oracle, make_minimax_instance, minimax_oracle
from .solver import SolverConfig, SolverResult, Termination, certify_gap, solve

"""Associated Legendre functions of integer degree and complex order,
their derivatives with respect to the order, and the machinery to check
every closed form against independent routes."""

from .errors import (
    BranchError,
    DomainError,
    EndpointError,
    LegendreError,
    NearIntegerOrder,
    NonConvergence,
    NonexistentFunction,
    PoleError,
    RepresentationMismatch,
    StepCollision,
)
from .first_kind import PRepresentation, legendre_p, p_general, p_int, p_on_cut
from .second_kind import (
    WRepresentation,
    dq_dmu_at_int,
    dq_dmu_at_zero,
    legendre_q,
    q_general,
    q_int,
    q_neg_degree_general,
    q_neg_degree_int_gt,
    q_on_cut,
    w_on_cut,
    w_poly,
)
from .logpoly import LogPoly, differentiate, rodrigues_p_int, rodrigues_q_int, rodrigues_u_int
from .numerics import (
    CutPoint,
    GeneralOrder,
    IntegerOrder,
    OffCutPoint,
    digamma,
    gamma,
    gamma_ratio_limit,
    negate_off_cut,
    psi_over_gamma_limit,
)
from .oracle import DiffScheme, ResidualReport, cut_limit, fd_dmu, ode_residual
from .order_derivative import (
    URepresentation,
    d2p_dmu2_at_int,
    dp_dmu,
    dp_dmu_at_int,
    dp_dmu_at_neg_int,
    dp_dmu_general,
    dp_dmu_on_cut,
    legendre_u,
    u_general,
    u_int,
)
from .suites import CheckReport, Grid, run_suite

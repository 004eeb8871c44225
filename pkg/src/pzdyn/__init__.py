"""Stability and bifurcation toolkit for a planar phytoplankton-zooplankton
model with linear functional responses.

Subpackages and modules:

    model        parameter/state types, vector field, quadratic map
    linear       Jacobians, 2x2 eigenvalues, unit-circle root location
    flow         fixed-step RK4 integration, Lyapunov verification
    discrete     orbit iteration, invariant regions, LaSalle certificates
    bifurcation  Neimark-Sacker pipeline and invariant-curve detection
    cli          command-line front end

Hot loops run on a compiled extension when available, with a pure-Python
fallback selected at import (``pzdyn.KERNEL_BACKEND`` reports which).
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .bifurcation import (
    CurveStats,
    NormalFormCoeffs,
    NSReport,
    NSSetup,
    closed_form_L,
    detect_invariant_curve,
    nondegeneracy,
    normal_form_coeffs,
    ns_coefficient,
    ns_report,
    ns_setup,
    perturbed_multipliers,
    transformed_map,
    transversality,
)
from .discrete import (
    GridCheckReport,
    Orbit,
    RegionVerdict,
    XDynamicsReport,
    converge_detect,
    delta_L1,
    delta_L2,
    in_M,
    in_param_set_S,
    in_X,
    in_Y,
    iterate,
    lasalle_L1,
    lasalle_L2,
    restricted_X_analysis,
    verify_lasalle1,
    verify_lasalle2,
    verify_m_invariance,
)
from .errors import (
    DegenerateInput,
    DomainError,
    InvalidParams,
    InvalidRaw,
    NonPositiveGamma,
    NotComplexRegime,
    OutOfRange,
    PreconditionViolated,
    PZDynError,
)
from .flow import (
    LyapunovReport,
    Trajectory,
    check_radial_growth,
    integrate,
    lyap1_dot,
    lyap1_value,
    lyap2_dot,
    lyap2_value,
    verify_lyapunov,
)
from .linear import (
    Classification,
    ComplexPair,
    HYPERBOLICITY_EPS,
    Mat2,
    RootLocation,
    StabilityKind,
    classify_fixed_point,
    e2_char_coeffs,
    eigen2,
    jacobian_map,
    jury_classify,
    quad_roots,
)
from .model import (
    FixedPoint,
    FixedPointLabel,
    Params,
    RawParams,
    State,
    apply_map,
    fixed_points,
    nondimensionalize,
    nondimensionalize_state,
    vector_field,
)

__version__ = "0.1.0"

"""Exact, minimal-node Gaussian quadrature for C1 cubic splines over
symmetrically stretched non-uniform knot sequences."""

from .basis import (
    BasisCoefficients,
    IndexOutOfRange,
    SplineFunction,
    bezier_difference_controls,
    coefficients,
    eval_D,
    eval_spline,
    exact_integral,
    integral_D,
)
from .knots import (
    ConvergenceFailure,
    InvalidRatio,
    KnotError,
    KnotSequence,
    NotIncreasing,
    NotStretched,
    NotSymmetric,
    gen_chebyshev,
    gen_geometric,
    gen_legendre,
    gen_uniform,
    legendre_roots,
    validate,
)
from .oracle import ReferenceIntegral, random_spline, reference_integral, remainder
from .peano import (
    ErrorConstant,
    KernelScanReport,
    constant_closed_form,
    constant_numeric,
    kernel_eval,
    kernel_sign_scan,
    quartic_oracle,
)
from .rule import (
    DomainTooSmall,
    NoRootInInterval,
    QuadratureRule,
    RecursionBreakdown,
    RecursionState,
    apply,
    classical_two_point,
    close_even,
    close_odd,
    compute_rule,
    first_node,
    node_location_report,
    step,
    weight_monotonicity_report,
)

__version__ = "0.1.0"

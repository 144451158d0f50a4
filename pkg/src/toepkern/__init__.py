"""Toeplitz kernels with rational symbols: model-space representations,
maximal functions, Frostman shifts, and a numerical truncation oracle."""

from .blaschke import (
    BlaschkeProduct,
    blaschke_from_rational,
    blaschke_gcd,
    divide,
    divides,
    frostman_shift,
    kernel_inner_factor,
)
from .errors import (
    BoundaryAmbiguous,
    CarlesonViolation,
    ConstantInnerFactor,
    DegenerateShift,
    DimensionMismatch,
    InsufficientDegree,
    NormTooLarge,
    NotDividing,
    NotInHardySpace,
    NotInKernel,
    NotInModelSpace,
    NotInner,
    ParseError,
    PoleOnCircle,
    RootEscapedDisk,
    StabilityWarning,
    ToepkernError,
    ZeroDenominator,
    ZeroPolynomial,
)
from .expr import parse, parse_symbol
from .frostman import (
    Perturbation,
    alpha_divides_gamma_p,
    cor610_representation,
    crofoot_shift_rep,
    frostman_kernel_rep,
    gamma_of,
    generalized_shift,
    isometric_condition_check,
    minimal_alpha,
)
from .hardy import (
    InnerOuter,
    in_conjugate_smirnov,
    in_kernel,
    inner_outer,
    is_in_H2minus,
    is_in_H2plus,
    is_outer,
)
from .kernel_engine import (
    CascadeMaximal,
    KernelRep,
    MaximalFunctionCert,
    RationalKernelResult,
    RationalSymbol,
    Rejection,
    UnimodularSymbol,
    kernel_dim,
    kernel_dim_unimodular,
    kernel_of_rational_symbol,
    kernels_equal,
    is_subkernel,
    lift_maximal,
    maximal_divisible_by_B,
    maximal_vanishing_at,
    member,
    minimal_kernel_of,
    verify_maximal,
)
from .modelspace import (
    Basis,
    ModelSpace,
    conjugation,
    crofoot,
    hayashi_of_model_space,
    repro_kernels,
    tm_basis,
)
from .oracle import (
    NumericalSubspace,
    OracleReport,
    ToeplitzTruncation,
    check_prediction,
    fourier_coeffs,
    numerical_kernel,
    subspace_angle,
    toeplitz_truncation,
)
from .polyalg import Polynomial, approx_gcd, reflect, roots
from .ratfun import (
    RationalFunction,
    boundary_conjugate,
    classify,
    l2_inner,
    l2_norm,
    project_plus,
    rational,
)
from .representations import (
    BlaschkeRepresentations,
    multiplier_from_maximal,
    propagate_multiplier,
    represent_blaschke,
    represent_single,
    represent_single_isometric,
)

__version__ = "0.1.0"

"""Time-fractional Allen-Cahn equation and power-of-mean-curvature flow toolkit."""

from tfac._core import (
    Ansatz,
    FlowTrajectory,
    L1Weights,
    ModelParams,
    RadialGrid,
    StructuralConstants,
    TrackingReport,
    ansatz_time_derivative,
    ansatz_value,
    caputo_direct,
    caputo_of_ansatz,
    caputo_of_monomial,
    compute_C_alpha,
    compute_c_alpha,
    extinction_time,
    extract_zero_level,
    f,
    fit_scaling_exponent,
    flow_kernel_integral,
    gamma,
    gamma_prime,
    gamma_second,
    l1_apply,
    l1_weights,
    make_ansatz,
    phi0,
    phi0_derivative,
    phi0_rk4,
    psi0,
    radial_laplacian_of_ansatz,
    residual_E,
    solve,
    structural_constants,
)

__all__ = [
    "Ansatz",
    "FlowTrajectory",
    "L1Weights",
    "ModelParams",
    "RadialGrid",
    "StructuralConstants",
    "TrackingReport",
    "ansatz_time_derivative",
    "ansatz_value",
    "caputo_direct",
    "caputo_of_ansatz",
    "caputo_of_monomial",
    "compute_C_alpha",
    "compute_c_alpha",
    "extinction_time",
    "extract_zero_level",
    "f",
    "fit_scaling_exponent",
    "flow_kernel_integral",
    "gamma",
    "gamma_prime",
    "gamma_second",
    "l1_apply",
    "l1_weights",
    "make_ansatz",
    "phi0",
    "phi0_derivative",
    "phi0_rk4",
    "psi0",
    "radial_laplacian_of_ansatz",
    "residual_E",
    "solve",
    "structural_constants",
]

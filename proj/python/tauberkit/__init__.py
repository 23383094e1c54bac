"""Python bindings for the tauberkit C++ core."""

from ._core import (
    QuadratureResult,
    RateFunction,
    VerificationReport,
    c_m_estimate,
    compose_mk,
    f_deriv_eval,
    f_eval,
    h_eval,
    k_of,
    parse_rate,
    phi_eval,
    predicted_rate,
    right_inverse,
    transform_eval,
    verify_all,
)

__all__ = [
    "QuadratureResult",
    "RateFunction",
    "VerificationReport",
    "c_m_estimate",
    "compose_mk",
    "f_deriv_eval",
    "f_eval",
    "h_eval",
    "k_of",
    "parse_rate",
    "phi_eval",
    "predicted_rate",
    "right_inverse",
    "transform_eval",
    "verify_all",
]

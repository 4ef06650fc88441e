"""Fourier transforms of smooth compactly supported bump functions.

Two independent routes to F(k) = int f_{alpha,beta}(x) e^{ikx} dx:
closed-form saddle-point asymptotics and adaptive oscillatory
quadrature, plus a harness that sweeps k, compares them, and fits the
k^(-3/4) exp(-sqrt k) decay law of the canonical bump.
"""

from .bump import (
    BumpParams,
    eval_bump,
    exponent_exact,
    exponent_truncated,
    principal_power,
)
from .harness import (
    DecayFit,
    SweepRecord,
    emit,
    envelope_points,
    fit_decay,
    load_records,
    normalization,
    run_sweep,
)
from .oscquad import (
    QuadratureResult,
    chebyshev_cos_moments,
    fourier_transform_numeric,
    integrate_adaptive,
    integrate_cos,
)
from .saddle import (
    CANONICAL_AMPLITUDE,
    CANONICAL_PHASE_SHIFT,
    SaddleData,
    amplitude_coefficient,
    asymptotic_ft,
    asymptotic_ft_canonical,
    canonical_envelope,
    canonical_phase_amplitude,
    curvature,
    descent_check,
    saddle_data,
    saddle_point,
)

__version__ = "0.1.0"

__all__ = [
    "BumpParams",
    "CANONICAL_AMPLITUDE",
    "CANONICAL_PHASE_SHIFT",
    "DecayFit",
    "QuadratureResult",
    "SaddleData",
    "SweepRecord",
    "amplitude_coefficient",
    "asymptotic_ft",
    "asymptotic_ft_canonical",
    "canonical_envelope",
    "canonical_phase_amplitude",
    "chebyshev_cos_moments",
    "curvature",
    "descent_check",
    "emit",
    "envelope_points",
    "eval_bump",
    "exponent_exact",
    "exponent_truncated",
    "fit_decay",
    "fourier_transform_numeric",
    "integrate_adaptive",
    "integrate_cos",
    "load_records",
    "normalization",
    "principal_power",
    "run_sweep",
    "saddle_data",
    "saddle_point",
]

"""Closed-form saddle-point asymptotics of the bump Fourier transform.

For k > 0 the transform F(k) = 2 Re int_0^1 exp(g(t)) dt is dominated by
the stationary point of the truncated exponent,

    t0 = [2^(1-alpha) beta (alpha-1) / (ik)]^(1/alpha),

the principal root, which lies in the right half plane at argument
-pi/(2 alpha).  A Gaussian integral along the descent direction
exp(-i pi/(2 alpha)) through t0 gives

    F(k) ~ 2 Re[ sqrt(pi / ((ik)^((alpha+1)/alpha) A)) exp(g(t0)) ],
    A = alpha [2 beta (alpha-1)]^(-1/alpha),

where g(t0) is the *exact* exponent: its difference from the truncated
one is O(t0^(2-alpha)), which for alpha > 2 does not vanish and for
every alpha improves the finite-k accuracy at no cost.

For the classic bump (alpha=2, beta=1) the amplitude reduces to
|F(k)| ~ C k^(-3/4) exp(-sqrt(k)) with C = 2 sqrt(pi) 2^(-1/4) e^(-1/4);
``canonical_envelope`` and ``canonical_phase_amplitude`` expose that
reduced form.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .bump import BumpParams, exponent_exact, principal_power

__all__ = [
    "SaddleData",
    "saddle_point",
    "curvature",
    "amplitude_coefficient",
    "asymptotic_ft",
    "asymptotic_ft_canonical",
    "canonical_envelope",
    "canonical_phase_amplitude",
    "descent_check",
    "saddle_data",
    "CANONICAL_AMPLITUDE",
    "CANONICAL_PHASE_SHIFT",
]

# amplitude constant and phase shift of the reduced canonical form
# C k^(-3/4) exp(-sqrt k) cos(k - sqrt k - 3 pi/8)
CANONICAL_AMPLITUDE = 2.0 * math.sqrt(math.pi) * 2.0 ** -0.25 * math.exp(-0.25)
CANONICAL_PHASE_SHIFT = 3.0 * math.pi / 8.0


def _require_positive_k(k: float) -> None:
    if not (math.isfinite(k) and k > 0.0):
        raise ValueError(f"k must be finite and > 0, got {k}")


@dataclass(frozen=True)
class SaddleData:
    """Saddle location and local data for one (params, k) pair."""

    t0: complex
    g_at_t0: complex
    g2_at_t0: complex
    a_coeff: float
    k: float


def saddle_point(params: BumpParams, k: float) -> complex:
    """Principal-branch saddle t0 = [2^(1-alpha) beta (alpha-1)/(ik)]^(1/alpha).

    Re t0 > 0 always; the mirrored root with Re t < 0 sits where the
    integrand blows up and is not usable.
    """
    _require_positive_k(k)
    c = 2.0 ** (1.0 - params.alpha) * params.beta * (params.alpha - 1.0)
    return principal_power(c / (1j * k), 1.0 / params.alpha)


def curvature(params: BumpParams, k: float, t0: complex) -> complex:
    """Second derivative of the truncated exponent at the saddle:

        g''(t0) = -2^(1-alpha) beta alpha (alpha-1) / t0^(alpha+1),

    equal to -i^((alpha+1)/alpha) 2 A k^((alpha+1)/alpha).
    """
    a, b = params.alpha, params.beta
    return -(2.0 ** (1.0 - a)) * b * a * (a - 1.0) / principal_power(t0, a + 1.0)


def amplitude_coefficient(params: BumpParams) -> float:
    """A = alpha [2 beta (alpha-1)]^(-1/alpha), always positive."""
    a, b = params.alpha, params.beta
    return a * (2.0 * b * (a - 1.0)) ** (-1.0 / a)


def asymptotic_ft(params: BumpParams, k: float) -> float:
    """Saddle-point approximation of F(k) for general (alpha, beta).

    Oscillates in sign; decays like exp(-const * k^((alpha-1)/alpha)).
    The square root takes the principal branch of the whole radicand.
    Underflows gracefully to 0.0 for very large k.
    """
    _require_positive_k(k)
    t0 = saddle_point(params, k)
    g0 = exponent_exact(params, k, t0)
    a_coeff = amplitude_coefficient(params)
    expo = (params.alpha + 1.0) / params.alpha
    radicand = math.pi / (principal_power(1j * k, expo) * a_coeff)
    return 2.0 * (principal_power(radicand, 0.5) * cmath.exp(g0)).real


def asymptotic_ft_canonical(k: float) -> float:
    """Specialized form for the classic bump (alpha=2, beta=1):

        F(k) ~ 2 Re[ sqrt(-i pi / (sqrt(2i) k^(3/2))) exp(g(t0)) ],
        t0 = sqrt(1/(2ik)),

    with the same exact-exponent convention as ``asymptotic_ft``, which
    it matches to rounding accuracy.
    """
    _require_positive_k(k)
    t0 = principal_power(1.0 / (2j * k), 0.5)
    g0 = exponent_exact(BumpParams.canonical(), k, t0)
    radicand = -1j * math.pi / (principal_power(2j, 0.5) * k**1.5)
    return 2.0 * (principal_power(radicand, 0.5) * cmath.exp(g0)).real


def canonical_envelope(k: float) -> float:
    """Decay envelope C k^(-3/4) exp(-sqrt k) of the canonical transform."""
    _require_positive_k(k)
    return CANONICAL_AMPLITUDE * k**-0.75 * math.exp(-math.sqrt(k))


def canonical_phase_amplitude(k: float) -> float:
    """Reduced canonical form C k^(-3/4) exp(-sqrt k) cos(k - sqrt k - 3 pi/8).

    Algebraically identical to keeping the truncated exponent
    ik - 1/4 - sqrt(2ik) in the closed form, so it differs from
    ``asymptotic_ft_canonical`` (exact exponent) by a relative
    O(k^(-1/2)); the two agree asymptotically.
    """
    _require_positive_k(k)
    phase = k - math.sqrt(k) - CANONICAL_PHASE_SHIFT
    return canonical_envelope(k) * math.cos(phase)


def descent_check(params: BumpParams, k: float, s_max: float, n_samples: int = 64) -> bool:
    """Confirm the contour direction exp(-i pi/(2 alpha)) descends through t0.

    Samples Re[g(t0 + s u) - g(t0)] for s in +-(0, s_max] with
    u = exp(-i pi/(2 alpha)) and the exact exponent g; returns True iff
    every sample is strictly negative.  A False return signals a branch
    selection bug.
    """
    _require_positive_k(k)
    t0 = saddle_point(params, k)
    if not (0.0 < s_max <= 0.5 * abs(t0)):
        raise ValueError(f"s_max must lie in (0, |t0|/2], got {s_max}")
    u = cmath.exp(-1j * math.pi / (2.0 * params.alpha))
    g0 = exponent_exact(params, k, t0)
    for j in range(1, n_samples + 1):
        s = s_max * j / n_samples
        for t in (t0 + s * u, t0 - s * u):
            if (exponent_exact(params, k, t) - g0).real >= 0.0:
                return False
    return True


def saddle_data(params: BumpParams, k: float) -> SaddleData:
    """Assemble saddle location, exact exponent, curvature and amplitude."""
    t0 = saddle_point(params, k)
    return SaddleData(
        t0=t0,
        g_at_t0=exponent_exact(params, k, t0),
        g2_at_t0=curvature(params, k, t0),
        a_coeff=amplitude_coefficient(params),
        k=k,
    )

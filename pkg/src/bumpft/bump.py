"""Generalized bump functions and the complex exponent of their Fourier integrand.

The family is

    f_{alpha,beta}(x) = exp(-beta / (1 - x^2)^(alpha-1))   for |x| < 1,
                        0                                  otherwise,

with alpha > 1 and beta > 0.  The classic bump exp(-1/(1-x^2)) is
(alpha, beta) = (2, 1).  Writing the Fourier integrand near the right
support edge with t = 1 - x gives exp(g(t)) with

    g(t) = ik - ikt - beta / ((2-t)^(alpha-1) t^(alpha-1)),

whose small-t truncation ik - ikt - beta/(2t)^(alpha-1) drives the
saddle-point analysis in the companion module.

All fractional powers of complex arguments in this package go through
``principal_power`` below, so the branch convention lives in exactly one
place.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "BumpParams",
    "principal_power",
    "eval_bump",
    "exponent_exact",
    "exponent_truncated",
]

# exp(-w) is exactly 0.0 in IEEE double for w above this; clamping early
# avoids overflow in the divide that produces w
_EXP_UNDERFLOW = 745.0


@dataclass(frozen=True)
class BumpParams:
    """Exponent order ``alpha`` (> 1) and strength ``beta`` (> 0)."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha > 1.0):
            raise ValueError(f"alpha must be finite and > 1, got {self.alpha}")
        if not (math.isfinite(self.beta) and self.beta > 0.0):
            raise ValueError(f"beta must be finite and > 0, got {self.beta}")

    @classmethod
    def canonical(cls) -> "BumpParams":
        """The classic bump exp(-1/(1-x^2))."""
        return cls(alpha=2.0, beta=1.0)


def principal_power(z: complex, p: float) -> complex:
    """Principal-branch power z**p = exp(p * (ln|z| + i Arg z)), Arg in (-pi, pi].

    Every fractional power of a complex quantity in this package is taken
    through this routine so that root selection is consistent everywhere
    (e.g. (1/(ik))^(1/alpha) always lands in the right half plane for
    k > 0, alpha > 1).
    """
    z = complex(z)
    if z == 0:
        raise ValueError("principal_power is undefined at z = 0")
    return cmath.exp(p * cmath.log(z))


def eval_bump(params: BumpParams, x: float) -> float:
    """Evaluate f_{alpha,beta} at a real point.

    Exactly 0.0 for |x| >= 1 and whenever the inner exponent would
    underflow exp; no overflow is possible for x arbitrarily close to
    the support edge.
    """
    if abs(x) >= 1.0:
        return 0.0
    s = 1.0 - x * x
    if s <= 0.0:  # x*x can round up to 1.0 just inside the edge
        return 0.0
    # guard the divide in log space before forming beta / s^(alpha-1)
    log_w = math.log(params.beta) + (1.0 - params.alpha) * math.log(s)
    if log_w > math.log(_EXP_UNDERFLOW):
        return 0.0
    w = params.beta * s ** (1.0 - params.alpha)
    return math.exp(-w)


def exponent_exact(params: BumpParams, k: float, t: complex) -> complex:
    """Exact exponent g(t) = ik - ikt - beta/((2-t)^(alpha-1) t^(alpha-1)).

    Defined on Re t > 0 (minus the pole at t = 2), where the Fourier
    integrand exp(g(t)) decays; for Re t < 0 the integrand blows up like
    exp(+beta/|2t|^(alpha-1)) and no contour may be deformed there, so
    such t are rejected.

    For real t in (0, 1), exp(g(t)) equals
    eval_bump(params, 1-t) * exp(ik(1-t)).
    """
    t = complex(t)
    if t.real <= 0.0:
        raise ValueError(f"exponent_exact requires Re t > 0, got t = {t}")
    if t == 2.0:
        raise ValueError("exponent_exact has a pole at t = 2")
    a1 = params.alpha - 1.0
    denom = principal_power(2.0 - t, a1) * principal_power(t, a1)
    return 1j * k * (1.0 - t) - params.beta / denom


def exponent_truncated(
    params: BumpParams, k: float, t: complex, with_constant: bool = False
) -> complex:
    """Small-t truncation ik - ikt - beta/(2t)^(alpha-1).

    For alpha = 2 the next term of the expansion is the constant
    -beta/4; ``with_constant=True`` includes it (only meaningful at
    alpha = 2, rejected otherwise).  The truncation error relative to
    ``exponent_exact`` is O(t^(2-alpha)) as t -> 0.
    """
    t = complex(t)
    if t == 0.0:
        raise ValueError("exponent_truncated is undefined at t = 0")
    a1 = params.alpha - 1.0
    g = 1j * k * (1.0 - t) - params.beta / principal_power(2.0 * t, a1)
    if with_constant:
        if params.alpha != 2.0:
            raise ValueError("the constant term is only defined for alpha = 2")
        g -= params.beta / 4.0
    return g

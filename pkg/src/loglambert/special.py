"""
Classical special functions used by the logarithmic Lambert machinery.

Only real arguments are supported:

    lambert_w0(x)       principal branch of w * exp(w) = x, x >= -1/e
    exp_integral_ei(x)  principal-value exponential integral Ei(x), x != 0
    log_gamma(x)        ln Gamma(x) for x > 0
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

EULER_GAMMA = 0.57721566490153286060651209008240243
_INV_E = 0.36787944117144232159552377016146087
_EPS = sys.float_info.epsilon

# Ei switch points: the positive series has no cancellation up to here and the
# asymptotic series is below one ulp beyond it.
_EI_SERIES_MAX = 40.0
# E1 continued fraction converges quickly for z above this.
_E1_CF_MIN = 1.0


@dataclass(frozen=True)
class SolverOptions:
    """Tolerances and iteration budget shared by the iterative solvers."""

    abs_tol: float = 1e-13
    rel_tol: float = 1e-12
    max_iter: int = 100

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")
        if int(self.max_iter) != self.max_iter or self.max_iter < 1:
            raise ValueError("max_iter must be a positive integer")


DEFAULT_OPTIONS = SolverOptions()


def _w0_initial_guess(x: float) -> float:
    if x < -0.25:
        # expansion about the branch point -1/e
        p = math.sqrt(max(2.0 * (math.e * x + 1.0), 0.0))
        return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p ** 3
    if x < 3.0:
        return math.log1p(x) * (1.0 - 0.3 * math.log1p(x) / (1.0 + math.log1p(x)))
    l1 = math.log(x)
    l2 = math.log(l1)
    return l1 - l2 + l2 / l1


def lambert_w0(x: float, opts: SolverOptions = DEFAULT_OPTIONS) -> float:
    """Principal branch W0 of the Lambert W function.

    Solves ``w * exp(w) = x`` for ``w >= -1`` by Halley iteration from a
    regime-dependent starting point.

    Parameters
    ----------
    x : float
        Argument, ``x >= -1/e``.
    opts : SolverOptions
        Tolerances and iteration budget.

    Returns
    -------
    float
        ``W0(x)``.

    Raises
    ------
    DomainError
        If ``x < -1/e`` or ``x`` is not finite.
    ConvergenceError
        If Halley iteration does not settle within ``opts.max_iter`` steps.
    """
    x = float(x)
    if math.isnan(x) or x == math.inf:
        raise DomainError(f"lambert_w0 needs a finite argument, got {x}")
    if x < -_INV_E:
        # -1/e itself is not representable; allow the rounding gap
        if x < -_INV_E * (1.0 + 4 * _EPS):
            raise DomainError(f"lambert_w0 is real only for x >= -1/e, got {x}")
        return -1.0
    if x == 0.0:
        return 0.0

    w = _w0_initial_guess(x)
    for _ in range(opts.max_iter):
        ew = math.exp(w)
        r = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0:
            return w
        denom = ew * wp1 - (w + 2.0) * r / (2.0 * wp1)
        dw = r / denom
        w -= dw
        if abs(dw) <= 4 * _EPS * (1.0 + abs(w)):
            break
    else:
        raise ConvergenceError(f"lambert_w0 did not converge for x={x}")

    # w*e^w amplifies a one-ulp error in w by (1 + w)
    resid = abs(w * math.exp(w) - x)
    if resid > opts.abs_tol * (1.0 + abs(x)) * (1.0 + abs(w)):
        raise ConvergenceError(f"lambert_w0 residual {resid:g} too large at x={x}")
    return w


def _ei_series(x: float) -> float:
    # gamma + ln|x| + sum x^n / (n n!)
    total = 0.0
    term = 1.0
    n = 0
    while True:
        n += 1
        term *= x / n
        contrib = term / n
        total += contrib
        if abs(contrib) <= _EPS * abs(total):
            break
        if n > 500:
            raise ConvergenceError(f"Ei series did not converge at x={x}")
    return EULER_GAMMA + math.log(abs(x)) + total


def _ei_asymptotic(x: float) -> float:
    # e^x / x * sum n! / x^n, truncated at the smallest term
    total = 1.0
    term = 1.0
    n = 0
    while True:
        n += 1
        nxt = term * n / x
        if nxt >= term or nxt < _EPS * total:
            if nxt < term:
                total += nxt
            break
        term = nxt
        total += term
    return math.exp(x) / x * total


def _e1_continued_fraction(z: float) -> float:
    # modified Lentz on E1(z) = e^-z / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...)))
    tiny = 1e-300
    b = z + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 1000):
        a = -float(i * i)
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) <= _EPS:
            return h * math.exp(-z)
    raise ConvergenceError(f"E1 continued fraction did not converge at z={z}")


def exp_integral_ei(x: float) -> float:
    """Exponential integral ``Ei(x)`` (Cauchy principal value for x > 0).

    For ``x < 0`` this equals ``-E1(-x)``. Raises :class:`DomainError` at
    ``x = 0`` where the function has a logarithmic singularity.
    """
    x = float(x)
    if x == 0.0:
        raise DomainError("Ei has a logarithmic singularity at x = 0")
    if math.isnan(x):
        raise DomainError("Ei of NaN")
    if x > 0.0:
        if x <= _EI_SERIES_MAX:
            return _ei_series(x)
        return _ei_asymptotic(x)
    z = -x
    if z <= _E1_CF_MIN:
        return _ei_series(x)
    return -_e1_continued_fraction(z)


def log_gamma(x: float) -> float:
    """``ln Gamma(x)`` for ``x > 0``, safe where ``Gamma(x)`` overflows."""
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)

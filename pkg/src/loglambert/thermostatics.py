"""
Three-parameter deformed entropy and the thermostatics of a classical ideal
gas in the four adiabatic ensembles.

The deformed logarithms are nested exponential deformations of ``ln``::

    ln_q x         = (x^(1-q) - 1) / (1-q)
    ln_{q,q',r} x  = (exp((1-r)/(1-q') * (exp((1-q') ln_q x) - 1)) - 1) / (1-r)

For each ensemble the phase-space volume factorises as ``Sigma = xi * K(Q)``
with ``Q`` the heat function (E, H, L or R). Writing
``u = (1-q')/(1-q) * Sigma^(1-q)`` and ``y = (1-r)/(1-q') * A * e^u`` turns the
temperature relation into ``y ln(By) e^y = c / (kT)``, so ``y`` is a value of
the logarithmic Lambert function and ``Q`` follows from ``u = ln(By)``.

Everything is evaluated in log space: ``N!`` and ``Gamma(DN/2 + 1)`` overflow
binary64 long before the formulas stop making sense.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .core import BranchId, branch_points, evaluate
from .errors import (DomainError, NonPhysicalRegionError, NumericalOverflowError,
                     SingularityError, UncoveredRegionError)
from .special import log_gamma


def _check_positive(name, value):
    if not (value > 0 and math.isfinite(value)):
        raise DomainError(f"{name} must be positive and finite, got {value!r}")


def _check_count(name, value):
    if int(value) != value or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value!r}")


def _exp(z: float, what: str) -> float:
    try:
        return math.exp(z)
    except OverflowError:
        raise NumericalOverflowError(f"{what}: exp({z:g}) overflows binary64") from None


def _expm1(z: float, what: str) -> float:
    try:
        return math.expm1(z)
    except OverflowError:
        raise NumericalOverflowError(f"{what}: exp({z:g}) overflows binary64") from None


def _deform(t: float, s: float, what: str = "deformation") -> float:
    # (e^{s t} - 1) / s, with the s -> 0 limit t
    if s == 0.0:
        return t
    return _expm1(s * t, what) / s


# ---------------------------------------------------------------------------
# deformed functions

def q_log(x: float, q: float) -> float:
    """Tsallis q-logarithm ``(x^(1-q) - 1)/(1-q)``; ``ln x`` at ``q = 1``."""
    if not x > 0:
        raise DomainError(f"q_log needs x > 0, got {x!r}")
    if q == 1:
        return math.log(x)
    return _deform(math.log(x), 1.0 - q, "q_log")


def q_exp(x: float, q: float) -> float:
    """Tsallis q-exponential ``[1 + (1-q)x]^(1/(1-q))``, the inverse of :func:`q_log`."""
    if q == 1:
        return _exp(x, "q_exp")
    s = 1.0 - q
    base = 1.0 + s * x
    if not base > 0:
        raise DomainError(f"q_exp({x!r}, q={q!r}) is outside the support 1 + (1-q)x > 0")
    return _exp(math.log1p(s * x) / s, "q_exp")


def three_param_log(x: float, q: float, q_prime: float, r: float) -> float:
    """Three-parameter logarithm ``ln_{q,q',r} x``.

    Any of ``q``, ``q_prime``, ``r`` may equal 1, in which case the
    corresponding layer reduces to its undeformed limit (so ``q_prime = r = 1``
    gives ``q_log``). Raises :class:`NumericalOverflowError` instead of
    returning ``inf``.
    """
    if not x > 0:
        raise DomainError(f"three_param_log needs x > 0, got {x!r}")
    return _three_param_log_from_log(math.log(x), q, q_prime, r)


def _three_param_log_from_log(log_x, q, q_prime, r):
    t = _deform(log_x, 1.0 - q, "three_param_log")
    t = _deform(t, 1.0 - q_prime, "three_param_log")
    return _deform(t, 1.0 - r, "three_param_log")


@dataclass(frozen=True)
class DeformationParams:
    """Entropy parameters ``(q, q', r)``, none equal to 1."""

    q: float
    q_prime: float
    r: float

    def __post_init__(self):
        for name in ("q", "q_prime", "r"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
            if v == 1:
                raise DomainError(f"{name} = 1 is excluded: ensemble formulas divide by 1 - {name}")

    def log(self, x: float) -> float:
        return three_param_log(x, self.q, self.q_prime, self.r)


def entropy_of_distribution(p, dp: DeformationParams, k: float = 1.0) -> float:
    """``k * sum_i p_i ln_{q,q',r}(1/p_i)`` over a probability vector.

    Zero-probability states contribute nothing.
    """
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise DomainError("p must be a non-empty 1-d probability vector")
    if np.any(p < 0) or not np.all(np.isfinite(p)):
        raise DomainError("probabilities must be finite and non-negative")
    if abs(p.sum() - 1.0) > 1e-12:
        raise DomainError(f"probabilities sum to {p.sum()!r}, not 1")
    total = 0.0
    for pi in p[p > 0]:
        total += pi * _three_param_log_from_log(-math.log(pi), dp.q, dp.q_prime, dp.r)
    return k * total


# ---------------------------------------------------------------------------
# gas and ensembles

@dataclass(frozen=True)
class GasConstants:
    """Spatial dimension, particle mass, Planck constant and entropy prefactor."""

    D: int = 3
    m: float = 1.0
    h: float = 1.0
    k: float = 1.0

    def __post_init__(self):
        _check_count("D", self.D)
        _check_positive("m", self.m)
        _check_positive("h", self.h)
        _check_positive("k", self.k)

    @property
    def log_M(self) -> float:
        """``ln M`` with ``M = (2 pi m / h^2)^(D/2)``."""
        return 0.5 * self.D * (math.log(2.0 * math.pi * self.m) - 2.0 * math.log(self.h))

    @property
    def M(self) -> float:
        return math.exp(self.log_M)


class _PowerLawHeat:
    # Sigma = xi * Q^s, s = scale(gc)
    kind = "power"

    def kernel_log(self, heat, gc):
        if not heat > 0:
            raise DomainError(f"{self.heat_symbol} must be positive, got {heat!r}")
        return self.scale(gc) * math.log(heat)


class _ExponentialHeat:
    # Sigma = xi * exp(Q / s), s = scale(gc)
    kind = "exponential"

    def kernel_log(self, heat, gc):
        if not math.isfinite(heat):
            raise DomainError(f"{self.heat_symbol} must be finite, got {heat!r}")
        return heat / self.scale(gc)


@dataclass(frozen=True)
class Microcanonical(_PowerLawHeat):
    """``(N, V, E)``: heat function is the internal energy E."""

    N: int
    V: float
    heat_symbol = "E"
    tag = "mc"

    def __post_init__(self):
        _check_count("N", self.N)
        _check_positive("V", self.V)

    def scale(self, gc):
        return gc.D * self.N / 2.0

    def log_xi(self, gc):
        N = self.N
        return (N * (math.log(self.V) + gc.log_M)
                - log_gamma(N + 1) - log_gamma(gc.D * N / 2.0 + 1.0))

    def alpha(self, gc):
        return None


@dataclass(frozen=True)
class IsoenthalpicIsobaric(_PowerLawHeat):
    """``(N, P, H)``: heat function is the enthalpy H = E + PV."""

    N: int
    P: float
    heat_symbol = "H"
    tag = "ie"

    def __post_init__(self):
        _check_count("N", self.N)
        _check_positive("P", self.P)

    def alpha(self, gc):
        return gc.D * self.N / 2.0 + self.N

    def scale(self, gc):
        return self.alpha(gc)

    def log_xi(self, gc):
        return self.N * (gc.log_M - math.log(self.P)) - log_gamma(self.alpha(gc) + 1.0)


@dataclass(frozen=True)
class HillEnsemble(_ExponentialHeat):
    """``(mu, V, L)``: heat function is the Hill energy L = E - mu N.

    Uses the first-order large-N phase volume.
    """

    mu: float
    V: float
    heat_symbol = "L"
    tag = "hill"

    def __post_init__(self):
        _check_positive("mu", self.mu)
        _check_positive("V", self.V)

    def scale(self, gc):
        return 2.0 * self.mu / gc.D

    def log_xi(self, gc):
        half_d = gc.D / 2.0
        return self.V * math.exp(half_d * (math.log(self.mu) + 1.0 - math.log(half_d)) + gc.log_M)

    def alpha(self, gc):
        return None


@dataclass(frozen=True)
class RayEnsemble(_ExponentialHeat):
    """``(mu, P, R)``: heat function is the Ray energy R = E + PV - mu N.

    Uses the large-N phase volume, whose geometric factor needs
    ``(M/P) (mu/alpha)^alpha e^alpha < 1`` with ``alpha = DN/2 + N``.
    """

    mu: float
    P: float
    N: int
    heat_symbol = "R"
    tag = "ray"

    def __post_init__(self):
        _check_positive("mu", self.mu)
        _check_positive("P", self.P)
        _check_count("N", self.N)

    def alpha(self, gc):
        return gc.D * self.N / 2.0 + self.N

    def scale(self, gc):
        return self.mu / gc.D

    def geometric_ratio_log(self, gc):
        al = self.alpha(gc)
        return gc.log_M - math.log(self.P) + al * (math.log(self.mu) - math.log(al) + 1.0)

    def log_xi(self, gc):
        g = self.geometric_ratio_log(gc)
        if not g < 0:
            raise DomainError(
                f"Ray ensemble needs (M/P)(mu/alpha)^alpha e^alpha < 1, got exp({g:g})")
        return -math.log1p(-math.exp(g))


EnsembleSpec = Union[Microcanonical, IsoenthalpicIsobaric, HillEnsemble, RayEnsemble]


def phase_volume_log(spec: EnsembleSpec, gc: GasConstants, heat: float) -> float:
    """``ln Sigma`` of the ensemble at the given heat-function value."""
    return spec.log_xi(gc) + spec.kernel_log(heat, gc)


# ---------------------------------------------------------------------------
# derived constants and branch choice

@dataclass(frozen=True)
class DerivedConstants:
    """Constants that recast the temperature relation as ``y ln(By) e^y = c/(kT)``.

    ``a = (1-q) / ((1-q') xi^(1-q))`` can over- or underflow, so it is kept as
    ``a_sign * exp(log_abs_a)``; :attr:`a` materialises it.
    """

    A: float
    log_A: float
    B: float
    log_xi: float
    log_abs_a: float
    a_sign: float
    c: float
    alpha: Optional[float]

    @property
    def a(self) -> float:
        try:
            return self.a_sign * math.exp(self.log_abs_a)
        except OverflowError:
            return self.a_sign * math.inf

    @property
    def xi(self) -> float:
        try:
            return math.exp(self.log_xi)
        except OverflowError:
            return math.inf


def derived_constants(spec: EnsembleSpec, gc: GasConstants,
                      dp: DeformationParams) -> DerivedConstants:
    s_q = 1.0 - dp.q
    s_qp = 1.0 - dp.q_prime
    s_r = 1.0 - dp.r
    log_A = -s_qp / s_q
    A = _exp(log_A, "A")
    B = s_qp / (s_r * A)
    log_xi = spec.log_xi(gc)
    log_abs_a = math.log(abs(s_q / s_qp)) - s_q * log_xi
    a_sign = math.copysign(1.0, s_q / s_qp)
    growth = _exp(s_r / s_qp, "c")
    if spec.kind == "power":
        c = s_r * growth / (spec.scale(gc) * s_q)
    else:
        c = spec.scale(gc) * s_r * growth / s_q
    return DerivedConstants(A=A, log_A=log_A, B=B, log_xi=log_xi, log_abs_a=log_abs_a,
                            a_sign=a_sign, c=c, alpha=spec.alpha(gc))


def select_branch(dp: DeformationParams) -> BranchId:
    """Branch of W_L that keeps the heat function continuous in ``(q, q', r)``.

    ======  ======  =======  ======
    r       q       q' > 1   q' < 1
    ======  ======  =======  ======
    r > 1   q > 1   POS_0    NEG_0
    r < 1   q < 1   NEG_0    POS_0
    r < 1   q > 1   NEG_1    POS_0
    r > 1   q < 1   uncovered
    ======  ======  ===============
    """
    q, qp, r = dp.q, dp.q_prime, dp.r
    if r > 1 and q > 1:
        return BranchId.POS_0 if qp > 1 else BranchId.NEG_0
    if r < 1 and q < 1:
        return BranchId.POS_0 if qp < 1 else BranchId.NEG_0
    if r < 1 and q > 1:
        return BranchId.POS_0 if qp < 1 else BranchId.NEG_1
    raise UncoveredRegionError(
        f"no branch prescribed for r > 1 with q < 1 (q={q}, q'={qp}, r={r})")


# ---------------------------------------------------------------------------
# heat functions

@dataclass(frozen=True)
class HeatResult:
    """A heat-function evaluation and the W_L value behind it.

    ``specific_heat`` is None when the W_L argument sits on a branch point.
    ``u_check`` is ``ln(w (1-q') / ((1-r) A))``, built from the raw
    constants; it must agree with ``ln(B * w_value)``.
    """

    heat: float
    specific_heat: Optional[float]
    w_argument: float
    w_value: float
    branch: BranchId
    u_check: float


def _log_Bw(x, y, B):
    # ln(By) to full relative precision; the naive form cancels as y -> 1/B
    u = math.log(B * y)
    if abs(u) < 0.5:
        for _ in range(3):
            denom = (y + 1.0) * u + 1.0
            if abs(denom) < 0.1:
                break
            t = x * math.exp(-y) / y
            u = ((y + 1.0) * u * u + t) / denom
            y = math.exp(u) / B
    return u, y


def heat_function(spec: EnsembleSpec, gc: GasConstants, dp: DeformationParams,
                  T: float) -> HeatResult:
    """Heat function of the ensemble at temperature ``T``, with its specific heat.

    The W_L branch comes from :func:`select_branch`. Raises
    :class:`NonPhysicalRegionError` when ``a ln(B W_L(c/kT))`` is not positive
    or the W_L argument underflows, and propagates branch-domain errors from
    :func:`loglambert.core.evaluate`.
    """
    _check_positive("T", T)
    dc = derived_constants(spec, gc, dp)
    branch = select_branch(dp)
    x = dc.c / (gc.k * T)
    if abs(x) < sys.float_info.min:
        raise NonPhysicalRegionError(
            f"W_L argument c/kT = {x!r} underflows at T={T!r}; heat function is unresolvable")
    ctx = branch_points(dc.B)
    y, diag = evaluate(x, ctx, branch)
    u, y = _log_Bw(x, y, dc.B)
    if not dc.a_sign * u > 0:
        raise NonPhysicalRegionError(
            f"a*ln(B*W_L) = {dc.a_sign * u:g} is not positive at T={T!r}")
    log_au = dc.log_abs_a + math.log(abs(u))
    s = spec.scale(gc)
    s_q = 1.0 - dp.q
    if spec.kind == "power":
        heat = _exp(log_au / (s * s_q), f"heat function {spec.heat_symbol}")
    else:
        heat = s / s_q * log_au

    cp = None
    if not diag.derivative_singular:
        # d/dT ln(a ln(B W)) = W'(x) dx/dT / (W ln(BW)),  dx/dT = -x/T
        denom = (y + 1.0) * u + 1.0
        if denom != 0.0:
            dw_dT = math.exp(-y) / denom * (-x / T)
            dlog_au = dw_dT / (y * u)
            cp = heat * dlog_au / (s * s_q) if spec.kind == "power" else s / s_q * dlog_au

    u_check = math.log(y * (1.0 - dp.q_prime) / ((1.0 - dp.r) * dc.A))
    return HeatResult(heat=heat, specific_heat=cp, w_argument=x, w_value=y,
                      branch=branch, u_check=u_check)


def specific_heat(spec: EnsembleSpec, gc: GasConstants, dp: DeformationParams,
                  T: float) -> float:
    """``dQ/dT`` (C_V or C_P) by the chain rule through ``dW_L/dx``."""
    res = heat_function(spec, gc, dp, T)
    if res.specific_heat is None:
        raise SingularityError(f"specific heat is unbounded at T={T!r} (W_L branch point)")
    return res.specific_heat


def entropy_of_system(spec: EnsembleSpec, gc: GasConstants, dp: DeformationParams,
                      heat: float) -> float:
    """Three-parameter entropy ``k ln_{q,q',r} Sigma`` in the factored form.

    ``S = k/(1-r) [exp((1-r)/(1-q') z A) exp(-(1-r)/(1-q')) - 1]`` with
    ``z = e^u`` and ``u = (1-q')/(1-q) xi^(1-q) K(Q)^(1-q)``.
    """
    dc = derived_constants(spec, gc, dp)
    s_q = 1.0 - dp.q
    s_qp = 1.0 - dp.q_prime
    s_r = 1.0 - dp.r
    log_abs_u = math.log(abs(s_qp / s_q)) + s_q * (dc.log_xi + spec.kernel_log(heat, gc))
    u = math.copysign(_exp(log_abs_u, "entropy exponent u"), s_qp / s_q)
    zA_minus_1 = _expm1(u + dc.log_A, "entropy")
    return gc.k / s_r * _expm1(s_r / s_qp * zA_minus_1, "entropy")


def entropy_of_system_direct(spec: EnsembleSpec, gc: GasConstants, dp: DeformationParams,
                             heat: float) -> float:
    """Same entropy composed as ``k * three_param_log(Sigma)`` without factoring."""
    log_sigma = phase_volume_log(spec, gc, heat)
    return gc.k * _three_param_log_from_log(log_sigma, dp.q, dp.q_prime, dp.r)

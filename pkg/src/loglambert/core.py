"""
The logarithmic Lambert function W_L.

For a fixed real constant ``B != 0``, ``y = W_L(x)`` solves

    y * ln(B y) * exp(y) = x,        B y > 0.

The forward map ``f(y) = y ln(By) e^y`` has critical points where
``(y + 1) ln(By) = -1``. For ``B > 0`` there is one such point ``delta`` in
``(0, 1/B)`` and the inverse splits into two monotone branches; for ``B < 0``
there are two, ``delta1 < 1/B < delta2 < 0``, and three branches:

    ========  ======  =======================  ====================  ==========
    branch    sign B  x domain                 y range               direction
    ========  ======  =======================  ====================  ==========
    POS_0     B > 0   [f(delta), +inf)         [delta, +inf)         increasing
    POS_1     B > 0   [f(delta), 0)            (0, delta]            decreasing
    NEG_0     B < 0   (0, f(delta2)]           [delta2, 0)           decreasing
    NEG_1     B < 0   [f(delta1), f(delta2)]   [delta1, delta2]      increasing
    NEG_2     B < 0   [f(delta1), 0)           (-inf, delta1]        decreasing
    ========  ======  =======================  ====================  ==========

Endpoints where ``x = 0`` is reached only in the limit ``y -> 0`` or
``y -> -inf`` are open. Branch-point images are closed: evaluation there
returns the branch point itself, flagged as derivative-singular.
"""
from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass

from . import _roots
from .errors import ConvergenceError, DomainError, NumericalOverflowError, SingularityError
from .special import DEFAULT_OPTIONS, SolverOptions, exp_integral_ei, lambert_w0


class BranchId(enum.Enum):
    """Real branches of W_L. Values double as command-line tokens."""

    POS_0 = "pos0"
    POS_1 = "pos1"
    NEG_0 = "neg0"
    NEG_1 = "neg1"
    NEG_2 = "neg2"

    @property
    def positive_B(self) -> bool:
        return self in (BranchId.POS_0, BranchId.POS_1)

    @property
    def increasing(self) -> bool:
        return self in (BranchId.POS_0, BranchId.NEG_1)

    @classmethod
    def parse(cls, token: str) -> "BranchId":
        try:
            return cls(token.strip().lower())
        except ValueError:
            names = ", ".join(b.value for b in cls)
            raise DomainError(f"unknown branch {token!r}; expected one of {names}") from None


@dataclass(frozen=True)
class EvalDiagnostics:
    iterations: int
    residual: float
    bracket_width: float
    derivative_singular: bool = False


@dataclass(frozen=True)
class LogLambertContext:
    """The constant ``B`` with its precomputed branch points.

    Build with :func:`branch_points`. For ``B > 0`` ``deltas`` holds the single
    ``delta``; for ``B < 0`` it holds ``(delta1, delta2)``. ``images`` holds the
    corresponding ``f(delta)`` values.
    """

    B: float
    deltas: tuple
    images: tuple
    opts: SolverOptions = DEFAULT_OPTIONS

    @property
    def delta(self) -> float:
        if self.B < 0:
            raise AttributeError("B < 0 has two branch points: use delta1/delta2")
        return self.deltas[0]

    @property
    def f_delta(self) -> float:
        if self.B < 0:
            raise AttributeError("B < 0 has two branch points: use f_delta1/f_delta2")
        return self.images[0]

    @property
    def delta1(self) -> float:
        self._need_negative()
        return self.deltas[0]

    @property
    def delta2(self) -> float:
        self._need_negative()
        return self.deltas[1]

    @property
    def f_delta1(self) -> float:
        self._need_negative()
        return self.images[0]

    @property
    def f_delta2(self) -> float:
        self._need_negative()
        return self.images[1]

    def _need_negative(self):
        if self.B > 0:
            raise AttributeError("B > 0 has a single branch point: use delta")

    def branches(self) -> tuple:
        if self.B > 0:
            return (BranchId.POS_0, BranchId.POS_1)
        return (BranchId.NEG_0, BranchId.NEG_1, BranchId.NEG_2)

    def domain(self, branch: BranchId):
        """``(lo, hi, lo_closed, hi_closed)`` of the branch's x domain."""
        self._check_branch(branch)
        if branch is BranchId.POS_0:
            return self.images[0], math.inf, True, False
        if branch is BranchId.POS_1:
            return self.images[0], 0.0, True, False
        if branch is BranchId.NEG_0:
            return 0.0, self.images[1], False, True
        if branch is BranchId.NEG_1:
            return self.images[0], self.images[1], True, True
        return self.images[0], 0.0, True, False

    def in_domain(self, x: float, branch: BranchId) -> bool:
        lo, hi, lo_closed, hi_closed = self.domain(branch)
        above = x >= lo if lo_closed else x > lo
        below = x <= hi if hi_closed else x < hi
        return above and below

    def _check_branch(self, branch: BranchId):
        if not isinstance(branch, BranchId):
            raise TypeError(f"expected a BranchId, got {branch!r}")
        if branch.positive_B != (self.B > 0):
            sign = "B > 0" if self.B > 0 else "B < 0"
            raise DomainError(f"branch {branch.value} is not defined for {sign} (B={self.B})")


def forward(y: float, B: float) -> float:
    """The forward map ``f(y) = y ln(By) e^y``; requires ``B y > 0``."""
    By = B * y
    if not By > 0.0:
        raise DomainError(f"forward map needs B*y > 0, got B={B}, y={y}")
    L = math.log(By)
    try:
        ey = math.exp(y)
    except OverflowError:
        return math.copysign(math.inf, y * L) if L != 0.0 else 0.0
    return y * L * ey


def forward_prime(y: float, B: float) -> float:
    """``f'(y) = ((y + 1) ln(By) + 1) e^y``."""
    L = math.log(B * y)
    try:
        ey = math.exp(y)
    except OverflowError:
        return math.inf
    return ((y + 1.0) * L + 1.0) * ey


def _forward_noise(y: float, B: float) -> float:
    # rounding floor of f(y): ln(By) is only good to about one ulp absolute,
    # which y e^y magnifies when f(y) itself is small
    try:
        return 8.0 * sys.float_info.epsilon * abs(y) * math.exp(y) * (1.0 + abs(math.log(B * y)))
    except OverflowError:
        return math.inf


def _singular_residual(y: float, B: float) -> float:
    return (y + 1.0) * math.log(B * y) + 1.0


def branch_points(B: float, opts: SolverOptions = DEFAULT_OPTIONS) -> LogLambertContext:
    """Solve ``(y + 1) ln(By) = -1`` and package the roots into a context.

    The roots are located by bisection on brackets grown geometrically away
    from ``1/B`` (where the residual equals ``+1``) until a sign change is
    found.
    """
    B = float(B)
    if B == 0.0 or not math.isfinite(B):
        raise DomainError(f"B must be finite and non-zero, got {B}")
    h = lambda y: _singular_residual(y, B)  # noqa: E731
    y0 = 1.0 / B

    def toward_zero():
        # the residual tends to -inf as y -> 0 with the sign of B
        end = y0
        for k in range(opts.max_iter):
            end = y0 * 2.0 ** -(2 ** min(k, 10))
            if end == 0.0:
                break
            if h(end) < 0.0:
                return end
        raise ConvergenceError(f"could not bracket the branch point near 0 for B={B}")

    def away_from_zero():
        end = y0
        for _ in range(opts.max_iter):
            end *= 2.0
            if h(end) < 0.0:
                return end
        raise ConvergenceError(f"could not bracket the branch point below 1/B for B={B}")

    if B > 0:
        d, _ = _roots.bisect(h, toward_zero(), y0)
        deltas = (d,)
    else:
        d2, _ = _roots.bisect(h, y0, toward_zero())
        d1, _ = _roots.bisect(h, away_from_zero(), y0)
        deltas = (d1, d2)

    for d in deltas:
        if not B * d > 0.0:
            raise ConvergenceError(f"branch point {d} violates B*delta > 0")
        # (y + 1) ln(By) carries an absolute rounding error of order |y| ulp
        if abs(h(d)) > opts.abs_tol * (1.0 + abs(d)):
            raise ConvergenceError(f"branch point residual {h(d):g} exceeds abs_tol")
    images = tuple(forward(d, B) for d in deltas)
    for d, fd in zip(deltas, images):
        if not (math.isfinite(fd) and fd != 0.0):
            raise NumericalOverflowError(
                f"f(delta) = {fd!r} at delta = {d!r} is not representable for B={B}")
    if B < 0 and not images[0] < images[1]:
        raise ConvergenceError("expected f(delta1) < f(delta2)")
    return LogLambertContext(B=B, deltas=deltas, images=images, opts=opts)


def _domain_message(x, ctx, branch):
    lo, hi, lc, hc = ctx.domain(branch)
    return (f"x={x!r} is outside the domain {'[' if lc else '('}{lo!r}, {hi!r}"
            f"{']' if hc else ')'} of branch {branch.value} (B={ctx.B})")


def _bracket(x: float, ctx: LogLambertContext, branch: BranchId):
    """A y-interval containing the root, plus the number of expansion steps."""
    B = ctx.B
    f = lambda y: forward(y, B)  # noqa: E731
    max_iter = ctx.opts.max_iter
    steps = 0

    def shrink_to_zero(start, stop):
        # walk start -> 0, dividing by 2^(2^k) at step k, until stop(y) holds
        nonlocal steps
        y = start
        for k in range(max_iter):
            steps += 1
            y *= 2.0 ** -(2 ** min(k, 9))
            if y == 0.0:
                raise NumericalOverflowError(
                    f"W_L({x!r}) on {branch.value} underflows binary64")
            if stop(y):
                return y
        raise ConvergenceError(f"could not bracket x={x!r} on {branch.value}")

    def grow(start, stop):
        nonlocal steps
        y = start
        for _ in range(max_iter):
            steps += 1
            y *= 2.0
            if stop(y):
                return y
        raise ConvergenceError(f"could not bracket x={x!r} on {branch.value}")

    if branch is BranchId.POS_0:
        d = ctx.deltas[0]
        if x <= 0.0:
            return d, 1.0 / B, steps
        lo = 1.0 / B
        hi = grow(lo, lambda y: f(y) >= x)
        return max(lo, 0.5 * hi), hi, steps
    if branch is BranchId.POS_1:
        d = ctx.deltas[0]
        return shrink_to_zero(d, lambda y: f(y) >= x), d, steps
    if branch is BranchId.NEG_0:
        d2 = ctx.deltas[1]
        return d2, shrink_to_zero(d2, lambda y: f(y) <= x), steps
    if branch is BranchId.NEG_1:
        return ctx.deltas[0], ctx.deltas[1], steps
    d1 = ctx.deltas[0]
    return grow(d1, lambda y: f(y) >= x), d1, steps


def _initial_guess(x: float, ctx: LogLambertContext, branch: BranchId):
    B = ctx.B
    if branch in (BranchId.POS_0, BranchId.NEG_1) and abs(x) < 1e-2:
        return taylor_eval(x, B, 2)
    if branch is BranchId.POS_0 and x > math.e:
        w = lambert_w0(x)
        if B * w > 1.0:
            return w - math.log(math.log(B * w))
    elif branch in (BranchId.POS_1, BranchId.NEG_0) and abs(x) < 1e-3:
        # y -> 0: x ~ y ln(By)
        y = x / math.log(abs(B * x))
        for _ in range(3):
            y = x / math.log(B * y)
        return y
    elif branch is BranchId.NEG_2 and abs(x) < 1e-3:
        # y -> -inf: x ~ y ln(By) e^y
        y = math.log(-x)
        for _ in range(3):
            y = math.log(x / (y * math.log(B * y)))
        return y
    return None


def evaluate(x: float, ctx: LogLambertContext, branch: BranchId):
    """Evaluate ``W_L(x)`` on one branch.

    Parameters
    ----------
    x : float
        Argument inside the branch's domain (see the module table).
    ctx : LogLambertContext
        Constant ``B`` with its branch points, from :func:`branch_points`.
    branch : BranchId
        Branch to evaluate; must match the sign of ``B``.

    Returns
    -------
    y : float
        The branch value, with ``B*y > 0``.
    diag : EvalDiagnostics
        Iteration count, residual ``|f(y) - x|`` and final bracket width.
        ``derivative_singular`` is set when ``x`` is a branch-point image.

    Raises
    ------
    DomainError
        If ``x`` lies outside the branch domain or the branch does not exist
        for this sign of ``B``.
    ConvergenceError
        If the root cannot be bracketed or refined within the budget.
    """
    x = float(x)
    if math.isnan(x):
        raise DomainError("W_L of NaN")
    if not ctx.in_domain(x, branch):
        raise DomainError(_domain_message(x, ctx, branch))

    for d, fd in zip(ctx.deltas, ctx.images):
        if x == fd and _range_contains(ctx, branch, d):
            return d, EvalDiagnostics(0, 0.0, 0.0, derivative_singular=True)
    if x == 0.0:
        # only NEG_1 and POS_0 reach x = 0, both at y = 1/B
        return 1.0 / ctx.B, EvalDiagnostics(0, 0.0, 0.0)

    B = ctx.B
    if branch in (BranchId.POS_0, BranchId.NEG_1) and abs(x) <= _forward_noise(1.0 / B, B):
        # f cannot resolve x from 0 near y = 1/B: the root rounds to 1/B
        y = 1.0 / B
        return y, EvalDiagnostics(0, abs(forward(y, B) - x), 0.0)
    lo, hi, steps = _bracket(x, ctx, branch)
    y, iters, width = _roots.newton_bisect(
        lambda y: forward(y, B) - x,
        lambda y: forward_prime(y, B),
        lo, hi,
        y0=_initial_guess(x, ctx, branch),
        rel_tol=ctx.opts.rel_tol,
        max_iter=ctx.opts.max_iter,
    )
    resid = abs(forward(y, B) - x)
    if resid > ctx.opts.abs_tol * (1.0 + abs(x)) + _forward_noise(y, B):
        raise ConvergenceError(
            f"W_L residual {resid:g} exceeds tolerance at x={x!r} on {branch.value}")
    return y, EvalDiagnostics(steps + iters, resid, width)


def _range_contains(ctx, branch, d) -> bool:
    if branch is BranchId.NEG_1:
        return True
    if branch is BranchId.NEG_0:
        return d == ctx.deltas[1]
    # POS_0, POS_1 share delta; NEG_2 ends at delta1
    return d == ctx.deltas[0]


def derivative(x: float, ctx: LogLambertContext, branch: BranchId) -> float:
    """``dW_L/dx = e^{-y} / ((y + 1) ln(By) + 1)`` at ``y = W_L(x)``."""
    y, diag = evaluate(x, ctx, branch)
    denom = _singular_residual(y, ctx.B)
    if diag.derivative_singular or denom == 0.0:
        raise SingularityError(f"dW_L/dx is unbounded at the branch point x={x!r}")
    return math.exp(-y) / denom


def antiderivative(x: float, ctx: LogLambertContext, branch: BranchId) -> float:
    """Antiderivative of ``W_L`` with zero integration constant.

    ``F(x) = e^y [1 + (y^2 - y + 1) ln(By)] - Ei(y)`` with ``y = W_L(x)``.
    """
    y, _ = evaluate(x, ctx, branch)
    L = math.log(ctx.B * y)
    return math.exp(y) * (1.0 + (y * y - y + 1.0) * L) - exp_integral_ei(y)


def taylor_coefficients(B: float) -> tuple:
    """``(1/B, g1, g2, g3)`` of ``W_L(x) = 1/B + sum g_n x^n / n!`` about 0."""
    B = float(B)
    if B == 0.0 or not math.isfinite(B):
        raise DomainError(f"B must be finite and non-zero, got {B}")
    e1 = math.exp(-1.0 / B)
    return (
        1.0 / B,
        e1,
        -(2.0 + B) * e1 * e1,
        (4.0 * B * B + 9.0 * B + 9.0) * e1 ** 3,
    )


def taylor_eval(x: float, B: float, order: int = 3) -> float:
    """Truncated Maclaurin series of ``W_L`` through ``x**order`` (order 1-3)."""
    if order not in (1, 2, 3):
        raise DomainError(f"order must be 1, 2 or 3, got {order}")
    c0, g1, g2, g3 = taylor_coefficients(B)
    terms = (g1 * x, g2 / 2.0 * x * x, g3 / 6.0 * x ** 3)
    return c0 + sum(terms[:order])


def asymptotic_approx(x: float, B: float) -> float:
    """Large-x approximation ``W0(x) - ln(ln(B W0(x)))`` of the principal branch."""
    w = lambert_w0(x)
    if not B * w > 1.0:
        raise DomainError(f"asymptotic form needs B*W0(x) > 1, got {B * w!r}")
    return w - math.log(math.log(B * w))

"""Bracketed scalar root finders (bisection and Newton safeguarded by bisection)."""
from __future__ import annotations

import math
import sys
from typing import Callable

from .errors import ConvergenceError

_EPS = sys.float_info.epsilon


def _midpoint(a: float, b: float) -> float:
    # geometric midpoint when the bracket spans several octaves on one side of 0
    if a * b > 0.0:
        ra = abs(a)
        rb = abs(b)
        if max(ra, rb) > 4.0 * min(ra, rb):
            return math.copysign(math.sqrt(ra) * math.sqrt(rb), a)
    return a + 0.5 * (b - a)


def _size(a: float, b: float) -> float:
    # log-ratio for same-sign brackets, so geometric bisection counts as progress
    if a * b > 0.0:
        return abs(math.log(abs(b)) - math.log(abs(a)))
    return (b - a) / max(abs(a), abs(b))


def _collapsed(a: float, b: float) -> bool:
    m = _midpoint(a, b)
    return m in (a, b) or abs(b - a) <= 2 * _EPS * max(abs(a), abs(b))


def bisect(g: Callable[[float], float], a: float, b: float, max_iter: int = 2000):
    """Bisection to full precision on a sign-change bracket ``[a, b]``.

    Returns ``(root, iterations)``. The endpoint with the smaller ``|g|`` is
    returned once the bracket can no longer be split.
    """
    ga = g(a)
    gb = g(b)
    if ga == 0.0:
        return a, 0
    if gb == 0.0:
        return b, 0
    if (ga > 0) == (gb > 0):
        raise ConvergenceError(f"no sign change on [{a!r}, {b!r}]")
    for it in range(1, max_iter + 1):
        m = _midpoint(a, b)
        if m in (a, b):
            break
        gm = g(m)
        if gm == 0.0:
            return m, it
        if (gm > 0) == (ga > 0):
            a, ga = m, gm
        else:
            b, gb = m, gm
    else:
        raise ConvergenceError("bisection exceeded its iteration budget")
    return (a if abs(ga) <= abs(gb) else b), it


def newton_bisect(g: Callable[[float], float], dg: Callable[[float], float],
                  a: float, b: float, y0: float | None = None,
                  rel_tol: float = 1e-12, max_iter: int = 100):
    """Newton iteration kept inside a sign-change bracket.

    Any Newton step that leaves ``(a, b)`` or fails to shrink the bracket fast
    enough is replaced by a bisection step. Returns ``(root, iterations, width)``
    where ``width`` is the final bracket width.
    """
    if a > b:
        a, b = b, a
    ga = g(a)
    gb = g(b)
    if ga == 0.0:
        return a, 0, 0.0
    if gb == 0.0:
        return b, 0, 0.0
    if (ga > 0) == (gb > 0):
        raise ConvergenceError(f"no sign change on [{a!r}, {b!r}]")
    sa = ga > 0

    y = _midpoint(a, b) if y0 is None or not (a < y0 < b) else y0
    dx_old = dx = b - a
    checkpoint = _size(a, b)
    for it in range(1, max_iter + 1):
        gy = g(y)
        if gy == 0.0:
            return y, it, 0.0
        if (gy > 0) == sa:
            a, ga = y, gy
        else:
            b, gb = y, gy
        d = dg(y)
        step = gy / d if d != 0.0 and math.isfinite(d) else math.nan
        if abs(step) <= 1e-3 * rel_tol * abs(y) or abs(step) <= 2 * _EPS * abs(y):
            y_new = y - step
            return (y_new if a <= y_new <= b else y), it, b - a
        y_new = y - step
        if y_new == a or y_new == b:
            # the root is within rounding of an endpoint already evaluated
            return (a if abs(ga) <= abs(gb) else b), it, b - a
        # bisect when Newton leaves the bracket or fails to halve the step
        if not (a < y_new < b) or abs(2.0 * gy) > abs(dx_old * d):
            y_new = _midpoint(a, b)
        elif it % 16 == 0 and _size(a, b) > 0.5 * checkpoint:
            y_new = _midpoint(a, b)
        if it % 16 == 0:
            checkpoint = _size(a, b)
        dx_old, dx = dx, y_new - y
        y = y_new
        if abs(dx) <= 1e-3 * rel_tol * abs(y) or abs(dx) <= 2 * _EPS * abs(y):
            return y, it, b - a
        if _collapsed(a, b):
            return y, it, b - a
    raise ConvergenceError("safeguarded Newton exceeded its iteration budget")

"""Sampling grids shared by the core and acceptance tests."""
import math

import numpy as np

from loglambert import BranchId

BS = (1.0, 2.0, -1.0, -0.5)

# how far the sampled y-range reaches towards an unbounded or limiting end
Y_FAR = 30.0
Y_FAR_NEG = -60.0
Y_NEAR_ZERO = 1e-12


def y_range(ctx, branch):
    """Open interval of attainable y on a branch, truncated at far ends."""
    if branch is BranchId.POS_0:
        return ctx.delta, ctx.delta + Y_FAR
    if branch is BranchId.POS_1:
        return Y_NEAR_ZERO, ctx.delta
    if branch is BranchId.NEG_0:
        return ctx.delta2, -Y_NEAR_ZERO
    if branch is BranchId.NEG_1:
        return ctx.delta1, ctx.delta2
    return Y_FAR_NEG, ctx.delta1


def y_samples(ctx, branch, n=200):
    """``n`` y values strictly inside the branch range.

    Ranges touching y = 0 are sampled geometrically so that the approach to
    zero is exercised as well as the bulk.
    """
    lo, hi = y_range(ctx, branch)
    if branch is BranchId.POS_1:
        return np.geomspace(lo, hi, n + 2)[1:-1]
    if branch is BranchId.NEG_0:
        return -np.geomspace(-hi, -lo, n + 2)[1:-1]
    return np.linspace(lo, hi, n + 2)[1:-1]


def x_interior(ctx, branch, n=50, margin=1e-3, far=50.0):
    """``n`` x values in the branch domain, ``margin`` away from branch-point images and 0."""
    lo, hi, _, _ = ctx.domain(branch)
    lo = lo + margin
    hi = min(hi, far) - margin if math.isfinite(hi) else far
    if branch in (BranchId.POS_1, BranchId.NEG_2):
        hi = -margin
    return np.linspace(lo, hi, n)


def admissible_temperatures(spec, gc, dp, n=20, lo=1e-2, hi=1e2, rel_step=1e-5,
                            margin=1e-2):
    """``n`` temperatures, evenly picked from a log grid, where the heat function,
    its specific heat and both finite-difference neighbours all exist.

    Temperatures whose W_L argument lies within ``margin * (1 + |f(delta)|)``
    of a branch-point image are skipped: the specific heat diverges there and
    a finite difference stops being a usable reference.
    """
    from loglambert import branch_points, thermostatics as th
    from loglambert.errors import LogLambertError

    dc = th.derived_constants(spec, gc, dp)
    images = branch_points(dc.B).images
    ok = []
    for T in np.geomspace(lo, hi, 10 * n):
        T = float(T)
        x = dc.c / (gc.k * T)
        if any(abs(x - fd) < margin * (1 + abs(fd)) for fd in images):
            continue
        try:
            if th.heat_function(spec, gc, dp, T).specific_heat is None:
                continue
            th.heat_function(spec, gc, dp, T * (1 - rel_step))
            th.heat_function(spec, gc, dp, T * (1 + rel_step))
        except LogLambertError:
            continue
        ok.append(T)
    if len(ok) < n:
        raise AssertionError(f"only {len(ok)} admissible temperatures for {spec}")
    idx = np.linspace(0, len(ok) - 1, n).round().astype(int)
    return [ok[i] for i in idx]

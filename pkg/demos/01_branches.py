"""Walk the real branches of the logarithmic Lambert function.

For each scale B the forward map f(y) = y ln(By) e^y has one turning point
when B > 0 and two when B < 0. Each monotone piece between turning points is
a branch of the inverse W_L. This script prints the turning points, the
domain of every branch, and one sample evaluation checked against f.
"""
from loglambert import branch_points, evaluate, forward

for B in (1.0, 2.0, -1.0, -0.5):
    ctx = branch_points(B)
    print(f"B = {B:g}")
    for d, fd in zip(ctx.deltas, ctx.images):
        print(f"  turning point y = {d:.12f}, f(y) = {fd:.12f}")
    for branch in ctx.branches():
        lo, hi, _, _ = ctx.domain(branch)
        # a point a quarter of the way into the (possibly unbounded) domain
        if hi == float("inf"):
            x = lo + 10.0
        else:
            x = lo + 0.25 * (hi - lo)
        y, diag = evaluate(x, ctx, branch)
        print(f"  {branch.name:6s} x in [{lo:.6g}, {hi:.6g}]: W_L({x:.6g}) = {y:.12g}, "
              f"f(W_L) - x = {forward(y, B) - x:.1e}, {diag.iterations} iterations")
    print()

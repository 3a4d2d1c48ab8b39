"""How good is the large-x approximation of W_L?

For B = 1 the principal branch grows like the ordinary Lambert function with
a doubly logarithmic correction. At x = f(n), n = 4..10, the exact value is n
and the approximation's relative error falls slowly with x.
"""
from loglambert import BranchId, asymptotic_approx, branch_points, evaluate, forward

ctx = branch_points(1.0)
print(f"{'x':>14s} {'exact':>10s} {'approx':>10s} {'rel error':>12s}")
for n in range(4, 11):
    x = forward(float(n), 1.0)
    exact, _ = evaluate(x, ctx, BranchId.POS_0)
    approx = asymptotic_approx(x, 1.0)
    print(f"{x:14.4f} {exact:10.6f} {approx:10.4f} {abs(approx - exact) / exact:12.5e}")

# further out the error keeps shrinking, but slowly
for x in (1e8, 1e16, 1e64, 1e256):
    exact, _ = evaluate(x, ctx, BranchId.POS_0)
    err = abs(asymptotic_approx(x, 1.0) - exact) / exact
    print(f"x = {x:.0e}: rel error {err:.3e}")

"""Independent reference computations for the test suite.

Nothing here imports loglambert. Each oracle uses the most naive method that
is still trustworthy (plain bisection, fixed-start Newton, textbook series,
or mpmath at 50 digits), so that agreement with the package means something.

Running this file prints the values frozen into the tests.
"""
import math

import mpmath

mpmath.mp.dps = 50


def w0_newton(x, w=0.5, steps=200):
    """Lambert W0 by plain Newton on w e^w - x from a fixed start."""
    for _ in range(steps):
        w_new = w - (w * math.exp(w) - x) / (math.exp(w) * (w + 1.0))
        if w_new == w:
            break
        w = w_new
    return w


def ei_power_series(x):
    """Ei(x) = gamma + ln|x| + sum x^n/(n n!), summed until the terms vanish."""
    gamma = 0.5772156649015329
    s = 0.0
    term = 1.0
    n = 1
    while True:
        term *= x / n
        add = term / n
        if s + add == s:
            break
        s += add
        n += 1
    return gamma + math.log(abs(x)) + s


def e1_continued_fraction(z, depth=400):
    """E1(z) for z > 0 from the classical continued fraction, evaluated bottom-up."""
    # E1(z) = e^-z / (z + 1/(1 + 1/(z + 2/(1 + 2/(z + ...)))))
    t = 0.0
    for n in range(depth, 0, -1):
        t = n / (1.0 + n / (z + t))
    return math.exp(-z) / (z + t)


def bisect(g, lo, hi, iters=200):
    """Plain arithmetic bisection; returns the midpoint of the final bracket."""
    glo = g(lo)
    assert (glo > 0) != (g(hi) > 0), "no sign change"
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        gm = g(mid)
        if (gm > 0) == (glo > 0):
            lo, glo = mid, gm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def f_forward(y, B):
    return y * math.log(B * y) * math.exp(y)


def singular_eq(y, B):
    return (y + 1.0) * math.log(B * y) + 1.0


def branch_point(B, lo, hi):
    """Root of (y+1) ln(By) = -1 on the stated interval."""
    return bisect(lambda y: singular_eq(y, B), lo, hi)


def wl_bisect(x, B, lo, hi):
    """y in [lo, hi] with y ln(By) e^y = x, by bisection."""
    return bisect(lambda y: f_forward(y, B) - x, lo, hi)


def adaptive_simpson(f, a, b, tol=1e-12, depth=60):
    """Adaptive Simpson quadrature with Richardson correction."""
    def simpson(fa, fm, fb, a, b):
        return (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    def rec(a, b, fa, fm, fb, whole, tol, depth):
        m = 0.5 * (a + b)
        lm = 0.5 * (a + m)
        rm = 0.5 * (m + b)
        flm = f(lm)
        frm = f(rm)
        left = simpson(fa, flm, fm, a, m)
        right = simpson(fm, frm, fb, m, b)
        if depth <= 0 or abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return (rec(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
                + rec(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1))

    fa = f(a)
    fb = f(b)
    fm = f(0.5 * (a + b))
    return rec(a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, depth)


def three_param_log_mp(x, q, qp, r):
    """ln_{q,q',r} x composed layer by layer at 50 digits."""
    x, q, qp, r = (mpmath.mpf(v) for v in (x, q, qp, r))
    lq = (x ** (1 - q) - 1) / (1 - q)
    l2 = (mpmath.e ** ((1 - qp) * lq) - 1) / (1 - qp)
    return (mpmath.e ** ((1 - r) * l2) - 1) / (1 - r)


def q_log_plain(x, q):
    return (x ** (1.0 - q) - 1.0) / (1.0 - q)


def gas_heat_oracle(c_beta, B, lo, hi, a, exponent=None, scale_log=None):
    """Heat function from a bisection solve of y e^y ln(By) = c beta.

    Power-law ensembles pass ``exponent`` (Q = (a ln By)^exponent);
    exponential ensembles pass ``scale_log`` (Q = scale_log * ln(a ln By)).
    """
    y = wl_bisect(c_beta, B, lo, hi)
    u = math.log(B * y)
    if exponent is not None:
        return (a * u) ** exponent
    return scale_log * math.log(a * u)


if __name__ == "__main__":
    print("W0(1)", repr(w0_newton(1.0)))
    print("Ei(1)", repr(ei_power_series(1.0)))
    print("Ei(-1)", repr(-e1_continued_fraction(1.0)))
    print("Ei(-1) series", repr(ei_power_series(-1.0)))
    print("Ei(5)", repr(ei_power_series(5.0)), mpmath.ei(5))
    print("Ei(-5)", repr(-e1_continued_fraction(5.0)), mpmath.ei(-5))
    print("lgamma(11)", repr(math.log(3628800)))
    for B, iv in ((1.0, [(0.1, 0.9)]), (2.0, [(0.05, 0.45)]),
                  (-1.0, [(-5.0, -1.1), (-0.9, -0.1)]),
                  (-0.5, [(-10.0, -2.1), (-1.9, -0.05)])):
        for lo, hi in iv:
            d = branch_point(B, lo, hi)
            print("delta", B, repr(d), repr(f_forward(d, B)), singular_eq(d, B))
    print("F(0) B=1", repr(math.e - ei_power_series(1.0)))
    print("F(0) B=1 printed -2Ei", repr(math.e - 2 * ei_power_series(1.0)))
    x1 = 4 * math.log(4) * math.exp(4)
    print("x(4)", repr(x1), "x(5)", repr(5 * math.log(5) * math.exp(5)))
    print("quad [0, 302.7564]", repr(adaptive_simpson(
        lambda x: wl_bisect(x, 1.0, 1e-300 if x < 0 else 1.0 if x == 0 else 1.0 - 1e-15, 20.0)
        if x != 0 else 1.0, 0.0, 302.7564, tol=1e-11)))
    print("3plog(2;1.2,1.1,1.05)", three_param_log_mp(2, 1.2, 1.1, 1.05))
    print("3plog(4;1.2,1.1,1.05)", three_param_log_mp(4, 1.2, 1.1, 1.05))
    # microcanonical N=10, D=3, V=1, m=h=k=1, (1.2, 1.1, 1.1), T=1
    q, qp, r = 1.2, 1.1, 1.1
    A = math.exp(-(1 - qp) / (1 - q))
    B = (1 - qp) / ((1 - r) * A)
    N, D = 10, 3
    s = D * N / 2
    log_xi = N * (0.0 + 1.5 * math.log(2 * math.pi)) - math.lgamma(N + 1) - math.lgamma(s + 1)
    a = (1 - q) / ((1 - qp) * math.exp((1 - q) * log_xi))
    c = (1 - r) * math.exp((1 - r) / (1 - qp)) / (s * (1 - q))
    print("mc c", c, "B", B)
    print("E_mc(T=1)", repr(gas_heat_oracle(c, B, 1 / B, 50.0, a, exponent=1 / (s * (1 - q)))))
    # Hill mu=1, V=1, D=3, same dp, T=1
    sp = 2.0 / 3.0
    log_xi_h = 1.0 * math.exp(1.5 * (0.0 + 1.0 - math.log(1.5)) + 1.5 * math.log(2 * math.pi))
    a_h = (1 - q) / ((1 - qp) * math.exp((1 - q) * log_xi_h))
    c_h = sp * (1 - r) * math.exp((1 - r) / (1 - qp)) / (1 - q)
    print("hill c", c_h)
    print("L_hill(T=1)", repr(gas_heat_oracle(c_h, B, 1 / B, 50.0, a_h, scale_log=sp / (1 - q))))

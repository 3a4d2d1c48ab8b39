"""Heat and specific heat of an ideal gas under three-parameter entropy.

The temperature relation of each ensemble reduces to W_L(c/kT) with a scale
B fixed by the deformation parameters (q, q', r). Which branch applies depends
on the parameter region. Here the microcanonical gas is swept over
temperature for two regions, and the result is compared with a direct
recomputation of the entropy.
"""
import numpy as np

from loglambert import thermostatics as th

gc = th.GasConstants()
spec = th.Microcanonical(N=10, V=1.0)

for params in ((1.2, 1.1, 1.1), (0.9, 0.95, 0.9)):
    dp = th.DeformationParams(*params)
    dc = th.derived_constants(spec, gc, dp)
    print(f"(q, q', r) = {params}: B = {dc.B:.6g}, c = {dc.c:.6g}, "
          f"branch {th.select_branch(dp).name}")
    print(f"  {'T':>8s} {'heat':>14s} {'C':>14s} {'S(heat)':>14s}")
    for T in np.geomspace(0.1, 10, 7):
        res = th.heat_function(spec, gc, dp, float(T))
        S = th.entropy_of_system(spec, gc, dp, res.heat)
        S_direct = th.entropy_of_system_direct(spec, gc, dp, res.heat)
        assert abs(S - S_direct) <= 1e-9 * abs(S_direct)
        print(f"  {T:8.3f} {res.heat:14.6g} {res.specific_heat:14.6g} {S:14.6g}")
    print()

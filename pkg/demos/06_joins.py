"""
Joining a complete graph
========================

Joining K_p raises chi_DP by one per vertex once it matches chi + p, and
the set B_p of failing t values can only shrink.  For the gadget one
extra vertex already makes the join partially DP-nice.
"""
from dpcolor import constructions as C
from dpcolor.join import join_threshold

for name, g in (("gadget", C.gadget_g()), ("C5", C.cycle(5))):
    rep = join_threshold(g, 3)
    for r in rep.rows:
        print(f"{name} v K_{r.p}: n={r.n} chi={r.chi} chi_DP={r.chi_dp} B_p={sorted(r.failing)}")
    print(f"  smallest nice p: {rep.threshold}; chain holds: {all(ok for _, ok in rep.chain_checks())}")

"""
Subadditivity and the bounds it gives
=====================================

Gluing a t1-fold and a t2-fold cover gives a (t1+t2)-fold cover, so
alpha^DP is subadditive in t.  The ceiling bound, the divisor rule and
the half-the-values count all follow; here they are checked with exact
rationals on a few graphs.
"""
from dpcolor import constructions as C
from dpcolor.bounds import bound_report, half_values_report, subadditivity_check
from dpcolor.solver import dp_profile
from dpcolor.serialize import rational

for name in ("q3", "v8", "gadget", "complete:4"):
    g = C.parse_graph_spec(name)
    p = dp_profile(g)
    print(f"{name}: chi_DP={p.chi_dp}, alpha_t^DP={[p.alpha(t) for t in range(1, p.chi_dp + 1)]}")
    v = subadditivity_check(g, [1, 1], profile=p)
    print(f"  alpha_2 <= 2 alpha_1: {v.lhs} <= {v.rhs}")
    for t in range(1, p.chi_dp + 1):
        rep = bound_report(g, t, p.chi_dp, p.alpha(t), name)
        print(f"  t={t}:", ", ".join(f"{b.name} {rational(b.value)}" for b in rep.bounds))
    h = half_values_report(g, profile=p)
    print(f"  (*) holds for {h.count} of {p.chi_dp - 1} values below chi_DP (need {h.required})")

"""
Chains of gadgets
=================

The gadget is K4 with one edge subdivided.  Chaining copies keeps
alpha_2^DP at three per block while the niceness target grows to
10/3 per block, so the chain is never partially DP-nice.  The cubic
graph M built from two gadgets shows the subcubic bound (5n-2)/8 is tight.
"""
from fractions import Fraction

from dpcolor import constructions as C
from dpcolor.graph import coloring_number, feedback_vertex_number
from dpcolor.solver import alpha_t_dp, chi_dp, is_partially_dp_nice

for blocks in (1, 2):
    g = C.chain_gstar(blocks)
    a = alpha_t_dp(g, 2).value
    print(f"{blocks} block(s): n={g.n} tau={feedback_vertex_number(g)[0]} col={coloring_number(g)} "
          f"chi_DP={chi_dp(g)} alpha_2^DP={a} target={Fraction(2 * g.n, 3)} "
          f"nice={is_partially_dp_nice(g).nice}")

m = C.m_graph()
print("M: alpha_2^DP =", alpha_t_dp(m, 2).value, " (5n-2)/8 =", Fraction(5 * m.n - 2, 8))

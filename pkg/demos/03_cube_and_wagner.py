"""
The cube and the Wagner graph
=============================

Both are cubic on 8 vertices with chi_DP = 3, so partial DP-niceness at
t = 2 asks for a transversal of size at least 16/3, i.e. 6.  The cube
falls one short; the Wagner graph does not.
"""
from dpcolor import constructions as C
from dpcolor.solver import is_partially_dp_nice
from dpcolor.twist import max_partial_twist, three_cycle_argument, twist_from_edges

q3 = C.q3()
tw = twist_from_edges(q3, C.Q3_LEMMA_TWISTS)
print("cube with four twisted edges:", max_partial_twist(tw).size, "of 8 coloured")

for name, g in (("Q3", q3), ("V8", C.wagner_v8())):
    v = is_partially_dp_nice(g)
    print(f"{name}: chi_DP={v.chi_dp}, nice={v.nice}, failing t={v.failing}")

# the Wagner lower bound: three unicyclic subgraphs whose cycles share
# every edge twice, so some cycle always has the right parity
res = three_cycle_argument(C.wagner_v8(), C.V8_THREE_CYCLES)
print(f"checked {res.assignments} twists: parity even {res.parity_sum_even}, "
      f"always a colourable 6-vertex part {res.some_part_colorable and res.max_partial_min >= 6}")

"""
Covers, gauges and independent transversals
===========================================

A t-fold cover gives every vertex a list of t slots and every edge a
matching between the two lists.  A transversal picks at most one slot per
vertex with no matched pair; alpha_t^DP is the worst case over covers of
the largest transversal.
"""
import random

from dpcolor import constructions as C
from dpcolor.cover import apply_gauge, canonicalize, count_canonical_covers, expand, identity_cover
from dpcolor.solver import alpha_t_dp, max_transversal

g = C.cycle(5)

# the identity cover is ordinary colouring with t colours
c = identity_cover(g, 2)
print("identity 2-fold cover of C5:", max_transversal(c))

# the cover graph H has n*t nodes, list cliques plus matching edges
h = expand(c)
print("cover graph:", len(h.nodes), "nodes,", len(h.edges()), "edges")

# renaming slots (a gauge) never changes the best transversal
rng = random.Random(1)
gauge = tuple(tuple(rng.sample(range(3), 3)) for _ in range(g.n))
c3 = identity_cover(g, 3)
print("gauge invariant:", max_transversal(c3)[0] == max_transversal(apply_gauge(c3, gauge))[0])

# up to gauge, a cover is fixed by its matchings off a spanning tree
canon, _ = canonicalize(apply_gauge(c3, gauge))
print("canonical form is the identity again:", canon == c3)
print("canonical 2-fold covers of Q3:", count_canonical_covers(C.q3(), 2))

cert = alpha_t_dp(C.q3(), 2)
print(f"alpha_2^DP(Q3) = {cert.value} (worst cover #{cert.cover_index}, witness {cert.witness})")

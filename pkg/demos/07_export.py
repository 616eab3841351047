"""
Exporting graphs and covers
===========================

Covers serialise to a small JSON document and render to Graphviz DOT,
one cluster per vertex list, with a maximum transversal filled in.
"""
from dpcolor import constructions as C
from dpcolor.serialize import cover_to_dot, dumps_cover, graph_to_dot, loads_cover
from dpcolor.solver import alpha_t_dp, max_transversal
from dpcolor.twist import twist_from_edges, twist_to_cover

print(graph_to_dot(C.gadget_g(), names=C.GADGET_NAMES))

worst = alpha_t_dp(C.wagner_v8(), 2)
text = dumps_cover(worst.worst_cover)
print("worst V8 cover as JSON round trips:", loads_cover(text) == worst.worst_cover)

cover = twist_to_cover(twist_from_edges(C.q3(), C.Q3_LEMMA_TWISTS))
size, witness = max_transversal(cover)
dot = cover_to_dot(cover, witness)
print("Q3 twisted cover:", dot.count("fillcolor"), "highlighted of", 2 * cover.n, "cover vertices")

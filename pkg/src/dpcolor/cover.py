"""t-fold covers of a graph, gauge transformations and canonical enumeration.

A cover stores, for every base edge ``(u, v)`` with ``u < v``, a tuple
``m`` of length ``t`` where ``m[i]`` is the slot of ``v`` matched to slot
``i`` of ``u`` (``None`` when slot ``i`` is unmatched).  List cliques are
implicit, which makes the partition, clique and non-edge requirements
hold by construction; only the matching requirement needs checking.

Canonical enumeration fixes a gauge: every edge of the BFS spanning
forest carries the identity matching, and each non-forest edge ranges
over all ``t!`` permutations.  By the usual sufficiency remark only
perfect matchings need to be enumerated for extremal quantities.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import NamedTuple

from .budget import ensure
from .graph import Graph


class UnsupportedCover(ValueError):
    """Operation requires a perfect cover (or a particular fold)."""


@dataclass(frozen=True)
class Cover:
    base: Graph
    fold: int
    matchings: tuple

    def __post_init__(self):
        if self.fold < 1:
            raise ValueError("fold must be positive")
        mats = tuple(tuple(m) for m in self.matchings)
        if len(mats) != self.base.m:
            raise ValueError(f"expected {self.base.m} matchings, got {len(mats)}")
        for m in mats:
            if len(m) != self.fold:
                raise ValueError(f"matching {m} does not have length {self.fold}")
        object.__setattr__(self, "matchings", mats)

    @property
    def n(self):
        return self.base.n

    def is_perfect(self):
        full = set(range(self.fold))
        return all(None not in m and set(m) == full for m in self.matchings)

    def matching(self, u, v):
        """Slot map from ``u``'s list to ``v``'s list, in either edge orientation."""
        if u < v:
            return self.matchings[self.base.edge_index()[(u, v)]]
        m = self.matchings[self.base.edge_index()[(v, u)]]
        inv = [None] * self.fold
        for i, j in enumerate(m):
            if j is not None:
                inv[j] = i
        return tuple(inv)


def identity_cover(g, t):
    ident = tuple(range(t))
    return Cover(g, t, tuple(ident for _ in g.edges))


def cover_from_perms(g, t, perms):
    """Cover with the given per-edge maps (``{(u, v): images}``), identity elsewhere."""
    ident = tuple(range(t))
    norm = {}
    for (u, v), m in perms.items():
        if u < v:
            norm[(u, v)] = tuple(m)
        else:
            inv = [None] * t
            for i, j in enumerate(m):
                if j is not None:
                    inv[j] = i
            norm[(v, u)] = tuple(inv)
    for e in norm:
        if e not in g.edge_index():
            raise ValueError(f"{e} is not an edge of the base graph")
    return Cover(g, t, tuple(norm.get(e, ident) for e in g.edges))


# ---------------------------------------------------------------- validation

class Violation(NamedTuple):
    axiom: int
    edge: tuple | None
    message: str


def validate_cover(c):
    """``None`` when ``c`` is a valid cover, else the first :class:`Violation`."""
    t = c.fold
    for e, m in zip(c.base.edges, c.matchings):
        images = [j for j in m if j is not None]
        for j in images:
            if not (isinstance(j, int) and 0 <= j < t):
                return Violation(3, e, f"slot {j!r} out of range on edge {e}")
        if len(set(images)) != len(images):
            return Violation(3, e, f"edge {e} matches two slots to one slot")
    h = expand(c)
    seen = set()
    for v in range(c.n):
        lst = set(h.lists[v])
        if len(lst) != t or lst & seen:
            return Violation(1, None, f"list of vertex {v} is not a part of size {t}")
        seen |= lst
        for a in lst:
            if (lst - {a}) - h.adjacency[a]:
                return Violation(2, None, f"list of vertex {v} is not a clique")
    if seen != set(h.nodes):
        return Violation(1, None, "lists do not cover the node set")
    for a in h.nodes:
        for b in h.adjacency[a]:
            if a[0] != b[0] and not c.base.has_edge(a[0], b[0]):
                return Violation(4, (a[0], b[0]), f"cover edge {a}-{b} over a non-edge")
    return None


# ---------------------------------------------------------------- cover graph

@dataclass(frozen=True)
class CoverGraph:
    """Explicit ``H``: nodes ``(v, i)``, list cliques plus matching edges."""

    fold: int
    nodes: tuple
    lists: tuple
    adjacency: dict

    def node_index(self, node):
        v, i = node
        return v * self.fold + i

    def edges(self):
        out = set()
        for a, nbrs in self.adjacency.items():
            for b in nbrs:
                out.add((a, b) if a < b else (b, a))
        return sorted(out)

    def to_graph(self):
        """As a :class:`Graph` on ``n*t`` vertices, node ``(v, i)`` -> ``v*t + i``."""
        idx = self.node_index
        return Graph(len(self.nodes), tuple((idx(a), idx(b)) for a, b in self.edges()))


def expand(c):
    t = c.fold
    nodes = tuple((v, i) for v in range(c.n) for i in range(t))
    adjacency = {a: set() for a in nodes}
    for v in range(c.n):
        for i in range(t):
            for j in range(t):
                if i != j:
                    adjacency[(v, i)].add((v, j))
    for (u, v), m in zip(c.base.edges, c.matchings):
        for i, j in enumerate(m):
            if j is not None:
                adjacency[(u, i)].add((v, j))
                adjacency[(v, j)].add((u, i))
    lists = tuple(tuple((v, i) for i in range(t)) for v in range(c.n))
    return CoverGraph(t, nodes, lists, {a: frozenset(s) for a, s in adjacency.items()})


def conflict_masks(c):
    """Cross-list neighbourhoods as bitmasks over node ids ``v*t + i``."""
    t = c.fold
    masks = [0] * (c.n * t)
    for (u, v), m in zip(c.base.edges, c.matchings):
        bu, bv = u * t, v * t
        for i, j in enumerate(m):
            if j is not None:
                masks[bu + i] |= 1 << (bv + j)
                masks[bv + j] |= 1 << (bu + i)
    return masks


# --------------------------------------------------------------------- gauges

def identity_gauge(n, t):
    return tuple(tuple(range(t)) for _ in range(n))


def _inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def _compose(p, q):
    """``p o q``."""
    return tuple(p[q[i]] for i in range(len(q)))


def check_gauge(gauge, n, t):
    if len(gauge) != n:
        raise ValueError("gauge needs one permutation per vertex")
    for g in gauge:
        if sorted(g) != list(range(t)):
            raise ValueError(f"{g} is not a permutation of range({t})")


def apply_gauge(c, gauge):
    """Rename slot ``i`` of vertex ``v`` to ``gauge[v][i]``.

    The new map on ``uv`` is ``g_v o m_uv o g_u^-1``.
    """
    check_gauge(gauge, c.n, c.fold)
    t = c.fold
    mats = []
    for (u, v), m in zip(c.base.edges, c.matchings):
        gu_inv = _inverse(gauge[u])
        gv = gauge[v]
        new = []
        for j in range(t):
            k = m[gu_inv[j]]
            new.append(None if k is None else gv[k])
        mats.append(tuple(new))
    return Cover(c.base, t, tuple(mats))


def is_gauge_equivalent(c, d):
    """True when some gauge maps ``c`` onto ``d`` (both perfect, same base)."""
    if c.base != d.base or c.fold != d.fold:
        return False
    cc, _ = canonicalize(c)
    dc, _ = canonicalize(d)
    if cc == dc:
        return True
    # canonical forms on the forest are unique only up to a global per-component
    # relabelling; resolve that residual freedom by brute force
    for gauge in _component_gauges(c.base, c.fold):
        if apply_gauge(cc, gauge) == dc:
            return True
    return False


def _component_gauges(g, t):
    comps = g.components()
    owner = [0] * g.n
    for ci, comp in enumerate(comps):
        for v in comp:
            owner[v] = ci
    for choice in product(permutations(range(t)), repeat=len(comps)):
        yield tuple(choice[owner[v]] for v in range(g.n))


# ----------------------------------------------------------- spanning forests

def spanning_forest(g):
    """BFS forest: roots are least unvisited vertices, neighbours in increasing order.

    Returns ``(tree_edges, parent, order)`` where ``tree_edges`` are
    normalised ``(u, v)`` pairs, ``parent[root] = -1`` and ``order`` is the
    BFS visiting order.
    """
    parent = [-2] * g.n
    order = []
    tree = []
    for root in range(g.n):
        if parent[root] != -2:
            continue
        parent[root] = -1
        q = deque([root])
        while q:
            u = q.popleft()
            order.append(u)
            for w in g.neighbors(u):
                if parent[w] == -2:
                    parent[w] = u
                    tree.append((u, w) if u < w else (w, u))
                    q.append(w)
    return tuple(sorted(tree)), tuple(parent), tuple(order)


def non_forest_edges(g):
    tree = set(spanning_forest(g)[0])
    return tuple(e for e in g.edges if e not in tree)


def canonicalize(c):
    """Gauge-equivalent cover that is the identity on every spanning-forest edge.

    Returns ``(canonical_cover, gauge)`` with
    ``apply_gauge(c, gauge) == canonical_cover``.
    """
    if not c.is_perfect():
        raise UnsupportedCover("canonicalize needs a perfect cover")
    t = c.fold
    _, parent, order = spanning_forest(c.base)
    gauge = [None] * c.n
    for v in order:
        p = parent[v]
        if p == -1:
            gauge[v] = tuple(range(t))
            continue
        m = c.matching(p, v)  # slot of p -> slot of v
        # want g_v o m o g_p^-1 = id, i.e. g_v = g_p o m^-1
        gauge[v] = _compose(gauge[p], _inverse(m))
    gauge = tuple(gauge)
    return apply_gauge(c, gauge), gauge


# ---------------------------------------------------------------- enumeration

def count_canonical_covers(g, t):
    return factorial(t) ** len(non_forest_edges(g))


def _canonical_frame(g, t):
    free = non_forest_edges(g)
    pos = g.edge_index()
    slots = [pos[e] for e in free]
    perms = list(permutations(range(t)))
    return slots, perms


def cover_at_index(g, t, k):
    """The ``k``-th canonical cover (mixed radix, first non-forest edge most significant)."""
    slots, perms = _canonical_frame(g, t)
    total = len(perms) ** len(slots)
    if not 0 <= k < total:
        raise IndexError(f"cover index {k} outside [0, {total})")
    digits = []
    for _ in slots:
        k, d = divmod(k, len(perms))
        digits.append(d)
    digits.reverse()
    ident = tuple(range(t))
    mats = [ident] * g.m
    for s, d in zip(slots, digits):
        mats[s] = perms[d]
    return Cover(g, t, tuple(mats))


def enumerate_covers(g, t, budget=None, start=0, stop=None):
    """Canonical perfect ``t``-fold covers of ``g`` with indices in ``[start, stop)``.

    The total count ``(t!)^(m - n + c)`` is checked against the budget
    before anything is yielded.
    """
    if t < 1:
        raise ValueError("t must be positive")
    budget = ensure(budget)
    total = count_canonical_covers(g, t)
    stop = total if stop is None else min(stop, total)
    budget.check_covers(max(0, stop - start))
    slots, perms = _canonical_frame(g, t)
    ident = tuple(range(t))
    base = [ident] * g.m
    if start >= stop:
        return
    first = cover_at_index(g, t, start)
    k = start
    # odometer from the start index; last free edge varies fastest
    digits = [perms.index(first.matchings[s]) for s in slots]
    while k < stop:
        mats = list(base)
        for s, d in zip(slots, digits):
            mats[s] = perms[d]
        yield Cover(g, t, tuple(mats))
        k += 1
        for pos in range(len(digits) - 1, -1, -1):
            digits[pos] += 1
            if digits[pos] < len(perms):
                break
            digits[pos] = 0

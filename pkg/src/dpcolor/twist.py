"""Two-fold covers as twist assignments ``f: E(G) -> {0, 1}``.

With lists ``{v^0, v^1}``, ``f(uv) = 0`` is the straight matching
``u^0v^0, u^1v^1`` and ``f(uv) = 1`` is the swap.  A full colouring exists
iff every cycle has ``sum f == |C| (mod 2)``, i.e. iff the parity
constraints ``s(u) xor s(v) = 1 - f(uv)`` are consistent.  That check is
done with a parity union-find; on success the colouring itself is built
by contracting the twisted edges and two-colouring what is left.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .budget import ensure
from .cover import Cover, UnsupportedCover, count_canonical_covers, non_forest_edges
from .graph import Graph, _bits
from .graph import feedback_vertex_number, induced_subgraph, vertices_of
from .solver import AlphaCertificate

_STRAIGHT = (0, 1)
_SWAP = (1, 0)


@dataclass(frozen=True)
class TwistAssignment:
    base: Graph
    bits: tuple

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if len(bits) != self.base.m:
            raise ValueError(f"expected {self.base.m} twist bits, got {len(bits)}")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("twist bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    def f(self, u, v):
        e = (u, v) if u < v else (v, u)
        return self.bits[self.base.edge_index()[e]]

    def twisted_edges(self):
        return tuple(e for e, b in zip(self.base.edges, self.bits) if b)


def twist_from_edges(g, twisted=()):
    """Assignment with ``f = 1`` exactly on ``twisted``."""
    idx = g.edge_index()
    bits = [0] * g.m
    for u, v in twisted:
        e = (u, v) if u < v else (v, u)
        if e not in idx:
            raise ValueError(f"{e} is not an edge")
        bits[idx[e]] = 1
    return TwistAssignment(g, tuple(bits))


def cover_to_twist(c):
    if c.fold != 2 or not c.is_perfect():
        raise UnsupportedCover("twist representations need a perfect 2-fold cover")
    return TwistAssignment(c.base, tuple(0 if m == _STRAIGHT else 1 for m in c.matchings))


def twist_to_cover(tw):
    return Cover(tw.base, 2, tuple(_SWAP if b else _STRAIGHT for b in tw.bits))


def restrict(tw, vertices):
    """Twist on ``G[S]``; returns ``(twist, index_map)`` like ``induced_subgraph``."""
    sub, keep = induced_subgraph(tw.base, vertices)
    bits = tuple(tw.f(keep[u], keep[v]) for u, v in sub.edges)
    return TwistAssignment(sub, bits), keep


def cycle_parity_sum(tw, cycle):
    """``(sum of f over the cycle mod 2, cycle length mod 2)``.

    The cycle satisfies the parity criterion iff the two entries agree.
    """
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        raise ValueError(f"{cycle} is not a cycle")
    total = 0
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        if not tw.base.has_edge(u, v):
            raise ValueError(f"{u}-{v} is not an edge, so {cycle} is not a cycle")
        total += tw.f(u, v)
    return total % 2, k % 2


# ----------------------------------------------------------------- feasibility

@dataclass
class Feasibility:
    feasible: bool
    transversal: tuple | None = None  # s[v] in {0, 1}
    cycle: tuple | None = None  # violating cycle when infeasible

    def __bool__(self):
        return self.feasible


class _ParityUnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.parity = [0] * n  # parity relative to parent
        self.rank = [0] * n

    def find(self, x):
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        acc = 0
        for y in reversed(path):
            acc ^= self.parity[y]
            self.parity[y] = acc
            self.parent[y] = root
        return root

    def parity_of(self, x):
        self.find(x)
        return self.parity[x] if self.parent[x] != x else 0

    def union(self, a, b, want):
        """Impose ``s(a) xor s(b) = want``; False on contradiction."""
        ra, rb = self.find(a), self.find(b)
        pa, pb = self.parity_of(a), self.parity_of(b)
        if ra == rb:
            return (pa ^ pb) == want
        if self.rank[ra] < self.rank[rb]:
            ra, rb, pa, pb = rb, ra, pb, pa
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ want
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def _forest_path(forest, a, b):
    parent = {a: None}
    q = deque([a])
    while q:
        x = q.popleft()
        if x == b:
            break
        for y in forest[x]:
            if y not in parent:
                parent[y] = x
                q.append(y)
    out = []
    x = b
    while x is not None:
        out.append(x)
        x = parent[x]
    return out[::-1]


def _contraction_witness(tw):
    """Colouring built by contracting ``f = 1`` edges and two-colouring the quotient."""
    g = tw.base
    rep = list(range(g.n))

    def find(x):
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    for (u, v), b in zip(g.edges, tw.bits):
        if b:
            rep[find(u)] = find(v)
    quotient = {}
    for (u, v), b in zip(g.edges, tw.bits):
        if not b:
            a, c = find(u), find(v)
            if a == c:
                return None  # loop in the quotient
            quotient.setdefault(a, set()).add(c)
            quotient.setdefault(c, set()).add(a)
    side = {}
    for v in range(g.n):
        r = find(v)
        if r in side:
            continue
        side[r] = 0
        q = deque([r])
        while q:
            x = q.popleft()
            for y in sorted(quotient.get(x, ())):
                if y not in side:
                    side[y] = 1 - side[x]
                    q.append(y)
                elif side[y] == side[x]:
                    return None
    return tuple(side[find(v)] for v in range(g.n))


def feasible(tw):
    """Whether the 2-fold cover of ``tw`` has a full colouring, with a certificate."""
    g = tw.base
    uf = _ParityUnionFind(g.n)
    forest = [[] for _ in range(g.n)]
    for (u, v), b in zip(g.edges, tw.bits):
        want = 1 - b
        if uf.find(u) == uf.find(v):
            if not uf.union(u, v, want):
                return Feasibility(False, cycle=tuple(_forest_path(forest, u, v)))
        else:
            uf.union(u, v, want)
            forest[u].append(v)
            forest[v].append(u)
    s = _contraction_witness(tw)
    if s is None:  # pragma: no cover - contradicts the union-find verdict
        raise AssertionError("contraction disagrees with parity union-find")
    return Feasibility(True, transversal=s)


# ------------------------------------------------------- maximum partial colouring

def _edge_want(tw):
    return [(u, v, 1 - b) for (u, v), b in zip(tw.base.edges, tw.bits)]


def _consistent(n, wants, mask):
    uf = _ParityUnionFind(n)
    for u, v, w in wants:
        if mask >> u & 1 and mask >> v & 1 and not uf.union(u, v, w):
            return False
    return True


def _violating_walk(adj_want, n, mask):
    """Vertex mask of a shortest closed walk with odd constraint parity in ``G[mask]``."""
    best = None
    for root in _bits(mask):
        dist = {(root, 0): 0}
        prev = {(root, 0): None}
        q = deque([(root, 0)])
        hit = None
        while q and hit is None:
            state = q.popleft()
            x, p = state
            if best is not None and dist[state] + 1 >= best[0]:
                break
            for y, w in adj_want[x]:
                if not mask >> y & 1:
                    continue
                nxt = (y, p ^ w)
                if nxt in dist:
                    continue
                dist[nxt] = dist[state] + 1
                prev[nxt] = state
                if nxt == (root, 1):
                    hit = nxt
                    break
                q.append(nxt)
        if hit is None:
            continue
        verts = 0
        st = hit
        while st is not None:
            verts |= 1 << st[0]
            st = prev[st]
        length = dist[hit]
        if best is None or length < best[0]:
            best = (length, verts)
            if length == 3:
                break
    return best[1]


@dataclass
class PartialTwist:
    size: int
    vertices: tuple
    transversal: tuple  # s[v] in {0, 1} on kept vertices, None elsewhere


def max_partial_twist(tw, budget=None):
    """Largest ``S`` whose restricted twist assignment is feasible.

    Iterative deepening on the number of deleted vertices; each level
    branches on the vertices of a shortest parity-violating closed walk,
    one of which must go.  The first level that succeeds is optimal.
    """
    budget = ensure(budget)
    g = tw.base
    n = g.n
    wants = _edge_want(tw)
    adj_want = [[] for _ in range(n)]
    for u, v, w in wants:
        adj_want[u].append((v, w))
        adj_want[v].append((u, w))
    failed = {}

    def solve(mask, k):
        budget.spend()
        if failed.get(mask, -1) >= k:
            return None
        if _consistent(n, wants, mask):
            return mask
        if k == 0:
            failed[mask] = 0
            return None
        walk = _violating_walk(adj_want, n, mask)
        for v in _bits(walk):
            r = solve(mask & ~(1 << v), k - 1)
            if r is not None:
                return r
        failed[mask] = max(failed.get(mask, -1), k)
        return None

    k = 0
    found = None
    while found is None:
        found = solve(g.full_mask, k)
        k += 1
    keep = vertices_of(found)
    sub, keep_map = restrict(tw, keep)
    res = feasible(sub)
    s = [None] * n
    for i, v in enumerate(keep_map):
        s[v] = res.transversal[i]
    return PartialTwist(len(keep), keep, tuple(s))


def alpha_2_dp_fast(g, budget=None, lower_bounds=()):
    """``alpha_2^DP(G)`` by minimising :func:`max_partial_twist` over canonical twists.

    Spanning-forest edges are fixed to ``f = 0``; twist index ``k`` matches
    cover index ``k`` of :func:`~dpcolor.cover.enumerate_covers` at ``t = 2``.
    """
    budget = ensure(budget)
    free = non_forest_edges(g)
    pos = g.edge_index()
    slots = [pos[e] for e in free]
    total = count_canonical_covers(g, 2)
    budget.check_covers(total)
    tau, _ = feedback_vertex_number(g, budget)
    lb = max(max(lower_bounds, default=0), g.n - tau)
    best = None
    examined = 0
    r = len(slots)
    for k in range(total):
        budget.spend_cover()
        examined += 1
        bits = [0] * g.m
        for j, s in enumerate(slots):
            bits[s] = (k >> (r - 1 - j)) & 1
        tw = TwistAssignment(g, tuple(bits))
        res = max_partial_twist(tw, budget)
        if best is None or res.size < best[0]:
            best = (res.size, res, tw, k)
            if res.size <= lb:
                break
    size, res, tw, k = best
    return AlphaCertificate(size, 2, twist_to_cover(tw), res.transversal, k, lb, examined, "twist")


@dataclass
class ThreeCycleResult:
    assignments: int
    parity_sum_even: bool  # the three cycle sums always total an even number
    some_part_colorable: bool  # some G_i always has a full colouring
    max_partial_min: int  # least size of a colourable G_i over all f


def three_cycle_argument(g, parts):
    """Run the unicyclic-subgraph argument over all ``2^m`` twist assignments.

    ``parts`` lists ``(deleted_vertices, cycle)`` pairs, each cycle being
    the unique cycle left after the deletion.  Every edge of the cycles
    must lie on exactly two of them for the parity sum to be forced even.
    """
    subsets = []
    for deleted, cyc in parts:
        keep = [v for v in range(g.n) if v not in deleted]
        subsets.append((keep, cyc))
    even = True
    colorable = True
    least = g.n
    for k in range(1 << g.m):
        tw = TwistAssignment(g, tuple((k >> i) & 1 for i in range(g.m)))
        total = sum(cycle_parity_sum(tw, cyc)[0] for _, cyc in subsets)
        if total % 2:
            even = False
        sizes = [len(keep) for keep, _ in subsets if feasible(restrict(tw, keep)[0])]
        if not sizes:
            colorable = False
        else:
            least = min(least, max(sizes))
    return ThreeCycleResult(1 << g.m, even, colorable, least)

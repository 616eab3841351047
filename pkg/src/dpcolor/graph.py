"""Simple undirected graphs on vertices ``0..n-1`` and exact classical invariants.

Vertex sets are handled internally as integer bitmasks (bit ``v`` set means
vertex ``v`` is present) and returned to callers as sorted tuples.  Every
exact search takes an optional :class:`~dpcolor.budget.Budget`.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from .budget import BudgetExceeded, ensure


class GraphFormatError(ValueError):
    """Malformed graph input (bad edge list, loops, duplicates, empty graph)."""


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask):
    return tuple(_bits(mask))


@dataclass(frozen=True)
class Graph:
    """A nonempty simple graph.

    ``edges`` is normalised to a sorted tuple of pairs ``(u, v)`` with
    ``u < v``.  Loops, duplicate edges and out-of-range endpoints raise
    :class:`GraphFormatError`.
    """

    n: int
    edges: tuple = ()
    adj: tuple = field(init=False, repr=False, compare=False)
    _eindex: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphFormatError("graphs must have at least one vertex")
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge {u}-{v} out of range for n={self.n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_eindex", {e: i for i, e in enumerate(self.edges)})

    @property
    def m(self):
        return len(self.edges)

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def neighbors(self, v):
        return vertices_of(self.adj[v])

    def degree(self, v):
        return self.adj[v].bit_count()

    def degrees(self):
        return [a.bit_count() for a in self.adj]

    def max_degree(self):
        return max(self.degrees())

    def min_degree(self):
        return min(self.degrees())

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def edge_index(self):
        """Map from each normalised edge ``(u, v)`` to its position in ``edges`` (shared, do not mutate)."""
        return self._eindex

    def components(self):
        """Connected components as sorted vertex tuples, ordered by least vertex."""
        left = self.full_mask
        comps = []
        while left:
            start = left & -left
            comp = start
            frontier = start
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            comps.append(vertices_of(comp))
            left &= ~comp
        return comps

    def is_connected(self):
        return len(self.components()) == 1

    def is_acyclic(self):
        return self.m == self.n - len(self.components())

    def cyclomatic_number(self):
        return self.m - self.n + len(self.components())


def induced_subgraph(g, vertices):
    """Return ``(G[S], index_map)``, vertices renumbered in increasing order.

    ``index_map[i]`` is the original vertex that became vertex ``i``.
    """
    keep = sorted(set(vertices))
    if not keep:
        raise GraphFormatError("induced subgraph on an empty vertex set")
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphFormatError(f"vertex {v} not in graph")
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(keep), tuple(edges)), tuple(keep)


def delete_vertex(g, v):
    return induced_subgraph(g, [u for u in range(g.n) if u != v])[0]


def relabel(g, perm):
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges))


# ---------------------------------------------------------------- edge lists

def parse_edge_list(text):
    """Parse the ``n m`` header plus ``m`` lines of ``u v`` edge-list format."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty edge list")
    try:
        header = [int(x) for x in lines[0].split()]
    except ValueError as exc:
        raise GraphFormatError(f"bad header line {lines[0]!r}") from exc
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'")
    n, m = header
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line {ln!r}") from exc
    return Graph(n, tuple(edges))


def format_edge_list(g):
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


# ------------------------------------------------------------ independent sets

def _max_independent(adj, cand, budget):
    """Lexicographically least maximum independent subset of ``cand``."""
    best = [0, 0]

    def rec(chosen, size, p):
        budget.spend()
        if size + p.bit_count() <= best[0]:
            return
        if not p:
            best[0], best[1] = size, chosen
            return
        low = p & -p
        v = low.bit_length() - 1
        rec(chosen | low, size + 1, p & ~low & ~adj[v])
        if adj[v] & p:
            rec(chosen, size, p & ~low)

    best[0] = -1
    rec(0, 0, cand)
    return best[0], best[1]


def independence_number(g, budget=None):
    """Exact ``alpha(G)`` and the lexicographically least maximum independent set."""
    budget = ensure(budget)
    size, mask = _max_independent(g.adj, g.full_mask, budget)
    return size, vertices_of(mask)


def is_independent(g, vertices):
    m = mask_of(vertices)
    return all(not (g.adj[v] & m) for v in vertices)


def clique_number(g, budget=None):
    """Exact ``omega(G)``."""
    budget = ensure(budget)
    best = [0]
    adj = g.adj

    def rec(size, p):
        budget.spend()
        if size + p.bit_count() <= best[0]:
            return
        if not p:
            best[0] = size
            return
        while p:
            if size + p.bit_count() <= best[0]:
                return
            low = p & -p
            v = low.bit_length() - 1
            rec(size + 1, p & adj[v])
            p &= ~low

    rec(0, g.full_mask)
    return best[0]


# ------------------------------------------------------------------- coloring

def _colorable(adj, n, k, budget):
    """Return a proper ``k``-colouring list or ``None`` (DSATUR-style backtracking)."""
    colors = [-1] * n
    nbr_colors = [0] * n  # bitmask of colours present among coloured neighbours

    def pick():
        best, bkey = -1, None
        for v in range(n):
            if colors[v] < 0:
                key = (nbr_colors[v].bit_count(), adj[v].bit_count())
                if bkey is None or key > bkey:
                    best, bkey = v, key
        return best

    def rec(count, used):
        budget.spend()
        if count == n:
            return True
        v = pick()
        banned = nbr_colors[v]
        for c in range(min(used + 1, k)):
            if banned >> c & 1:
                continue
            colors[v] = c
            touched = []
            for u in _bits(adj[v]):
                if colors[u] < 0 and not (nbr_colors[u] >> c & 1):
                    nbr_colors[u] |= 1 << c
                    touched.append(u)
            if rec(count + 1, max(used, c + 1)):
                return True
            for u in touched:
                nbr_colors[u] &= ~(1 << c)
            colors[v] = -1
        return False

    return list(colors) if rec(0, 0) else None


def proper_coloring(g, k, budget=None):
    """A proper ``k``-colouring as a list of colours, or ``None``."""
    budget = ensure(budget)
    return _colorable(g.adj, g.n, k, budget)


def chromatic_number(g, budget=None):
    """Exact ``chi(G)``; graphs larger than the budget's size cap are refused."""
    budget = ensure(budget)
    budget.check_size(g.n)
    k = max(1, clique_number(g, budget))
    while _colorable(g.adj, g.n, k, budget) is None:
        k += 1
    return k


def partial_t_chromatic(g, t, budget=None):
    """Exact ``alpha_t(G)``: the most vertices that can be properly coloured with ``t`` colours."""
    if t < 1:
        raise ValueError("t must be positive")
    budget = ensure(budget)
    budget.check_size(g.n)
    if _colorable(g.adj, g.n, t, budget) is not None:
        return g.n
    n = g.n
    adj = g.adj
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    classes = [0] * t
    best = [independence_number(g, budget)[0] if t >= 1 else 0]

    def rec(i, size, used):
        budget.spend()
        if size + (n - i) <= best[0]:
            return
        if i == n:
            best[0] = size
            return
        v = order[i]
        for c in range(min(used + 1, t)):
            if not (classes[c] & adj[v]):
                classes[c] |= 1 << v
                rec(i + 1, size + 1, max(used, c + 1))
                classes[c] &= ~(1 << v)
        rec(i + 1, size, used)

    rec(0, 0, 0)
    return best[0]


def degeneracy_order(g, mask=None):
    """Min-degree removal order on ``G[mask]`` and the degeneracy it certifies."""
    if mask is None:
        mask = g.full_mask
    adj = g.adj
    left = mask
    order = []
    degen = 0
    while left:
        best_v, best_d = -1, None
        for v in _bits(left):
            d = (adj[v] & left).bit_count()
            if best_d is None or d < best_d:
                best_v, best_d = v, d
        degen = max(degen, best_d)
        order.append(best_v)
        left &= ~(1 << best_v)
    return order, degen


def coloring_number(g):
    """``col(G)``: degeneracy plus one."""
    return degeneracy_order(g)[1] + 1


def is_degenerate_within(adj, mask, d):
    """True iff ``G[mask]`` is ``d``-degenerate (coloring number at most ``d + 1``)."""
    changed = True
    while mask and changed:
        changed = False
        for v in _bits(mask):
            if (adj[v] & mask).bit_count() <= d:
                mask &= ~(1 << v)
                changed = True
    return not mask


# --------------------------------------------------------- feedback vertex set

def _edges_within(adj, mask):
    return sum((adj[v] & mask).bit_count() for v in _bits(mask)) // 2


def _components_within(adj, mask):
    count = 0
    while mask:
        comp = mask & -mask
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & mask & ~comp
            comp |= frontier
        mask &= ~comp
        count += 1
    return count


def is_forest_within(adj, mask):
    return _edges_within(adj, mask) == mask.bit_count() - _components_within(adj, mask)


def _prune_leaves(adj, mask):
    changed = True
    while changed:
        changed = False
        for v in _bits(mask):
            if (adj[v] & mask).bit_count() <= 1:
                mask &= ~(1 << v)
                changed = True
    return mask


def _short_cycle_vertices(adj, mask):
    """Vertex set of a shortest cycle in ``G[mask]`` (mask must contain a cycle)."""
    best = None
    for root in _bits(mask):
        parent = {root: -1}
        depth = {root: 0}
        q = deque([root])
        found = None
        while q and found is None:
            u = q.popleft()
            for w in _bits(adj[u] & mask):
                if w == parent[u]:
                    continue
                if w in depth:
                    found = (u, w)
                    break
                parent[w] = u
                depth[w] = depth[u] + 1
                q.append(w)
        if found is None:
            continue
        u, w = found
        verts = 0
        for x in (u, w):
            while x != -1:
                verts |= 1 << x
                x = parent[x]
        if best is None or verts.bit_count() < best.bit_count():
            best = verts
            if best.bit_count() == 3:
                break
    return best


def feedback_vertex_number(g, budget=None):
    """Exact ``tau(G)`` and a minimum feedback vertex set.

    Iterative deepening on the number of deletions, branching on the
    vertices of a shortest remaining cycle.
    """
    budget = ensure(budget)
    adj = g.adj

    def solve(mask, k):
        budget.spend()
        mask = _prune_leaves(adj, mask)
        if not mask:
            return 0
        if k == 0:
            return None
        cyc = _short_cycle_vertices(adj, mask)
        for v in _bits(cyc):
            r = solve(mask & ~(1 << v), k - 1)
            if r is not None:
                return r | (1 << v)
        return None

    k = 0
    while True:
        r = solve(g.full_mask, k)
        if r is not None:
            return k, vertices_of(r)
        k += 1


def largest_degenerate_subgraph(g, d, budget=None):
    """Largest ``S`` with ``G[S]`` ``d``-degenerate, searched by decreasing size.

    ``d = 0`` gives ``alpha(G)``; ``d = 1`` gives ``n - tau(G)``.
    """
    budget = ensure(budget)
    if d <= 0:
        size, wit = independence_number(g, budget)
        return size, wit
    n = g.n
    adj = g.adj
    if is_degenerate_within(adj, g.full_mask, d):
        return n, tuple(range(n))
    if d == 1:
        tau, fvs = feedback_vertex_number(g, budget)
        drop = mask_of(fvs)
        return n - tau, vertices_of(g.full_mask & ~drop)

    best = [0, 0]

    # include/exclude over vertices; d-degeneracy is hereditary, so a
    # non-degenerate partial set is dead.
    def rec(i, kept, excluded):
        budget.spend()
        remaining = n - i
        if kept.bit_count() + remaining <= best[0]:
            return
        if i == n:
            if is_degenerate_within(adj, kept, d):
                best[0], best[1] = kept.bit_count(), kept
            return
        optimistic = g.full_mask & ~excluded
        if is_degenerate_within(adj, optimistic, d):
            best[0], best[1] = optimistic.bit_count(), optimistic
            return
        with_i = kept | (1 << i)
        if is_degenerate_within(adj, with_i, d):
            rec(i + 1, with_i, excluded)
        rec(i + 1, kept, excluded | (1 << i))

    rec(0, 0, 0)
    return best[0], vertices_of(best[1])


# ------------------------------------------------------------------- chordality

def _mcs_order(g):
    """Maximum cardinality search visit order (ties to least vertex)."""
    n = g.n
    weight = [0] * n
    done = 0
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not done >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        done |= 1 << v
        for u in _bits(g.adj[v] & ~done):
            weight[u] += 1
    return order


def is_perfect_elimination_order(g, order):
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        lm = mask_of(later)
        for u in later:
            if (lm & ~(1 << u)) & ~g.adj[u]:
                return False
    return True


def find_chordless_cycle(g):
    """A chordless cycle of length at least 4 as a vertex sequence, or ``None``."""
    adj = g.adj
    for v in range(g.n):
        nbrs = g.neighbors(v)
        closed = adj[v] | (1 << v)
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if adj[a] >> b & 1:
                    continue
                allowed = (g.full_mask & ~closed) | (1 << a) | (1 << b)
                parent = {a: -1}
                q = deque([a])
                while q:
                    x = q.popleft()
                    if x == b:
                        break
                    for y in _bits(adj[x] & allowed):
                        if y not in parent:
                            parent[y] = x
                            q.append(y)
                if b in parent:
                    path = []
                    x = b
                    while x != -1:
                        path.append(x)
                        x = parent[x]
                    return [v] + path[::-1]
    return None


def is_chord_free_cycle(g, cycle):
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = g.has_edge(cycle[i], cycle[j])
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True


def is_chordal(g):
    """``(True, peo)`` with a perfect elimination order, or ``(False, cycle)``.

    The order comes from reversing a maximum cardinality search; the cycle
    certificate is chordless and has length at least 4.
    """
    peo = _mcs_order(g)[::-1]
    if is_perfect_elimination_order(g, peo):
        return True, tuple(peo)
    cyc = find_chordless_cycle(g)
    if cyc is None:  # pragma: no cover - MCS is exact on chordal graphs
        raise AssertionError("MCS rejected a graph with no chordless cycle")
    return False, tuple(cyc)


# ---------------------------------------------------------------- isomorphism

def find_isomorphism(g, h):
    """A bijection ``phi`` with ``uv in E(g) <=> phi(u)phi(v) in E(h)``, or ``None``.

    Plain backtracking with degree filtering; meant for desk-scale graphs.
    """
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    n = g.n
    order = sorted(range(n), key=lambda v: -g.degree(v))
    phi = [-1] * n
    used = 0

    def rec(i):
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1 or h.degree(w) != g.degree(v):
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.has_edge(u, v) != h.has_edge(phi[u], w):
                    ok = False
                    break
            if ok:
                phi[v] = w
                used |= 1 << w
                if rec(i + 1):
                    return True
                used &= ~(1 << w)
                phi[v] = -1
        return False

    return tuple(phi) if rec(0) else None


def is_isomorphic(g, h):
    return find_isomorphism(g, h) is not None


__all__ = [
    "BudgetExceeded",
    "Graph",
    "GraphFormatError",
    "induced_subgraph",
    "delete_vertex",
    "parse_edge_list",
    "format_edge_list",
    "independence_number",
    "clique_number",
    "chromatic_number",
    "partial_t_chromatic",
    "coloring_number",
    "feedback_vertex_number",
    "largest_degenerate_subgraph",
    "is_chordal",
    "find_isomorphism",
    "is_isomorphic",
]

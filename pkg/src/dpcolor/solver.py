"""Exact independent transversals, ``alpha_t^DP``, ``chi_DP`` and partial DP-niceness.

A transversal is a tuple ``s`` of length ``n`` with ``s[v]`` the chosen slot
of ``v`` or ``None``.  All comparisons against ``t*n/chi`` are done by
integer cross-multiplication.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .budget import ensure
from .cover import (
    Cover,
    conflict_masks,
    count_canonical_covers,
    cover_at_index,
    cover_from_perms,
    enumerate_covers,
    identity_cover,
)
from .graph import (
    chromatic_number,
    coloring_number,
    induced_subgraph,
    largest_degenerate_subgraph,
)


def is_valid_transversal(c, s):
    """Check ``s`` against the cover's matchings only (no solver state)."""
    if len(s) != c.n:
        return False
    for v, i in enumerate(s):
        if i is not None and not (0 <= i < c.fold):
            return False
    for (u, v), m in zip(c.base.edges, c.matchings):
        if s[u] is not None and s[v] is not None and m[s[u]] == s[v]:
            return False
    return True


def transversal_size(s):
    return sum(1 for i in s if i is not None)


def _decode(mask, n, t):
    s = [None] * n
    while mask:
        low = mask & -mask
        node = low.bit_length() - 1
        s[node // t] = node % t
        mask ^= low
    return tuple(s)


def _vertex_order(g):
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def max_transversal(c, budget=None, target=None, order=None):
    """Largest independent transversal of ``c`` as ``(size, transversal)``.

    With ``target`` the search stops as soon as a transversal of at least
    that size is found; the returned size is then only a lower bound.
    """
    budget = ensure(budget)
    n, t = c.n, c.fold
    masks = conflict_masks(c)
    order = _vertex_order(c.base) if order is None else order
    lists = [((1 << t) - 1) << (v * t) for v in range(n)]
    goal = n if target is None else min(target, n)
    best = [-1, 0]
    done = [False]

    def rec(k, size, forb, sel):
        budget.spend()
        if size + n - k <= best[0]:
            return
        if k == n:
            best[0], best[1] = size, sel
            if size >= goal:
                done[0] = True
            return
        # tighter bound: vertices whose lists are already fully blocked are lost
        if n - k > 1:
            live = 0
            for j in range(k, n):
                if lists[order[j]] & ~forb:
                    live += 1
            if size + live <= best[0]:
                return
        v = order[k]
        base = v * t
        free = lists[v] & ~forb
        for i in range(t):
            bit = 1 << (base + i)
            if free & bit:
                rec(k + 1, size + 1, forb | masks[base + i], sel | bit)
                if done[0]:
                    return
        rec(k + 1, size, forb, sel)

    rec(0, 0, 0, 0)
    return best[0], _decode(best[1], n, t)


def full_transversal(c, budget=None):
    """An ``H``-colouring of ``c`` (one slot per vertex) or ``None``.

    Backtracking that always branches on a vertex with the fewest free slots.
    """
    budget = ensure(budget)
    n, t = c.n, c.fold
    masks = conflict_masks(c)
    lists = [((1 << t) - 1) << (v * t) for v in range(n)]

    def rec(unassigned, forb, sel):
        budget.spend()
        if not unassigned:
            return sel
        best_v, best_free, best_cnt = -1, 0, t + 1
        for v in unassigned:
            free = lists[v] & ~forb
            cnt = free.bit_count()
            if cnt < best_cnt:
                best_v, best_free, best_cnt = v, free, cnt
                if cnt <= 1:
                    break
        if best_cnt == 0:
            return None
        rest = [v for v in unassigned if v != best_v]
        free = best_free
        while free:
            low = free & -free
            node = low.bit_length() - 1
            r = rec(rest, forb | masks[node], sel | low)
            if r is not None:
                return r
            free ^= low
        return None

    sel = rec(list(range(n)), 0, 0)
    return None if sel is None else _decode(sel, n, t)


# ------------------------------------------------------------------ alpha^DP

@dataclass
class AlphaCertificate:
    """``alpha_t^DP(G) = value``, witnessed by a worst cover and a maximum transversal in it."""

    value: int
    fold: int
    worst_cover: Cover
    witness: tuple
    cover_index: int
    lower_bound: int
    covers_examined: int = 0
    method: str = "generic"

    @property
    def base(self):
        return self.worst_cover.base

    def check(self, budget=None):
        """Re-verify the witness and that the worst cover has no larger transversal."""
        if not is_valid_transversal(self.worst_cover, self.witness):
            return False
        if transversal_size(self.witness) != self.value:
            return False
        return max_transversal(self.worst_cover, budget)[0] == self.value


def dp_lower_bound(g, t, budget=None):
    """Largest induced subgraph with coloring number at most ``t``.

    Such a subgraph has ``chi_DP <= t``, so every ``t``-fold cover colours it.
    At ``t = 1`` this is ``alpha(G)``, at ``t = 2`` it is ``n - tau(G)``.
    """
    return largest_degenerate_subgraph(g, t - 1, budget)[0]


def ceiling_lower_bound(n, chi, t):
    """Integer form of ``n / ceil(chi/t)``, rounded up."""
    q = -(-chi // t)
    return -(-n // q)


def alpha_t_dp(g, t, budget=None, lower_bounds=(), chi=None, use_default_bound=True,
               start=0, stop=None):
    """Exact ``alpha_t^DP(G)`` by minimising over canonical covers in ``[start, stop)``.

    Each cover's search stops once it reaches the running minimum, and the
    whole enumeration stops once the minimum meets the best known lower
    bound.  ``lower_bounds`` injects extra proven bounds; passing ``chi``
    (a known ``chi_DP``) adds the ceiling bound, or ``n`` when ``t >= chi``.
    Over a partial index range the result is the minimum over that range.
    """
    if t < 1:
        raise ValueError("t must be positive")
    budget = ensure(budget)
    n = g.n
    total = count_canonical_covers(g, t)
    stop = total if stop is None else min(stop, total)
    lb = max(lower_bounds, default=0)
    if use_default_bound:
        lb = max(lb, dp_lower_bound(g, t, budget))
    if chi is not None:
        lb = max(lb, n if t >= chi else ceiling_lower_bound(n, chi, t))
    if start >= stop:
        raise ValueError("empty cover index range")
    order = _vertex_order(g)
    # the first cover alone settles the value when it meets the lower bound,
    # so it is examined before the enumeration budget applies to the rest
    first = cover_at_index(g, t, start)
    budget.spend_cover()
    size, s = max_transversal(first, budget, order=order)
    best = (size, s, first, start)
    examined = 1
    if size > lb and lb < n:
        for k, c in enumerate(enumerate_covers(g, t, budget, start + 1, stop), start + 1):
            budget.spend_cover()
            examined += 1
            size, s = max_transversal(c, budget, target=best[0], order=order)
            if size < best[0]:
                best = (size, s, c, k)
                if size <= lb:
                    break
    size, s, c, k = best
    return AlphaCertificate(size, t, c, s, k, lb, examined)


def combine_certificates(parts):
    """Min-combine range results; ties go to the smallest cover index."""
    return min(parts, key=lambda a: (a.value, a.cover_index))


# -------------------------------------------------------------------- chi_DP

def _core(g, t):
    """Vertices surviving repeated deletion of vertices of degree below ``t``.

    Such a vertex always has a free slot once its neighbours are coloured,
    so every ``t``-fold cover of ``G`` is colourable iff this holds for the core.
    """
    alive = set(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if sum(1 for u in g.neighbors(v) if u in alive) < t:
                alive.discard(v)
                changed = True
    return sorted(alive)


def find_uncolorable_cover(g, t, budget=None):
    """A perfect ``t``-fold cover of ``G`` with no ``H``-colouring, or ``None``.

    Works on each component of the ``t``-core separately and lifts a bad
    cover back to ``G`` with identity matchings elsewhere.
    """
    budget = ensure(budget)
    core = _core(g, t)
    if not core:
        return None
    core_graph, core_map = induced_subgraph(g, core)
    for comp in core_graph.components():
        sub, sub_map = induced_subgraph(core_graph, comp)
        if sub.n < 2:
            continue
        for c in enumerate_covers(sub, t, budget):
            budget.spend_cover()
            if full_transversal(c, budget) is None:
                to_g = [core_map[sub_map[i]] for i in range(sub.n)]
                perms = {(to_g[u], to_g[v]): m for (u, v), m in zip(sub.edges, c.matchings)}
                return cover_from_perms(g, t, perms)
    return None


@dataclass
class ChiCertificate:
    """``chi_DP(G) = value``; ``bad_cover`` is a ``(value-1)``-fold cover without colouring."""

    value: int
    bad_cover: Cover | None
    lower: int
    upper: int


def chi_dp_certificate(g, budget=None):
    budget = ensure(budget)
    chi = chromatic_number(g, budget)
    col = coloring_number(g)
    t = chi
    bad = None
    if t >= 2:
        bad = identity_cover(g, t - 1)  # a plain (t-1)-colouring already fails
    while t < col:
        found = find_uncolorable_cover(g, t, budget)
        if found is None:
            break
        bad = found
        t += 1
    return ChiCertificate(t, bad, chi, col)


def chi_dp(g, budget=None):
    """Exact ``chi_DP(G)``, searched upward from ``chi(G)`` to ``col(G)``."""
    return chi_dp_certificate(g, budget).value


# --------------------------------------------------------------- niceness

def star_holds(value, t, n, chi):
    """``value >= t*n/chi`` in integers."""
    return value * chi >= t * n


@dataclass
class StarRow:
    t: int
    threshold: Fraction
    value: int | None
    lower_bound: int
    holds: bool
    source: str
    certificate: AlphaCertificate | None = None


@dataclass
class NiceVerdict:
    nice: bool
    chi_dp: int
    n: int
    rows: list = field(default_factory=list)

    @property
    def failing(self):
        return [r.t for r in self.rows if not r.holds]

    @property
    def failing_t(self):
        f = self.failing
        return f[0] if f else None

    @property
    def certificate(self):
        for r in self.rows:
            if not r.holds:
                return r.certificate
        return None


def star_row(g, t, chi, budget=None, exact=False):
    """Decide ``alpha_t^DP(G) >= t n / chi`` for one ``t``.

    Settled by the induced-degenerate lower bound when it suffices, unless
    ``exact`` asks for the value itself.
    """
    budget = ensure(budget)
    n = g.n
    threshold = Fraction(t * n, chi)
    if t >= chi:
        return StarRow(t, threshold, n, n, True, "t >= chi_DP")
    lb = max(dp_lower_bound(g, t, budget), ceiling_lower_bound(n, chi, t))
    if not exact and star_holds(lb, t, n, chi):
        return StarRow(t, threshold, None, lb, True, "lower bound")
    cert = alpha_t_dp(g, t, budget, lower_bounds=(lb,))
    return StarRow(t, threshold, cert.value, lb, star_holds(cert.value, t, n, chi), "exact", cert)


def is_partially_dp_nice(g, budget=None, chi=None, exact=False):
    """Check ``alpha_t^DP(G) >= t|V|/chi_DP(G)`` for every ``t`` in ``1..chi_DP``."""
    budget = ensure(budget)
    if chi is None:
        chi = chi_dp(g, budget)
    rows = [star_row(g, t, chi, budget, exact) for t in range(1, chi + 1)]
    return NiceVerdict(all(r.holds for r in rows), chi, g.n, rows)


@dataclass
class DPProfile:
    """``chi_DP`` plus exact ``alpha_t^DP`` certificates for ``t = 1..chi_DP``."""

    graph: object
    chi_dp: int
    alphas: dict

    def alpha(self, t):
        if t >= self.chi_dp:
            return self.graph.n
        return self.alphas[t].value


def dp_profile(g, budget=None, extra=0):
    """Exact values for ``t`` up to ``chi_DP + extra``."""
    budget = ensure(budget)
    chi = chi_dp(g, budget)
    alphas = {t: alpha_t_dp(g, t, budget, chi=chi) for t in range(1, chi + 1 + extra)}
    return DPProfile(g, chi, alphas)

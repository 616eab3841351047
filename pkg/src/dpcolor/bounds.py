"""Subadditivity of ``alpha_t^DP`` and the bounds that follow from it.

All comparisons are exact: thresholds are :class:`fractions.Fraction` and
inequalities are decided by integer cross-multiplication.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .budget import ensure
from .cover import Cover
from .graph import feedback_vertex_number, independence_number
from .solver import dp_lower_bound, dp_profile, star_holds


def glue_covers(*covers):
    """Disjoint union of covers of one graph, lists merged into cliques.

    Layer ``i`` occupies slots ``[t_1 + ... + t_{i-1}, t_1 + ... + t_i)``;
    matchings never cross layers.
    """
    if not covers:
        raise ValueError("need at least one cover")
    base = covers[0].base
    for c in covers[1:]:
        if c.base != base:
            raise ValueError("covers must share the same base graph")
    if len(covers) == 1:
        return covers[0]
    fold = sum(c.fold for c in covers)
    mats = []
    for e in range(base.m):
        row = []
        off = 0
        for c in covers:
            row.extend(None if j is None else j + off for j in c.matchings[e])
            off += c.fold
        mats.append(tuple(row))
    return Cover(base, fold, tuple(mats))


def split_transversal(s, folds):
    """Cut a transversal of a glued cover into one transversal per layer."""
    bounds = []
    off = 0
    for t in folds:
        bounds.append((off, off + t))
        off += t
    layers = []
    for lo, hi in bounds:
        layers.append(tuple(i - lo if i is not None and lo <= i < hi else None for i in s))
    return layers


def ceiling_bound(n, chi, t):
    """``n / ceil(chi/t)`` as an exact rational, for ``1 <= t <= chi``."""
    if not 1 <= t <= chi:
        raise ValueError(f"t={t} outside [1, {chi}]")
    return Fraction(n, -(-chi // t))


def star_threshold(n, chi, t):
    return Fraction(t * n, chi)


@dataclass
class Bound:
    name: str
    value: Fraction
    satisfied: bool | None  # None when no exact value is known


@dataclass
class BoundReport:
    graph: str
    t: int
    n: int
    chi_dp: int
    exact: int | None
    bounds: list = field(default_factory=list)

    def all_satisfied(self):
        return all(b.satisfied is not False for b in self.bounds)


def bound_report(g, t, chi, exact=None, name="", budget=None):
    """Every lower bound on ``alpha_t^DP`` the package knows, checked against ``exact``.

    The ``star`` row is the target ``t n / chi`` rather than a bound, so its
    flag is simply whether ``(*)`` holds at ``t``.
    """
    budget = ensure(budget)
    n = g.n
    rows = []
    if t <= chi:
        rows.append(("ceiling", ceiling_bound(n, chi, t)))
    rows.append(("independence", Fraction(independence_number(g, budget)[0])))
    if t == 2:
        rows.append(("feedback", Fraction(n - feedback_vertex_number(g, budget)[0])))
    rows.append(("degenerate", Fraction(dp_lower_bound(g, t, budget))))
    rows.append(("star", star_threshold(n, chi, min(t, chi))))
    bounds = [Bound(k, v, None if exact is None else exact >= v) for k, v in rows]
    return BoundReport(name, t, n, chi, exact, bounds)


@dataclass
class HalfValuesReport:
    chi_dp: int
    rows: list  # (t, alpha_t, holds)
    count: int
    required: int
    half2: list  # (t, ok)

    @property
    def guarantee_met(self):
        return self.count >= self.required and all(ok for _, ok in self.half2)


def half_values_report(g, profile=None, budget=None):
    """Which ``t < chi_DP`` satisfy ``(*)``; at least ``ceil((chi_DP-1)/2)`` must."""
    if profile is None:
        profile = dp_profile(g, budget)
    s, n = profile.chi_dp, g.n
    rows = []
    for t in range(1, s):
        a = profile.alpha(t)
        rows.append((t, a, star_holds(a, t, n, s)))
    holds = {t: h for t, _, h in rows}
    half2 = [(t, holds[t] or holds[s - t]) for t in range(1, s)]
    count = sum(1 for _, _, h in rows if h)
    return HalfValuesReport(s, rows, count, -(-(s - 1) // 2), half2)


@dataclass
class SubadditivityVerdict:
    t: int
    lhs: int
    parts: tuple  # ((t_i, alpha_{t_i}), ...)
    rhs: int

    @property
    def holds(self):
        return self.lhs <= self.rhs


def subadditivity_check(g, partition, profile=None, budget=None):
    """``alpha_t^DP <= sum alpha_{t_i}^DP`` for ``t = sum(partition)``."""
    if not partition or any(p < 1 for p in partition):
        raise ValueError("partition must be a nonempty list of positive ints")
    if profile is None:
        profile = dp_profile(g, budget)
    t = sum(partition)
    parts = tuple((p, profile.alpha(p)) for p in partition)
    return SubadditivityVerdict(t, profile.alpha(t), parts, sum(a for _, a in parts))


def divides_check(g, profile=None, budget=None):
    """Rows ``(t, s, premise, conclusion)`` for all ``t | s <= chi_DP``; premise must imply conclusion."""
    if profile is None:
        profile = dp_profile(g, budget)
    chi, n = profile.chi_dp, g.n
    out = []
    for s in range(1, chi + 1):
        prem = star_holds(profile.alpha(s), s, n, chi)
        for t in range(1, s + 1):
            if s % t == 0:
                out.append((t, s, prem, star_holds(profile.alpha(t), t, n, chi)))
    return out

"""Joins ``G v K_p``: failing sets ``B_p`` and the smallest ``p`` that makes ``G`` nice.

``B_p`` is the set of ``t`` in ``[chi_DP(G_p)]`` with
``alpha_t^DP(G_p) < t |V(G_p)| / chi_DP(G_p)`` where ``G_p = G v K_p``.
Existence of a good ``p`` is only guaranteed asymptotically, so a search
capped at ``p_max`` may legitimately report none.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .budget import Budget, BudgetExceeded
from .constructions import join_complete
from .graph import chromatic_number
from .solver import chi_dp, is_partially_dp_nice


@dataclass
class JoinRow:
    p: int
    n: int
    chi: int
    chi_dp: int | None = None
    failing: frozenset | None = None  # None when the budget ran out
    status: str = "ok"

    @property
    def nice(self):
        return None if self.failing is None else not self.failing


@dataclass
class JoinReport:
    p_max: int
    rows: list = field(default_factory=list)

    @property
    def threshold(self):
        for r in self.rows:
            if r.nice:
                return r.p
        return None

    def chain_checks(self):
        """``(p, ok)`` for consecutive computed rows: ``B_{p+1}`` must sit inside ``B_p``."""
        out = []
        for a, b in zip(self.rows, self.rows[1:]):
            if a.failing is not None and b.failing is not None:
                out.append((a.p, b.failing <= a.failing))
        return out

    def one_vertex_plus_checks(self, chi_g):
        """Where ``chi_DP(G_p) = chi(G) + p`` already, ``chi_DP(G_{p+1})`` must be one more."""
        out = []
        for a, b in zip(self.rows, self.rows[1:]):
            if a.chi_dp is None or b.chi_dp is None:
                continue
            if a.chi_dp == chi_g + a.p:
                out.append((a.p, b.chi_dp == a.chi_dp + 1))
        return out


def failing_set(g, budget=None):
    """``(chi_DP(G), B)`` with ``B`` the ``t`` values where ``(*)`` fails."""
    chi = chi_dp(g, budget)
    verdict = is_partially_dp_nice(g, budget, chi=chi)
    return chi, frozenset(verdict.failing)


def join_threshold(g, p_max=4, make_budget=Budget):
    """Evaluate ``B_p`` for ``p = 0..p_max``, each on a fresh budget from ``make_budget``."""
    report = JoinReport(p_max)
    for p in range(p_max + 1):
        gp = join_complete(g, p)
        row = JoinRow(p, gp.n, chromatic_number(gp))
        try:
            budget = make_budget()
            row.chi_dp = chi_dp(gp, budget)
            verdict = is_partially_dp_nice(gp, budget, chi=row.chi_dp)
            row.failing = frozenset(verdict.failing)
        except BudgetExceeded:
            row.status = "budget-exceeded"
        report.rows.append(row)
    return report

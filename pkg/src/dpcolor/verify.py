"""Run the frozen claim table and report each claim as confirmed, refuted or budget-exceeded.

The table lives in ``data/claims.json``; each claim names a *quantity*
(an evaluator below), its arguments, a relation and the expected value.
Evaluators call solver functions through their modules so that a tampered
solver is seen by the harness.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from . import bounds, constructions, graph, join, solver, twist
from .budget import Budget, BudgetExceeded

STATUSES = ("confirmed", "refuted", "budget-exceeded")


def load_claims():
    text = resources.files("dpcolor").joinpath("data/claims.json").read_text()
    return json.loads(text)["claims"]


def load_schema():
    text = resources.files("dpcolor").joinpath("data/report_schema.json").read_text()
    return json.loads(text)


@dataclass
class ClaimReport:
    id: str
    location: str
    statement: str
    relation: str
    expected: object
    computed: object
    status: str
    certificate: str
    runtime_ms: int = 0
    note: str | None = None

    def to_dict(self, timing=False):
        d = {
            "id": self.id,
            "location": self.location,
            "statement": self.statement,
            "relation": self.relation,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
            "certificate": self.certificate,
        }
        if self.note:
            d["note"] = self.note
        if timing:
            d["runtime_ms"] = self.runtime_ms
        return d


# ---------------------------------------------------------------- evaluators

def _g(args):
    return constructions.parse_graph_spec(args["graph"])


def _alpha_dp(args, budget):
    g = _g(args)
    if args.get("method") == "twist":
        cert = twist.alpha_2_dp_fast(g, budget)
    else:
        cert = solver.alpha_t_dp(g, args["t"], budget)
    return cert.value, f"worst cover #{cert.cover_index} ({cert.method}), {cert.covers_examined} covers examined"


def _chi_dp(args, budget):
    cert = solver.chi_dp_certificate(_g(args), budget)
    return cert.value, f"searched t in [{cert.lower}, {cert.upper}]"


def _tau(args, budget):
    tau, fvs = graph.feedback_vertex_number(_g(args), budget)
    return tau, f"feedback set {list(fvs)}"


def _col(args, budget):
    return graph.coloring_number(_g(args)), "min-degree elimination"


def _nice(args, budget):
    v = solver.is_partially_dp_nice(_g(args), budget)
    ref = f"chi_DP={v.chi_dp}"
    if v.failing:
        c = v.certificate
        ref += f", fails at t={v.failing_t} (alpha={c.value}, cover #{c.cover_index})"
    return v.nice, ref


def _twist_partial(args, budget):
    g = _g(args)
    tw = twist.twist_from_edges(g, [tuple(e) for e in args["twisted"]])
    res = twist.max_partial_twist(tw, budget)
    return res.size, f"kept {list(res.vertices)}"


def _v8_three_cycle(args, budget):
    res = twist.three_cycle_argument(constructions.wagner_v8(), constructions.V8_THREE_CYCLES)
    ok = res.parity_sum_even and res.some_part_colorable and res.max_partial_min >= 6
    return ok, f"{res.assignments} twist assignments"


def _regular_degree(args, budget):
    g = _g(args)
    degs = set(g.degrees())
    return (degs.pop() if len(degs) == 1 else None), f"degrees {sorted(set(g.degrees()))}"


def _subcubic_sharpness(args, budget):
    g = _g(args)
    cert = solver.alpha_t_dp(g, 2, budget)
    bound = Fraction(5 * g.n - 2, 8)
    return cert.value == bound, f"alpha_2={cert.value}, bound={bound.numerator}/{bound.denominator}"


def _complete_alpha(args, budget):
    q = args["q"]
    g = constructions.complete(q)
    vals = [solver.alpha_t_dp(g, t, budget).value for t in range(1, q + 1)]
    return vals == list(range(1, q + 1)), f"values {vals}"


def _chordal_nice(args, budget):
    bad = []
    for seed in args["seeds"]:
        g = constructions.random_chordal(args["n"], Fraction(args["density"]), seed)
        if not graph.is_chordal(g)[0] or not solver.is_partially_dp_nice(g, budget).nice:
            bad.append(seed)
    return not bad, f"{len(args['seeds'])} graphs, failing seeds {bad}"


def _subadditivity(args, budget):
    g = _g(args)
    v = bounds.subadditivity_check(g, args["partition"], budget=budget)
    return v.holds, f"{v.lhs} <= {v.rhs}"


def _ceiling(args, budget):
    g = _g(args)
    t = args["t"]
    chi = solver.chi_dp(g, budget)
    val = solver.alpha_t_dp(g, t, budget).value
    b = bounds.ceiling_bound(g.n, chi, t)
    return val >= b, f"{val} >= {b.numerator}/{b.denominator}"


def _half_values(args, budget):
    rep = bounds.half_values_report(_g(args), budget=budget)
    return rep.guarantee_met, f"{rep.count} of {rep.chi_dp - 1} values, need {rep.required}"


def _join_chain(args, budget):
    rep = join.join_threshold(_g(args), args["p_max"], make_budget=lambda: _fresh(budget))
    checks = rep.chain_checks()
    if len(checks) < args["p_max"]:
        raise BudgetExceeded("not every p in range was computable")
    chain = [sorted(r.failing) for r in rep.rows]
    return all(ok for _, ok in checks), f"B_p chain {chain}"


def _join_threshold(args, budget):
    rep = join.join_threshold(_g(args), args["p_max"], make_budget=lambda: _fresh(budget))
    return rep.threshold, f"rows {[(r.p, r.status) for r in rep.rows]}"


EVALUATORS = {
    "alpha_dp": _alpha_dp,
    "chi_dp": _chi_dp,
    "tau": _tau,
    "col": _col,
    "nice": _nice,
    "twist_partial": _twist_partial,
    "v8_three_cycle": _v8_three_cycle,
    "regular_degree": _regular_degree,
    "subcubic_sharpness": _subcubic_sharpness,
    "complete_alpha": _complete_alpha,
    "chordal_nice": _chordal_nice,
    "subadditivity": _subadditivity,
    "ceiling": _ceiling,
    "half_values": _half_values,
    "join_chain": _join_chain,
    "join_threshold": _join_threshold,
}


def _fresh(budget):
    return Budget(budget.max_nodes, budget.max_covers, budget.max_vertices)


def _relation_holds(relation, computed, expected):
    if relation == "eq":
        return computed == expected
    if computed is None:
        return False
    if relation == "le":
        return computed <= expected
    if relation == "ge":
        return computed >= expected
    raise ValueError(f"unknown relation {relation!r}")


def evaluate(claim, max_nodes=None, max_covers=None):
    budget = Budget(max_nodes, max_covers)
    start = time.perf_counter()
    try:
        computed, ref = EVALUATORS[claim["quantity"]](claim["args"], budget)
        status = "confirmed" if _relation_holds(claim["relation"], computed, claim["expected"]) else "refuted"
    except BudgetExceeded as exc:
        computed, ref, status = None, str(exc), "budget-exceeded"
    elapsed = int((time.perf_counter() - start) * 1000)
    return ClaimReport(
        claim["id"], claim["location"], claim["statement"], claim["relation"],
        claim["expected"], computed, status, ref, elapsed, claim.get("note"),
    )


def select(claims, only=None):
    if not only:
        return list(claims)
    keys = set(only)
    return [c for c in claims if c["group"] in keys or c["id"] in keys]


def run_claims(only=None, max_nodes=None, max_covers=None):
    claims = sorted(select(load_claims(), only), key=lambda c: c["id"])
    return [evaluate(c, max_nodes, max_covers) for c in claims]


def _fmt(x):
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def render_table(reports, timing=False):
    head = ["id", "status", "relation", "expected", "computed", "location"]
    if timing:
        head.append("ms")
    rows = []
    for r in reports:
        row = [r.id, r.status, r.relation, _fmt(r.expected), _fmt(r.computed), r.location]
        if timing:
            row.append(str(r.runtime_ms))
        rows.append(row)
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h) for i, h in enumerate(head)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(head, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    counts = {s: sum(1 for r in reports if r.status == s) for s in STATUSES}
    lines.append(", ".join(f"{counts[s]} {s}" for s in STATUSES))
    return "\n".join(lines) + "\n"


def report_document(reports, timing=False):
    counts = {s: sum(1 for r in reports if r.status == s) for s in STATUSES}
    return {"claims": [r.to_dict(timing) for r in reports], "summary": counts}


def exit_code(reports, strict=False):
    if any(r.status == "refuted" for r in reports):
        return 3
    if strict and any(r.status == "budget-exceeded" for r in reports):
        return 2
    return 0

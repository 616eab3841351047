"""``dpcolor`` command line.

Exit codes: 0 success, 1 usage or input error, 2 budget exceeded
(for ``verify-paper`` only with ``--strict``), 3 a claim was refuted.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bounds, constructions, graph, join, serialize, solver, twist, verify
from .budget import Budget, BudgetExceeded

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_REFUTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _plain(x):
    """Make ``x`` JSON-safe; rationals become ``"p/q"`` strings, never floats."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else serialize.rational(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_plain(v) for v in items]
    return x


def _emit(doc):
    print(json.dumps(_plain(doc), indent=2, sort_keys=True))


def _budget(args):
    return Budget(args.max_nodes, args.max_covers)


def _graph(args):
    if args.graph is None:
        raise UsageError("--graph is required")
    return constructions.parse_graph_spec(args.graph)


def _parse_edges(text):
    edges = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        try:
            u, v = item.split("-")
            edges.append((int(u), int(v)))
        except ValueError as exc:
            raise UsageError(f"bad edge {item!r}, expected u-v") from exc
    return edges


def _read_cover(path):
    try:
        with open(path) as fh:
            return serialize.loads_cover(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _twist_input(args):
    if args.cover:
        return twist.cover_to_twist(_read_cover(args.cover))
    g = _graph(args)
    return twist.twist_from_edges(g, _parse_edges(args.twisted or ""))


def _star(holds):
    return "holds" if holds else "FAILS"


# ---------------------------------------------------------------- commands

def cmd_alpha(args):
    g = _graph(args)
    if args.t < 1:
        raise UsageError("--t must be at least 1")
    budget = _budget(args)
    if args.method == "twist":
        if args.t != 2:
            raise UsageError("--method twist needs --t 2")
        cert = twist.alpha_2_dp_fast(g, budget)
    else:
        cert = solver.alpha_t_dp(g, args.t, budget)
    _emit(serialize.certificate_to_dict(cert, args.graph))
    return EXIT_OK


def cmd_chi_dp(args):
    g = _graph(args)
    cert = solver.chi_dp_certificate(g, _budget(args))
    _emit({
        "graph": args.graph,
        "chi_dp": cert.value,
        "chi": cert.lower,
        "col": cert.upper,
        "bad_cover": None if cert.bad_cover is None else serialize.cover_to_dict(cert.bad_cover),
    })
    return EXIT_OK


def cmd_tau(args):
    g = _graph(args)
    tau, fvs = graph.feedback_vertex_number(g, _budget(args))
    _emit({"graph": args.graph, "n": g.n, "tau": tau, "feedback_set": list(fvs), "n_minus_tau": g.n - tau})
    return EXIT_OK


def cmd_nice(args):
    g = _graph(args)
    v = solver.is_partially_dp_nice(g, _budget(args), exact=args.exact)
    rows = []
    for r in v.rows:
        rows.append({
            "t": r.t, "threshold": r.threshold, "value": r.value,
            "lower_bound": r.lower_bound, "holds": r.holds, "source": r.source,
        })
    cert = v.certificate
    doc = {
        "graph": args.graph, "n": g.n, "chi_dp": v.chi_dp, "nice": v.nice,
        "failing": v.failing, "rows": rows,
        "certificate": None if cert is None else serialize.certificate_to_dict(cert),
    }
    if args.json:
        _emit(doc)
        return EXIT_OK
    print(f"{args.graph}: n={g.n} chi_DP={v.chi_dp}")
    print("t  t*n/chi  alpha_t^DP  bound  (*)    source")
    for r in v.rows:
        val = "-" if r.value is None else str(r.value)
        print(f"{r.t:<2} {serialize.rational(r.threshold):<8} {val:<11} {r.lower_bound:<6} {_star(r.holds):<6} {r.source}")
    if v.nice:
        print("partially DP-nice")
    else:
        print(f"not partially DP-nice: fails at t={v.failing_t}, worst cover #{cert.cover_index}")
    return EXIT_OK


def cmd_twist_feasible(args):
    tw = _twist_input(args)
    res = twist.feasible(tw)
    _emit({
        "feasible": res.feasible,
        "twisted": [list(e) for e in tw.twisted_edges()],
        "transversal": None if res.transversal is None else list(res.transversal),
        "violating_cycle": None if res.cycle is None else list(res.cycle),
    })
    return EXIT_OK


def cmd_max_partial(args):
    tw = _twist_input(args)
    res = twist.max_partial_twist(tw, _budget(args))
    _emit({
        "size": res.size,
        "vertices": list(res.vertices),
        "transversal": list(res.transversal),
        "twisted": [list(e) for e in tw.twisted_edges()],
    })
    return EXIT_OK


def cmd_bounds(args):
    g = _graph(args)
    budget = _budget(args)
    chi = solver.chi_dp(g, budget)
    ts = [args.t] if args.t else list(range(1, chi + 1))
    reports = []
    for t in ts:
        exact = solver.alpha_t_dp(g, t, budget, chi=chi).value
        reports.append(bounds.bound_report(g, t, chi, exact, args.graph, budget))
    doc = [
        {"graph": r.graph, "t": r.t, "n": r.n, "chi_dp": r.chi_dp, "exact": r.exact,
         "bounds": [{"name": b.name, "value": b.value, "satisfied": b.satisfied} for b in r.bounds]}
        for r in reports
    ]
    if args.json:
        _emit(doc)
        return EXIT_OK
    print(f"{args.graph}: n={g.n} chi_DP={chi}")
    for r in reports:
        cells = ", ".join(f"{b.name} {serialize.rational(b.value)}{'' if b.satisfied else ' (!)'}" for b in r.bounds)
        print(f"t={r.t}: alpha^DP={r.exact}; {cells}")
    return EXIT_OK


def cmd_join_threshold(args):
    g = _graph(args)
    rep = join.join_threshold(g, args.p_max, make_budget=lambda: _budget(args))
    chi_g = graph.chromatic_number(g)
    doc = {
        "graph": args.graph,
        "p_max": args.p_max,
        "threshold": rep.threshold,
        "rows": [{"p": r.p, "n": r.n, "chi": r.chi, "chi_dp": r.chi_dp,
                  "failing": None if r.failing is None else sorted(r.failing), "status": r.status}
                 for r in rep.rows],
        "chain": [{"p": p, "subset": ok} for p, ok in rep.chain_checks()],
        "one_vertex_plus": [{"p": p, "ok": ok} for p, ok in rep.one_vertex_plus_checks(chi_g)],
    }
    if args.json:
        _emit(doc)
    else:
        for r in rep.rows:
            b = "-" if r.failing is None else "{" + ", ".join(map(str, sorted(r.failing))) + "}"
            cd = "-" if r.chi_dp is None else r.chi_dp
            print(f"p={r.p}: n={r.n} chi_DP={cd} B_p={b} {r.status}")
        if rep.threshold is None:
            print(f"threshold: none <= {args.p_max}")
        else:
            print(f"threshold: p={rep.threshold}")
        for p, ok in rep.chain_checks():
            print(f"B_{p + 1} subset of B_{p}: {ok}")
    if any(r.status == "budget-exceeded" for r in rep.rows) and args.strict:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_export(args):
    if args.cover:
        c = _read_cover(args.cover)
    elif args.twisted is not None:
        c = twist.twist_to_cover(_twist_input(args))
    elif args.worst is not None:
        c = solver.alpha_t_dp(_graph(args), args.worst, _budget(args)).worst_cover
    else:
        c = None
    if c is None:
        g = _graph(args)
        if args.format == "dot":
            names = constructions.vertex_names(args.graph.split(":")[0], g)
            sys.stdout.write(serialize.graph_to_dot(g, names))
        else:
            _emit({"n": g.n, "edges": [list(e) for e in g.edges]})
        return EXIT_OK
    if args.format == "json":
        sys.stdout.write(serialize.dumps_cover(c) + "\n")
        return EXIT_OK
    witness = None if args.no_witness else solver.max_transversal(c, _budget(args))[1]
    names = None
    if args.graph:
        names = constructions.vertex_names(args.graph.split(":")[0], c.base)
    sys.stdout.write(serialize.cover_to_dot(c, witness, names))
    return EXIT_OK


def cmd_verify_paper(args):
    reports = verify.run_claims(args.only, args.max_nodes, args.max_covers)
    if args.json:
        print(json.dumps(verify.report_document(reports, args.timing), indent=2, sort_keys=True))
    else:
        sys.stdout.write(verify.render_table(reports, args.timing))
    return verify.exit_code(reports, args.strict)


# ---------------------------------------------------------------- parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-nodes", type=int, default=None, help="search-node budget")
    common.add_argument("--max-covers", type=int, default=None, help="cover-enumeration budget")
    common.add_argument("--strict", action="store_true", help="budget exhaustion is an error")
    common.add_argument("--json", action="store_true", help="JSON instead of a table")

    gspec = argparse.ArgumentParser(add_help=False)
    gspec.add_argument("--graph", help="q3, v8, gadget, m, gstar:N, cycle:N, ... or file:PATH")

    tw = argparse.ArgumentParser(add_help=False)
    tw.add_argument("--twisted", help="comma separated twisted edges, e.g. 3-4,0-1")
    tw.add_argument("--cover", help="perfect 2-fold cover JSON file")

    p = _Parser(prog="dpcolor", description="Exact DP-colouring computations on small graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("alpha", parents=[common, gspec], help="alpha_t^DP with a certificate")
    a.add_argument("--t", type=int, required=True)
    a.add_argument("--method", choices=["generic", "twist"], default="generic")
    a.set_defaults(func=cmd_alpha)

    a = sub.add_parser("chi-dp", parents=[common, gspec], help="DP chromatic number")
    a.set_defaults(func=cmd_chi_dp)

    a = sub.add_parser("tau", parents=[common, gspec], help="feedback vertex number")
    a.set_defaults(func=cmd_tau)

    a = sub.add_parser("nice", parents=[common, gspec], help="partial DP-niceness, per t")
    a.add_argument("--exact", action="store_true", help="compute every alpha_t^DP exactly")
    a.set_defaults(func=cmd_nice)

    a = sub.add_parser("twist-feasible", parents=[common, gspec, tw], help="full colouring of a 2-fold twist")
    a.set_defaults(func=cmd_twist_feasible)

    a = sub.add_parser("max-partial", parents=[common, gspec, tw], help="largest colourable part of a twist")
    a.set_defaults(func=cmd_max_partial)

    a = sub.add_parser("bounds", parents=[common, gspec], help="lower bounds against exact values")
    a.add_argument("--t", type=int, default=None)
    a.set_defaults(func=cmd_bounds)

    a = sub.add_parser("join-threshold", parents=[common, gspec], help="smallest p making G v K_p nice")
    a.add_argument("--p-max", type=int, default=4)
    a.set_defaults(func=cmd_join_threshold)

    a = sub.add_parser("export", parents=[common, gspec, tw], help="DOT or JSON of a graph or cover")
    a.add_argument("--format", choices=["dot", "json"], default="dot")
    a.add_argument("--worst", type=int, metavar="T", help="export the worst t-fold cover")
    a.add_argument("--no-witness", action="store_true")
    a.set_defaults(func=cmd_export)

    a = sub.add_parser("verify-paper", parents=[common], help="check the frozen claim table")
    a.add_argument("--only", action="append", help="claim group or id (repeatable)")
    a.add_argument("--timing", action="store_true", help="include runtimes")
    a.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"dpcolor: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError) as exc:
        print(f"dpcolor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

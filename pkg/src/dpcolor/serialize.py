"""JSON envelopes for covers, twists and certificates; DOT export.

Cover JSON::

    {"fold": 2, "n": 8, "edges": [[0, 1], ...], "matchings": [[1, 0], ...],
     "twist": {"0-1": 1, ...}}          # twist only for perfect 2-fold covers

Unmatched slots are ``null``.  Rationals are written as ``"p/q"`` strings.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .cover import Cover
from .graph import Graph, GraphFormatError


class CoverFormatError(ValueError):
    """Malformed cover JSON."""


def rational(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s):
    return Fraction(s)


def cover_to_dict(c):
    d = {
        "fold": c.fold,
        "n": c.n,
        "edges": [list(e) for e in c.base.edges],
        "matchings": [list(m) for m in c.matchings],
    }
    if c.fold == 2 and c.is_perfect():
        d["twist"] = {f"{u}-{v}": int(m == (1, 0)) for (u, v), m in zip(c.base.edges, c.matchings)}
    return d


def cover_from_dict(d):
    try:
        g = Graph(int(d["n"]), tuple(tuple(e) for e in d["edges"]))
        fold = int(d["fold"])
        raw = d["matchings"]
        if len(raw) != len(d["edges"]):
            raise CoverFormatError("one matching per listed edge is required")
        # matchings are listed in the file's edge order; the graph sorts its edges
        order = {tuple(sorted(e)): i for i, e in enumerate(d["edges"])}
        mats = []
        for e in g.edges:
            i = order[e]
            u, v = d["edges"][i]
            m = [None if j is None else int(j) for j in raw[i]]
            if u > v:  # listed reversed: invert so the map goes smaller -> larger
                inv = [None] * fold
                for a, b in enumerate(m):
                    if b is not None:
                        inv[b] = a
                m = inv
            mats.append(tuple(m))
        c = Cover(g, fold, tuple(mats))
    except (KeyError, TypeError, IndexError) as exc:
        raise CoverFormatError(f"malformed cover: {exc}") from exc
    except GraphFormatError as exc:
        raise CoverFormatError(f"malformed cover base graph: {exc}") from exc
    except ValueError as exc:
        if isinstance(exc, CoverFormatError):
            raise
        raise CoverFormatError(f"malformed cover: {exc}") from exc
    if "twist" in d:
        want = {k: int(b) for k, b in d["twist"].items()}
        have = cover_to_dict(c).get("twist")
        if have != want:
            raise CoverFormatError("twist map disagrees with the matchings")
    return c


def dumps_cover(c):
    return json.dumps(cover_to_dict(c), sort_keys=True)


def loads_cover(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CoverFormatError(f"not JSON: {exc}") from exc
    if isinstance(d, dict) and "cover" in d:
        d = d["cover"]
    if not isinstance(d, dict):
        raise CoverFormatError("cover JSON must be an object")
    return cover_from_dict(d)


def witness_to_dict(s):
    return {str(v): i for v, i in enumerate(s) if i is not None}


def witness_from_dict(d, n):
    s = [None] * n
    for k, i in d.items():
        s[int(k)] = int(i)
    return tuple(s)


def certificate_to_dict(cert, graph_name=None):
    d = {
        "value": cert.value,
        "t": cert.fold,
        "cover": cover_to_dict(cert.worst_cover),
        "witness": witness_to_dict(cert.witness),
        "cover_index": cert.cover_index,
        "lower_bound": cert.lower_bound,
        "method": cert.method,
    }
    if graph_name is not None:
        d["graph"] = graph_name
    return d


# ----------------------------------------------------------------------- DOT

def _q(s):
    return '"' + str(s).replace('"', '\\"') + '"'


def graph_to_dot(g, names=None, highlight=()):
    names = names or [str(v) for v in range(g.n)]
    hl = set(highlight)
    out = ["graph G {"]
    for v in range(g.n):
        style = ' style=filled fillcolor="#f4a261"' if v in hl else ""
        out.append(f"  {v} [label={_q(names[v])}{style}];")
    for u, v in g.edges:
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def cover_to_dot(c, witness=None, names=None):
    """Cover graph with each list boxed as a cluster and witness nodes filled."""
    names = names or [str(v) for v in range(c.n)]
    t = c.fold
    chosen = set()
    if witness is not None:
        chosen = {(v, i) for v, i in enumerate(witness) if i is not None}

    def node(v, i):
        return _q(f"{v}.{i}")

    out = ["graph H {", "  node [shape=circle];"]
    for v in range(c.n):
        out.append(f"  subgraph cluster_{v} {{")
        out.append(f"    label={_q(names[v])}; style=rounded;")
        for i in range(t):
            style = ' style=filled fillcolor="#2a9d8f"' if (v, i) in chosen else ""
            out.append(f"    {node(v, i)} [label={_q(f'{names[v]}^{i + 1}')}{style}];")
        for i in range(t):
            for j in range(i + 1, t):
                out.append(f"    {node(v, i)} -- {node(v, j)} [color=gray];")
        out.append("  }")
    for (u, v), m in zip(c.base.edges, c.matchings):
        for i, j in enumerate(m):
            if j is not None:
                out.append(f"  {node(u, i)} -- {node(v, j)};")
    out.append("}")
    return "\n".join(out) + "\n"

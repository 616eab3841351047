"""Named graphs and parameterised families, with frozen vertex numbering.

Vertex naming tables (index -> name) are part of the public contract:

=============  ============================================================
graph          vertices
=============  ============================================================
``q3()``       ``x y z w x' y' z' w'`` = 0..7; 4-cycles ``x y z w`` and
               ``x' y' z' w'`` plus the matching ``x x'``, ``y y'``, ...
``wagner_v8``  ``v1 .. v8`` = 0..7; 8-cycle plus ``v1v5 v2v6 v3v7 v4v8``
``gadget_g``   ``u v x y z`` = 0..4; ``K4`` on ``u v x y`` with ``xy``
               subdivided by ``z``
``chain_gstar``block ``i`` (1-based) occupies ``5(i-1) .. 5i-1`` as
               ``u_i v_i x_i y_i z_i``; connectors ``z_i u_{i+1}``
``m_graph``    two gadget blocks (0..4, 5..9) plus the edge ``z_1 z_2``
=============  ============================================================
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .graph import Graph, GraphFormatError, parse_edge_list

Q3_NAMES = ("x", "y", "z", "w", "x'", "y'", "z'", "w'")
V8_NAMES = tuple(f"v{i}" for i in range(1, 9))
GADGET_NAMES = ("u", "v", "x", "y", "z")
GADGET_TWIST_EDGE = (3, 4)  # yz

# f(xy) = f(yz) = f(zw) = f(w'x') = 1, all other cube edges untwisted
Q3_LEMMA_TWISTS = ((0, 1), (1, 2), (2, 3), (4, 7))


def q3():
    return Graph(8, (
        (0, 1), (1, 2), (2, 3), (0, 3),
        (4, 5), (5, 6), (6, 7), (4, 7),
        (0, 4), (1, 5), (2, 6), (3, 7),
    ))


def wagner_v8():
    ring = [(i, (i + 1) % 8) for i in range(8)]
    return Graph(8, tuple(ring) + ((0, 4), (1, 5), (2, 6), (3, 7)))


def v8_vertex(k):
    """Index of the named vertex ``v_k`` (1-based) in :func:`wagner_v8`."""
    return k - 1


_GADGET_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4))


def gadget_g():
    return Graph(5, _GADGET_EDGES)


def gadget_vertex(name, block=1):
    """Index of ``u_i``.. ``z_i`` in :func:`chain_gstar` / :func:`m_graph`."""
    return 5 * (block - 1) + GADGET_NAMES.index(name)


def _gadget_blocks(blocks):
    edges = []
    for b in range(blocks):
        off = 5 * b
        edges.extend((u + off, v + off) for u, v in _GADGET_EDGES)
    return edges


def chain_gstar(blocks):
    if blocks < 1:
        raise ValueError("G* needs at least one block")
    edges = _gadget_blocks(blocks)
    edges.extend((5 * b + 4, 5 * (b + 1)) for b in range(blocks - 1))
    return Graph(5 * blocks, tuple(edges))


def gstar_twist_edges(blocks):
    """The twisted edges ``y_i z_i`` used to show ``alpha_2^DP(G*) <= 3n``."""
    return tuple((5 * b + 3, 5 * b + 4) for b in range(blocks))


def m_graph():
    edges = _gadget_blocks(2) + [(4, 9)]
    return Graph(10, tuple(edges))


def vertex_names(name, g):
    """Printable vertex names for a constructed graph, falling back to indices."""
    if name == "q3":
        return Q3_NAMES
    if name == "v8":
        return V8_NAMES
    if name in ("gadget", "m") or name.startswith("gstar"):
        return tuple(f"{GADGET_NAMES[i % 5]}{i // 5 + 1}" for i in range(g.n))
    return tuple(str(i) for i in range(g.n))


# ------------------------------------------------------------------ families

def cycle(n):
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n):
    if n < 1:
        raise ValueError("paths need at least 1 vertex")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete(n):
    if n < 1:
        raise ValueError("complete graphs need at least 1 vertex")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def empty(n):
    return Graph(n, ())


def star(leaves):
    """``K_{1,leaves}`` with centre 0."""
    if leaves < 1:
        raise ValueError("stars need at least one leaf")
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def mobius_ladder(k):
    """``2k``-cycle plus the ``k`` long diagonals ``i, i+k``; ``k = 4`` is ``V8``."""
    if k < 2:
        raise ValueError("Mobius ladders need k >= 2")
    n = 2 * k
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, i + k) for i in range(k)]
    return Graph(n, tuple(edges))


def join_complete(g, p):
    """``G v K_p``: ``p`` new mutually adjacent vertices ``n .. n+p-1`` joined to all of ``G``."""
    if p < 0:
        raise ValueError("p must be non-negative")
    n = g.n
    edges = list(g.edges)
    for a in range(n, n + p):
        edges.extend((v, a) for v in range(a))
    return Graph(n + p, tuple(edges))


def disjoint_union(g, h):
    edges = list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph(g.n + h.n, tuple(edges))


# ---------------------------------------------------------- chordal generator

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MODULUS = 1 << 64


class Lcg:
    """64-bit linear congruential generator; each draw returns the top 31 bits."""

    def __init__(self, seed):
        self.state = seed % LCG_MODULUS

    def next31(self):
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) % LCG_MODULUS
        return self.state >> 33

    def below(self, k):
        return self.next31() % k

    def accept(self, p):
        """True with probability ``p`` (a :class:`~fractions.Fraction`), compared exactly."""
        return self.next31() * p.denominator < p.numerator * (1 << 31)


def random_chordal(n, density, seed):
    """Seeded chordal graph built along a reverse perfect elimination order.

    Vertex ``i`` is offered the earlier vertices in a shuffled order and
    joins each one with probability ``density`` provided it is adjacent to
    everything ``i`` has already joined, so every earlier neighbourhood is
    a clique.  ``density = 1`` yields ``K_n``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    density = Fraction(density)
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = Lcg(seed)
    adj = [0] * n
    edges = []
    for i in range(1, n):
        offer = list(range(i))
        for j in range(i - 1, 0, -1):
            k = rng.below(j + 1)
            offer[j], offer[k] = offer[k], offer[j]
        chosen = 0
        for u in offer:
            if rng.accept(density) and (adj[u] & chosen) == chosen:
                chosen |= 1 << u
        for u in range(i):
            if chosen >> u & 1:
                edges.append((u, i))
                adj[u] |= 1 << i
                adj[i] |= 1 << u
    return Graph(n, tuple(edges))


# --------------------------------------------------------------- graph specs

def _int_arg(parts, i, spec):
    try:
        return int(parts[i])
    except (IndexError, ValueError) as exc:
        raise GraphFormatError(f"bad graph spec {spec!r}") from exc


_FAMILIES = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "mobius": mobius_ladder,
    "star": star,
    "empty": empty,
    "gstar": chain_gstar,
}


def parse_graph_spec(spec):
    """Build a graph from a spec string such as ``q3``, ``gstar:3`` or ``file:g.txt``.

    A suffix ``+kP`` joins ``K_P`` onto the result (``gadget+k2``).
    Family arguments below the family minimum raise :class:`GraphFormatError`.
    """
    base, _, joined = spec.partition("+k")
    parts = base.split(":")
    head = parts[0]
    try:
        if head == "file":
            g = parse_edge_list(Path(base[len("file:"):]).read_text())
        elif head == "q3" and len(parts) == 1:
            g = q3()
        elif head == "v8" and len(parts) == 1:
            g = wagner_v8()
        elif head == "gadget" and len(parts) == 1:
            g = gadget_g()
        elif head == "m" and len(parts) == 1:
            g = m_graph()
        elif head in _FAMILIES and len(parts) == 2:
            g = _FAMILIES[head](_int_arg(parts, 1, spec))
        elif head == "chordal" and len(parts) == 4 and parts[3].startswith("seed"):
            n = _int_arg(parts, 1, spec)
            seed = int(parts[3][4:])
            g = random_chordal(n, Fraction(parts[2]), seed)
        else:
            raise GraphFormatError(f"unknown graph spec {spec!r}")
        if joined:
            g = join_complete(g, int(joined))
    except OSError as exc:
        raise GraphFormatError(f"cannot read {base!r}: {exc}") from exc
    except ValueError as exc:
        if isinstance(exc, GraphFormatError):
            raise
        raise GraphFormatError(f"bad graph spec {spec!r}: {exc}") from exc
    return g


# the three unicyclic subgraphs of V8 used for alpha_2^DP(V8) >= 6, as
# (deleted vertices, the unique cycle left behind), 0-based
V8_THREE_CYCLES = (
    ((2, 7), (0, 1, 5, 4)),     # V8 - {v3, v8}: v1 v2 v6 v5
    ((5, 7), (0, 1, 2, 3, 4)),  # V8 - {v6, v8}: v1 v2 v3 v4 v5
    ((0, 6), (1, 2, 3, 4, 5)),  # V8 - {v1, v7}: v2 v3 v4 v5 v6
)

"""Shared search budget for every exact routine in the package.

A :class:`Budget` counts search-node expansions and enumerated covers.  When
either count passes its cap, :class:`BudgetExceeded` is raised; no routine
ever returns an approximate answer instead.
"""
from __future__ import annotations

import os

DEFAULT_MAX_NODES = 50_000_000
DEFAULT_MAX_COVERS = 2_000_000
DEFAULT_MAX_VERTICES = 24

ENV_MAX_NODES = "DPCOLOR_MAX_NODES"
ENV_MAX_COVERS = "DPCOLOR_MAX_COVERS"


class BudgetExceeded(RuntimeError):
    """Raised when an exact search would exceed its configured budget."""


class Budget:
    """Mutable node/cover counter shared across one top-level computation.

    ``max_nodes`` and ``max_covers`` default to the environment overrides
    ``DPCOLOR_MAX_NODES`` / ``DPCOLOR_MAX_COVERS`` when set.
    """

    __slots__ = ("max_nodes", "max_covers", "max_vertices", "nodes", "covers")

    def __init__(self, max_nodes=None, max_covers=None, max_vertices=DEFAULT_MAX_VERTICES):
        if max_nodes is None:
            max_nodes = int(os.environ.get(ENV_MAX_NODES, DEFAULT_MAX_NODES))
        if max_covers is None:
            max_covers = int(os.environ.get(ENV_MAX_COVERS, DEFAULT_MAX_COVERS))
        self.max_nodes = max_nodes
        self.max_covers = max_covers
        self.max_vertices = max_vertices
        self.nodes = 0
        self.covers = 0

    def spend(self, k=1):
        self.nodes += k
        if self.nodes > self.max_nodes:
            raise BudgetExceeded(f"node budget of {self.max_nodes} expansions exceeded")

    def check_covers(self, count):
        """Refuse up front an enumeration of ``count`` covers beyond the cap."""
        if count > self.max_covers:
            raise BudgetExceeded(
                f"enumeration of {count} covers exceeds the cover budget of {self.max_covers}"
            )

    def spend_cover(self):
        self.covers += 1
        if self.covers > self.max_covers:
            raise BudgetExceeded(f"cover budget of {self.max_covers} exceeded")

    def check_size(self, n):
        if n > self.max_vertices:
            raise BudgetExceeded(f"graph on {n} vertices exceeds the size cap of {self.max_vertices}")

    def __repr__(self):
        return (
            f"Budget(nodes={self.nodes}/{self.max_nodes}, "
            f"covers={self.covers}/{self.max_covers})"
        )


def ensure(budget):
    return Budget() if budget is None else budget

"""Exact DP-colouring (correspondence colouring) tools for small graphs."""
from .budget import Budget, BudgetExceeded
from .cover import Cover, canonicalize, enumerate_covers, expand, identity_cover
from .graph import Graph, GraphFormatError
from .solver import (
    alpha_t_dp,
    chi_dp,
    dp_profile,
    is_partially_dp_nice,
    max_transversal,
)
from .twist import alpha_2_dp_fast, feasible, max_partial_twist

__version__ = "0.1.0"

"""Exact commuting probabilities of connected linear algebraic groups.

The heavy lifting happens in the compiled extension `_cpalg`; this package
re-exports its public surface.
"""

from ._cpalg import (
    FiniteGroup,
    GroupExpr,
    GroupParseError,
    approach_target,
    construct_nilpotent,
    construct_reductive,
    growth_degree,
    parse,
    probability,
    simple_groups_above,
)

__all__ = [
    "FiniteGroup",
    "GroupExpr",
    "GroupParseError",
    "approach_target",
    "construct_nilpotent",
    "construct_reductive",
    "growth_degree",
    "parse",
    "probability",
    "simple_groups_above",
]

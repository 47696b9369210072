"""Guard ceilings for brute-force code paths.

Every exhaustive oracle has an explicit ceiling; exceeding one raises
GuardError instead of silently degrading.  Each value can be overridden
with an environment variable CHORDALKIT_<NAME> (upper-cased field name).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class Guards:
    edit_distance_max_n: int = 10
    edit_distance_max_budget: int = 3
    min_conflicts_max_product: int = 10**7
    coloring_node_limit: int = 10**6
    repr_enum_max_n: int = 5
    repr_enum_max_classes: int = 20000
    pinned_max_n: int = 10
    pinned_max_nodes: int = 40
    gate_limit: int = 12
    shape_search_node_limit: int = 5 * 10**6


def current_guards() -> Guards:
    """Read guard ceilings, applying CHORDALKIT_* environment overrides."""
    overrides = {}
    for f in fields(Guards):
        raw = os.environ.get("CHORDALKIT_" + f.name.upper())
        if raw is not None:
            overrides[f.name] = int(raw)
    return Guards(**overrides)

"""Exact solver for Maker-Breaker domination and total domination games."""

from ._mbtd import (
    Graph,
    best_line,
    complete,
    construct,
    cycle,
    domination_number,
    find_pairing_total_dominating_set,
    naive_value,
    outcome,
    path,
    solve,
    total_domination_number,
)

__all__ = [
    "Graph",
    "best_line",
    "complete",
    "construct",
    "cycle",
    "domination_number",
    "find_pairing_total_dominating_set",
    "naive_value",
    "outcome",
    "path",
    "solve",
    "total_domination_number",
]

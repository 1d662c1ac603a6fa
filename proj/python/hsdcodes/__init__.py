"""Hermitian self-dual codes over GF(4) and GF(4)+uGF(4)."""

from ._core import (
    Code,
    HsdError,
    build,
    building_up,
    distance_bound,
    gray_map,
    search,
    table_ids,
    unitary_count,
    unitary_elements,
    verify_table,
)

__all__ = [
    "Code",
    "HsdError",
    "build",
    "building_up",
    "distance_bound",
    "gray_map",
    "search",
    "table_ids",
    "unitary_count",
    "unitary_elements",
    "verify_table",
]

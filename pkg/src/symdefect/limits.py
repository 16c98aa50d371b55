"""Size guards for the exhaustive routines.

Every brute-force routine takes a ``guards`` argument; exceeding a limit
raises :class:`~symdefect.errors.TooLarge` instead of truncating.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Guards:
    cover_max_vertices: int = 24
    oracle_max_vertices: int = 14
    oracle_max_s: int = 8
    brute_max_edges: int = 22
    max_enumeration: int = 5_000_000


DEFAULT_GUARDS = Guards()

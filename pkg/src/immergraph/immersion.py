"""Weak immersion testing for small patterns.

A pattern immerses in a host when its vertices map injectively to host
vertices (root i to root i) and its edges map to pairwise edge-disjoint
host paths joining the mapped ends.  Trails never help: a trail between
two vertices contains a path between them using a subset of its edges, so
the search ranges over vertex-simple paths only.

Host multiplicities above the pattern edge count are capped before the
search; extra parallel copies beyond that can never be used.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .multigraph import Multigraph

__all__ = [
    "Witness",
    "complete4",
    "wheel4",
    "diamond",
    "doubled_cycle",
    "pattern_from_name",
    "decide_immersion",
    "immerses",
    "verify_witness",
    "deletable_edge_at",
]


@dataclass(frozen=True)
class Witness:
    """Terminal map plus one host path per pattern edge.

    pattern_edges lists (u, v) pattern pairs with parallel copies adjacent,
    routes[i] is the host path for pattern_edges[i], starting at
    terminal_map[u] and ending at terminal_map[v].
    """

    pattern_edges: tuple[tuple[int, int], ...]
    terminal_map: tuple[int, ...]
    routes: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def complete4(roots: int = 0) -> Multigraph:
    """Four mutually joined vertices; roots pinned to 0 (and 1)."""
    edges = [(u, v, 1) for u in range(4) for v in range(u + 1, 4)]
    return Multigraph.from_edges(4, edges, roots=tuple(range(roots)))


@lru_cache(maxsize=None)
def wheel4(rooted: bool = False) -> Multigraph:
    """Four-vertex cycle plus a hub joined to every rim vertex."""
    edges = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]
    edges += [(4, i, 1) for i in range(4)]
    return Multigraph.from_edges(5, edges, roots=(4,) if rooted else ())


@lru_cache(maxsize=None)
def diamond(m: int) -> Multigraph:
    """Two-rooted pattern: roots joined by m-2 edges, all other pairs once.

    Degree m at the roots, total edge count m+3.  Swapping the two roots is
    an automorphism, so rooted immersion ignores the host root order.
    """
    if m < 2:
        raise ValueError("diamond parameter must be at least 2")
    edges = [(0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]
    if m > 2:
        edges.append((0, 1, m - 2))
    return Multigraph.from_edges(4, edges, roots=(0, 1))


def doubled_cycle(length: int, roots: tuple[int, ...] = ()) -> Multigraph:
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    edges = [(i, (i + 1) % length, 2) for i in range(length)]
    return Multigraph.from_edges(length, edges, roots=roots)


def pattern_from_name(name: str, nroots: int | None = None) -> Multigraph:
    """Resolve 'k4', 'w4' or 'dm:<m>' to a pattern graph.

    nroots selects the rooted variant; None means the pattern's default
    (k4 and w4 unrooted, dm always two-rooted).
    """
    if name == "k4":
        return complete4(0 if nroots is None else nroots)
    if name == "w4":
        if nroots not in (None, 0, 1):
            raise ValueError("w4 supports at most one root")
        return wheel4(rooted=nroots == 1)
    if name.startswith("dm:"):
        m = int(name.split(":", 1)[1])
        if nroots not in (None, 2):
            raise ValueError("dm patterns are two-rooted")
        return diamond(m)
    raise ValueError(f"unknown pattern {name!r}")


def _pattern_edge_list(pattern: Multigraph) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for u, v, m in pattern.edges():
        out.extend([(u, v)] * m)
    return tuple(out)


def decide_immersion(host: Multigraph, pattern: Multigraph) -> Witness | None:
    """Witness for a weak rooted immersion of pattern in host, or None."""
    if len(host.roots) != len(pattern.roots):
        raise ValueError("host and pattern must carry the same root count")
    cap = pattern.edge_count()
    capped = host if max(host.mat) <= cap else host.cap_multiplicities(cap)
    got = _kernels.immerses(
        capped.mat, capped.n, capped.roots, pattern.mat, pattern.n, pattern.roots, True
    )
    if got is None:
        return None
    tmap, routes = got
    return Witness(_pattern_edge_list(pattern), tmap, routes)


def immerses(host: Multigraph, pattern: Multigraph) -> bool:
    if len(host.roots) != len(pattern.roots):
        raise ValueError("host and pattern must carry the same root count")
    cap = pattern.edge_count()
    capped = host if max(host.mat) <= cap else host.cap_multiplicities(cap)
    return (
        _kernels.immerses(
            capped.mat, capped.n, capped.roots, pattern.mat, pattern.n, pattern.roots
        )
        is not None
    )


def verify_witness(host: Multigraph, pattern: Multigraph, witness: Witness) -> bool:
    """Recheck a witness from scratch, independent of the search kernels."""
    tmap = witness.terminal_map
    if len(tmap) != pattern.n:
        return False
    if len(set(tmap)) != pattern.n:
        return False
    if any(not 0 <= h < host.n for h in tmap):
        return False
    for pr, hr in zip(pattern.roots, host.roots):
        if tmap[pr] != hr:
            return False
    if witness.pattern_edges != _pattern_edge_list(pattern):
        return False
    if len(witness.routes) != len(witness.pattern_edges):
        return False
    usage: dict[tuple[int, int], int] = {}
    for (pu, pv), route in zip(witness.pattern_edges, witness.routes):
        if len(route) < 2 or len(set(route)) != len(route):
            return False
        if route[0] != tmap[pu] or route[-1] != tmap[pv]:
            return False
        for a, b in zip(route, route[1:]):
            key = (min(a, b), max(a, b))
            usage[key] = usage.get(key, 0) + 1
    for (a, b), count in usage.items():
        if count > host.mult(a, b):
            return False
    return True


def deletable_edge_at(host: Multigraph, pattern: Multigraph, v: int) -> int | None:
    """A neighbor u of v with host - uv still immersing pattern, or None.

    Exists whenever v is a non-terminal-forced vertex of even degree: paths
    of an immersion pass through v in pairs, so some incident edge is spare.
    Only meaningful when host immerses pattern; returns None otherwise.
    """
    for u in host.neighbors(v):
        if immerses(host.delete_edge(u, v), pattern):
            return u
    return None

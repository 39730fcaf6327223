"""Immersion testing by operation search: an independent second decider.

A pattern immerses in a host exactly when the host can be turned into the
pattern by repeatedly deleting an edge or splitting off a path of length
two (replace edges a-c, c-b by a-b), with isolated non-root vertices
discarded and root order preserved.  This module searches that move space
directly with canonical-form memoisation, sharing nothing with the path
packing search in the kernels; it is the test oracle for small cases.

Every move lowers the edge count by one, so the search terminates; states
are capped at the pattern's edge count, which cannot change the answer
since parallel copies beyond that can never all be consumed.
"""

from __future__ import annotations

from .multigraph import Multigraph

__all__ = ["immerses_by_operations"]

# pattern canonical form -> {state canonical form -> reachable}
_memo_by_pattern: dict[bytes, dict[bytes, bool]] = {}


def _normalize(g: Multigraph, cap: int) -> Multigraph:
    g = g.cap_multiplicities(cap)
    while g.n > 1:
        iso = next(
            (v for v in range(g.n) if g.degree(v) == 0 and v not in g.roots), None
        )
        if iso is None:
            break
        g = g.delete_vertex(iso)
    return g


def immerses_by_operations(host: Multigraph, pattern: Multigraph) -> bool:
    if len(host.roots) != len(pattern.roots):
        raise ValueError("host and pattern must carry the same root count")
    cap = pattern.edge_count()
    pkey = pattern.canonical_form()
    memo = _memo_by_pattern.setdefault(pkey, {})
    pn = pattern.n
    pecount = pattern.edge_count()
    root_need = tuple(pattern.degree(rt) for rt in pattern.roots)
    rest_need = sorted(
        (pattern.degree(v) for v in range(pn) if v not in pattern.roots), reverse=True
    )

    def feasible(g: Multigraph) -> bool:
        # moves never increase vertex count, edge count, or any degree
        if g.n < pn or g.edge_count() < pecount:
            return False
        for rt, need in zip(g.roots, root_need):
            if g.degree(rt) < need:
                return False
        rest = sorted(
            (g.degree(v) for v in range(g.n) if v not in g.roots), reverse=True
        )
        return all(have >= need for have, need in zip(rest, rest_need))

    def search(g: Multigraph) -> bool:
        key = g.canonical_form()
        if key == pkey:
            return True
        hit = memo.get(key)
        if hit is not None:
            return hit
        found = False
        for u, v, _m in g.edges():
            child = _normalize(g.delete_edge(u, v), cap)
            if feasible(child) and search(child):
                found = True
                break
        if not found:
            for center in range(g.n):
                nbrs = g.neighbors(center)
                for i in range(len(nbrs)):
                    for j in range(i + 1, len(nbrs)):
                        child = _normalize(
                            g.split_off(nbrs[i], center, nbrs[j]), cap
                        )
                        if feasible(child) and search(child):
                            found = True
                            break
                    if found:
                        break
                if found:
                    break
        memo[key] = found
        return found

    start = _normalize(host, cap)
    return feasible(start) and search(start)

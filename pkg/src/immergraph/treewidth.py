"""Exact tree-width by dynamic programming over vertex subsets.

The state TW(S) is the best width of an elimination order whose prefix
is S; eliminating v after S' costs the number of not-yet-eliminated
vertices reachable from v through S'.  Parallel edges are collapsed
first since the parameter only depends on the underlying simple graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import MAX_VERTICES, Multigraph

__all__ = ["TreeDecomposition", "treewidth_exact", "verify_decomposition"]


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed by tree node; edges join node indices."""

    bags: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def nodes(self) -> range:
        return range(len(self.bags))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def _reach_outside(adj: list[list[int]], inside: int, v: int) -> int:
    """Mask of vertices outside `inside` (excluding v) reachable from v
    along paths whose internal vertices all lie in `inside`."""
    seen = 1 << v
    out = 0
    stack = [v]
    while stack:
        cur = stack.pop()
        for u in adj[cur]:
            bit = 1 << u
            if seen & bit:
                continue
            seen |= bit
            if inside >> u & 1:
                stack.append(u)
            else:
                out |= bit
    return out


def treewidth_exact(g: Multigraph) -> tuple[int, TreeDecomposition]:
    if g.n > MAX_VERTICES:
        raise ValueError(f"graph order {g.n} exceeds {MAX_VERTICES}")
    n = g.n
    if n == 0:
        return -1, TreeDecomposition((), ())
    adj = [g.neighbors(v) for v in range(n)]
    full = (1 << n) - 1
    tw = [0] * (full + 1)
    tw[0] = -1
    for mask in range(1, full + 1):
        best = n
        rest = mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length() - 1
            prev = mask ^ bit
            cost = _reach_outside(adj, prev, v).bit_count()
            if tw[prev] > cost:
                cost = tw[prev]
            if cost < best:
                best = cost
        tw[mask] = best
    width = tw[full]

    # recover an optimal elimination order, last-eliminated first
    order: list[int] = []
    mask = full
    while mask:
        rest = mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            v = bit.bit_length() - 1
            prev = mask ^ bit
            if max(tw[prev], _reach_outside(adj, prev, v).bit_count()) == tw[mask]:
                order.append(v)
                mask = prev
                break
    order.reverse()

    position = {v: i for i, v in enumerate(order)}
    bags: list[frozenset[int]] = []
    higher: list[int] = []
    prefix = 0
    for v in order:
        reach = _reach_outside(adj, prefix, v)
        bags.append(frozenset({v} | {u for u in range(n) if reach >> u & 1}))
        higher.append(reach)
        prefix |= 1 << v
    edges = []
    for i in range(n - 1):
        if higher[i]:
            parent = min(position[u] for u in range(n) if higher[i] >> u & 1)
        else:
            parent = i + 1
        edges.append((i, parent))
    return width, TreeDecomposition(tuple(bags), tuple(edges))


def verify_decomposition(g: Multigraph, td: TreeDecomposition) -> bool:
    k = len(td.bags)
    if k == 0:
        return g.n == 0
    for a, b in td.edges:
        if not (0 <= a < k and 0 <= b < k):
            return False
    if len(td.edges) != k - 1:
        return False
    nbrs: list[list[int]] = [[] for _ in range(k)]
    for a, b in td.edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for t in nbrs[stack.pop()]:
            if t not in seen:
                seen.add(t)
                stack.append(t)
    if len(seen) != k:
        return False
    if any(not bag <= frozenset(range(g.n)) for bag in td.bags):
        return False
    for v in range(g.n):
        holders = [t for t in range(k) if v in td.bags[t]]
        if not holders:
            return False
        reached = {holders[0]}
        stack = [holders[0]]
        while stack:
            for t in nbrs[stack.pop()]:
                if t not in reached and v in td.bags[t]:
                    reached.add(t)
                    stack.append(t)
        if len(reached) != len(holders):
            return False
    for u, v, _ in g.edges():
        if not any(u in bag and v in bag for bag in td.bags):
            return False
    return True

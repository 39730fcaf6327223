"""Connectivity-driven decomposition and doubled-path compression.

``full_reduction`` repeatedly splits a graph along cuts of size at most
three until every remaining component is 3-edge-connected and internally
4-edge-connected.  For any pattern that is itself 3-edge-connected and
internally 4-edge-connected, the pattern immerses in the input iff it
immerses in one of the final components, so downstream classifiers only
ever see reduced components.

A chain is a vertex subset X, |X| >= 2, such that contracting everything
outside X yields a doubled cycle of length |X| + 1; X then induces a path
of doubled edges whose interior vertices have no other edges.  Shortening
identifies two adjacent chain vertices; reduction shortens until no chain
of order >= 3 remains.  On rooted graphs, chains containing a root are
left alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .connectivity import is_internally_k_edge_connected, is_k_edge_connected
from .multigraph import Multigraph

RULE_CUT_EDGE = "cut-edge"
RULE_TWO_CUT = "two-cut"
RULE_THREE_CUT = "internal-three-cut"


@dataclass(frozen=True)
class ReductionStep:
    """One split: rule name, component it applied to, cut side, results."""

    rule: str
    before: Multigraph
    side: frozenset[int]
    after: tuple[Multigraph, ...]


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]
    components: tuple[Multigraph, ...]


@dataclass(frozen=True)
class SausageChain:
    """Chain vertices in path order; order of the chain is len(chain)."""

    chain: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.chain)


def _find_cut(g: Multigraph, below: int, min_side: int) -> int | None:
    """Lowest-mask proper cut of size < below with min_side per side."""
    found = _kernels.find_violated_cut(
        g.mat, g.n, 0, 0, ((below, min_side, min_side, _kernels.MODE_ANY),)
    )
    return None if found is None else found[0]


def _mask_vertices(mask: int, n: int) -> list[int]:
    return [v for v in range(n) if mask >> v & 1]


def _contract_with_slot(g: Multigraph, block: list[int]) -> tuple[Multigraph, int]:
    if len(block) == 1:
        return g, block[0]
    star = min(block)
    blocked = set(block)
    slot = sum(1 for u in range(star) if u not in blocked)
    return g.contract(block), slot


def apply_rule(rule: str, g: Multigraph, side: frozenset[int]) -> tuple[Multigraph, ...]:
    """Split g along the given cut side; components of size one are dropped."""
    inside = sorted(side)
    outside = sorted(set(range(g.n)) - side)
    if rule == RULE_CUT_EDGE:
        parts = [g.induced(inside), g.induced(outside)]
    elif rule == RULE_TWO_CUT:
        parts = []
        for block in (outside, inside):
            h, slot = _contract_with_slot(g, block)
            parts.append(h.suppress(slot))
    elif rule == RULE_THREE_CUT:
        parts = [_contract_with_slot(g, block)[0] for block in (outside, inside)]
    else:
        raise ValueError(f"unknown rule {rule!r}")
    return tuple(p for p in parts if p.n > 1)


def full_reduction(g: Multigraph, pattern: Multigraph | None = None) -> ReductionTrace:
    """Split along cut edges, 2-cuts, and internal 3-cuts to a fixpoint.

    Defined on unrooted graphs.  When a pattern is supplied it is checked
    to be 3-edge-connected and internally 4-edge-connected, the condition
    under which the splits preserve its immersion status.
    """
    if g.roots:
        raise ValueError("full_reduction operates on unrooted graphs")
    if pattern is not None:
        if not is_k_edge_connected(pattern, 3):
            raise ValueError("pattern is not 3-edge-connected")
        if not is_internally_k_edge_connected(pattern, 4):
            raise ValueError("pattern is not internally 4-edge-connected")

    steps: list[ReductionStep] = []
    work = [g.induced(comp) for comp in g.components()]
    done: list[Multigraph] = []
    while work:
        k = work.pop(0)
        if k.n <= 1:
            continue
        applied = False
        for rule, below, min_side in (
            (RULE_CUT_EDGE, 2, 1),
            (RULE_TWO_CUT, 3, 1),
            (RULE_THREE_CUT, 4, 2),
        ):
            mask = _find_cut(k, below, min_side)
            if mask is None:
                continue
            side = frozenset(_mask_vertices(mask, k.n))
            parts = apply_rule(rule, k, side)
            steps.append(ReductionStep(rule, k, side, parts))
            work = list(parts) + work
            applied = True
            break
        if not applied:
            done.append(k)
    return ReductionTrace(tuple(steps), tuple(done))


def is_doubled_cycle(g: Multigraph, length: int | None = None) -> bool:
    """Connected, every vertex with exactly two neighbours at multiplicity 2."""
    if g.n < 3 or (length is not None and g.n != length):
        return False
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if len(nbrs) != 2:
            return False
        if any(g.mult(v, u) != 2 for u in nbrs):
            return False
    return g.is_connected()


def _path_order(g: Multigraph, members: list[int]) -> tuple[int, ...]:
    outside = set(range(g.n)) - set(members)
    ends = [v for v in members if g.mult_into(v, outside) > 0]
    order = [min(ends)]
    prev = -1
    while len(order) < len(members):
        cur = order[-1]
        nxt = [
            u
            for u in members
            if u != prev and u != cur and g.mult(cur, u) == 2
        ]
        order.append(nxt[0])
        prev = cur
    return tuple(order)


def find_sausages(g: Multigraph) -> list[SausageChain]:
    """All maximal chains, each in path order, sorted.

    Detection is definitional: a subset qualifies when contracting its
    complement gives a doubled cycle.  Roots are ignored here; rooted
    policy is applied by the shortening operations.
    """
    base = g.with_roots(())
    n = base.n
    qualifying: list[int] = []
    for mask in range(1, (1 << n) - 1):
        k = mask.bit_count()
        if k < 2:
            continue
        block = _mask_vertices(((1 << n) - 1) ^ mask, n)
        try:
            contracted = base.contract(block) if len(block) > 1 else base
        except ValueError:
            continue
        if is_doubled_cycle(contracted, k + 1):
            qualifying.append(mask)
    maximal = [
        m for m in qualifying if not any(o != m and o | m == o for o in qualifying)
    ]
    chains = sorted(_path_order(base, _mask_vertices(m, n)) for m in maximal)
    return [SausageChain(c) for c in chains]


def _shortenable_chains(g: Multigraph) -> list[SausageChain]:
    chains = [c for c in find_sausages(g) if c.order >= 3]
    if g.roots:
        rooted = set(g.roots)
        chains = [c for c in chains if not rooted & set(c.chain)]
    return chains


def sausage_shorten(g: Multigraph, x: int, y: int) -> Multigraph:
    """Identify two adjacent vertices of a chain of order >= 3."""
    for c in _shortenable_chains(g):
        if any({a, b} == {x, y} for a, b in zip(c.chain, c.chain[1:])):
            return g.contract({x, y})
    raise ValueError("pair not inside a qualifying chain")


def chain_extend(g: Multigraph, x: int, y: int) -> Multigraph:
    """Insert a new vertex inside a doubled pair; inverse of shortening.

    Both copies of the pair are rerouted through the new vertex, which
    gets index n and multiplicity 2 to each end.
    """
    if g.mult(x, y) != 2:
        raise ValueError("extension needs a pair of multiplicity exactly 2")
    h = g.subdivide(x, y)
    w = g.n
    return h.delete_edge(x, y).add_edge(x, w).add_edge(w, y)


def sausage_reduce(g: Multigraph) -> Multigraph:
    """Shorten chains until none of order >= 3 remains.

    The first pair of the first chain in sorted order is contracted each
    round, so the result is a canonical representative.
    """
    cur = g
    while True:
        chains = _shortenable_chains(cur)
        if not chains:
            return cur
        first = chains[0]
        cur = cur.contract({first.chain[0], first.chain[1]})

"""Classifiers that explain why a graph lacks a given pattern immersion.

Each classifier is a total function on inputs meeting its stated
hypotheses: it returns an immersion witness or a structural certificate
(segmentation, lobe decomposition, identified doubled cycle, catalog
match).  Hypothesis failures raise HypothesisViolation with the
offending cut; inputs fitting no tag raise UnclassifiedGraph, which the
verifier treats as counterexample evidence.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterator

from . import _kernels
from .catalog import Catalog, default_catalog
from .connectivity import lambda_profile, violating_cut
from .errors import HypothesisViolation, UnclassifiedGraph
from .immersion import Witness, complete4, decide_immersion, diamond, wheel4
from .multigraph import CutCertificate, Multigraph
from .reduction import find_sausages, is_doubled_cycle, sausage_reduce

__all__ = [
    "Segmentation",
    "LobeDecomposition",
    "Immerses",
    "TypeA",
    "TypeB",
    "Type1",
    "Type2",
    "Type3",
    "Type4",
    "Cubic",
    "Sporadic",
    "SausageFamily",
    "Case5",
    "DoubledCycle",
    "Segmented",
    "DmResult",
    "RootedW4Result",
    "W4Result",
    "K4Result",
    "find_segmentation",
    "is_doubled_cycle",
    "is_doubled_path",
    "lobe_decomposition",
    "classify_dm",
    "classify_rooted_w4",
    "classify_w4",
    "classify_k4",
]


# ---- certificates ----


@dataclass(frozen=True)
class Segmentation:
    """Nested sets X_1 c ... c X_k growing one vertex at a time.

    Every set has cut size exactly `width`; head = X_1, tail = complement
    of X_k.
    """

    chain: tuple[frozenset[int], ...]
    width: int
    tail: frozenset[int]

    @property
    def head(self) -> frozenset[int]:
        return self.chain[0]

    def verify(self, g: Multigraph) -> bool:
        if not self.chain or not self.chain[0]:
            return False
        prev: frozenset[int] | None = None
        for part in self.chain:
            if g.cut_size(part) != self.width:
                return False
            if prev is not None and not (prev < part and len(part - prev) == 1):
                return False
            prev = part
        return self.tail == frozenset(range(g.n)) - self.chain[-1]


@dataclass(frozen=True)
class LobeDecomposition:
    """Components of G minus the two roots, each rejoined to both roots.

    Each lobe entry is (interior vertices, uniform path multiplicity);
    the multiplicity is None unless the lobe is a root-to-root path with
    one multiplicity on all its edges.  root_multiplicity counts the
    direct root-root edges, which belong to no lobe.
    """

    root_multiplicity: int
    lobes: tuple[tuple[tuple[int, ...], int | None], ...]

    def verify(self, g: Multigraph) -> bool:
        return lobe_decomposition(g) == self


# ---- classification tags ----


@dataclass(frozen=True)
class Immerses:
    witness: Witness


@dataclass(frozen=True)
class TypeA:
    segmentation: Segmentation


@dataclass(frozen=True)
class TypeB:
    lobes: LobeDecomposition


@dataclass(frozen=True)
class Type1:
    segmentation: Segmentation


@dataclass(frozen=True)
class Type2:
    variant: str
    block: tuple[int, ...]
    cycle_length: int


@dataclass(frozen=True)
class Type3:
    entry_id: str
    chain_order: int


@dataclass(frozen=True)
class Type4:
    entry_id: str


@dataclass(frozen=True)
class Cubic:
    pass


@dataclass(frozen=True)
class Sporadic:
    entry_id: str


@dataclass(frozen=True)
class SausageFamily:
    entry_id: str
    chain_orders: tuple[int, ...]


@dataclass(frozen=True)
class Case5:
    block: tuple[int, ...]


@dataclass(frozen=True)
class DoubledCycle:
    pass


@dataclass(frozen=True)
class Segmented:
    segmentation: Segmentation


DmResult = Immerses | TypeA | TypeB
RootedW4Result = Immerses | Type1 | Type2 | Type3 | Type4
W4Result = Immerses | Cubic | Sporadic | SausageFamily | Case5
K4Result = Immerses | DoubledCycle | Segmented


# ---- segmentation search ----


def _bits(mask: int) -> Iterator[int]:
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


def _search_segmentation(
    g: Multigraph,
    width: int,
    head_ok: Callable[[int], bool],
    tail_ok: Callable[[int], bool],
) -> Segmentation | None:
    """Breadth-first search over vertex sets; one-vertex extensions keep
    the cut size fixed exactly when e(v, X) = degree(v) / 2."""
    n = g.n
    full = (1 << n) - 1
    deg = [g.degree(v) for v in range(n)]
    parent: dict[int, int] = {}
    queue: deque[int] = deque()
    for mask in range(1, full):
        if head_ok(mask) and _kernels.cut_size_mask(g.mat, n, mask) == width:
            parent[mask] = 0
            queue.append(mask)
    while queue:
        mask = queue.popleft()
        if tail_ok(full ^ mask):
            links = [mask]
            while parent[links[-1]]:
                links.append(parent[links[-1]])
            links.reverse()
            return Segmentation(
                chain=tuple(frozenset(_bits(m)) for m in links),
                width=width,
                tail=frozenset(_bits(full ^ mask)),
            )
        for v in range(n):
            bit = 1 << v
            if mask & bit:
                continue
            nxt = mask | bit
            if nxt == full or nxt in parent:
                continue
            row = g.mat[v * n : (v + 1) * n]
            if 2 * sum(row[u] for u in _bits(mask)) == deg[v]:
                parent[nxt] = mask
                queue.append(nxt)
    return None


def find_segmentation(
    g: Multigraph,
    head_bound: int,
    tail_bound: int,
    width: int,
    required_head_vertex: int | None = None,
) -> Segmentation | None:
    if width < 1:
        raise ValueError("width must be at least 1")
    need = required_head_vertex

    def head_ok(mask: int) -> bool:
        if mask.bit_count() > head_bound:
            return False
        return need is None or bool(mask >> need & 1)

    def tail_ok(mask: int) -> bool:
        return mask.bit_count() <= tail_bound

    return _search_segmentation(g, width, head_ok, tail_ok)


# ---- doubled path ----


def is_doubled_path(g: Multigraph) -> bool:
    if g.n < 2 or len(g.components()) != 1:
        return False
    ends = 0
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if any(g.mult(v, u) != 2 for u in nbrs):
            return False
        if len(nbrs) == 1:
            ends += 1
        elif len(nbrs) != 2:
            return False
    return ends == 2


# ---- lobes ----


def _interior_components(g: Multigraph) -> list[tuple[int, ...]]:
    x0, x1 = g.roots
    seen: set[int] = set()
    comps = []
    for s in range(g.n):
        if s in (x0, x1) or s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in (x0, x1) and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        comps.append(tuple(sorted(comp)))
    return sorted(comps)


def _uniform_path_multiplicity(
    g: Multigraph, interior: tuple[int, ...], x0: int, x1: int
) -> int | None:
    """Multiplicity when the lobe on `interior` is a uniform x0-x1 path."""
    members = set(interior)
    first = [u for u in g.neighbors(x0) if u in members]
    if len(first) != 1:
        return None
    mult = g.mult(x0, first[0])
    prev, cur = x0, first[0]
    visited = {cur}
    while cur != x1:
        nxt = [u for u in g.neighbors(cur) if u != prev]
        if len(nxt) != 1 or nxt[0] == x0 or g.mult(cur, nxt[0]) != mult:
            return None
        prev, cur = cur, nxt[0]
        if cur in visited:
            return None
        visited.add(cur)
    if visited != members | {x1}:
        return None
    if len([u for u in g.neighbors(x1) if u in members]) != 1:
        return None
    return mult


def lobe_decomposition(g: Multigraph) -> LobeDecomposition:
    if len(g.roots) != 2:
        raise ValueError("exactly two roots required")
    x0, x1 = g.roots
    lobes = tuple(
        (comp, _uniform_path_multiplicity(g, comp, x0, x1))
        for comp in _interior_components(g)
    )
    return LobeDecomposition(g.mult(x0, x1), lobes)


# ---- hypothesis checks ----


def _cut_certificate_payload(statistic: str, cert: CutCertificate) -> dict:
    return {
        "statistic": statistic,
        "cut_side": sorted(cert.side),
        "cut_size": cert.size,
    }


def _require_order(g: Multigraph, bound: int) -> None:
    if g.n < bound:
        raise HypothesisViolation(
            f"fewer than {bound} vertices", {"statistic": "n", "value": g.n}
        )


def _require_edge_connectivity(g: Multigraph, k: int) -> None:
    cert = violating_cut(g, k)
    if cert is not None:
        raise HypothesisViolation(
            f"not {k}-edge-connected", _cut_certificate_payload("edge_connectivity", cert)
        )


def _require_internal_edge_connectivity(g: Multigraph, k: int) -> None:
    if g.n < 4:
        return
    cert = violating_cut(g, k, min_side=2)
    if cert is not None:
        raise HypothesisViolation(
            f"not internally {k}-edge-connected",
            _cut_certificate_payload("internal_edge_connectivity", cert),
        )


def _require_lambda(cert: CutCertificate | None, bound: int, statistic: str) -> None:
    if cert is not None and cert.size < bound:
        raise HypothesisViolation(
            f"{statistic} below {bound}", _cut_certificate_payload(statistic, cert)
        )


# ---- diamond classifier ----


def _type_b_applies(ld: LobeDecomposition, m: int) -> bool:
    total = ld.root_multiplicity
    for interior, mult in ld.lobes:
        if mult is None or mult < 2:
            return False
        if len(interior) >= 2 and mult != 2:
            return False
        total += mult
    return bool(ld.lobes) and total == m + 1


def classify_dm(g: Multigraph, m: int) -> DmResult:
    if m < 2:
        raise ValueError("m must be at least 2")
    if len(g.roots) != 2:
        raise ValueError("exactly two roots required")
    _require_order(g, 4)
    profile = lambda_profile(g)
    _require_lambda(profile.lambda_n, 3, "lambda_n")
    _require_lambda(profile.lambda_n_internal, 4, "lambda_n_internal")
    _require_lambda(profile.lambda_s, m, "lambda_s")
    witness = decide_immersion(g, diamond(m))
    if witness is not None:
        return Immerses(witness)
    return _dm_shape(g, m)


def _dm_shape(g: Multigraph, m: int) -> TypeA | TypeB:
    """Shape half of classify_dm; the caller guarantees non-immersion."""
    x0, x1 = g.roots
    # head holds one root, tail the other; reversing a chain swaps the
    # ends, so a single orientation covers both
    seg = _search_segmentation(
        g,
        m,
        head_ok=lambda mask: mask.bit_count() <= 2 and bool(mask >> x0 & 1),
        tail_ok=lambda mask: mask.bit_count() <= 2 and bool(mask >> x1 & 1),
    )
    if seg is not None:
        return TypeA(seg)
    ld = lobe_decomposition(g)
    if _type_b_applies(ld, m):
        return TypeB(ld)
    raise UnclassifiedGraph("no diamond classification applies", g)


# ---- identified doubled cycles ----


def _candidate_blocks(n: int, avoid: int | None) -> Iterator[tuple[int, ...]]:
    for w in range(n):
        if w != avoid:
            yield (w,)
    for a in range(n):
        for b in range(a + 1, n):
            if avoid not in (a, b):
                yield (a, b)


def _identified(g: Multigraph, block: tuple[int, ...]) -> tuple[Multigraph, dict[int, int]]:
    if len(block) == 1:
        return g, {v: v for v in range(g.n)}
    blocked = set(block)
    star = min(blocked)
    keep = [v for v in range(g.n) if v == star or v not in blocked]
    mapping = {old: new for new, old in enumerate(keep)}
    for v in blocked:
        mapping[v] = mapping[star]
    return g.contract(block), mapping


def _type2_variant(star: Multigraph, u: int, w: int) -> tuple[str, int] | None:
    if star.mult(u, w) > 0:
        cyc = star.delete_edge(u, w)
        if is_doubled_cycle(cyc):
            between = cyc.mult(u, w)
            if between == 0:
                return "A", cyc.n
            if between == 2:
                return "C", cyc.n
    for v in star.neighbors(u):
        if v == w or star.mult(v, w) == 0:
            continue
        cyc = star.delete_edge(u, v).delete_edge(v, w)
        if is_doubled_cycle(cyc) and cyc.mult(u, v) == 2 and cyc.mult(v, w) == 2:
            return "B", cyc.n
    return None


def _find_type2(g: Multigraph, root: int) -> Type2 | None:
    for block in _candidate_blocks(g.n, root):
        try:
            star, mapping = _identified(g, block)
        except ValueError:
            continue
        if star.n < 3:
            continue
        found = _type2_variant(star, mapping[root], mapping[block[0]])
        if found is not None:
            variant, cycle_length = found
            return Type2(variant, block, cycle_length)
    return None


def _root_free_chain_orders(g: Multigraph) -> tuple[int, ...]:
    roots = set(g.roots)
    return tuple(
        sorted(c.order for c in find_sausages(g) if not roots.intersection(c.chain))
    )


# ---- rooted wheel classifier ----


def classify_rooted_w4(g: Multigraph, catalog: Catalog | None = None) -> RootedW4Result:
    if len(g.roots) != 1:
        raise ValueError("exactly one root required")
    root = g.roots[0]
    _require_order(g, 5)
    _require_edge_connectivity(g, 3)
    _require_internal_edge_connectivity(g, 4)
    witness = decide_immersion(g, wheel4(rooted=True))
    if witness is not None:
        return Immerses(witness)
    return _rooted_w4_shape(g, catalog)


def _rooted_w4_shape(
    g: Multigraph, catalog: Catalog | None
) -> Type1 | Type2 | Type3 | Type4:
    """Shape half of classify_rooted_w4; the caller guarantees non-immersion."""
    root = g.roots[0]
    seg = find_segmentation(g, 2, 3, 4, required_head_vertex=root)
    if seg is not None:
        return Type1(seg)
    two = _find_type2(g, root)
    if two is not None:
        return two
    cat = default_catalog() if catalog is None else catalog
    entry = cat.lookup_rooted(sausage_reduce(g))
    if entry is not None:
        if entry.kind == "rooted-type-3":
            orders = _root_free_chain_orders(g)
            return Type3(entry.entry_id, max(orders, default=2))
        return Type4(entry.entry_id)
    raise UnclassifiedGraph("no rooted wheel classification applies", g)


# ---- unrooted wheel classifier ----


def _case5_block(g: Multigraph) -> tuple[int, ...] | None:
    for block in _candidate_blocks(g.n, None):
        try:
            star, _ = _identified(g, block)
        except ValueError:
            continue
        if is_doubled_cycle(star):
            return block
    return None


def classify_w4(g: Multigraph, catalog: Catalog | None = None) -> W4Result:
    if g.roots:
        raise ValueError("root-free graph required")
    _require_order(g, 5)
    _require_edge_connectivity(g, 3)
    _require_internal_edge_connectivity(g, 4)
    witness = decide_immersion(g, wheel4())
    if witness is not None:
        return Immerses(witness)
    return _w4_shape(g, catalog)


def _w4_shape(
    g: Multigraph, catalog: Catalog | None
) -> Cubic | Case5 | Sporadic | SausageFamily:
    """Shape half of classify_w4; the caller guarantees non-immersion."""
    if all(g.degree(v) == 3 for v in range(g.n)):
        return Cubic()
    block = _case5_block(g)
    if block is not None:
        return Case5(block)
    cat = default_catalog() if catalog is None else catalog
    entry = cat.lookup_unrooted(sausage_reduce(g))
    if entry is not None:
        orders = _root_free_chain_orders(g)
        if any(order >= 3 for order in orders):
            return SausageFamily(entry.entry_id, orders)
        return Sporadic(entry.entry_id)
    raise UnclassifiedGraph("no wheel classification applies", g)


# ---- complete-pattern classifier ----

_K4_VARIANTS = {2: "two-root", 1: "one-root", 0: "no-root"}


def classify_k4(g: Multigraph, variant: str | None = None) -> K4Result:
    inferred = _K4_VARIANTS[len(g.roots)]
    if variant is None:
        variant = inferred
    elif variant != inferred:
        raise ValueError(f"variant {variant!r} does not match {len(g.roots)} roots")
    _require_order(g, 4)
    _require_edge_connectivity(g, 3)
    witness = decide_immersion(g, complete4(roots=len(g.roots)))
    if witness is not None:
        return Immerses(witness)
    return _k4_shape(g, variant)


def _k4_shape(g: Multigraph, variant: str) -> DoubledCycle | Segmented:
    """Shape half of classify_k4; the caller guarantees non-immersion."""
    if is_doubled_cycle(g):
        return DoubledCycle()
    if variant == "two-root":
        root_mask = 0
        for r in g.roots:
            root_mask |= 1 << r

        def side_ok(mask: int) -> bool:
            return mask.bit_count() <= 2 or not mask & root_mask

        seg = _search_segmentation(g, 3, side_ok, side_ok)
    else:
        seg = find_segmentation(g, 2, 2, 3)
    if seg is not None:
        return Segmented(seg)
    raise UnclassifiedGraph("no complete-pattern classification applies", g)

"""Edge-connectivity queries on rooted multigraphs.

A cut is identified with a proper nonempty vertex subset X; its size is the
number of edges leaving X.  For a graph with two roots, a cut is separating
when exactly one root lies in X and nonseparating otherwise.  A cut is
internal when both X and its complement contain at least two vertices.  The
four connectivity parameters collected in ``LambdaProfile`` are the minimum
cut sizes over those four families.

``mader_split_pair`` finds, at a vertex of degree at least four in a
2-edge-connected graph, two neighbours whose split-off keeps every pairwise
min-cut among the remaining vertices unchanged.  Such a pair always exists;
running out of candidates indicates a bug and raises RuntimeError.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import HypothesisViolation
from .multigraph import CutCertificate, Multigraph


def _mask_to_set(mask: int, n: int) -> frozenset[int]:
    return frozenset(v for v in range(n) if mask >> v & 1)


def _certificate(g: Multigraph, mask: int) -> CutCertificate:
    return CutCertificate.of(g, _mask_to_set(mask, g.n))


def min_cut(g: Multigraph, s: int, t: int) -> tuple[int, CutCertificate]:
    """Minimum edge cut separating s from t, with a smallest s-side.

    Returns the cut size and a certificate whose side contains s but not t.
    """
    if s == t:
        raise ValueError("min_cut endpoints must differ")
    value, mask = _kernels.min_cut(g.mat, g.n, s, t)
    return value, _certificate(g, mask)


def _profile_scan(g: Multigraph) -> dict[str, tuple[int, int] | None]:
    """Best (size, mask) per cut family, smallest mask on ties."""
    n = g.n
    r0, r1 = g.roots
    best: dict[str, tuple[int, int] | None] = {
        "s": None,
        "n": None,
        "si": None,
        "ni": None,
    }

    def offer(key: str, size: int, mask: int) -> None:
        cur = best[key]
        if cur is None or size < cur[0]:
            best[key] = (size, mask)

    for mask in range(1, (1 << n) - 1):
        size = _kernels.cut_size_mask(g.mat, n, mask)
        separating = (mask >> r0 & 1) != (mask >> r1 & 1)
        count = mask.bit_count()
        internal = 2 <= count <= n - 2
        if separating:
            offer("s", size, mask)
            if internal:
                offer("si", size, mask)
        else:
            offer("n", size, mask)
            if internal:
                offer("ni", size, mask)
    return best


@dataclass(frozen=True)
class LambdaProfile:
    """Minimum cut sizes by family, each with a witnessing cut.

    ``lambda_s`` ranges over root-separating cuts and ``lambda_n`` over the
    rest; the ``_internal`` variants restrict to cuts with at least two
    vertices on each side and are None when no such cut exists (n < 4).
    ``lambda_n`` is None only for n = 2, where every proper cut separates.
    """

    lambda_s: CutCertificate
    lambda_n: CutCertificate | None
    lambda_s_internal: CutCertificate | None
    lambda_n_internal: CutCertificate | None


def lambda_profile(g: Multigraph) -> LambdaProfile:
    if len(g.roots) != 2:
        raise ValueError("lambda_profile needs exactly two roots")
    best = _profile_scan(g)

    def cert(key: str) -> CutCertificate | None:
        found = best[key]
        return None if found is None else _certificate(g, found[1])

    lambda_s = cert("s")
    assert lambda_s is not None
    return LambdaProfile(lambda_s, cert("n"), cert("si"), cert("ni"))


def is_k_edge_connected(g: Multigraph, k: int) -> bool:
    """Every proper cut has size at least k; vacuously true for n = 1."""
    if g.n == 1:
        return True
    found = _kernels.find_violated_cut(
        g.mat, g.n, 0, 0, ((k, 1, 1, _kernels.MODE_ANY),)
    )
    return found is None


def is_internally_k_edge_connected(g: Multigraph, k: int) -> bool:
    """Every cut with two or more vertices on each side has size >= k."""
    if g.n < 4:
        return True
    found = _kernels.find_violated_cut(
        g.mat, g.n, 0, 0, ((k, 2, 2, _kernels.MODE_ANY),)
    )
    return found is None


def violating_cut(g: Multigraph, k: int, min_side: int = 1) -> CutCertificate | None:
    """Smallest-mask proper cut of size < k with min_side vertices per side."""
    if g.n < 2 * min_side:
        return None
    found = _kernels.find_violated_cut(
        g.mat, g.n, 0, 0, ((k, min_side, min_side, _kernels.MODE_ANY),)
    )
    if found is None:
        return None
    return _certificate(g, found[0])


def _pairwise_connectivity(g: Multigraph, skip: int) -> dict[tuple[int, int], int]:
    values: dict[tuple[int, int], int] = {}
    for u in range(g.n):
        if u == skip:
            continue
        for w in range(u + 1, g.n):
            if w == skip:
                continue
            values[(u, w)] = _kernels.max_flow(g.mat, g.n, u, w)
    return values


def mader_split_pair(g: Multigraph, v: int) -> tuple[int, int]:
    """First neighbour pair at v whose split-off preserves all min-cuts.

    Preserved are the pairwise minimum cuts between vertices other than v.
    Requires a 2-edge-connected graph and degree(v) >= 4.  Pairs (a, b) are
    tried in ascending order and the first admissible one is returned.
    """
    if not is_k_edge_connected(g, 2):
        cut = violating_cut(g, 2)
        assert cut is not None
        raise HypothesisViolation(
            "graph is not 2-edge-connected",
            certificate={"cut_side": sorted(cut.side), "cut_size": cut.size},
        )
    if g.degree(v) < 4:
        raise HypothesisViolation(
            "vertex degree below four",
            certificate={"vertex": v, "degree": g.degree(v)},
        )
    base = _pairwise_connectivity(g, v)
    nbrs = g.neighbors(v)
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1 :]:
            split = g.split_off(a, v, b)
            ok = True
            for (u, w), need in base.items():
                if _kernels.max_flow(split.mat, split.n, u, w, need) < need:
                    ok = False
                    break
            if ok:
                return a, b
    raise RuntimeError(f"no admissible split pair at vertex {v}")

"""Kernel lane: flows, cut scans, canonical bytes, lane agreement."""

from __future__ import annotations

import itertools
import random

import pytest

from immergraph import _kernels, _pure
from immergraph.multigraph import Multigraph

from test_multigraph import random_graph


def brute_min_cut(g: Multigraph, s: int, t: int) -> int:
    best = None
    for size in range(1, g.n):
        for side in itertools.combinations(range(g.n), size):
            if s in side and t not in side:
                c = g.cut_size(side)
                if best is None or c < best:
                    best = c
    return best


def test_max_flow_equals_min_cut_bruteforce():
    rng = random.Random(3)
    for _ in range(150):
        g = random_graph(rng, rng.randint(2, 6), max_mult=4)
        s, t = rng.sample(range(g.n), 2)
        want = brute_min_cut(g, s, t)
        assert _kernels.max_flow(g.mat, g.n, s, t) == want
        val, side = _kernels.min_cut(g.mat, g.n, s, t)
        assert val == want
        members = {v for v in range(g.n) if side >> v & 1}
        assert s in members and t not in members
        assert g.cut_size(members) == want


def test_max_flow_limit_caps_result():
    g = Multigraph.from_edges(3, [(0, 1, 5), (1, 2, 5), (0, 2, 2)])
    assert _kernels.max_flow(g.mat, g.n, 0, 2, limit=3) == 3
    assert _kernels.max_flow(g.mat, g.n, 0, 2, limit=100) == 7
    assert _kernels.max_flow(g.mat, g.n, 0, 2, limit=0) == 0
    with pytest.raises(ValueError):
        _kernels.max_flow(g.mat, g.n, 1, 1)


def test_cut_size_mask_matches_type():
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 6))
        mask = rng.randint(1, (1 << g.n) - 2)
        side = {v for v in range(g.n) if mask >> v & 1}
        assert _kernels.cut_size_mask(g.mat, g.n, mask) == g.cut_size(side)


def brute_violated_cut(g: Multigraph, r0: int, r1: int, conds):
    for mask in range(1, (1 << g.n) - 1):
        side = {v for v in range(g.n) if mask >> v & 1}
        c = g.cut_size(side)
        in0 = r0 >= 0 and r0 in side
        in1 = r1 >= 0 and r1 in side
        for idx, (req, min_in, min_out, mode) in enumerate(conds):
            if c >= req or len(side) < min_in or g.n - len(side) < min_out:
                continue
            if mode == _kernels.MODE_SEP and in0 == in1:
                continue
            if mode == _kernels.MODE_NONSEP and in0 != in1:
                continue
            if mode == _kernels.MODE_NOROOT and in0:
                continue
            return mask, idx
    return None


def test_find_violated_cut_matches_bruteforce():
    rng = random.Random(17)
    cond_pool = [
        (3, 1, 1, _kernels.MODE_ANY),
        (4, 2, 2, _kernels.MODE_ANY),
        (2, 1, 1, _kernels.MODE_SEP),
        (3, 2, 2, _kernels.MODE_NONSEP),
        (5, 3, 2, _kernels.MODE_NOROOT),
    ]
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 6), p=0.5)
        r0 = rng.randrange(g.n)
        r1 = (r0 + 1 + rng.randrange(g.n - 1)) % g.n if g.n > 1 else -1
        conds = tuple(rng.sample(cond_pool, rng.randint(1, 3)))
        got = _kernels.find_violated_cut(g.mat, g.n, r0, r1, conds)
        assert got == brute_violated_cut(g, r0, r1, conds)


def test_canonical_bytes_equality_iff_isomorphic():
    rng = random.Random(23)
    for _ in range(80):
        g = random_graph(rng, rng.randint(2, 5))
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert g.canonical_form() == h.canonical_form()
        # tweak one multiplicity: canonical forms must differ
        u, v = rng.sample(range(g.n), 2)
        t = g.add_edge(u, v)
        assert t.canonical_form() != g.canonical_form()


def test_canonical_bytes_layout():
    g = Multigraph.from_edges(3, [(0, 1, 2), (1, 2, 1)], roots=(2,))
    enc = _kernels.canonical_bytes(g.mat, g.n, g.roots)
    assert len(enc) == 2 + 3 + 3
    assert enc[0] == 3 and enc[1] == 1
    assert enc[2] == g.degree(2)


@pytest.mark.skipif(_kernels.KERNEL_NAME == "pure", reason="compiled lane absent")
def test_lanes_agree():
    from immergraph import _speedups

    rng = random.Random(29)
    for _ in range(120):
        g = random_graph(rng, rng.randint(2, 6), max_mult=4)
        s, t = rng.sample(range(g.n), 2) if g.n > 1 else (0, 0)
        assert _speedups.max_flow(g.mat, g.n, s, t) == _pure.max_flow(g.mat, g.n, s, t)
        assert _speedups.min_cut(g.mat, g.n, s, t) == _pure.min_cut(g.mat, g.n, s, t)
        assert _speedups.canonical_bytes(g.mat, g.n, g.roots) == _pure.canonical_bytes(
            g.mat, g.n, g.roots
        )
        conds = ((3, 1, 1, 0), (4, 2, 2, 0))
        assert _speedups.find_violated_cut(
            g.mat, g.n, -1, -1, conds
        ) == _pure.find_violated_cut(g.mat, g.n, -1, -1, conds)

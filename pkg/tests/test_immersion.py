"""Immersion decider: fixed cases, witness checking, decider agreement."""

from __future__ import annotations

import random

import pytest

from immergraph.immersion import (
    Witness,
    complete4,
    decide_immersion,
    deletable_edge_at,
    diamond,
    doubled_cycle,
    immerses,
    pattern_from_name,
    verify_witness,
    wheel4,
)
from immergraph.multigraph import Multigraph
from immergraph.splitseq import immerses_by_operations

from test_multigraph import random_graph


def cycle(n: int, roots=()) -> Multigraph:
    return Multigraph.from_edges(n, [(i, (i + 1) % n, 1) for i in range(n)], roots)


def complete(n: int, roots=()) -> Multigraph:
    return Multigraph.from_edges(
        n, [(u, v, 1) for u in range(n) for v in range(u + 1, n)], roots
    )


def test_pattern_shapes():
    assert complete4().degree_sequence() == (3, 3, 3, 3)
    assert wheel4().edge_count() == 8
    assert wheel4(rooted=True).roots == (4,)
    assert wheel4().degree_sequence() == (3, 3, 3, 3, 4)
    for m in (2, 3, 4, 5):
        d = diamond(m)
        assert d.edge_count() == m + 3
        assert d.degree(0) == m and d.degree(1) == m
        assert d.roots == (0, 1)
    assert diamond(2).mult(0, 1) == 0
    with pytest.raises(ValueError):
        diamond(1)


def test_pattern_from_name():
    assert pattern_from_name("k4") == complete4()
    assert pattern_from_name("k4", 2) == complete4(2)
    assert pattern_from_name("w4") == wheel4()
    assert pattern_from_name("w4", 1) == wheel4(rooted=True)
    assert pattern_from_name("dm:4") == diamond(4)
    with pytest.raises(ValueError):
        pattern_from_name("q7")
    with pytest.raises(ValueError):
        pattern_from_name("dm:3", 1)


def test_k4_fixed_cases():
    assert immerses(complete(4), complete4())
    assert immerses(complete(5), complete4())
    assert immerses(wheel4(), complete4())
    assert not immerses(cycle(4), complete4())
    assert not immerses(cycle(6), complete4())
    # doubled cycles never immerse four mutually linked branch vertices
    for k in (3, 4, 5, 6):
        assert not immerses(doubled_cycle(k), complete4())


def test_w4_fixed_cases():
    assert immerses(wheel4(), wheel4())
    assert immerses(complete(5), wheel4())
    assert not immerses(complete(4), wheel4())  # too few vertices
    assert not immerses(doubled_cycle(5), wheel4())
    assert immerses(complete(5, roots=(2,)), wheel4(rooted=True))
    assert not immerses(cycle(5, roots=(0,)), wheel4(rooted=True))


def test_diamond_fixed_cases():
    # opposite roots on a plain 4-cycle: the fifth route has no edges left
    host = Multigraph.from_edges(
        4, [(0, 2, 1), (2, 1, 1), (1, 3, 1), (3, 0, 1)], roots=(0, 1)
    )
    assert not immerses(host, diamond(2))
    assert immerses(host.add_edge(2, 3), diamond(2))
    assert immerses(doubled_cycle(4, roots=(0, 1)), diamond(2))
    # diamond(3) is complete on four vertices; doubled cycles avoid it
    assert not immerses(doubled_cycle(4, roots=(0, 1)), diamond(3))
    assert not immerses(doubled_cycle(6, roots=(0, 3)), diamond(3))
    assert immerses(complete(4, roots=(0, 1)), diamond(3))
    # m parallel root-to-root routes need lambda_s >= m
    assert immerses(complete(4, roots=(0, 1)).add_edge(0, 1), diamond(4))
    assert not immerses(complete(4, roots=(0, 1)), diamond(4))


def test_root_pinning_matters():
    # hub of the wheel must land on the host root
    host = complete(5, roots=(2,)).delete_edge(2, 3)
    assert host.degree(2) == 3
    assert not immerses(host, wheel4(rooted=True))
    assert immerses(host.with_roots(()), wheel4())


def test_subdivision_keeps_immersion():
    host = wheel4()
    for u, v in [(0, 1), (1, 2), (2, 3)]:
        host = host.subdivide(u, v)
        assert immerses(host, wheel4())


def test_witness_valid_and_tamper_detected():
    host = complete(5, roots=(2,))
    pat = wheel4(rooted=True)
    w = decide_immersion(host, pat)
    assert w is not None
    assert verify_witness(host, pat, w)
    bad = Witness(w.pattern_edges, w.terminal_map, w.routes[:-1] + ((0, 0),))
    assert not verify_witness(host, pat, bad)
    swapped = Witness(w.pattern_edges, tuple(reversed(w.terminal_map)), w.routes)
    assert not verify_witness(host, pat, swapped)


def test_witnesses_on_random_positives():
    rng = random.Random(31)
    pats = [complete4(), wheel4(), diamond(3)]
    hits = 0
    for _ in range(300):
        g = random_graph(rng, rng.randint(4, 7), max_mult=2, p=0.55)
        for pat in pats:
            h = g.with_roots(rng.sample(range(g.n), len(pat.roots)))
            w = decide_immersion(h, pat)
            if w is not None:
                hits += 1
                assert verify_witness(h, pat, w)
    assert hits > 100


def test_decider_agreement_sample():
    # full-range agreement is acceptance criterion 6; this is a fast sample
    rng = random.Random(37)
    pats = [complete4(), wheel4(), diamond(2), diamond(3)]
    for _ in range(120):
        g = random_graph(rng, rng.randint(3, 5), max_mult=3, p=0.6)
        for pat in pats:
            if g.n < pat.n:
                continue
            h = g.with_roots(rng.sample(range(g.n), len(pat.roots)))
            assert immerses(h, pat) == immerses_by_operations(h, pat), h


def test_deletable_edge_at_even_vertex():
    host = complete(5)
    pat = wheel4()
    assert immerses(host, pat)
    u = deletable_edge_at(host, pat, 0)
    assert u is not None
    assert immerses(host.delete_edge(u, 0), pat)


def test_root_count_mismatch_rejected():
    with pytest.raises(ValueError):
        immerses(complete(5), wheel4(rooted=True))
    with pytest.raises(ValueError):
        decide_immersion(complete(5, roots=(0,)), wheel4())

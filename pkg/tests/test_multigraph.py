"""Core multigraph type: construction, editing operations, text format."""

from __future__ import annotations

import random

import pytest

from immergraph.multigraph import Multigraph


def sample_graph() -> Multigraph:
    return Multigraph.from_edges(
        5, [(0, 1, 2), (1, 2, 1), (2, 3, 3), (3, 4, 1), (0, 4, 1)], roots=(0, 3)
    )


def random_graph(rng: random.Random, n: int, max_mult: int = 3, p: float = 0.6):
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.randint(1, max_mult)))
    nroots = rng.randint(0, min(2, n))
    roots = tuple(rng.sample(range(n), nroots))
    return Multigraph.from_edges(n, edges, roots)


def test_construction_rejects_bad_input():
    with pytest.raises(ValueError):
        Multigraph.from_edges(3, [(0, 0, 1)])
    with pytest.raises(ValueError):
        Multigraph.from_edges(3, [(0, 1, 1), (1, 0, 2)])
    with pytest.raises(ValueError):
        Multigraph.from_edges(3, [(0, 3, 1)])
    with pytest.raises(ValueError):
        Multigraph.from_edges(3, [(0, 1, 0)])
    with pytest.raises(ValueError):
        Multigraph.from_edges(3, [], roots=(0, 0))
    with pytest.raises(ValueError):
        Multigraph.from_edges(13, [])
    with pytest.raises(ValueError):
        Multigraph.from_edges(3, [], roots=(0, 1, 2))


def test_basic_queries():
    g = sample_graph()
    assert g.n == 5
    assert g.mult(0, 1) == 2
    assert g.mult(1, 0) == 2
    assert g.mult(0, 2) == 0
    assert g.degree(0) == 3
    assert g.degree(3) == 4
    assert g.degree_sequence() == (2, 3, 3, 4, 4)
    assert g.edge_count() == 8
    assert g.simple_edge_count() == 5
    assert g.neighbors(2) == [1, 3]
    assert g.cut_size({0}) == 3
    assert g.cut_size({0, 1}) == 2
    assert g.cut_size({0, 1, 2}) == 4
    assert g.mult_into(3, {0, 2, 4}) == 4
    assert g.is_connected()
    assert g.components() == [set(range(5))]


def test_text_roundtrip():
    g = sample_graph()
    assert Multigraph.from_text(g.to_text()) == g
    rootless = g.with_roots(())
    assert Multigraph.from_text(rootless.to_text()) == rootless
    with pytest.raises(ValueError):
        Multigraph.from_text("")
    with pytest.raises(ValueError):
        Multigraph.from_text("3\n0 1 1\n")
    with pytest.raises(ValueError):
        Multigraph.from_text("3 1\n0 1 1\n")
    with pytest.raises(ValueError):
        Multigraph.from_text("3 0\n0 1\n")


def test_add_delete_edges():
    g = sample_graph()
    g2 = g.add_edge(0, 2)
    assert g2.mult(0, 2) == 1 and g.mult(0, 2) == 0
    g3 = g2.delete_edge(0, 2)
    assert g3 == g
    with pytest.raises(ValueError):
        g.delete_edge(0, 2)
    with pytest.raises(ValueError):
        g.add_edge(1, 1)


def test_delete_vertex_renumbers():
    g = sample_graph()
    h = g.delete_vertex(1)
    assert h.n == 4
    # old vertices 2,3,4 shift to 1,2,3; roots (0,3) -> (0,2)
    assert h.roots == (0, 2)
    assert h.mult(1, 2) == 3
    assert h.mult(0, 3) == 1
    assert h.degree(0) == 1
    with pytest.raises(ValueError):
        g.delete_vertex(0)


def test_contract_merges_block():
    g = sample_graph()
    h = g.contract({1, 2})
    assert h.n == 4
    # merged vertex sits at old slot 1; multiplicities toward it add up
    assert h.roots == (0, 2)
    assert h.mult(0, 1) == 2
    assert h.mult(1, 2) == 3
    assert h.degree(1) == 5
    hr = g.contract({3, 4})
    assert hr.roots == (0, 3)
    assert hr.mult(3, 0) == 1
    with pytest.raises(ValueError):
        g.contract({0, 3})
    with pytest.raises(ValueError):
        g.contract(set())


def test_contract_drops_internal_edges():
    g = Multigraph.from_edges(4, [(0, 1, 2), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
    h = g.contract({0, 1, 2})
    assert h.n == 2
    assert h.mult(0, 1) == 2
    assert h.degree(0) == 2


def test_split_off():
    g = sample_graph()
    h = g.split_off(0, 1, 2)
    assert h.mult(0, 1) == 1
    assert h.mult(1, 2) == 0
    assert h.mult(0, 2) == 1
    assert h.degree(1) == g.degree(1) - 2
    assert h.degree(0) == g.degree(0)
    with pytest.raises(ValueError):
        g.split_off(0, 1, 0)
    with pytest.raises(ValueError):
        g.split_off(0, 2, 3)


def test_suppress():
    g = sample_graph()
    h = g.suppress(4)
    assert h.n == 4
    assert h.mult(0, 3) == 1
    with pytest.raises(ValueError):
        g.suppress(3)  # a root
    with pytest.raises(ValueError):
        g.suppress(1)  # degree 3
    # two parallel edges: the would-be loop is dropped
    gg = Multigraph.from_edges(3, [(0, 1, 2), (0, 2, 1)])
    hh = gg.suppress(1)
    assert hh.n == 2 and hh.mult(0, 1) == 1


def test_subdivide():
    g = sample_graph()
    h = g.subdivide(2, 3)
    assert h.n == 6
    assert h.mult(2, 3) == 2
    assert h.mult(2, 5) == 1 and h.mult(3, 5) == 1
    assert h.degree(2) == g.degree(2)
    with pytest.raises(ValueError):
        g.subdivide(0, 2)


def test_cap_and_underlying():
    g = sample_graph()
    assert g.cap_multiplicities(2).mult(2, 3) == 2
    assert g.cap_multiplicities(1) == g.underlying_simple()
    assert g.underlying_simple().edge_count() == 5


def test_induced_keeps_contained_roots():
    g = sample_graph()
    h = g.induced({0, 1, 2})
    assert h.n == 3 and h.roots == (0,)
    assert h.mult(0, 1) == 2 and h.mult(1, 2) == 1 and h.mult(0, 2) == 0


def test_relabel_roundtrip():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, rng.randint(2, 6))
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        inverse = [0] * g.n
        for old, new in enumerate(perm):
            inverse[new] = old
        assert h.relabel(inverse) == g
        assert h.degree_sequence() == g.degree_sequence()
        assert h.edge_count() == g.edge_count()


def test_canonical_form_relabel_invariant():
    rng = random.Random(11)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 6))
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert g.relabel(perm).canonical_form() == g.canonical_form()


def brute_min_encoding(g: Multigraph) -> bytes:
    """Reference encoding minimum over all root-pinning vertex orders."""
    import itertools

    n, r = g.n, len(g.roots)
    nonroots = [v for v in range(n) if v not in g.roots]
    best = None
    for tail in itertools.permutations(nonroots):
        perm = list(g.roots) + list(tail)
        enc = bytearray([n, r])
        for p, v in enumerate(perm):
            enc.append(g.degree(v))
            for i in range(p):
                enc.append(g.mult(perm[i], v))
        if best is None or bytes(enc) < best:
            best = bytes(enc)
    return best


def test_canonical_form_matches_bruteforce():
    rng = random.Random(13)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 5), max_mult=4)
        assert g.canonical_form() == brute_min_encoding(g)


def test_is_isomorphic_respects_roots():
    g = Multigraph.from_edges(3, [(0, 1, 1), (1, 2, 2)], roots=(0,))
    h = Multigraph.from_edges(3, [(2, 1, 1), (1, 0, 2)], roots=(2,))
    assert g.is_isomorphic(h)
    assert not g.is_isomorphic(h.with_roots((0,)))
    assert not g.is_isomorphic(h.with_roots(()))

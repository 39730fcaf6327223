"""Graph lists, assignment bands, and theorem sweeps."""

from __future__ import annotations

import json

import pytest

from immergraph.catalog import Catalog
from immergraph.errors import GraphFormatError
from immergraph.immersion import (
    complete4,
    diamond,
    doubled_cycle,
    immerses,
    wheel4,
)
from immergraph.multigraph import Multigraph
from immergraph.verifier import (
    COMPLETE_REQUIREMENT,
    REPAIR_REQUIREMENT,
    WHEEL_REQUIREMENT,
    AssignmentRequirement,
    VerificationReport,
    diamond_requirement,
    enumerate_rooted,
    generate_simple_graphs,
    graph6_decode,
    graph6_encode,
    load_simple_graphs,
    minimal_assignments,
    obstruction,
    packaged_simple_graphs,
    repair,
    verify_theorem,
)


def cycle(n: int, mult: int = 1, roots: tuple[int, ...] = ()) -> Multigraph:
    edges = [(i, (i + 1) % n, mult) for i in range(n)]
    return Multigraph.from_edges(n, edges, roots)


# ---- graph list encoding ----


def test_graph6_known_encodings():
    triangle = cycle(3)
    assert graph6_encode(triangle) == "Bw"
    assert graph6_decode("Bw").canonical_form() == triangle.canonical_form()
    single = Multigraph(1, b"\x00")
    assert graph6_encode(single) == "@"
    assert graph6_decode("@").n == 1


def test_graph6_roundtrip_all_n5():
    for g in generate_simple_graphs(5, connected=False):
        again = graph6_decode(graph6_encode(g))
        assert again.mat == g.mat


def test_graph6_ignores_multiplicities_and_roots():
    g = Multigraph.from_edges(3, [(0, 1, 3), (1, 2, 2), (0, 2, 1)], roots=(1,))
    assert graph6_encode(g) == "Bw"


def test_graph6_decode_rejects_malformed():
    with pytest.raises(ValueError):
        graph6_decode("")
    with pytest.raises(ValueError):
        graph6_decode("Bw~")  # trailing characters
    with pytest.raises(ValueError):
        graph6_decode("B")  # truncated bit groups
    with pytest.raises(ValueError):
        graph6_decode(chr(63 + 20))  # order above the vertex limit


def test_load_simple_graphs_reports_line_numbers(tmp_path):
    path = tmp_path / "list.g6"
    path.write_text("Bw\n\nB\n")
    with pytest.raises(GraphFormatError) as info:
        list(load_simple_graphs(path))
    assert info.value.line_number == 3
    ok = list(load_simple_graphs(["Bw", "", "Bw"]))
    assert len(ok) == 2


# ---- enumeration ----


def test_generate_counts_match_known_sequences():
    assert [len(generate_simple_graphs(n, connected=False)) for n in range(1, 7)] == [
        1,
        2,
        4,
        11,
        34,
        156,
    ]
    assert [len(generate_simple_graphs(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_packaged_lists_match_generation():
    for n in range(1, 7):
        packaged = {g.canonical_form() for g in packaged_simple_graphs(n)}
        generated = {g.canonical_form() for g in generate_simple_graphs(n)}
        assert packaged == generated


def test_enumerate_rooted_orbit_counts():
    assert len(list(enumerate_rooted([cycle(5)], 1))) == 1
    star = Multigraph.from_edges(5, [(0, i, 1) for i in range(1, 5)])
    assert len(list(enumerate_rooted([star], 1))) == 2
    # end-mid, mid-end, end-end: ordered pairs modulo the end swap
    path3 = Multigraph.from_edges(3, [(0, 1, 1), (1, 2, 1)])
    assert len(list(enumerate_rooted([path3], 2))) == 3
    bare = list(enumerate_rooted([cycle(4, roots=(0,))], 0))
    assert len(bare) == 1 and bare[0].roots == ()


def test_enumerate_rooted_dedup_across_orbits():
    rooted = list(enumerate_rooted(generate_simple_graphs(4), 1))
    keys = [g.canonical_form() for g in rooted]
    assert len(keys) == len(set(keys))


# ---- assignment bands ----


def test_minimal_assignments_all_two_cycle():
    got = minimal_assignments(cycle(4), WHEEL_REQUIREMENT, 8)
    vectors = {tuple(h.mult(u, v) for u, v, _ in h.edges()) for h in got}
    assert (2, 2, 2, 2) in vectors


def test_minimal_assignments_are_minimal_and_satisfying():
    req = diamond_requirement(3)
    g = cycle(4, roots=(0, 2))
    for h in minimal_assignments(g, req, 6):
        assert _satisfies(h, req)
        for u, v, m in h.edges():
            if m > 1:
                assert not _satisfies(h.delete_edge(u, v), req)


def _satisfies(h: Multigraph, req: AssignmentRequirement) -> bool:
    from immergraph import _kernels

    for r in h.roots:
        if h.degree(r) < req.root_degree:
            return False
    r0 = h.roots[0] if h.roots else -1
    r1 = h.roots[1] if len(h.roots) > 1 else -1
    return _kernels.find_violated_cut(h.mat, h.n, r0, r1, req.conds) is None


def test_repair_rooted_four_cycle():
    got = repair(cycle(4, roots=(0,)))
    vectors = {tuple(h.mult(u, v) for u, v, _ in h.edges()) for h in got}
    assert (2, 2, 2, 2) in vectors
    for h in got:
        assert not immerses(h, wheel4(rooted=True))


def test_repair_empty_when_every_assignment_immerses():
    hub = Multigraph.from_edges(
        6,
        [(5, i, 1) for i in range(5)] + [(i, (i + 1) % 5, 1) for i in range(5)],
        roots=(5,),
    )
    assert repair(hub) == []


def test_obstruction_band_closed_upward():
    g = cycle(4, roots=(0,))
    floor = repair(g)
    band = obstruction(g, floor, cap=4)
    vectors = {tuple(h.mult(u, v) for u, v, _ in h.edges()) for h in band}
    assert (2, 2, 2, 2) in vectors
    for vec in vectors:
        for i in range(4):
            if vec[i] < 4:
                up = vec[:i] + (vec[i] + 1,) + vec[i + 1 :]
                edges = [(j, (j + 1) % 4, up[j]) for j in range(4)]
                h = Multigraph.from_edges(4, edges, roots=(0,))
                assert immerses(h, wheel4(rooted=True)) == (up not in vectors)


def test_requirement_constants_shape():
    assert REPAIR_REQUIREMENT.root_degree == 4
    assert len(REPAIR_REQUIREMENT.conds) == 3
    assert WHEEL_REQUIREMENT.root_degree == 0
    assert COMPLETE_REQUIREMENT.conds[0][0] == 3
    with pytest.raises(ValueError):
        diamond_requirement(1)


# ---- theorem sweeps ----


def test_verify_theorem_rejects_bad_ids():
    for bad in ("k5", "dm:x", "dm:1", ""):
        with pytest.raises(ValueError):
            verify_theorem(bad, ns=(4,))


def test_verify_theorem_small_sweeps_clean():
    for theorem, ns in (
        ("dm:2", (4, 5)),
        ("dm:3", (4, 5)),
        ("k4-two-root", (4, 5)),
        ("k4-le-one-root", (4, 5)),
        ("mader", (1, 2, 3, 4)),
        ("treewidth-corollary", (5,)),
    ):
        rep = verify_theorem(theorem, ns=ns)
        assert rep.counterexamples == (), theorem
        assert rep.obstructions == 0, theorem
        assert rep.examined > 0, theorem


def test_verify_theorem_report_payload_schema():
    rep = verify_theorem("dm:2", ns=(4,))
    payload = rep.to_payload()
    assert set(payload) == {
        "theorem",
        "n",
        "cap",
        "examined",
        "obstructions",
        "counterexamples",
        "elapsed_ms",
        "workers",
    }
    assert payload["theorem"] == "dm:2"
    assert payload["n"] == [4]
    assert payload["cap"] == 5
    assert payload["workers"] == 1
    assert json.loads(rep.to_json()) == payload


def test_verify_theorem_empty_catalog_counts_obstructions():
    rep = verify_theorem("rooted-w4", ns=(5,), catalog=Catalog({}, {}))
    assert rep.obstructions == len(rep.counterexamples) > 0
    for entry in rep.counterexamples:
        assert entry["recognizer_tag"] == "unclassified"
        assert entry["oracle_verdict"] is False


def test_verify_theorem_checkpoint_resume(tmp_path):
    from immergraph.verifier import _write_checkpoint, _theorem_shard, _packaged_lines

    clean = verify_theorem("dm:2", ns=(5,))
    lines = _packaged_lines(5)
    partial_ex = partial_obs = 0
    partial_fail: list[dict] = []
    for line in lines[:10]:
        ex, obs, fail = _theorem_shard(graph6_decode(line), {"kind": "dm", "m": 2, "cap": 5})
        partial_ex += ex
        partial_obs += obs
        partial_fail.extend(fail)
    path = tmp_path / "ckpt.json"
    _write_checkpoint(path, "dm:2", (5,), 5, 10, partial_ex, partial_obs, partial_fail)
    resumed = verify_theorem("dm:2", ns=(5,), checkpoint=path)
    assert resumed.examined == clean.examined
    assert resumed.obstructions == clean.obstructions
    assert resumed.counterexamples == clean.counterexamples
    assert not path.exists()


def test_verify_theorem_checkpoint_mismatch_ignored(tmp_path):
    from immergraph.verifier import _write_checkpoint

    path = tmp_path / "ckpt.json"
    _write_checkpoint(path, "dm:3", (5,), 6, 3, 999, 7, [])
    rep = verify_theorem("dm:2", ns=(5,), checkpoint=path)
    clean = verify_theorem("dm:2", ns=(5,))
    assert rep.examined == clean.examined
    assert rep.obstructions == clean.obstructions


def test_verify_theorem_worker_counts_agree():
    solo = verify_theorem("k4-two-root", ns=(4,))
    multi = verify_theorem("k4-two-root", ns=(4,), workers=2)
    assert solo.examined == multi.examined
    assert solo.counterexamples == multi.counterexamples


def test_mader_sweep_examines_heavy_vertices():
    rep = verify_theorem("mader", ns=(4,), cap=3)
    assert rep.examined > 0
    assert rep.counterexamples == ()


def test_verify_theorem_rejects_out_of_range():
    with pytest.raises(ValueError):
        verify_theorem("dm:2", ns=(9,))
    with pytest.raises(ValueError):
        verify_theorem("dm:2", ns=(4,), cap=0)
    with pytest.raises(ValueError):
        verify_theorem("dm:2", ns=(4,), workers=0)

"""Exhaustive verification over small graphs.

Three layers.  A graph list layer parses the compact one-line ASCII
encoding of simple graphs and can regenerate the packaged per-order
lists from scratch as a cross-check.  An assignment layer walks edge
multiplicity vectors over a fixed simple support: the cut requirements
used here only ever gain from raising a multiplicity and immersion never
disappears when one is raised, so the non-immersing qualifying
assignments form a band between requirement-minimal vectors and the
immersion frontier.  A sweep layer (verify_theorem, generate_catalog)
shards work by underlying simple graph, evaluates recognizers against
the immersion oracle on every band member, and aggregates deterministic
reports with optional worker pools and checkpoints.
"""

from __future__ import annotations

import json
import time
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import permutations, product
from multiprocessing import get_context
from pathlib import Path

from . import _kernels
from .catalog import Catalog, catalog_from_graphs, default_catalog, DATA_PACKAGE
from .connectivity import (
    is_internally_k_edge_connected,
    is_k_edge_connected,
    mader_split_pair,
)
from .errors import GraphFormatError, HypothesisViolation, UnclassifiedGraph
from .immersion import complete4, diamond, immerses, wheel4
from .multigraph import MAX_VERTICES, Multigraph
from .reduction import find_sausages, is_doubled_cycle, sausage_reduce
from .structure import (
    Case5,
    Cubic,
    DoubledCycle,
    SausageFamily,
    Segmented,
    Sporadic,
    Type1,
    Type2,
    TypeA,
    TypeB,
    _dm_shape,
    _k4_shape,
    _rooted_w4_shape,
    _w4_shape,
)
from .treewidth import treewidth_exact

__all__ = [
    "AssignmentRequirement",
    "COMPLETE_REQUIREMENT",
    "ObstructionCatalog",
    "REPAIR_REQUIREMENT",
    "VerificationReport",
    "WHEEL_REQUIREMENT",
    "diamond_requirement",
    "enumerate_rooted",
    "generate_catalog",
    "generate_simple_graphs",
    "graph6_decode",
    "graph6_encode",
    "load_simple_graphs",
    "minimal_assignments",
    "obstruction",
    "packaged_simple_graphs",
    "repair",
    "verify_theorem",
]


# ---- graph list encoding ----


def graph6_encode(g: Multigraph) -> str:
    """One-line ASCII encoding of a simple graph (multiplicities ignored)."""
    n = g.n
    if n > 62:
        raise ValueError("single-byte order field covers at most 62 vertices")
    bits: list[int] = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.mat[u * n + v] else 0)
    out = [chr(63 + n)]
    for i in range(0, len(bits), 6):
        group = bits[i : i + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def graph6_decode(line: str) -> Multigraph:
    """Parse one encoded simple graph; raises ValueError with the reason."""
    if not line:
        raise ValueError("empty encoding")
    n = ord(line[0]) - 63
    if n < 1:
        raise ValueError(f"order byte {line[0]!r} out of range")
    if n > MAX_VERTICES:
        raise ValueError(f"order {n} above the supported maximum {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(line) != expected:
        raise ValueError(f"expected {expected} characters for order {n}, got {len(line)}")
    bits: list[int] = []
    for ch in line[1:]:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError(f"character {ch!r} out of range")
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("padding bits set")
    mat = bytearray(n * n)
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                mat[u * n + v] = 1
                mat[v * n + u] = 1
            k += 1
    return Multigraph(n, bytes(mat))


def load_simple_graphs(source: str | Path | Iterable[str]) -> Iterator[Multigraph]:
    """Parse a graph list, one encoded simple graph per line.

    Accepts a path or an iterable of lines.  Blank lines are skipped; any
    other unparsable line raises GraphFormatError with its line number.
    Order is preserved.
    """
    if isinstance(source, (str, Path)):
        with open(source, encoding="ascii") as handle:
            yield from load_simple_graphs(handle)
        return
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield graph6_decode(line)
        except ValueError as exc:
            raise GraphFormatError(lineno, str(exc)) from exc


def generate_simple_graphs(n: int, connected: bool = True) -> list[Multigraph]:
    """All simple graphs of one order up to isomorphism, smallest canonical first.

    Grows graphs one vertex at a time over every attachment subset and
    deduplicates by canonical form.  Independent of the packaged lists, so
    it can cross-check them; exponential, meant for n <= 8.
    """
    if not 1 <= n <= 8:
        raise ValueError("generation is desk-scale, 1 <= n <= 8")
    level: dict[bytes, Multigraph] = {}
    seed = Multigraph(1, b"\x00")
    level[seed.canonical_form()] = seed
    for k in range(2, n + 1):
        grown: dict[bytes, Multigraph] = {}
        for g in level.values():
            base = bytearray(k * k)
            for u in range(k - 1):
                row = g.mat[u * (k - 1) : (u + 1) * (k - 1)]
                base[u * k : u * k + k - 1] = row
            for mask in range(1 << (k - 1)):
                mat = bytearray(base)
                for u in range(k - 1):
                    if (mask >> u) & 1:
                        mat[u * k + k - 1] = 1
                        mat[(k - 1) * k + u] = 1
                h = Multigraph(k, bytes(mat))
                grown.setdefault(h.canonical_form(), h)
        level = grown
    out = [g for g in level.values() if not connected or g.is_connected()]
    out.sort(key=lambda g: g.canonical_form())
    return out


@lru_cache(maxsize=None)
def _packaged_lines(n: int) -> tuple[str, ...]:
    if not 1 <= n <= 8:
        raise ValueError("packaged lists cover orders 1..8")
    ref = resources.files(DATA_PACKAGE).joinpath(f"connected_n{n}.g6")
    try:
        text = ref.read_text(encoding="ascii")
    except (FileNotFoundError, OSError):
        return tuple(graph6_encode(g) for g in generate_simple_graphs(n))
    return tuple(line.strip() for line in text.splitlines() if line.strip())


def packaged_simple_graphs(n: int) -> list[Multigraph]:
    """Connected simple graphs of one order, from the packaged lists.

    Falls back to internal generation when the data file is absent.
    """
    return [graph6_decode(line) for line in _packaged_lines(n)]


def enumerate_rooted(
    graphs: Iterable[Multigraph], nroots: int = 1
) -> Iterator[Multigraph]:
    """One rooted copy per root-orbit, deduplicated by canonical form."""
    for g in graphs:
        yield from _rooted_orbits(g, nroots)


def _rooted_orbits(g: Multigraph, nroots: int) -> Iterator[Multigraph]:
    if nroots == 0:
        yield g if not g.roots else g.with_roots(())
        return
    seen: set[bytes] = set()
    for combo in permutations(range(g.n), nroots):
        rooted = g.with_roots(combo)
        key = rooted.canonical_form()
        if key not in seen:
            seen.add(key)
            yield rooted


# ---- multiplicity assignments ----


@dataclass(frozen=True)
class AssignmentRequirement:
    """Cut thresholds plus a root degree floor.

    Each condition row is (required, min_inside, min_outside, mode) as
    consumed by the cut kernels.  Raising any multiplicity never breaks a
    condition, which the lattice walk relies on.
    """

    conds: tuple[tuple[int, int, int, int], ...]
    root_degree: int = 0


REPAIR_REQUIREMENT = AssignmentRequirement(
    conds=(
        (3, 1, 1, _kernels.MODE_ANY),
        (4, 2, 2, _kernels.MODE_ANY),
        (5, 3, 2, _kernels.MODE_NOROOT),
    ),
    root_degree=4,
)

WHEEL_REQUIREMENT = AssignmentRequirement(
    conds=((3, 1, 1, _kernels.MODE_ANY), (4, 2, 2, _kernels.MODE_ANY))
)

COMPLETE_REQUIREMENT = AssignmentRequirement(conds=((3, 1, 1, _kernels.MODE_ANY),))


def diamond_requirement(m: int) -> AssignmentRequirement:
    """Hypotheses of the two-rooted diamond classification as cut rows."""
    if m < 2:
        raise ValueError("m must be at least 2")
    return AssignmentRequirement(
        conds=(
            (m, 1, 1, _kernels.MODE_SEP),
            (3, 1, 1, _kernels.MODE_NONSEP),
            (4, 2, 2, _kernels.MODE_NONSEP),
        )
    )


def _edge_support(g: Multigraph) -> tuple[tuple[int, int], ...]:
    return tuple((u, v) for u, v, _ in g.edges())


def _fill(buf: bytearray, n: int, edges: Sequence[tuple[int, int]], vec) -> None:
    for (u, v), m in zip(edges, vec):
        buf[u * n + v] = m
        buf[v * n + u] = m


def _vector_graph(base: Multigraph, edges, vec) -> Multigraph:
    n = base.n
    mat = bytearray(n * n)
    _fill(mat, n, edges, vec)
    return Multigraph(n, bytes(mat), base.roots)


def _violation_edges(
    buf: bytearray,
    n: int,
    edges,
    incident: Sequence[Sequence[int]],
    roots,
    req: AssignmentRequirement,
) -> Sequence[int] | None:
    """Edge ids able to fix the first violated condition; None when satisfied."""
    if req.root_degree:
        for r in roots:
            if sum(buf[r * n : (r + 1) * n]) < req.root_degree:
                return incident[r]
    if req.conds:
        r0 = roots[0] if roots else -1
        r1 = roots[1] if len(roots) > 1 else -1
        hit = _kernels.find_violated_cut(buf, n, r0, r1, req.conds)
        if hit is not None:
            mask = hit[0]
            return [
                i for i, (u, v) in enumerate(edges) if ((mask >> u) ^ (mask >> v)) & 1
            ]
    return None


def _minimal_vectors(
    g: Multigraph, req: AssignmentRequirement, cap: int
) -> tuple[tuple[tuple[int, int], ...], list[tuple[int, ...]]]:
    """Support edges plus all requirement-minimal multiplicity vectors.

    Walks upward from the all-ones vector, raising only edges that can fix
    the first violated condition; any satisfying vector exceeds a violating
    one somewhere across that condition's witness, so every minimal vector
    is reached.  A final pass keeps exactly the vectors whose every single
    decrement (multiplicities stay >= 1) violates the requirement.
    """
    n = g.n
    edges = _edge_support(g)
    roots = g.roots
    incident: list[list[int]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    buf = bytearray(n * n)
    start = (1,) * len(edges)
    seen = {start}
    stack = [start]
    feasible: list[tuple[int, ...]] = []
    while stack:
        vec = stack.pop()
        _fill(buf, n, edges, vec)
        fixes = _violation_edges(buf, n, edges, incident, roots, req)
        if fixes is None:
            feasible.append(vec)
            continue
        for i in fixes:
            if vec[i] >= cap:
                continue
            nxt = vec[:i] + (vec[i] + 1,) + vec[i + 1 :]
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    minimal: list[tuple[int, ...]] = []
    for vec in sorted(feasible):
        for i, m in enumerate(vec):
            if m > 1:
                dec = vec[:i] + (m - 1,) + vec[i + 1 :]
                _fill(buf, n, edges, dec)
                if _violation_edges(buf, n, edges, incident, roots, req) is None:
                    break
        else:
            minimal.append(vec)
    return edges, minimal


def minimal_assignments(
    g: Multigraph, requirement: AssignmentRequirement, cap: int
) -> list[Multigraph]:
    """Minimal multiplicity assignments over the edges of g, lexicographic.

    Assignments keep every support edge at multiplicity >= 1; g's own
    multiplicities only contribute the support.
    """
    edges, vectors = _minimal_vectors(g, requirement, cap)
    return [_vector_graph(g, edges, vec) for vec in vectors]


_ROOTED_WHEEL = wheel4(rooted=True)
_WHEEL = wheel4()
_WHEEL_CAP = _ROOTED_WHEEL.edge_count()


def repair(g: Multigraph) -> list[Multigraph]:
    """Minimal qualifying assignments over g's edges that avoid the rooted wheel.

    Qualifying means: root degree >= 4, 3-edge-connected, internally
    4-edge-connected, and every internal cut with >= 3 vertices on its
    root-free side has size >= 5.  Satisfaction only grows upward, so the
    requirement-minimal vectors that fail the rooted-wheel oracle are
    exactly the minimal elements of the full non-immersing family.
    """
    if len(g.roots) != 1:
        raise ValueError("exactly one root required")
    edges, vectors = _minimal_vectors(g, REPAIR_REQUIREMENT, _WHEEL_CAP)
    out = []
    for vec in vectors:
        h = _vector_graph(g, edges, vec)
        if not immerses(h, _ROOTED_WHEEL):
            out.append(h)
    return out


def _band_vectors(
    base: Multigraph, edges, seeds: Iterable[tuple[int, ...]], pattern: Multigraph, cap: int
) -> list[tuple[int, ...]]:
    """Non-immersing vectors upward-reachable from the seeds, capped per edge.

    Immersion persists upward, so the walk prunes at the first immersing
    vector without losing any member above it.  The oracle runs straight
    on the fill buffer; multiplicities beyond the pattern's edge count
    cannot matter, and cap never exceeds it in the shipped requirements,
    so no capping pass is needed.
    """
    n = base.n
    hroots = base.roots
    pmat, pn, proots = pattern.mat, pattern.n, pattern.roots
    buf = bytearray(n * n)
    trim = cap > pattern.edge_count()
    seen: set[tuple[int, ...]] = set()
    stack: list[tuple[int, ...]] = []
    for vec in seeds:
        if vec not in seen:
            seen.add(vec)
            stack.append(vec)
    members: list[tuple[int, ...]] = []
    while stack:
        vec = stack.pop()
        if trim:
            if immerses(_vector_graph(base, edges, vec), pattern):
                continue
        else:
            _fill(buf, n, edges, vec)
            if _kernels.immerses(buf, n, hroots, pmat, pn, proots):
                continue
        members.append(vec)
        for i, m in enumerate(vec):
            if m >= cap:
                continue
            nxt = vec[:i] + (m + 1,) + vec[i + 1 :]
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    members.sort()
    return members


def obstruction(
    g: Multigraph, minimal: Sequence[Multigraph], cap: int = _WHEEL_CAP
) -> list[Multigraph]:
    """Everything above some minimal assignment that still avoids the rooted wheel.

    Takes repair(g) as the floor; multiplicities stay <= cap.  The
    qualifying conditions hold automatically above a minimal assignment.
    """
    edges = _edge_support(g)
    seeds = [tuple(h.mult(u, v) for u, v in edges) for h in minimal]
    vectors = _band_vectors(g, edges, seeds, _ROOTED_WHEEL, cap)
    return [_vector_graph(g, edges, vec) for vec in vectors]


def _unique_band_members(
    rg: Multigraph, req: AssignmentRequirement, pattern: Multigraph, cap: int
) -> list[tuple[Multigraph, bytes]]:
    """Canonical-deduplicated non-immersing band members over rg's support."""
    edges, minimal = _minimal_vectors(rg, req, cap)
    seen: set[bytes] = set()
    out: list[tuple[Multigraph, bytes]] = []
    for vec in _band_vectors(rg, edges, minimal, pattern, cap):
        member = _vector_graph(rg, edges, vec)
        key = member.canonical_form()
        if key not in seen:
            seen.add(key)
            out.append((member, key))
    return out


# ---- catalog generation ----


@dataclass(frozen=True)
class ObstructionCatalog:
    """Generated sporadic catalog plus the enumeration parameters used."""

    catalog: Catalog
    provenance: dict[str, int]

    def entries(self):
        return self.catalog.entries()

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.catalog.to_json(), encoding="ascii")


def _tag_rooted_entry(g: Multigraph) -> str:
    # a root-free doubled pair extends to arbitrarily long chains, so the
    # entry stands for an infinite family rather than a single graph
    roots = set(g.roots)
    for chain in find_sausages(g):
        if chain.order >= 2 and not roots.intersection(chain.chain):
            return "rooted-type-3"
    return "rooted-type-4"


def _validate_catalog_entry(tag: str, g: Multigraph) -> None:
    pattern = _ROOTED_WHEEL if tag.startswith("rooted") else _WHEEL
    problems = []
    if g.n < 5:
        problems.append("fewer than 5 vertices")
    if immerses(g, pattern):
        problems.append("immerses its pattern")
    if not is_k_edge_connected(g, 3):
        problems.append("not 3-edge-connected")
    if not is_internally_k_edge_connected(g, 4):
        problems.append("not internally 4-edge-connected")
    if problems:
        raise RuntimeError(
            f"generated catalog entry violates invariants ({', '.join(problems)}): "
            f"{g.to_text()!r}"
        )


def generate_catalog(n_max: int = 8, cap: int = _WHEEL_CAP, workers: int = 1) -> ObstructionCatalog:
    """Regenerate the sporadic catalog from the packaged graph lists.

    Walks the rooted qualifying band and the root-free wheel band over
    every connected simple support up to n_max, keeps the members the
    text-defined recognizers cannot place, shortens their chains, and
    stores the deduplicated remainder with family tags.
    """
    if not 5 <= n_max <= 8:
        raise ValueError("catalog generation covers 5 <= n_max <= 8")
    lines = [line for n in range(5, n_max + 1) for line in _packaged_lines(n)]
    rooted: dict[bytes, Multigraph] = {}
    unrooted: dict[bytes, Multigraph] = {}
    _set_work({"kind": "catalog", "cap": cap})
    for result in _map_shards(_run_shard, lines, workers):
        for text in result["rooted"]:
            g = Multigraph.from_text(text)
            rooted.setdefault(g.canonical_form(), g)
        for text in result["unrooted"]:
            g = Multigraph.from_text(text)
            unrooted.setdefault(g.canonical_form(), g)
    tagged = [(_tag_rooted_entry(g), g) for g in rooted.values()]
    tagged += [("w4-sporadic", g) for g in unrooted.values()]
    for tag, g in tagged:
        _validate_catalog_entry(tag, g)
    provenance = {
        "n_max": n_max,
        "cap": cap,
        "rooted_entries": len(rooted),
        "unrooted_entries": len(unrooted),
    }
    return ObstructionCatalog(catalog_from_graphs(tagged), provenance)


def _catalog_shard(g: Multigraph, cap: int) -> dict:
    rooted: list[str] = []
    unrooted: list[str] = []
    empty = Catalog({}, {})
    if g.n >= 5:
        for rg in _rooted_orbits(g, 1):
            if immerses(rg, _ROOTED_WHEEL):
                continue
            for member, _ in _unique_band_members(
                rg, REPAIR_REQUIREMENT, _ROOTED_WHEEL, cap
            ):
                try:
                    _rooted_w4_shape(member, empty)
                except UnclassifiedGraph:
                    rooted.append(sausage_reduce(member).to_text())
        if not immerses(g, _WHEEL):
            for member, _ in _unique_band_members(g, WHEEL_REQUIREMENT, _WHEEL, cap):
                try:
                    _w4_shape(member, empty)
                except UnclassifiedGraph:
                    unrooted.append(sausage_reduce(member).to_text())
    return {"rooted": rooted, "unrooted": unrooted}


# ---- theorem sweeps ----


_THEOREM_IDS = (
    "rooted-w4",
    "w4",
    "k4-two-root",
    "k4-le-one-root",
    "mader",
    "treewidth-corollary",
)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one theorem sweep; counterexamples must be empty on success."""

    theorem: str
    ns: tuple[int, ...]
    cap: int
    examined: int
    obstructions: int
    counterexamples: tuple[dict, ...]
    elapsed_ms: int
    workers: int

    def to_payload(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": list(self.ns),
            "cap": self.cap,
            "examined": self.examined,
            "obstructions": self.obstructions,
            "counterexamples": [dict(entry) for entry in self.counterexamples],
            "elapsed_ms": self.elapsed_ms,
            "workers": self.workers,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), indent=1) + "\n"


def _parse_theorem(theorem: str) -> tuple[str, int | None]:
    if theorem.startswith("dm:"):
        try:
            m = int(theorem[3:])
        except ValueError:
            raise ValueError(f"malformed theorem id {theorem!r}") from None
        if m < 2:
            raise ValueError("m must be at least 2")
        return "dm", m
    if theorem in _THEOREM_IDS:
        return theorem, None
    raise ValueError(f"unknown theorem id {theorem!r}")


def _theorem_defaults(kind: str, m: int | None) -> tuple[tuple[int, ...], int]:
    if kind in ("rooted-w4", "w4", "treewidth-corollary"):
        return (5, 6, 7), _WHEEL_CAP
    if kind == "dm":
        return (4, 5, 6), m + 3
    if kind in ("k4-two-root", "k4-le-one-root"):
        return (4, 5, 6), 6
    return (1, 2, 3, 4, 5, 6), 3


# orders below the recognizer hypotheses are skipped, not counterexamples
_MIN_ORDER = {
    "rooted-w4": 5,
    "w4": 5,
    "treewidth-corollary": 5,
    "dm": 4,
    "k4-two-root": 4,
    "k4-le-one-root": 4,
    "mader": 1,
}


def _counterexample(member: Multigraph, tag: str, verdict: bool) -> dict:
    return {
        "graph": member.to_text(),
        "roots": list(member.roots),
        "recognizer_tag": tag,
        "oracle_verdict": verdict,
    }


def _eval_rooted_w4(member: Multigraph, cat: Catalog) -> tuple[bool, str]:
    try:
        res = _rooted_w4_shape(member, cat)
    except UnclassifiedGraph:
        return False, "unclassified"
    if isinstance(res, Type1):
        seg = res.segmentation
        ok = (
            seg.verify(member)
            and seg.width == 4
            and len(seg.head) <= 2
            and len(seg.tail) <= 3
            and member.roots[0] in seg.head
        )
        if not ok:
            return False, "type1-certificate"
    elif isinstance(res, Type2):
        if not (res.cycle_length >= 3 and 1 <= len(res.block) <= 2):
            return False, "type2-certificate"
    return True, type(res).__name__


def _eval_w4(member: Multigraph, cat: Catalog) -> tuple[bool, str]:
    try:
        res = _w4_shape(member, cat)
    except UnclassifiedGraph:
        return False, "unclassified"
    if isinstance(res, Cubic):
        if any(member.degree(v) != 3 for v in range(member.n)):
            return False, "cubic-certificate"
    elif isinstance(res, Case5):
        block = res.block
        star = member if len(block) == 1 else member.contract(block)
        if not is_doubled_cycle(star):
            return False, "identified-cycle-certificate"
    return True, type(res).__name__


def _eval_dm(member: Multigraph, m: int) -> tuple[bool, str]:
    try:
        res = _dm_shape(member, m)
    except UnclassifiedGraph:
        return False, "unclassified"
    x0, x1 = member.roots
    if isinstance(res, TypeA):
        seg = res.segmentation
        ok = (
            seg.verify(member)
            and seg.width == m
            and len(seg.head) <= 2
            and len(seg.tail) <= 2
            and x0 in seg.head
            and x1 in seg.tail
        )
        if not ok:
            return False, "segmentation-certificate"
    elif isinstance(res, TypeB):
        ld = res.lobes
        total = ld.root_multiplicity
        ok = ld.verify(member) and bool(ld.lobes)
        for interior, mult in ld.lobes:
            if mult is None or mult < 2 or (len(interior) >= 2 and mult != 2):
                ok = False
                break
            total += mult
        if not (ok and total == m + 1):
            return False, "lobe-certificate"
    return True, type(res).__name__


def _eval_k4(member: Multigraph) -> tuple[bool, str]:
    variant = {2: "two-root", 1: "one-root", 0: "no-root"}[len(member.roots)]
    try:
        res = _k4_shape(member, variant)
    except UnclassifiedGraph:
        return False, "unclassified"
    if isinstance(res, DoubledCycle):
        if not is_doubled_cycle(member):
            return False, "doubled-cycle-certificate"
    elif isinstance(res, Segmented):
        seg = res.segmentation
        ok = seg.verify(member) and seg.width == 3
        if len(member.roots) == 2:
            for side in (seg.head, seg.tail):
                if len(side) > 2 and any(r in side for r in member.roots):
                    ok = False
        else:
            ok = ok and len(seg.head) <= 2 and len(seg.tail) <= 2
        if not ok:
            return False, "segmentation-certificate"
    return True, type(res).__name__


def _theorem_shard(g: Multigraph, work: dict) -> tuple[int, int, list[dict]]:
    kind = work["kind"]
    cap = work["cap"]
    if g.n < _MIN_ORDER[kind]:
        return 0, 0, []
    if kind == "mader":
        return _mader_shard(g, cap)
    if kind == "rooted-w4":
        plans = [(1, _ROOTED_WHEEL, REPAIR_REQUIREMENT)]
    elif kind in ("w4", "treewidth-corollary"):
        plans = [(0, _WHEEL, WHEEL_REQUIREMENT)]
    elif kind == "dm":
        plans = [(2, diamond(work["m"]), diamond_requirement(work["m"]))]
    elif kind == "k4-two-root":
        plans = [(2, complete4(roots=2), COMPLETE_REQUIREMENT)]
    else:
        plans = [
            (0, complete4(roots=0), COMPLETE_REQUIREMENT),
            (1, complete4(roots=1), COMPLETE_REQUIREMENT),
        ]
    examined = 0
    obstructions = 0
    failures: list[dict] = []
    shard_tw: int | None = None
    for nroots, pattern, req in plans:
        for rg in _rooted_orbits(g, nroots):
            examined += 1
            if immerses(rg, pattern):
                continue
            rg_key = rg.canonical_form()
            for member, key in _unique_band_members(rg, req, pattern, cap):
                if key != rg_key:
                    examined += 1
                if kind == "treewidth-corollary":
                    if all(member.degree(v) == 3 for v in range(member.n)):
                        continue
                    if shard_tw is None:
                        shard_tw = treewidth_exact(g)[0]
                    if shard_tw > 3:
                        failures.append(
                            _counterexample(member, f"treewidth-{shard_tw}", False)
                        )
                    continue
                if kind == "rooted-w4":
                    ok, tag = _eval_rooted_w4(member, work["catalog"])
                elif kind == "w4":
                    ok, tag = _eval_w4(member, work["catalog"])
                elif kind == "dm":
                    ok, tag = _eval_dm(member, work["m"])
                else:
                    ok, tag = _eval_k4(member)
                if not ok:
                    if tag == "unclassified":
                        obstructions += 1
                    failures.append(_counterexample(member, tag, False))
    return examined, obstructions, failures


def _mader_shard(g: Multigraph, cap: int) -> tuple[int, int, list[dict]]:
    n = g.n
    edges = _edge_support(g)
    two_connected = ((2, 1, 1, _kernels.MODE_ANY),)
    buf = bytearray(n * n)
    seen: set[bytes] = set()
    examined = 0
    failures: list[dict] = []
    for vec in product(range(1, cap + 1), repeat=len(edges)):
        _fill(buf, n, edges, vec)
        if _kernels.find_violated_cut(buf, n, -1, -1, two_connected) is not None:
            continue
        key = _kernels.canonical_bytes(buf, n, ())
        if key in seen:
            continue
        seen.add(key)
        examined += 1
        degs = _kernels.degree_list(buf, n)
        heavy = [v for v in range(n) if degs[v] >= 4]
        if not heavy:
            continue
        member = Multigraph(n, bytes(buf))
        flows = {
            (u, w): _kernels.max_flow(member.mat, n, u, w)
            for u in range(n)
            for w in range(u + 1, n)
        }
        for v in heavy:
            try:
                a, b = mader_split_pair(member, v)
            except (HypothesisViolation, RuntimeError):
                failures.append(
                    _counterexample(member, f"split-pair-missing:vertex-{v}", False)
                )
                continue
            split = member.split_off(a, v, b)
            for (u, w), need in flows.items():
                if v in (u, w):
                    continue
                if _kernels.max_flow(split.mat, n, u, w, need) < need:
                    failures.append(
                        _counterexample(
                            member, f"connectivity-drop:vertex-{v}:pair-{u}-{w}", False
                        )
                    )
                    break
    return examined, 0, failures


# worker processes inherit this by fork before the pool starts
_WORK: dict = {}


def _set_work(work: dict) -> None:
    global _WORK
    _WORK = work


def _run_shard(line: str):
    g = graph6_decode(line)
    if _WORK["kind"] == "catalog":
        return _catalog_shard(g, _WORK["cap"])
    return _theorem_shard(g, _WORK)


def _map_shards(fn, items: Sequence[str], workers: int) -> Iterator:
    if workers <= 1 or len(items) <= 1:
        for item in items:
            yield fn(item)
        return
    ctx = get_context("fork")
    chunk = max(1, min(64, len(items) // (workers * 4) or 1))
    with ctx.Pool(processes=workers) as pool:
        yield from pool.imap(fn, items, chunksize=chunk)


def _load_checkpoint(
    path: str | Path | None, theorem: str, ns: tuple[int, ...], cap: int
) -> tuple[int, int, int, list[dict]]:
    if path is None:
        return 0, 0, 0, []
    p = Path(path)
    if not p.exists():
        return 0, 0, 0, []
    try:
        data = json.loads(p.read_text(encoding="ascii"))
    except (ValueError, OSError):
        return 0, 0, 0, []
    if (
        data.get("theorem") != theorem
        or data.get("n") != list(ns)
        or data.get("cap") != cap
    ):
        return 0, 0, 0, []
    return (
        int(data.get("next_shard", 0)),
        int(data.get("examined", 0)),
        int(data.get("obstructions", 0)),
        list(data.get("counterexamples", [])),
    )


def _write_checkpoint(
    path: str | Path,
    theorem: str,
    ns: tuple[int, ...],
    cap: int,
    next_shard: int,
    examined: int,
    obstructions: int,
    counterexamples: list[dict],
) -> None:
    payload = {
        "theorem": theorem,
        "n": list(ns),
        "cap": cap,
        "next_shard": next_shard,
        "examined": examined,
        "obstructions": obstructions,
        "counterexamples": counterexamples,
    }
    Path(path).write_text(json.dumps(payload, indent=1) + "\n", encoding="ascii")


def verify_theorem(
    theorem: str,
    ns: Iterable[int] | None = None,
    cap: int | None = None,
    workers: int = 1,
    catalog: Catalog | ObstructionCatalog | None = None,
    checkpoint: str | Path | None = None,
) -> VerificationReport:
    """Sweep one structure statement over every qualifying small multigraph.

    Enumerates, per connected simple support of each order in ns, the band
    of requirement-satisfying non-immersing multiplicity assignments up to
    cap, deduplicated by canonical form, and evaluates the matching
    recognizer on each; immersing graphs agree with the oracle by
    construction.  Work is sharded by support graph, merged in a fixed
    order, and checkpointed every 1000 shards when a checkpoint path is
    given, so reports are deterministic for any worker count.
    """
    started = time.monotonic()
    kind, m = _parse_theorem(theorem)
    default_ns, default_cap = _theorem_defaults(kind, m)
    ns = tuple(sorted(set(default_ns if ns is None else (int(n) for n in ns))))
    for n in ns:
        if not 1 <= n <= 8:
            raise ValueError("orders must stay within 1..8")
    cap = default_cap if cap is None else int(cap)
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    work: dict = {"kind": kind, "cap": cap}
    if kind == "dm":
        work["m"] = m
    if kind in ("rooted-w4", "w4"):
        if isinstance(catalog, ObstructionCatalog):
            work["catalog"] = catalog.catalog
        elif catalog is not None:
            work["catalog"] = catalog
        else:
            work["catalog"] = default_catalog()
    lines = [line for n in ns for line in _packaged_lines(n)]
    start, examined, obstructions, failures = _load_checkpoint(
        checkpoint, theorem, ns, cap
    )
    start = min(start, len(lines))
    _set_work(work)
    pending = lines[start:]
    for offset, (shard_ex, shard_obs, shard_fail) in enumerate(
        _map_shards(_run_shard, pending, workers)
    ):
        examined += shard_ex
        obstructions += shard_obs
        failures.extend(shard_fail)
        done = start + offset + 1
        if checkpoint is not None and done % 1000 == 0:
            _write_checkpoint(
                checkpoint, theorem, ns, cap, done, examined, obstructions, failures
            )
    if checkpoint is not None:
        Path(checkpoint).unlink(missing_ok=True)
    failures.sort(key=lambda e: (e["graph"], e["roots"], e["recognizer_tag"]))
    return VerificationReport(
        theorem=theorem,
        ns=ns,
        cap=cap,
        examined=examined,
        obstructions=obstructions,
        counterexamples=tuple(failures),
        elapsed_ms=int((time.monotonic() - started) * 1000),
        workers=workers,
    )

"""Loopless rooted multigraphs on up to 12 vertices.

The adjacency data is a flat symmetric n*n byte matrix, so graphs are
immutable, hashable, and cheap to hand to the compiled kernels.  Roots are
an ordered tuple of at most two distinct vertices; operations that renumber
vertices keep the root order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_VERTICES = 12
MAX_MULTIPLICITY = 255


def _as_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class CutCertificate:
    """A vertex subset X with its cut size d(X); 0 < |X| < n."""

    side: frozenset[int]
    size: int

    @classmethod
    def of(cls, g: "Multigraph", side: Iterable[int]) -> "CutCertificate":
        members = frozenset(side)
        if not 0 < len(members) < g.n:
            raise ValueError("cut side must be a proper nonempty subset")
        return cls(members, g.cut_size(members))


@dataclass(frozen=True)
class Multigraph:
    """Immutable loopless multigraph with 0, 1 or 2 ordered roots."""

    n: int
    mat: bytes
    roots: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.mat) != self.n * self.n:
            raise ValueError("matrix size does not match vertex count")
        n, m = self.n, self.mat
        for u in range(n):
            if m[u * n + u]:
                raise ValueError(f"loop at vertex {u}")
            for v in range(u + 1, n):
                if m[u * n + v] != m[v * n + u]:
                    raise ValueError("matrix not symmetric")
        if len(self.roots) > 2:
            raise ValueError("at most two roots supported")
        if len(set(self.roots)) != len(self.roots):
            raise ValueError("duplicate root")
        for rt in self.roots:
            if not 0 <= rt < n:
                raise ValueError(f"root {rt} out of range")

    # ---- construction ----

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int, int]] = (),
        roots: Iterable[int] = (),
    ) -> "Multigraph":
        """Build from (u, v, multiplicity) triples; duplicate pairs rejected."""
        mat = bytearray(n * n)
        seen: set[tuple[int, int]] = set()
        for u, v, m in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge pair {key}")
            seen.add(key)
            if not 1 <= m <= MAX_MULTIPLICITY:
                raise ValueError(f"multiplicity {m} outside 1..{MAX_MULTIPLICITY}")
            mat[u * n + v] = m
            mat[v * n + u] = m
        return cls(n, bytes(mat), tuple(roots))

    @classmethod
    def from_text(cls, text: str) -> "Multigraph":
        """Parse the plain text format; see to_text for the layout."""
        lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
        if not lines:
            raise ValueError("empty graph description")
        head = lines[0].split()
        if len(head) != 2:
            raise ValueError("line 1 must be 'n r'")
        try:
            n, r = int(head[0]), int(head[1])
        except ValueError as exc:
            raise ValueError("line 1 must be 'n r'") from exc
        pos = 1
        roots: tuple[int, ...] = ()
        if r > 0:
            if len(lines) < 2:
                raise ValueError("missing root line")
            parts = lines[1].split()
            if len(parts) != r:
                raise ValueError(f"expected {r} roots, got {len(parts)}")
            roots = tuple(int(p) for p in parts)
            pos = 2
        edges = []
        for idx, ln in enumerate(lines[pos:], start=pos + 1):
            parts = ln.split()
            if len(parts) != 3:
                raise ValueError(f"line {idx}: expected 'u v m'")
            try:
                u, v, m = int(parts[0]), int(parts[1]), int(parts[2])
            except ValueError as exc:
                raise ValueError(f"line {idx}: expected integers") from exc
            edges.append((u, v, m))
        return cls.from_edges(n, edges, roots)

    def to_text(self) -> str:
        """Render as text: 'n r', root line when r > 0, then 'u v m' lines."""
        out = [f"{self.n} {len(self.roots)}"]
        if self.roots:
            out.append(" ".join(str(rt) for rt in self.roots))
        for u, v, m in self.edges():
            out.append(f"{u} {v} {m}")
        return "\n".join(out) + "\n"

    # ---- basic queries ----

    def mult(self, u: int, v: int) -> int:
        return self.mat[u * self.n + v]

    def degree(self, v: int) -> int:
        row = self.mat[v * self.n : (v + 1) * self.n]
        return sum(row)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in range(self.n)))

    def neighbors(self, v: int) -> list[int]:
        base = v * self.n
        return [u for u in range(self.n) if self.mat[base + u]]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, multiplicity) with u < v, ascending."""
        n = self.n
        for u in range(n):
            for v in range(u + 1, n):
                m = self.mat[u * n + v]
                if m:
                    yield (u, v, m)

    def edge_count(self) -> int:
        """Total number of edges counted with multiplicity."""
        return sum(self.mat) // 2

    def simple_edge_count(self) -> int:
        return sum(1 for _ in self.edges())

    def mult_into(self, v: int, vertices: Iterable[int]) -> int:
        """Number of edges joining v to the given vertex set."""
        base = v * self.n
        return sum(self.mat[base + u] for u in vertices if u != v)

    def cut_size(self, side: Iterable[int]) -> int:
        """Number of edges with exactly one end in the given set."""
        mask = _as_mask(side)
        n, total = self.n, 0
        for u in range(n):
            if mask >> u & 1:
                base = u * n
                for v in range(n):
                    if not mask >> v & 1:
                        total += self.mat[base + v]
        return total

    def is_connected(self) -> bool:
        return len(self.component_of(0)) == self.n

    def component_of(self, v: int) -> set[int]:
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in self.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def components(self) -> list[set[int]]:
        left = set(range(self.n))
        out = []
        while left:
            comp = self.component_of(min(left))
            out.append(comp)
            left -= comp
        return out

    # ---- rebuilding operations ----

    def _replace(self, mat: bytearray, roots: tuple[int, ...]) -> "Multigraph":
        return Multigraph(self.n, bytes(mat), roots)

    def with_roots(self, roots: Iterable[int]) -> "Multigraph":
        return Multigraph(self.n, self.mat, tuple(roots))

    def add_edge(self, u: int, v: int, count: int = 1) -> "Multigraph":
        if u == v:
            raise ValueError("loops not supported")
        n = self.n
        m = self.mat[u * n + v] + count
        if m > MAX_MULTIPLICITY:
            raise ValueError("multiplicity overflow")
        mat = bytearray(self.mat)
        mat[u * n + v] = m
        mat[v * n + u] = m
        return self._replace(mat, self.roots)

    def delete_edge(self, u: int, v: int, count: int = 1) -> "Multigraph":
        n = self.n
        m = self.mat[u * n + v] - count
        if m < 0:
            raise ValueError(f"edge ({u},{v}) has multiplicity {m + count} < {count}")
        mat = bytearray(self.mat)
        mat[u * n + v] = m
        mat[v * n + u] = m
        return self._replace(mat, self.roots)

    def _renumbered(self, keep: list[int], roots: tuple[int, ...]) -> "Multigraph":
        """Induce on the ordered vertex list keep; roots given in old labels."""
        k = len(keep)
        new_index = {old: i for i, old in enumerate(keep)}
        mat = bytearray(k * k)
        for i, u in enumerate(keep):
            base = u * self.n
            for j, v in enumerate(keep):
                mat[i * k + j] = self.mat[base + v]
        return Multigraph(k, bytes(mat), tuple(new_index[rt] for rt in roots))

    def delete_vertex(self, v: int) -> "Multigraph":
        """Remove v and its incident edges; remaining vertices shift down."""
        if v in self.roots:
            raise ValueError("cannot delete a root vertex")
        if self.n == 1:
            raise ValueError("cannot delete the last vertex")
        keep = [u for u in range(self.n) if u != v]
        return self._renumbered(keep, self.roots)

    def induced(self, vertices: Iterable[int]) -> "Multigraph":
        """Induced subgraph; keeps whichever roots fall inside the set."""
        keep = sorted(set(vertices))
        if not keep:
            raise ValueError("empty vertex set")
        inside = set(keep)
        return self._renumbered(keep, tuple(rt for rt in self.roots if rt in inside))

    def contract(self, block: Iterable[int]) -> "Multigraph":
        """Identify the given set to one vertex, dropping internal edges.

        The merged vertex takes the slot of the smallest member.  A root
        inside the set survives as the merged vertex; merging both roots
        is rejected since their order would be lost.
        """
        inside = sorted(set(block))
        if not inside:
            raise ValueError("empty contraction set")
        rooted = [rt for rt in self.roots if rt in set(inside)]
        if len(rooted) == 2:
            raise ValueError("contraction would merge both roots")
        star = inside[0]
        keep = [u for u in range(self.n) if u == star or u not in set(inside)]
        k = len(keep)
        new_index = {old: i for i, old in enumerate(keep)}
        mat = bytearray(k * k)
        inset = set(inside)
        for i, u in enumerate(keep):
            for j, v in enumerate(keep):
                if i == j:
                    continue
                if u == star:
                    m = sum(self.mat[w * self.n + v] for w in inside)
                elif v == star:
                    m = sum(self.mat[u * self.n + w] for w in inside)
                else:
                    m = self.mat[u * self.n + v]
                if m > MAX_MULTIPLICITY:
                    raise ValueError("multiplicity overflow in contraction")
                mat[i * k + j] = m
        roots = tuple(
            new_index[star] if rt in inset else new_index[rt] for rt in self.roots
        )
        return Multigraph(k, bytes(mat), roots)

    def split_off(self, a: int, center: int, b: int) -> "Multigraph":
        """Replace one edge a-center and one center-b by a new edge a-b."""
        if a == b:
            raise ValueError("split ends must be distinct")
        if center in (a, b):
            raise ValueError("split ends must differ from the center")
        n = self.n
        if not self.mat[a * n + center] or not self.mat[center * n + b]:
            raise ValueError("split requires an edge on both sides")
        if self.mat[a * n + b] >= MAX_MULTIPLICITY:
            raise ValueError("multiplicity overflow")
        mat = bytearray(self.mat)
        mat[a * n + center] -= 1
        mat[center * n + a] -= 1
        mat[center * n + b] -= 1
        mat[b * n + center] -= 1
        mat[a * n + b] += 1
        mat[b * n + a] += 1
        return self._replace(mat, self.roots)

    def suppress(self, v: int) -> "Multigraph":
        """Remove a degree-2 non-root vertex, joining its two edge ends.

        Two parallel edges at v would close a loop, so they are dropped.
        """
        if v in self.roots:
            raise ValueError("cannot suppress a root vertex")
        if self.degree(v) != 2:
            raise ValueError(f"vertex {v} has degree {self.degree(v)}, need 2")
        nbrs = self.neighbors(v)
        g = self
        if len(nbrs) == 2:
            a, b = nbrs
            if g.mat[a * g.n + b] >= MAX_MULTIPLICITY:
                raise ValueError("multiplicity overflow")
            g = g.add_edge(a, b)
        return g.delete_vertex(v)

    def subdivide(self, u: int, v: int) -> "Multigraph":
        """Replace one copy of edge u-v by a length-2 path through a new vertex."""
        n = self.n
        if not self.mat[u * n + v]:
            raise ValueError(f"no edge ({u},{v}) to subdivide")
        if n + 1 > MAX_VERTICES:
            raise ValueError("vertex limit reached")
        k = n + 1
        mat = bytearray(k * k)
        for a in range(n):
            for b in range(n):
                mat[a * k + b] = self.mat[a * n + b]
        mat[u * k + v] -= 1
        mat[v * k + u] -= 1
        mat[u * k + n] = 1
        mat[n * k + u] = 1
        mat[v * k + n] = 1
        mat[n * k + v] = 1
        return Multigraph(k, bytes(mat), self.roots)

    def cap_multiplicities(self, cap: int) -> "Multigraph":
        if cap < 1:
            raise ValueError("cap must be positive")
        mat = bytearray(min(m, cap) for m in self.mat)
        return self._replace(mat, self.roots)

    def underlying_simple(self) -> "Multigraph":
        mat = bytearray(1 if m else 0 for m in self.mat)
        return self._replace(mat, self.roots)

    def relabel(self, perm: Iterable[int]) -> "Multigraph":
        """Apply perm (old index -> new index) to vertices and roots."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("not a permutation")
        n = self.n
        mat = bytearray(n * n)
        for u in range(n):
            for v in range(n):
                mat[p[u] * n + p[v]] = self.mat[u * n + v]
        return Multigraph(n, bytes(mat), tuple(p[rt] for rt in self.roots))

    # ---- isomorphism ----

    def canonical_form(self) -> bytes:
        """Root-respecting canonical encoding; equal iff rooted-isomorphic."""
        from . import _kernels

        return _kernels.canonical_bytes(self.mat, self.n, self.roots)

    @classmethod
    def from_canonical(cls, data: bytes) -> "Multigraph":
        """Rebuild a graph from a canonical_form encoding.

        The encoding is self-contained: order, root count, then per
        position a degree byte plus the adjacency column against earlier
        positions.  Roots come back as vertices 0..r-1.
        """
        if len(data) < 2:
            raise ValueError("canonical encoding shorter than its header")
        n, r = data[0], data[1]
        expected = 2 + n + n * (n - 1) // 2
        if len(data) != expected:
            raise ValueError(f"expected {expected} bytes for n={n}, got {len(data)}")
        mat = bytearray(n * n)
        degs = []
        pos = 2
        for p in range(n):
            degs.append(data[pos])
            pos += 1
            for i in range(p):
                m = data[pos]
                pos += 1
                mat[i * n + p] = m
                mat[p * n + i] = m
        g = cls(n, bytes(mat), tuple(range(r)))
        if [g.degree(v) for v in range(n)] != degs:
            raise ValueError("degree bytes disagree with the adjacency columns")
        return g

    def is_isomorphic(self, other: "Multigraph") -> bool:
        if self.n != other.n or len(self.roots) != len(other.roots):
            return False
        return self.canonical_form() == other.canonical_form()

    def __repr__(self) -> str:
        es = ", ".join(f"{u}-{v}x{m}" for u, v, m in self.edges())
        return f"Multigraph(n={self.n}, roots={self.roots}, [{es}])"

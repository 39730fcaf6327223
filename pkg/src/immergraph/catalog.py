"""Catalog of sausage-reduced obstruction graphs matched by classifiers.

Entries are produced by the verifier's exhaustive search and shipped as
a JSON data file: a list of {canonical, tag, degrees, n} records sorted
by (tag, canonical).  The canonical field is the hex canonical_form of
the reduced graph and fully determines it; degrees and n are redundant
metadata validated on load.  Tags: "rooted-type-3" entries expand into
families by growing a root-free chain of sausages, "rooted-type-4"
entries are fixed rooted graphs, "w4-sporadic" covers the unrooted
side.  Lookups key on the canonical form of the sausage-reduced graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .multigraph import Multigraph

DATA_PACKAGE = "immergraph.data"
CATALOG_FILE = "catalog.json"

ROOTED_TAGS = ("rooted-type-3", "rooted-type-4")
UNROOTED_TAGS = ("w4-sporadic",)
KNOWN_TAGS = ROOTED_TAGS + UNROOTED_TAGS


@dataclass(frozen=True)
class CatalogEntry:
    entry_id: str
    kind: str
    graph: Multigraph


@dataclass(frozen=True)
class Catalog:
    rooted: dict[bytes, CatalogEntry]
    unrooted: dict[bytes, CatalogEntry]

    def lookup_rooted(self, g: Multigraph) -> CatalogEntry | None:
        return self.rooted.get(g.canonical_form())

    def lookup_unrooted(self, g: Multigraph) -> CatalogEntry | None:
        return self.unrooted.get(g.canonical_form())

    def entries(self) -> list[CatalogEntry]:
        both = list(self.rooted.values()) + list(self.unrooted.values())
        return sorted(both, key=lambda e: (e.kind, e.graph.canonical_form()))

    def to_json(self) -> str:
        records = [
            {
                "canonical": e.graph.canonical_form().hex(),
                "tag": e.kind,
                "degrees": list(e.graph.degree_sequence()),
                "n": e.graph.n,
            }
            for e in self.entries()
        ]
        return json.dumps(records, indent=1) + "\n"


def catalog_from_graphs(tagged: list[tuple[str, Multigraph]]) -> Catalog:
    """Assemble a catalog from (tag, reduced graph) pairs.

    Entry ids are positional per tag over the (tag, canonical) sort, so
    identical inputs always produce identical ids.
    """
    rooted: dict[bytes, CatalogEntry] = {}
    unrooted: dict[bytes, CatalogEntry] = {}
    counters: dict[str, int] = {}
    ordered = sorted(tagged, key=lambda tg: (tg[0], tg[1].canonical_form()))
    for tag, graph in ordered:
        if tag not in KNOWN_TAGS:
            raise ValueError(f"unknown catalog tag {tag!r}")
        if (tag in ROOTED_TAGS) != bool(graph.roots):
            raise ValueError(f"tag {tag!r} does not match root count of {graph!r}")
        index = counters.get(tag, 0)
        counters[tag] = index + 1
        entry = CatalogEntry(f"{tag}:{index}", tag, graph)
        side = rooted if graph.roots else unrooted
        key = graph.canonical_form()
        if key in side:
            raise ValueError(f"duplicate catalog graph for {entry.entry_id}")
        side[key] = entry
    return Catalog(rooted, unrooted)


def catalog_from_json(text: str) -> Catalog:
    records = json.loads(text)
    tagged = []
    for rec in records:
        graph = Multigraph.from_canonical(bytes.fromhex(rec["canonical"]))
        if rec.get("n") != graph.n:
            raise ValueError(f"record order {rec.get('n')} disagrees with {graph.n}")
        if list(rec.get("degrees", [])) != list(graph.degree_sequence()):
            raise ValueError("record degrees disagree with the decoded graph")
        tagged.append((rec["tag"], graph))
    return catalog_from_graphs(tagged)


@lru_cache(maxsize=1)
def default_catalog() -> Catalog:
    """Packaged catalog; empty when the data file has not been generated."""
    ref = resources.files(DATA_PACKAGE).joinpath(CATALOG_FILE)
    if not ref.is_file():
        return Catalog({}, {})
    return catalog_from_json(ref.read_text())

"""Shared-variable network over a corpus, plus request/jacket satisfaction.

Two items are linked when their normalized variable sets intersect; the rule
is uniform across request-request, jacket-jacket, and request-jacket pairs.
Coverage is kept as an exact Fraction.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .model import Corpus, DataJacket, DataKind, DataRequest, Item, TeedaError


class UnknownNodeError(TeedaError):
    def __init__(self, node_id: str):
        self.node_id = node_id
        super().__init__(f"UnknownNode: {node_id!r}")


@dataclass(frozen=True)
class Node:
    id: str
    kind: DataKind
    name: str


@dataclass(frozen=True)
class Edge:
    """Undirected link between two items; endpoints stored with a < b."""

    a: str
    b: str
    weight: int
    shared: frozenset[str]

    def __post_init__(self):
        if self.a >= self.b:
            raise ValueError(f"edge endpoints must satisfy a < b: {self.a!r}, {self.b!r}")
        if self.weight != len(self.shared) or self.weight < 1:
            raise ValueError("edge weight must equal |shared| >= 1")


@dataclass(frozen=True)
class ExchangeNetwork:
    """Nodes and shared-variable edges, both in deterministic order."""

    nodes: tuple[Node, ...]
    edges: tuple[Edge, ...]

    def node_ids(self) -> set[str]:
        return {n.id for n in self.nodes}


def shared_variables(a: Item, b: Item) -> frozenset[str]:
    """Exact intersection of two items' normalized variable sets; symmetric."""
    return a.variables & b.variables


def build_network(corpus: Corpus) -> ExchangeNetwork:
    """Link every pair of items with at least one common variable.

    Pairs are found through an inverted label index, so disjoint items are
    never compared; output ordering is deterministic (ids ascending, edges
    by (a, b) ascending).
    """
    items = sorted(corpus, key=lambda item: item.id)
    nodes = tuple(Node(id=i.id, kind=i.kind, name=i.name) for i in items)

    by_label: dict[str, list[Item]] = defaultdict(list)
    for item in items:
        for label in item.variables:
            by_label[label].append(item)

    pairs: set[tuple[str, str]] = set()
    by_id = {i.id: i for i in items}
    for holders in by_label.values():
        for i in range(len(holders)):
            for j in range(i + 1, len(holders)):
                x, y = holders[i].id, holders[j].id
                pairs.add((x, y) if x < y else (y, x))

    edges = tuple(
        Edge(a=a, b=b, weight=len(shared), shared=shared)
        for a, b in sorted(pairs)
        for shared in [shared_variables(by_id[a], by_id[b])]
    )
    return ExchangeNetwork(nodes=nodes, edges=edges)


def neighbors(network: ExchangeNetwork, node_id: str) -> set[str]:
    """All node ids sharing an edge with node_id; raises UnknownNodeError."""
    if node_id not in network.node_ids():
        raise UnknownNodeError(node_id)
    adjacent: set[str] = set()
    for edge in network.edges:
        if edge.a == node_id:
            adjacent.add(edge.b)
        elif edge.b == node_id:
            adjacent.add(edge.a)
    return adjacent


@dataclass(frozen=True)
class SatisfactionReport:
    """How completely one jacket covers one request's variables."""

    request_id: str
    jacket_id: str
    covered: frozenset[str]
    missing: frozenset[str]
    coverage: Fraction
    satisfied: bool

    def to_document(self) -> dict:
        return {
            "request": self.request_id,
            "jacket": self.jacket_id,
            "covered": sorted(self.covered),
            "missing": sorted(self.missing),
            "coverage": float(self.coverage),
            "satisfied": self.satisfied,
        }


def satisfaction(request: DataRequest, jacket: DataJacket) -> SatisfactionReport:
    """Coverage = |request vars in jacket| / |request vars|, exact."""
    covered = request.variables & jacket.variables
    missing = request.variables - jacket.variables
    coverage = Fraction(len(covered), len(request.variables))
    return SatisfactionReport(
        request_id=request.id,
        jacket_id=jacket.id,
        covered=covered,
        missing=missing,
        coverage=coverage,
        satisfied=not missing,
    )


def rank_candidates(
    request: DataRequest, corpus: Corpus, top_k: int | None = None
) -> list[SatisfactionReport]:
    """Jackets with coverage > 0, best first.

    Order: coverage descending, then smaller jacket variable set (prefer the
    minimal sufficient data), then jacket id for determinism.
    """
    sizes = {j.id: len(j.variables) for j in corpus.jackets}
    reports = [
        rep
        for jacket in corpus.jackets
        for rep in [satisfaction(request, jacket)]
        if rep.coverage > 0
    ]
    reports.sort(key=lambda r: (-r.coverage, sizes[r.jacket_id], r.jacket_id))
    return reports[:top_k] if top_k is not None else reports


def network_document(network: ExchangeNetwork) -> dict:
    """Wire/file form of a network: nodes {id, kind, name}, edges with labels."""
    return {
        "nodes": [
            {"id": n.id, "kind": n.kind.value, "name": n.name} for n in network.nodes
        ],
        "edges": [
            {
                "source": e.a,
                "target": e.b,
                "weight": e.weight,
                "shared": sorted(e.shared),
            }
            for e in network.edges
        ],
    }

"""Independent brute-force recomputations used to check the real
implementations. Everything here is deliberate O(n^2) loops over items and
plain tallies; none of it reuses the package's algorithms."""

from __future__ import annotations

import random
from fractions import Fraction

from teeda.model import (
    Corpus,
    DataFormat,
    DataJacket,
    DataKind,
    DataRequest,
    DataType,
    SharingCondition,
)

LABEL_POOL = [
    "date",
    "area name",
    "prefecture name",
    "country",
    "country name",
    "number of cases",
    "number of tests",
    "number of contacts",
    "age",
    "age group",
    "sex",
    "address",
    "location",
    "needs",
    "product name",
    "service name",
    "reason",
    "type of business",
    "type of anxiety",
    "consultation content",
    "population",
    "time of day",
    "temperature",
    "humidity",
    "event name",
    "hospital name",
    "city name",
    "degree of seriousness",
    "occupancy rate",
    "travel destination",
    "income",
    "household size",
    "店舗名",
    "都市名",
    "感染者数",
    "naïve index",
    "café visits",
    "straße",
    "行動履歴",
    "検査数",
]


def random_corpus(rng: random.Random, max_items: int = 100, max_vars: int = 18) -> Corpus:
    """Random mixed corpus; variables drawn from a fixed normalized pool."""
    n = rng.randint(0, max_items)
    corpus = Corpus()
    for i in range(n):
        labels = frozenset(rng.sample(LABEL_POOL, rng.randint(1, max_vars)))
        if rng.random() < 0.5:
            item = DataRequest(
                id=f"i{i:03d}",
                name=f"request {i}",
                variables=labels,
                purpose=f"purpose {i}" if rng.random() < 0.5 else None,
            )
        else:
            item = DataJacket(
                id=f"i{i:03d}",
                name=f"jacket {i}",
                variables=labels,
                outline=f"outline {i}" if rng.random() < 0.5 else None,
                types=frozenset(rng.sample(list(DataType), rng.randint(0, 3))),
                formats=frozenset(rng.sample(list(DataFormat), rng.randint(0, 3))),
                sharing=rng.choice(list(SharingCondition)) if rng.random() < 0.7 else None,
            )
        corpus.add(item)
    return corpus


def edge_oracle(corpus: Corpus) -> dict[tuple[str, str], frozenset[str]]:
    """All unordered pairs with intersecting variable sets, by full scan."""
    items = list(corpus)
    edges: dict[tuple[str, str], frozenset[str]] = {}
    for i in range(len(items)):
        for j in range(len(items)):
            if i == j:
                continue
            a, b = items[i], items[j]
            if a.id >= b.id:
                continue
            shared = frozenset(a.variables & b.variables)
            if shared:
                edges[(a.id, b.id)] = shared
    return edges


def neighbors_oracle(corpus: Corpus, node_id: str) -> set[str]:
    out = set()
    for (a, b), _ in edge_oracle(corpus).items():
        if a == node_id:
            out.add(b)
        if b == node_id:
            out.add(a)
    return out


def stats_oracle(corpus: Corpus) -> dict:
    def side(items):
        sizes = [len(i.variables) for i in items]
        distinct = set()
        for i in items:
            distinct |= i.variables
        return {
            "items": len(items),
            "occurrences": sum(sizes),
            "distinct": len(distinct),
            "avg": Fraction(sum(sizes), len(sizes)) if sizes else None,
            "max": max(sizes) if sizes else None,
            "min": min(sizes) if sizes else None,
        }

    items = list(corpus)
    return {
        "all": side(items),
        "requests": side([i for i in items if i.kind == DataKind.REQUEST]),
        "jackets": side([i for i in items if i.kind == DataKind.PROVIDABLE]),
    }


def freq_oracle(corpus: Corpus, kind: DataKind | None = None) -> dict[str, int]:
    counts: dict[str, int] = {}
    for item in corpus:
        if kind is not None and item.kind != kind:
            continue
        for label in item.variables:
            counts[label] = counts.get(label, 0) + 1
    return counts


def common_oracle(corpus: Corpus) -> set[str]:
    request_side: set[str] = set()
    jacket_side: set[str] = set()
    for item in corpus:
        if item.kind == DataKind.REQUEST:
            request_side |= item.variables
        else:
            jacket_side |= item.variables
    return request_side & jacket_side


def singleton_oracle(corpus: Corpus, kind: DataKind) -> tuple[int, int]:
    counts = freq_oracle(corpus, kind)
    return sum(1 for c in counts.values() if c == 1), len(counts)


def breakdown_oracle(corpus: Corpus, dimension: str) -> dict[str, int]:
    counts: dict[str, int] = {}
    for jacket in corpus.jackets:
        if dimension == "sharing":
            tokens = [jacket.sharing.value] if jacket.sharing else []
        elif dimension == "types":
            tokens = [t.value for t in jacket.types]
        else:
            tokens = [f.value for f in jacket.formats]
        for token in tokens:
            counts[token] = counts.get(token, 0) + 1
    return counts


def unmet_oracle(corpus: Corpus) -> dict[str, Fraction]:
    """request id -> best coverage, for every request below full coverage."""
    out: dict[str, Fraction] = {}
    for request in corpus.requests:
        best = Fraction(0)
        for jacket in corpus.jackets:
            coverage = Fraction(
                len(request.variables & jacket.variables), len(request.variables)
            )
            best = max(best, coverage)
        if best < 1:
            out[request.id] = best
    return out

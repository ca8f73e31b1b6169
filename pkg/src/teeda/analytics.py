"""Corpus statistics: counts, variable frequencies, mismatch metrics, and
categorical breakdowns of jacket metadata, with two-corpus comparison.

All statistics are exact: counts are ints, ratios are Fractions. Two-decimal
formatting happens only when rendering text reports.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .model import (
    Corpus,
    DataFormat,
    DataJacket,
    DataKind,
    DataType,
    SharingCondition,
)
from .network import rank_candidates


@dataclass(frozen=True)
class KindStats:
    """Per-population variable statistics (one side of the stats table)."""

    n_items: int
    variable_occurrences: int
    distinct_variables: int
    avg_variables: Fraction | None
    max_variables: int | None
    min_variables: int | None

    def to_document(self) -> dict:
        return {
            "items": self.n_items,
            "variable_occurrences": self.variable_occurrences,
            "distinct_variables": self.distinct_variables,
            "avg_variables": None if self.avg_variables is None else float(self.avg_variables),
            "max_variables": self.max_variables,
            "min_variables": self.min_variables,
        }


@dataclass(frozen=True)
class CorpusStats:
    n_items: int
    n_requests: int
    n_jackets: int
    overall: KindStats
    requests: KindStats
    jackets: KindStats

    def to_document(self) -> dict:
        return {
            "n_items": self.n_items,
            "n_requests": self.n_requests,
            "n_jackets": self.n_jackets,
            "overall": self.overall.to_document(),
            "requests": self.requests.to_document(),
            "jackets": self.jackets.to_document(),
        }


def _kind_stats(items: list) -> KindStats:
    sizes = [len(item.variables) for item in items]
    distinct = set().union(*(item.variables for item in items)) if items else set()
    return KindStats(
        n_items=len(items),
        variable_occurrences=sum(sizes),
        distinct_variables=len(distinct),
        avg_variables=Fraction(sum(sizes), len(sizes)) if sizes else None,
        max_variables=max(sizes) if sizes else None,
        min_variables=min(sizes) if sizes else None,
    )


def corpus_stats(corpus: Corpus) -> CorpusStats:
    requests = corpus.requests
    jackets = corpus.jackets
    return CorpusStats(
        n_items=len(corpus),
        n_requests=len(requests),
        n_jackets=len(jackets),
        overall=_kind_stats(list(corpus)),
        requests=_kind_stats(requests),
        jackets=_kind_stats(jackets),
    )


@dataclass(frozen=True)
class FrequencyTable:
    """Label occurrence counts, count descending then label ascending."""

    rows: tuple[tuple[str, int], ...]

    def to_document(self) -> list[dict]:
        return [{"label": label, "count": count} for label, count in self.rows]

    def count_of(self, label: str) -> int:
        for row_label, count in self.rows:
            if row_label == label:
                return count
        return 0


def _frequency_rows(items) -> FrequencyTable:
    counts = Counter(label for item in items for label in item.variables)
    rows = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return FrequencyTable(rows=tuple(rows))


def variable_frequency(
    corpus: Corpus, kind_filter: DataKind | None = None, top_k: int | None = None
) -> FrequencyTable:
    """How many items (of the filtered kind) contain each label.

    Variables are sets, so an item contributes at most 1 per label.
    """
    items = [i for i in corpus if kind_filter is None or i.kind == kind_filter]
    table = _frequency_rows(items)
    if top_k is not None:
        return FrequencyTable(rows=table.rows[:top_k])
    return table


def common_variable_types(corpus: Corpus) -> tuple[frozenset[str], int]:
    """Labels used on both the request side and the jacket side."""
    request_labels = set().union(*(r.variables for r in corpus.requests)) if corpus.requests else set()
    jacket_labels = set().union(*(j.variables for j in corpus.jackets)) if corpus.jackets else set()
    common = frozenset(request_labels & jacket_labels)
    return common, len(common)


def singleton_ratio(corpus: Corpus, kind: DataKind) -> tuple[int, int]:
    """(labels occurring in exactly one item of this kind, distinct labels)."""
    items = [i for i in corpus if i.kind == kind]
    counts = Counter(label for item in items for label in item.variables)
    singletons = sum(1 for c in counts.values() if c == 1)
    return singletons, len(counts)


_DIMENSION_TOKENS: dict[str, list[str]] = {
    "sharing": [c.value for c in SharingCondition],
    "types": [t.value for t in DataType],
    "formats": [f.value for f in DataFormat],
}


def _jacket_tokens(jacket: DataJacket, dimension: str) -> list[str]:
    if dimension == "sharing":
        return [jacket.sharing.value] if jacket.sharing is not None else []
    if dimension == "types":
        return [t.value for t in jacket.types]
    if dimension == "formats":
        return [f.value for f in jacket.formats]
    raise ValueError(f"unknown breakdown dimension: {dimension!r}")


@dataclass(frozen=True)
class BreakdownRow:
    token: str
    count: int
    proportion: Fraction | None

    def to_document(self) -> dict:
        return {
            "token": self.token,
            "count": self.count,
            "proportion": None if self.proportion is None else float(self.proportion),
        }


@dataclass(frozen=True)
class BreakdownReport:
    """Counts of jackets carrying each canonical token of one dimension.

    Sharing is single-select: proportions are over jackets that declare a
    condition and sum to 1. Types/formats are multi-select: proportions are
    incidence per jacket and may sum past 1.
    """

    dimension: str
    rows: tuple[BreakdownRow, ...]

    def to_document(self) -> dict:
        return {"dimension": self.dimension, "rows": [r.to_document() for r in self.rows]}

    def row(self, token: str) -> BreakdownRow:
        for r in self.rows:
            if r.token == token:
                return r
        raise KeyError(token)


def breakdown(corpus: Corpus, dimension: str) -> BreakdownReport:
    """Tally jackets per canonical token; every token gets a row (zeros kept)."""
    tokens = _DIMENSION_TOKENS[dimension]  # KeyError on unknown dimension
    jackets = corpus.jackets
    counts = Counter(tok for j in jackets for tok in _jacket_tokens(j, dimension))
    if dimension == "sharing":
        denominator = sum(1 for j in jackets if j.sharing is not None)
    else:
        denominator = len(jackets)
    rows = tuple(
        BreakdownRow(
            token=token,
            count=counts.get(token, 0),
            proportion=Fraction(counts.get(token, 0), denominator) if denominator else None,
        )
        for token in tokens
    )
    return BreakdownReport(dimension=dimension, rows=rows)


@dataclass(frozen=True)
class BreakdownComparison:
    """Side-by-side breakdowns of two corpora; row order is identical."""

    dimension: str
    a: BreakdownReport
    b: BreakdownReport

    def to_document(self) -> dict:
        return {
            "dimension": self.dimension,
            "a": self.a.to_document(),
            "b": self.b.to_document(),
        }


def compare_breakdowns(corpus_a: Corpus, corpus_b: Corpus, dimension: str) -> BreakdownComparison:
    return BreakdownComparison(
        dimension=dimension,
        a=breakdown(corpus_a, dimension),
        b=breakdown(corpus_b, dimension),
    )


@dataclass(frozen=True)
class UnmetRequest:
    """A request no single jacket fully covers."""

    request_id: str
    best_coverage: Fraction
    missing: frozenset[str]

    def to_document(self) -> dict:
        return {
            "request": self.request_id,
            "best_coverage": float(self.best_coverage),
            "missing": sorted(self.missing),
        }


def unmet_requests(corpus: Corpus) -> list[UnmetRequest]:
    """Requests whose best coverage over all jackets is below 1.

    The missing set is taken at the best-ranked candidate; with no
    overlapping jacket at all, coverage is 0 and everything is missing.
    Sorted by best coverage ascending, then id.
    """
    out: list[UnmetRequest] = []
    for request in corpus.requests:
        ranked = rank_candidates(request, corpus, top_k=1)
        if ranked:
            best = ranked[0]
            coverage, missing = best.coverage, best.missing
        else:
            coverage, missing = Fraction(0), request.variables
        if coverage < 1:
            out.append(UnmetRequest(request.id, coverage, missing))
    out.sort(key=lambda u: (u.best_coverage, u.request_id))
    return out


def analytics_document(corpus: Corpus) -> dict:
    """Everything the dashboard and the CLI --json mode need, full precision."""
    common, common_count = common_variable_types(corpus)
    req_singletons, req_distinct = singleton_ratio(corpus, DataKind.REQUEST)
    prov_singletons, prov_distinct = singleton_ratio(corpus, DataKind.PROVIDABLE)
    return {
        "stats": corpus_stats(corpus).to_document(),
        "frequencies": {
            "all": variable_frequency(corpus).to_document(),
            "requests": variable_frequency(corpus, DataKind.REQUEST).to_document(),
            "providable": variable_frequency(corpus, DataKind.PROVIDABLE).to_document(),
        },
        "common_variables": {"count": common_count, "labels": sorted(common)},
        "singletons": {
            "requests": {"singletons": req_singletons, "distinct": req_distinct},
            "providable": {"singletons": prov_singletons, "distinct": prov_distinct},
        },
        "unmet_requests": [u.to_document() for u in unmet_requests(corpus)],
    }


def _two_decimals(value: Fraction | None) -> str:
    return "-" if value is None else f"{float(value):.2f}"


def _count_cell(value: int | None) -> str:
    return "-" if value is None else str(value)


def render_stats_summary(stats: CorpusStats) -> str:
    """One-line digest used at the top of the CLI stats output."""
    return (
        f"items {stats.n_items}, requests {stats.n_requests}, "
        f"providable {stats.n_jackets}, "
        f"variable types {stats.overall.distinct_variables}, "
        f"avg {_two_decimals(stats.overall.avg_variables)}"
    )


def render_stats_text(stats: CorpusStats) -> str:
    """Fixed-layout stats block: one row per measure, one column per side."""
    columns = [
        ("all data", stats.overall),
        ("data requests", stats.requests),
        ("providable data", stats.jackets),
    ]
    rows = [
        ("no. of data items", [_count_cell(s.n_items) for _, s in columns]),
        ("no. of variables", [_count_cell(s.variable_occurrences) for _, s in columns]),
        ("types of variables", [_count_cell(s.distinct_variables) for _, s in columns]),
        ("average no. of variables", [_two_decimals(s.avg_variables) for _, s in columns]),
        ("maximum no. of variables", [_count_cell(s.max_variables) for _, s in columns]),
        ("minimum no. of variables", [_count_cell(s.min_variables) for _, s in columns]),
    ]
    label_width = max(len(label) for label, _ in rows)
    headers = [name for name, _ in columns]
    widths = [max(len(h), 8) for h in headers]
    lines = [
        " " * label_width + "  " + "  ".join(h.rjust(w) for h, w in zip(headers, widths))
    ]
    for label, cells in rows:
        lines.append(
            label.ljust(label_width)
            + "  "
            + "  ".join(cell.rjust(w) for cell, w in zip(cells, widths))
        )
    return "\n".join(lines)


def render_breakdown_text(report: BreakdownReport) -> str:
    width = max(len(r.token) for r in report.rows)
    lines = [f"breakdown by {report.dimension}"]
    for row in report.rows:
        prop = "-" if row.proportion is None else f"{float(row.proportion):.2f}"
        lines.append(f"  {row.token.ljust(width)}  {str(row.count).rjust(5)}  {prop.rjust(5)}")
    return "\n".join(lines)


def render_comparison_text(comparison: BreakdownComparison) -> str:
    width = max(len(r.token) for r in comparison.a.rows)
    lines = [f"breakdown by {comparison.dimension} (A vs B)"]
    for row_a, row_b in zip(comparison.a.rows, comparison.b.rows):
        prop_a = "-" if row_a.proportion is None else f"{float(row_a.proportion):.2f}"
        prop_b = "-" if row_b.proportion is None else f"{float(row_b.proportion):.2f}"
        lines.append(
            f"  {row_a.token.ljust(width)}"
            f"  {str(row_a.count).rjust(5)}  {prop_a.rjust(5)}"
            f"  |  {str(row_b.count).rjust(5)}  {prop_b.rjust(5)}"
        )
    return "\n".join(lines)

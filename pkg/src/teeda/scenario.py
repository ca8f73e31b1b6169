"""Purpose categories for requests and per-category data-design reports.

Categorization is human-in-the-loop: ``suggest_category`` only proposes, a
person (or the registry API) assigns. The report names, per category, the
most-demanded variables and the ones no jacket in the corpus provides, as
acquisition targets for designing data about unobserved events.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .analytics import FrequencyTable, _frequency_rows
from .model import Category, Corpus, DataRequest, TeedaError, UnknownItemError


class NotARequestError(TeedaError):
    def __init__(self, item_id: str):
        self.item_id = item_id
        super().__init__(f"NotARequest: {item_id!r}")


def assign_category(corpus: Corpus, request_id: str, category: Category | None) -> Corpus:
    """Set (or clear, with None) a request's category in place; overwrites."""
    item = corpus.get(request_id)
    if item is None:
        raise UnknownItemError(request_id)
    if not isinstance(item, DataRequest):
        raise NotARequestError(request_id)
    corpus.replace(replace(item, category=category))
    return corpus


def category_profile(corpus: Corpus, category: Category) -> FrequencyTable:
    """Variable frequency over the requests carrying this category."""
    return _frequency_rows([r for r in corpus.requests if r.category == category])


# Keyword hints for pre-filling manual categorization. Matching is a plain
# case-insensitive substring scan over purpose + name, first hit wins.
_KEYWORD_HINTS: tuple[tuple[str, Category], ...] = (
    ("going out", Category.INDIVIDUAL_DECISION_MAKING),
    ("staying home", Category.INDIVIDUAL_DECISION_MAKING),
    ("business", Category.ORGANIZATIONAL_DECISION_MAKING),
    ("guidelines", Category.ORGANIZATIONAL_DECISION_MAKING),
    ("policy", Category.ORGANIZATIONAL_DECISION_MAKING),
    ("verify", Category.PHENOMENON_UNDERSTANDING),
    ("understand", Category.PHENOMENON_UNDERSTANDING),
    ("compare countries", Category.PHENOMENON_UNDERSTANDING),
)


def suggest_category(request: DataRequest) -> Category | None:
    """Non-binding category suggestion from a tiny keyword map; never assigns."""
    haystack = f"{request.purpose or ''} {request.name}".lower()
    for keyword, category in _KEYWORD_HINTS:
        if keyword in haystack:
            return category
    return None


@dataclass(frozen=True)
class CategoryScenario:
    """One category's slice of the report."""

    category: Category
    count: int
    profile: FrequencyTable
    missing: tuple[str, ...]
    suggestions: tuple[str, ...]

    def to_document(self) -> dict:
        return {
            "category": self.category.value,
            "count": self.count,
            "profile": self.profile.to_document(),
            "missing": list(self.missing),
            "suggestions": list(self.suggestions),
        }


@dataclass(frozen=True)
class ScenarioReport:
    scenarios: tuple[CategoryScenario, ...]
    uncategorized: int
    total_requests: int

    def to_document(self) -> dict:
        return {
            "categories": [s.to_document() for s in self.scenarios],
            "uncategorized": self.uncategorized,
            "total_requests": self.total_requests,
        }

    def scenario(self, category: Category) -> CategoryScenario:
        for s in self.scenarios:
            if s.category == category:
                return s
        raise KeyError(category)


def scenario_report(corpus: Corpus, top_k: int = 5) -> ScenarioReport:
    """Per-category counts, variable profiles, and acquisition suggestions.

    A variable is "missing" when some request of the category wants it and
    no jacket anywhere in the corpus provides it. Suggestions name the top_k
    profile variables plus every missing variable.
    """
    jacket_labels: set[str] = set()
    for jacket in corpus.jackets:
        jacket_labels |= jacket.variables

    scenarios = []
    categorized = 0
    for category in Category:
        members = [r for r in corpus.requests if r.category == category]
        categorized += len(members)
        profile = category_profile(corpus, category)
        missing = tuple(
            sorted(label for label, _ in profile.rows if label not in jacket_labels)
        )
        top = [label for label, _ in profile.rows[:top_k]]
        suggestions = tuple(dict.fromkeys([*top, *missing]))
        scenarios.append(
            CategoryScenario(
                category=category,
                count=len(members),
                profile=profile,
                missing=missing,
                suggestions=suggestions,
            )
        )
    total = len(corpus.requests)
    return ScenarioReport(
        scenarios=tuple(scenarios),
        uncategorized=total - categorized,
        total_requests=total,
    )


def render_report_text(report: ScenarioReport) -> str:
    lines = [
        f"scenario report: {report.total_requests} requests "
        f"({report.uncategorized} uncategorized)"
    ]
    for s in report.scenarios:
        lines.append("")
        lines.append(f"{s.category.value}: {s.count} requests")
        if s.profile.rows:
            profile = ", ".join(f"{label} ({count})" for label, count in s.profile.rows[:5])
            lines.append(f"  top variables: {profile}")
        if any(label == "date" for label, _ in s.profile.rows):
            lines.append("  central variable: date")
        if s.missing:
            lines.append(f"  missing from all providable data: {', '.join(s.missing)}")
        if s.suggestions:
            lines.append(f"  suggested acquisition targets: {', '.join(s.suggestions)}")
    return "\n".join(lines)

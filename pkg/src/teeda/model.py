"""Domain types and validation for data requests and data jackets.

Variable labels are plain strings normalized by :func:`normalize_label`
(lowercased, whitespace collapsed). Matching elsewhere in the package is
exact equality of normalized labels; textually distinct synonyms such as
"address" and "location" stay distinct on purpose.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Union


class TeedaError(Exception):
    """Base class for all errors raised by this package."""


class EmptyLabelError(TeedaError):
    """A variable label was empty or all-whitespace."""


@dataclass(frozen=True)
class FieldError:
    """One validation failure, in the wire shape {field, reason}."""

    field: str
    reason: str

    def to_document(self) -> dict:
        return {"field": self.field, "reason": self.reason}


class ValidationFailed(TeedaError):
    """Raised when an item fails validation; carries all field errors."""

    def __init__(self, errors: list[FieldError]):
        self.errors = errors
        super().__init__("; ".join(f"{e.field}: {e.reason}" for e in errors))


class FewVariablesWarning(UserWarning):
    """Item declares fewer than two variables (allowed, but unusual)."""


def normalize_label(raw: str) -> str:
    """Normalize a variable label: strip, collapse inner whitespace, lowercase.

    Raises EmptyLabelError when nothing remains. Idempotent: normalizing a
    normalized label returns it unchanged. No synonym merging happens here.
    """
    text = " ".join(raw.split()).lower()
    if not text:
        raise EmptyLabelError("label is empty or all-whitespace")
    return text


class DataKind(Enum):
    """Whether an item asks for data or offers it."""

    REQUEST = "request"
    PROVIDABLE = "providable"

    @classmethod
    def parse(cls, token: str) -> "DataKind":
        low = token.strip().lower()
        for kind in cls:
            if kind.value == low:
                return kind
        raise ValueError(f"UnknownKind: {token!r}")


class _TokenEnum(Enum):
    """Enum whose values are canonical display tokens, parsed case-insensitively."""

    @classmethod
    def parse(cls, token: str):
        low = " ".join(token.split()).lower()
        low = _PARSE_ALIASES.get(cls, {}).get(low, low)
        for member in cls:
            if member.value.lower() == low:
                return member
        raise ValueError(token)

    def __str__(self) -> str:
        return self.value


class DataType(_TokenEnum):
    TIME_SERIES = "time series"
    NUMERICAL_VALUE = "numerical value"
    TEXT = "text"
    TABLE = "table"
    IMAGE = "image"
    GRAPH = "graph"
    MOVIE = "movie"
    SOUND = "sound"
    OTHER = "other"


class DataFormat(_TokenEnum):
    CSV = "CSV"
    TXT = "txt"
    RDB = "RDB"
    MARKUP = "markup"
    RDF = "RDF"
    WEKA = "weka"
    SHAPE = "shape"
    PDF = "PDF"
    OTHER = "other"


class SharingCondition(_TokenEnum):
    GENERALLY_SHAREABLE = "generally shareable"
    CONDITIONS_NEGOTIATIONS_REQUIRED = "conditions/negotiations are required"
    SHAREABLE_WITHIN_LIMITED_RANGE = "shareable within a limited range"
    NON_SHAREABLE = "non-shareable"
    SHAREABLE_BY_PURCHASE = "shareable by purchase"
    NOT_YET_DECIDED = "not yet decided"
    OTHER_CONDITIONS = "other conditions"


class Category(_TokenEnum):
    """Purpose category of a data request."""

    PHENOMENON_UNDERSTANDING = "phenomenon understanding"
    INDIVIDUAL_DECISION_MAKING = "individual decision-making"
    ORGANIZATIONAL_DECISION_MAKING = "organizational decision-making"


# Accepted input spellings that are not the canonical token. Intentionally
# tiny: unknown tokens are hard errors, never fuzzy-matched.
_PARSE_ALIASES: dict[type, dict[str, str]] = {
    DataType: {"number": "numerical value", "others": "other"},
    DataFormat: {"others": "other"},
    SharingCondition: {"shareable by purchased": "shareable by purchase"},
}


@dataclass(frozen=True)
class DataRequest:
    """A call for data: what a user wants, described by variable labels."""

    id: str
    name: str
    variables: frozenset[str]
    purpose: str | None = None
    category: Category | None = None

    kind = DataKind.REQUEST


@dataclass(frozen=True)
class DataJacket:
    """Summary metadata of providable data; the data itself stays private."""

    id: str
    name: str
    variables: frozenset[str]
    outline: str | None = None
    types: frozenset[DataType] = frozenset()
    formats: frozenset[DataFormat] = frozenset()
    sharing: SharingCondition | None = None

    kind = DataKind.PROVIDABLE


Item = Union[DataRequest, DataJacket]

_auto_ids = itertools.count(1)


def mint_id() -> str:
    """Produce the next process-wide monotonically increasing item id."""
    return f"item-{next(_auto_ids)}"


def _normalize_variables(variables: Iterable[str], errors: list[FieldError]) -> frozenset[str]:
    labels: set[str] = set()
    for raw in variables:
        try:
            labels.add(normalize_label(raw))
        except EmptyLabelError:
            errors.append(FieldError("variables", "EmptyLabel"))
    if not labels:
        errors.append(FieldError("variables", "MissingVariables"))
    elif len(labels) < 2:
        warnings.warn("item declares fewer than 2 variables", FewVariablesWarning, stacklevel=3)
    return frozenset(labels)


def _clean_name(name: str | None, errors: list[FieldError]) -> str:
    text = (name or "").strip()
    if not text:
        errors.append(FieldError("name", "MissingName"))
    return text


def validate_request(
    name: str,
    variables: Iterable[str],
    purpose: str | None = None,
    *,
    id: str | None = None,
    category: Category | str | None = None,
) -> DataRequest:
    """Build a validated DataRequest; raises ValidationFailed with all errors.

    Variables are normalized and deduplicated; free text has no length limit.
    """
    errors: list[FieldError] = []
    clean_name = _clean_name(name, errors)
    labels = _normalize_variables(variables, errors)
    cat: Category | None = None
    if category is not None:
        if isinstance(category, Category):
            cat = category
        else:
            try:
                cat = Category.parse(category)
            except ValueError:
                errors.append(FieldError("category", f"UnknownCategory: {category!r}"))
    if errors:
        raise ValidationFailed(errors)
    return DataRequest(
        id=id if id is not None else mint_id(),
        name=clean_name,
        variables=labels,
        purpose=purpose if purpose else None,
        category=cat,
    )


def validate_jacket(
    name: str,
    variables: Iterable[str],
    outline: str | None = None,
    types: Iterable[str] = (),
    formats: Iterable[str] = (),
    sharing: str | None = None,
    *,
    id: str | None = None,
) -> DataJacket:
    """Build a validated DataJacket; raises ValidationFailed with all errors.

    Type/format/sharing tokens are matched case-insensitively against the
    canonical token lists plus the documented aliases ("number", "others",
    "shareable by purchased"). Unknown tokens are hard errors.
    """
    errors: list[FieldError] = []
    clean_name = _clean_name(name, errors)
    labels = _normalize_variables(variables, errors)

    parsed_types: set[DataType] = set()
    for token in types:
        try:
            parsed_types.add(DataType.parse(token))
        except ValueError:
            errors.append(FieldError("types", f"UnknownType: {token!r}"))
    parsed_formats: set[DataFormat] = set()
    for token in formats:
        try:
            parsed_formats.add(DataFormat.parse(token))
        except ValueError:
            errors.append(FieldError("formats", f"UnknownFormat: {token!r}"))

    parsed_sharing: SharingCondition | None = None
    if sharing is not None and str(sharing).strip():
        try:
            parsed_sharing = SharingCondition.parse(str(sharing))
        except ValueError:
            errors.append(FieldError("sharing", f"UnknownSharingCondition: {sharing!r}"))

    if errors:
        raise ValidationFailed(errors)
    return DataJacket(
        id=id if id is not None else mint_id(),
        name=clean_name,
        variables=labels,
        outline=outline if outline else None,
        types=frozenset(parsed_types),
        formats=frozenset(parsed_formats),
        sharing=parsed_sharing,
    )


class DuplicateIdError(TeedaError):
    def __init__(self, item_id: str):
        self.item_id = item_id
        super().__init__(f"DuplicateId: {item_id!r}")


class UnknownItemError(TeedaError):
    def __init__(self, item_id: str):
        self.item_id = item_id
        super().__init__(f"UnknownItem: {item_id!r}")


class Corpus:
    """All registered items, keyed by id, in insertion order.

    Items themselves are immutable; mutation replaces whole entries. Callers
    needing isolation take ``snapshot()`` copies (cheap: items are shared).
    """

    def __init__(self, items: Iterable[Item] = ()):
        self._items: dict[str, Item] = {}
        # opaque per-id passthrough fields from lenient loads; not compared
        self.extras: dict[str, dict] = {}
        for item in items:
            self.add(item)

    def add(self, item: Item) -> None:
        if item.id in self._items:
            raise DuplicateIdError(item.id)
        self._items[item.id] = item

    def replace(self, item: Item) -> None:
        if item.id not in self._items:
            raise UnknownItemError(item.id)
        self._items[item.id] = item

    def remove(self, item_id: str) -> Item:
        if item_id not in self._items:
            raise UnknownItemError(item_id)
        self.extras.pop(item_id, None)
        return self._items.pop(item_id)

    def get(self, item_id: str) -> Item | None:
        return self._items.get(item_id)

    def __contains__(self, item_id: str) -> bool:
        return item_id in self._items

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator[Item]:
        return iter(self._items.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Corpus):
            return NotImplemented
        return list(self._items.items()) == list(other._items.items())

    @property
    def requests(self) -> list[DataRequest]:
        return [i for i in self if isinstance(i, DataRequest)]

    @property
    def jackets(self) -> list[DataJacket]:
        return [i for i in self if isinstance(i, DataJacket)]

    def snapshot(self) -> "Corpus":
        copy = Corpus()
        copy._items = dict(self._items)
        copy.extras = {k: dict(v) for k, v in self.extras.items()}
        return copy

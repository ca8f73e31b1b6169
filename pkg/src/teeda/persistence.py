"""Corpus files, CSV import, and the network export document.

Corpus files are UTF-8 JSON records, one per line, in insertion order.
Saving always emits the canonical form (sorted variables, canonical enum
tokens, absent optionals omitted), so save -> load -> save is byte-stable.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .model import (
    Corpus,
    DataFormat,
    DataKind,
    DataRequest,
    DataType,
    FieldError,
    Item,
    TeedaError,
    ValidationFailed,
    validate_jacket,
    validate_request,
)
from .network import Edge, ExchangeNetwork, Node, network_document


class ParseError(TeedaError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class RecordValidationError(TeedaError):
    def __init__(self, line: int, errors: list[FieldError]):
        self.line = line
        self.errors = errors
        reasons = "; ".join(f"{e.field}: {e.reason}" for e in errors)
        super().__init__(f"line {line}: {reasons}")


class HeaderMismatchError(TeedaError):
    def __init__(self, expected: set[str], actual: list[str]):
        self.expected = expected
        self.actual = actual
        super().__init__(f"HeaderMismatch: expected columns {sorted(expected)}, got {actual}")


_COMMON_FIELDS = {"id", "kind", "name", "variables"}
_REQUEST_FIELDS = _COMMON_FIELDS | {"purpose", "category"}
_JACKET_FIELDS = _COMMON_FIELDS | {"outline", "types", "formats", "sharing"}


def item_to_document(item: Item, extra: dict | None = None) -> dict:
    """Canonical document for one item; key order is part of the format."""
    doc: dict = {
        "id": item.id,
        "kind": item.kind.value,
        "name": item.name,
        "variables": sorted(item.variables),
    }
    if isinstance(item, DataRequest):
        if item.purpose is not None:
            doc["purpose"] = item.purpose
        if item.category is not None:
            doc["category"] = item.category.value
    else:
        if item.outline is not None:
            doc["outline"] = item.outline
        if item.types:
            doc["types"] = [t.value for t in DataType if t in item.types]
        if item.formats:
            doc["formats"] = [f.value for f in DataFormat if f in item.formats]
        if item.sharing is not None:
            doc["sharing"] = item.sharing.value
    for key in sorted(extra or {}):
        doc[key] = extra[key]
    return doc


def document_to_item(doc: dict, strict: bool = True) -> tuple[Item, dict]:
    """Validate a document into an item.

    Returns (item, extras); extras holds unknown fields when strict is
    False. Known fields belonging to the other kind are always rejected.
    Raises ValidationFailed.
    """
    if not isinstance(doc, dict):
        raise ValidationFailed([FieldError("", "NotAnObject")])
    errors: list[FieldError] = []
    kind_token = doc.get("kind")
    try:
        kind = DataKind.parse(str(kind_token)) if kind_token is not None else None
    except ValueError:
        kind = None
    if kind is None:
        raise ValidationFailed([FieldError("kind", f"UnknownKind: {kind_token!r}")])

    allowed = _REQUEST_FIELDS if kind is DataKind.REQUEST else _JACKET_FIELDS
    forbidden = (_JACKET_FIELDS | _REQUEST_FIELDS) - allowed
    extras: dict = {}
    for key in doc:
        if key in allowed:
            continue
        if key in forbidden:
            errors.append(FieldError(key, f"FieldNotAllowedForKind: {kind.value}"))
        elif strict:
            errors.append(FieldError(key, "UnknownField"))
        else:
            extras[key] = doc[key]
    if errors:
        raise ValidationFailed(errors)

    variables = doc.get("variables") or []
    if not isinstance(variables, list):
        raise ValidationFailed([FieldError("variables", "NotAList")])
    item_id = doc.get("id")
    if kind is DataKind.REQUEST:
        item: Item = validate_request(
            doc.get("name") or "",
            variables,
            doc.get("purpose"),
            id=item_id,
            category=doc.get("category"),
        )
    else:
        item = validate_jacket(
            doc.get("name") or "",
            variables,
            doc.get("outline"),
            doc.get("types") or [],
            doc.get("formats") or [],
            doc.get("sharing"),
            id=item_id,
        )
    return item, extras


def load_corpus(path: str | Path, strict: bool = True) -> Corpus:
    """Read a record-per-line corpus file; all records validated.

    Raises ParseError / RecordValidationError with the offending line
    number, or DuplicateIdError. IO failures surface as OSError.
    """
    corpus = Corpus()
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            doc = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(lineno, str(exc)) from exc
        if not isinstance(doc, dict):
            raise ParseError(lineno, "record is not an object")
        try:
            item, extras = document_to_item(doc, strict=strict)
        except ValidationFailed as exc:
            raise RecordValidationError(lineno, exc.errors) from exc
        corpus.add(item)  # DuplicateIdError propagates
        if extras:
            corpus.extras[item.id] = extras
    return corpus


def _write_text_atomic(path: str | Path, text: str) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    """Write the canonical record-per-line form, insertion order preserved."""
    lines = [
        json.dumps(item_to_document(item, corpus.extras.get(item.id)), ensure_ascii=False)
        for item in corpus
    ]
    _write_text_atomic(path, "".join(line + "\n" for line in lines))


@dataclass(frozen=True)
class RowError:
    """One rejected CSV row; the import itself continues."""

    row: int
    errors: tuple[FieldError, ...]

    def to_document(self) -> dict:
        return {"row": self.row, "errors": [e.to_document() for e in self.errors]}


@dataclass(frozen=True)
class ImportResult:
    items: tuple[Item, ...]
    errors: tuple[RowError, ...]


_CSV_COLUMNS = {
    DataKind.REQUEST: ["name", "variables", "purpose"],
    DataKind.PROVIDABLE: ["name", "variables", "outline", "types", "formats", "sharing"],
}


def _split_cell(cell: str | None) -> list[str]:
    if not cell:
        return []
    return [part for part in (p.strip() for p in cell.split(";")) if part]


def import_csv(path: str | Path, kind: DataKind) -> ImportResult:
    """Bulk entry from a CSV file; ';' separates in-cell lists.

    The header must name exactly the columns for the kind. Invalid rows are
    reported with their row number and skipped, never aborting the import.
    """
    expected = _CSV_COLUMNS[kind]
    items: list[Item] = []
    errors: list[RowError] = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        if sorted(header) != sorted(expected):
            raise HeaderMismatchError(set(expected), list(header))
        for rownum, row in enumerate(reader, start=2):
            try:
                if kind is DataKind.REQUEST:
                    item: Item = validate_request(
                        row.get("name") or "",
                        _split_cell(row.get("variables")),
                        (row.get("purpose") or "").strip() or None,
                    )
                else:
                    item = validate_jacket(
                        row.get("name") or "",
                        _split_cell(row.get("variables")),
                        (row.get("outline") or "").strip() or None,
                        _split_cell(row.get("types")),
                        _split_cell(row.get("formats")),
                        (row.get("sharing") or "").strip() or None,
                    )
            except ValidationFailed as exc:
                errors.append(RowError(row=rownum, errors=tuple(exc.errors)))
                continue
            items.append(item)
    return ImportResult(items=tuple(items), errors=tuple(errors))


def export_csv(items: Iterable[Item], path: str | Path, kind: DataKind) -> None:
    """Inverse of import_csv for one kind; labels containing ';' cannot be
    represented in this format and are a hard error."""
    columns = _CSV_COLUMNS[kind]
    rows = []
    for item in items:
        if item.kind != kind:
            continue
        for label in item.variables:
            if ";" in label:
                raise ValueError(f"label {label!r} in item {item.id!r} contains ';'")
        doc = item_to_document(item)
        row = {
            "name": item.name,
            "variables": ";".join(sorted(item.variables)),
        }
        if kind is DataKind.REQUEST:
            row["purpose"] = doc.get("purpose", "")
        else:
            row["outline"] = doc.get("outline", "")
            row["types"] = ";".join(doc.get("types", []))
            row["formats"] = ";".join(doc.get("formats", []))
            row["sharing"] = doc.get("sharing", "")
        rows.append(row)
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=columns)
        writer.writeheader()
        writer.writerows(rows)


def export_network(network: ExchangeNetwork, path: str | Path) -> None:
    """Write the nodes/edges document, deterministically ordered."""
    doc = network_document(network)
    _write_text_atomic(path, json.dumps(doc, ensure_ascii=False, indent=2) + "\n")


def load_network(path: str | Path) -> ExchangeNetwork:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    nodes = tuple(
        Node(id=n["id"], kind=DataKind.parse(n["kind"]), name=n["name"])
        for n in doc["nodes"]
    )
    edges = tuple(
        Edge(
            a=e["source"],
            b=e["target"],
            weight=e["weight"],
            shared=frozenset(e["shared"]),
        )
        for e in doc["edges"]
    )
    return ExchangeNetwork(nodes=nodes, edges=edges)

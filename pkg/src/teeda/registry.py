"""Live item registry: serialized writes, an ordered event log, and
after-commit broadcast so every subscriber sees the same total order.

State is always reproducible by replaying the event log over an empty
corpus. When the registry is opened on a corpus file that has no event log,
synthetic "created" events are written so the replay contract still holds.
"""

from __future__ import annotations

import json
import queue
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable, Iterable

from .analytics import analytics_document
from .model import (
    Category,
    Corpus,
    DataKind,
    DataRequest,
    FieldError,
    TeedaError,
    UnknownItemError,
    ValidationFailed,
    mint_id,
)
from .network import build_network, network_document, rank_candidates
from .persistence import document_to_item, item_to_document, load_corpus, save_corpus
from .scenario import assign_category, scenario_report


class ReplayGapError(TeedaError):
    def __init__(self, since: int, current: int):
        self.since = since
        self.current = current
        super().__init__(f"ReplayGap: since={since}, current seq={current}")


class UnknownRequestError(TeedaError):
    def __init__(self, item_id: str):
        self.item_id = item_id
        super().__init__(f"UnknownRequest: {item_id!r}")


ACTIONS = ("created", "updated", "deleted", "categorized")


@dataclass(frozen=True)
class Event:
    seq: int
    action: str
    item: dict
    timestamp: str

    def to_document(self) -> dict:
        return {
            "seq": self.seq,
            "action": self.action,
            "item": self.item,
            "timestamp": self.timestamp,
        }

    @classmethod
    def from_document(cls, doc: dict) -> "Event":
        return cls(
            seq=int(doc["seq"]),
            action=doc["action"],
            item=doc["item"],
            timestamp=doc.get("timestamp", ""),
        )


def replay(events: Iterable[Event]) -> Corpus:
    """Rebuild registry state by applying events in order to an empty corpus."""
    corpus = Corpus()
    for event in events:
        if event.action == "created":
            item, _ = document_to_item(event.item)
            corpus.add(item)
        elif event.action in ("updated", "categorized"):
            item, _ = document_to_item(event.item)
            corpus.replace(item)
        elif event.action == "deleted":
            corpus.remove(event.item["id"])
        else:
            raise ValueError(f"unknown event action: {event.action!r}")
    return corpus


class Subscription:
    """One subscriber's view: replayed history plus a live queue."""

    def __init__(self, replayed: list[Event], unsubscribe: Callable[["Subscription"], None]):
        self.replayed = replayed
        self._queue: "queue.Queue[Event | None]" = queue.Queue()
        self._unsubscribe = unsubscribe
        self._closed = False

    def push(self, event: Event) -> None:
        self._queue.put(event)

    def next_event(self, timeout: float | None = None) -> Event | None:
        """Next event: replayed history first, then live; None on close/timeout."""
        if self.replayed:
            return self.replayed.pop(0)
        try:
            return self._queue.get(timeout=timeout)
        except queue.Empty:
            return None

    def try_next(self) -> Event | None:
        """Non-blocking variant of next_event."""
        if self.replayed:
            return self.replayed.pop(0)
        try:
            return self._queue.get_nowait()
        except queue.Empty:
            return None

    def close(self) -> None:
        if not self._closed:
            self._closed = True
            self._unsubscribe(self)
            self._queue.put(None)


class Registry:
    """Single-writer item registry over a Corpus, with durable event log.

    Reads take a snapshot under the lock and compute outside it; writes and
    file saves are serialized through the same lock.
    """

    def __init__(
        self,
        corpus: Corpus | None = None,
        *,
        data_path: str | Path | None = None,
        events_path: str | Path | None = None,
    ):
        self._lock = threading.RLock()
        self._subscribers: list[Subscription] = []
        self._data_path = Path(data_path) if data_path else None
        if events_path is not None:
            self._events_path = Path(events_path)
        elif self._data_path is not None:
            self._events_path = self._data_path.with_name(self._data_path.name + ".events")
        else:
            self._events_path = None

        self._events: list[Event] = []
        if self._events_path is not None and self._events_path.exists():
            for line in self._events_path.read_text(encoding="utf-8").splitlines():
                if line.strip():
                    self._events.append(Event.from_document(json.loads(line)))

        if corpus is not None:
            self._corpus = corpus
        elif self._data_path is not None and self._data_path.exists():
            self._corpus = load_corpus(self._data_path)
        elif self._events:
            self._corpus = replay(self._events)
        else:
            self._corpus = Corpus()

        # Corpus predates the log (or no log at all): synthesize creation
        # events so replay(1..seq) always reproduces the current state.
        if not self._events and len(self._corpus) > 0:
            for item in self._corpus:
                event = self._make_event("created", item_to_document(item))
                self._events.append(event)
                self._persist_event(event)

    @property
    def seq(self) -> int:
        with self._lock:
            return len(self._events)

    @property
    def events(self) -> list[Event]:
        with self._lock:
            return list(self._events)

    def _make_event(self, action: str, item_doc: dict) -> Event:
        return Event(
            seq=len(self._events) + 1,
            action=action,
            item=item_doc,
            timestamp=datetime.now(timezone.utc).isoformat(),
        )

    def _persist_event(self, event: Event) -> None:
        if self._events_path is not None:
            with open(self._events_path, "a", encoding="utf-8") as handle:
                handle.write(json.dumps(event.to_document(), ensure_ascii=False) + "\n")

    def _commit(self, action: str, item_doc: dict, mutate: Callable[[Corpus], None]) -> Event:
        """Apply, log, persist, then broadcast; the event is visible to a
        subscriber only after list_items would show its effect. Pushing while
        still holding the lock keeps one total order across subscribers."""
        with self._lock:
            mutate(self._corpus)
            event = self._make_event(action, item_doc)
            self._events.append(event)
            self._persist_event(event)
            if self._data_path is not None:
                save_corpus(self._corpus, self._data_path)
            for sub in self._subscribers:
                sub.push(event)
        return event

    # -- writes ------------------------------------------------------------

    def create_item(self, document: dict) -> Event:
        with self._lock:
            doc = dict(document)
            if not doc.get("id"):
                candidate = mint_id()
                while candidate in self._corpus:
                    candidate = mint_id()
                doc["id"] = candidate
            item, _ = document_to_item(doc)
            return self._commit("created", item_to_document(item), lambda c: c.add(item))

    def update_item(self, item_id: str, document: dict) -> Event:
        with self._lock:
            existing = self._corpus.get(item_id)
            if existing is None:
                raise UnknownItemError(item_id)
            doc = dict(document)
            doc.setdefault("id", item_id)
            if doc["id"] != item_id:
                raise ValidationFailed([FieldError("id", "IdMismatch")])
            doc.setdefault("kind", existing.kind.value)
            item, _ = document_to_item(doc)
            if item.kind != existing.kind:
                raise ValidationFailed([FieldError("kind", "KindImmutable")])
            return self._commit("updated", item_to_document(item), lambda c: c.replace(item))

    def delete_item(self, item_id: str) -> Event:
        with self._lock:
            if item_id not in self._corpus:
                raise UnknownItemError(item_id)
            return self._commit("deleted", {"id": item_id}, lambda c: c.remove(item_id))

    def categorize(self, item_id: str, category_token: str | None) -> Event:
        with self._lock:
            category: Category | None = None
            if category_token is not None:
                try:
                    category = Category.parse(category_token)
                except ValueError:
                    raise ValidationFailed(
                        [FieldError("category", f"UnknownCategory: {category_token!r}")]
                    ) from None

            def mutate(corpus: Corpus) -> None:
                assign_category(corpus, item_id, category)

            # run the checks before committing so failures emit no event
            probe = self._corpus.snapshot()
            mutate(probe)
            updated = probe.get(item_id)
            return self._commit("categorized", item_to_document(updated), mutate)

    # -- reads -------------------------------------------------------------

    def _snapshot(self) -> tuple[Corpus, int]:
        with self._lock:
            return self._corpus.snapshot(), len(self._events)

    def list_items(self, kind: DataKind | None = None) -> list[dict]:
        corpus, _ = self._snapshot()
        return [
            item_to_document(item) for item in corpus if kind is None or item.kind == kind
        ]

    def get_item(self, item_id: str) -> dict:
        corpus, _ = self._snapshot()
        item = corpus.get(item_id)
        if item is None:
            raise UnknownItemError(item_id)
        return item_to_document(item)

    def get_network(self) -> dict:
        corpus, seq = self._snapshot()
        return {"seq": seq, **network_document(build_network(corpus))}

    def get_stats(self) -> dict:
        corpus, seq = self._snapshot()
        return {"seq": seq, **analytics_document(corpus)}

    def get_report(self) -> dict:
        corpus, seq = self._snapshot()
        return {"seq": seq, **scenario_report(corpus).to_document()}

    def get_matches(self, request_id: str, top_k: int | None = None) -> list[dict]:
        corpus, _ = self._snapshot()
        request = corpus.get(request_id)
        if not isinstance(request, DataRequest):
            raise UnknownRequestError(request_id)
        return [r.to_document() for r in rank_candidates(request, corpus, top_k)]

    # -- events ------------------------------------------------------------

    def subscribe(self, since: int | None = None) -> Subscription:
        """Replay events since+1..current, then stream; None means live-only."""
        with self._lock:
            current = len(self._events)
            if since is None:
                since = current
            if since < 0 or since > current:
                raise ReplayGapError(since, current)
            subscription = Subscription(
                replayed=list(self._events[since:]), unsubscribe=self._drop_subscriber
            )
            self._subscribers.append(subscription)
            return subscription

    def _drop_subscriber(self, subscription: Subscription) -> None:
        with self._lock:
            if subscription in self._subscribers:
                self._subscribers.remove(subscription)

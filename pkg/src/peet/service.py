"""Timed post-editing collection service.

Sessions present batch items strictly in order, log client-measured elapsed
time per submission, and journal every event to an append-only JSONL file so
a crashed process can be restarted without losing data. Editor-to-variation
assignment planning lives here too.
"""

from __future__ import annotations

import json
import random
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from pydantic import BaseModel

from peet.corpus_io import TimeRecord, emit_time_annotations
from peet.errors import (
    IncompleteSession,
    MalformedLine,
    NegativeTime,
    OutOfOrder,
    SessionComplete,
    TooFewEditors,
    UnknownSession,
)

MAX_BATCH = 50


@dataclass(frozen=True)
class AnnotationItem:
    item_id: str
    source: str
    variation: str
    first_pass: str | None = None

    def __post_init__(self):
        if not self.source:
            raise ValueError("item source must be nonempty")


@dataclass
class Submission:
    correction: str
    elapsed_ms: int
    server_received_at: str


@dataclass
class Session:
    session_id: str
    editor: str
    items: tuple[AnnotationItem, ...]
    cursor: int = 0
    submissions: list[Submission] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.cursor >= len(self.items)


@dataclass(frozen=True)
class AssignmentPlan:
    entries: tuple[tuple[str, str, str], ...]  # (item_id, variation, editor)


def plan_assignments(item_ids, variations, editors, seed: int = 42) -> AssignmentPlan:
    """Assign one editor per (item, variation) with distinct editors within
    each item and balanced per-editor load; deterministic under the seed."""
    item_ids = list(item_ids)
    variations = list(variations)
    editors = list(editors)
    if len(editors) < len(variations):
        raise TooFewEditors(
            f"{len(editors)} editors cannot cover {len(variations)} variations"
        )
    order = list(editors)
    random.Random(seed).shuffle(order)
    position = {e: i for i, e in enumerate(order)}
    load = {e: 0 for e in editors}
    entries = []
    for item in item_ids:
        used: set[str] = set()
        for variation in variations:
            pick = min(
                (e for e in editors if e not in used),
                key=lambda e: (load[e], position[e]),
            )
            used.add(pick)
            load[pick] += 1
            entries.append((item, variation, pick))
    return AssignmentPlan(tuple(entries))


def load_batch(text: str) -> list[AnnotationItem]:
    """Parse a batch file: one JSON object per line with keys ``id``,
    ``src``, ``variation`` and optional ``first_pass``."""
    items = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedLine(f"line {lineno}: invalid JSON ({exc})") from exc
        for key in ("id", "src", "variation"):
            if key not in obj:
                raise MalformedLine(f"line {lineno}: missing key {key!r}")
        items.append(
            AnnotationItem(
                item_id=str(obj["id"]),
                source=str(obj["src"]),
                variation=str(obj["variation"]),
                first_pass=obj.get("first_pass"),
            )
        )
    if len(items) > MAX_BATCH:
        raise MalformedLine(f"batch has {len(items)} items; limit is {MAX_BATCH}")
    return items


class SessionStore:
    """In-memory session registry backed by per-session JSONL journals."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def _journal_path(self, session_id: str) -> Path:
        return self.root / f"{session_id}.jsonl"

    def _append(self, session_id: str, event: dict) -> None:
        with self._journal_path(session_id).open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(event, ensure_ascii=False) + "\n")

    def create_session(self, editor: str, items) -> Session:
        items = tuple(items)
        if len(items) > MAX_BATCH:
            raise MalformedLine(f"batch has {len(items)} items; limit is {MAX_BATCH}")
        session = Session(session_id=uuid.uuid4().hex, editor=editor, items=items)
        with self._registry_lock:
            self._sessions[session.session_id] = session
            self._locks[session.session_id] = threading.Lock()
        self._append(
            session.session_id,
            {
                "event": "created",
                "session_id": session.session_id,
                "editor": editor,
                "items": [
                    {
                        "id": it.item_id,
                        "src": it.source,
                        "variation": it.variation,
                        "first_pass": it.first_pass,
                    }
                    for it in items
                ],
            },
        )
        return session

    def get(self, session_id: str) -> Session:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise UnknownSession(f"no session {session_id!r}") from None

    def lock(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            try:
                return self._locks[session_id]
            except KeyError:
                raise UnknownSession(f"no session {session_id!r}") from None

    def next_item(self, session_id: str) -> dict:
        session = self.get(session_id)
        if session.complete:
            return {"done": True, "answered": session.cursor, "total": len(session.items)}
        item = session.items[session.cursor]
        payload = {
            "done": False,
            "item_index": session.cursor,
            "source": item.source,
            "answered": session.cursor,
            "total": len(session.items),
        }
        if item.first_pass is not None:
            payload["first_pass"] = item.first_pass
        return payload

    def record_submission(
        self, session_id: str, item_index: int, correction: str, elapsed_ms: int
    ) -> TimeRecord:
        """Store one submission and advance the cursor; items are answered
        strictly in order and the client-reported time is authoritative."""
        with self.lock(session_id):
            session = self.get(session_id)
            if elapsed_ms < 0:
                raise NegativeTime(f"elapsed_ms must be >= 0, got {elapsed_ms}")
            if session.complete:
                raise SessionComplete("all items already answered")
            if item_index != session.cursor:
                raise OutOfOrder(
                    f"expected item {session.cursor}, got {item_index}"
                )
            item = session.items[item_index]
            received = datetime.now(timezone.utc).isoformat()
            session.submissions.append(Submission(correction, elapsed_ms, received))
            session.cursor += 1
            self._append(
                session_id,
                {
                    "event": "submission",
                    "item_index": item_index,
                    "correction": correction,
                    "elapsed_ms": elapsed_ms,
                    "server_received_at": received,
                },
            )
            return TimeRecord(
                id=item.item_id,
                variation=item.variation,
                editor=session.editor,
                source=item.source,
                correction=correction,
                seconds=elapsed_ms / 1000.0,
            )

    def export_session(self, session_id: str, partial: bool = False) -> str:
        session = self.get(session_id)
        if not session.complete and not partial:
            raise IncompleteSession(
                f"{session.cursor}/{len(session.items)} items answered"
            )
        records = [
            TimeRecord(
                id=item.item_id,
                variation=item.variation,
                editor=session.editor,
                source=item.source,
                correction=sub.correction,
                seconds=sub.elapsed_ms / 1000.0,
            )
            for item, sub in zip(session.items, session.submissions)
        ]
        return emit_time_annotations(records)

    def restore(self) -> int:
        """Rebuild in-memory sessions from journal files; returns the number
        restored. Already-loaded sessions are left untouched."""
        count = 0
        for path in sorted(self.root.glob("*.jsonl")):
            session_id = path.stem
            if session_id in self._sessions:
                continue
            session = None
            for line in path.read_text(encoding="utf-8").splitlines():
                if not line.strip():
                    continue
                event = json.loads(line)
                if event["event"] == "created":
                    session = Session(
                        session_id=event["session_id"],
                        editor=event["editor"],
                        items=tuple(
                            AnnotationItem(
                                item_id=i["id"],
                                source=i["src"],
                                variation=i["variation"],
                                first_pass=i.get("first_pass"),
                            )
                            for i in event["items"]
                        ),
                    )
                elif event["event"] == "submission" and session is not None:
                    session.submissions.append(
                        Submission(
                            event["correction"],
                            event["elapsed_ms"],
                            event["server_received_at"],
                        )
                    )
                    session.cursor += 1
            if session is not None:
                with self._registry_lock:
                    self._sessions[session.session_id] = session
                    self._locks[session.session_id] = threading.Lock()
                count += 1
        return count


class CreateSessionBody(BaseModel):
    editor: str
    batch_file: str


class SubmitBody(BaseModel):
    item_index: int
    correction: str
    elapsed_ms: int


def create_app(store: SessionStore):
    """FastAPI wiring over a session store; bodies and errors are JSON."""
    from fastapi import FastAPI, Request
    from fastapi.responses import JSONResponse, PlainTextResponse

    from peet.errors import DataError

    app = FastAPI(title="peet annotation service")

    status_codes = {
        UnknownSession: 404,
        OutOfOrder: 409,
        SessionComplete: 409,
        IncompleteSession: 409,
        NegativeTime: 400,
        MalformedLine: 400,
    }

    @app.exception_handler(DataError)
    async def data_error_handler(request: Request, exc: DataError):
        return JSONResponse(
            status_code=status_codes.get(type(exc), 400),
            content={"error": type(exc).__name__, "message": str(exc)},
        )

    @app.get("/health")
    def health():
        return {"ok": True}

    @app.post("/sessions")
    def create_session(body: CreateSessionBody):
        path = Path(body.batch_file)
        if not path.is_file():
            return JSONResponse(
                status_code=400,
                content={
                    "error": "MalformedLine",
                    "message": f"batch file not found: {body.batch_file}",
                },
            )
        items = load_batch(path.read_text(encoding="utf-8"))
        session = store.create_session(body.editor, items)
        return {"session_id": session.session_id, "total": len(session.items)}

    @app.get("/sessions/{session_id}/next")
    def next_item(session_id: str):
        return store.next_item(session_id)

    @app.post("/sessions/{session_id}/submit")
    def submit(session_id: str, body: SubmitBody):
        store.record_submission(
            session_id, body.item_index, body.correction, body.elapsed_ms
        )
        return {"ok": True}

    @app.get("/sessions/{session_id}/export")
    def export(session_id: str, partial: bool = False):
        return PlainTextResponse(store.export_session(session_id, partial=partial))

    return app

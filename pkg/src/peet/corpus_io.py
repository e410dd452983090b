"""Parsing/serialization of external data formats and dataset filtering.

Formats: parallel text (one tokenized sentence per line), M2 edit files,
time-annotation JSONL and sidecar TSV annotations. All operations are pure
functions over strings and records; callers own file I/O.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field, replace

from peet import tagging
from peet.errors import (
    AnnotationMismatch,
    BadRatio,
    EmptyInput,
    LineCountMismatch,
    MalformedLine,
    SpanOutOfRange,
)
from peet.tokens import AnnotatedSentence, AnnotatedToken

# Canonical source-variation labels; any other string is a custom label.
VARIATION_SRC = "SRC"
VARIATION_GECTOR = "GECTOR"
VARIATION_GECPD = "GECPD"

NOOP_LABEL = "noop"


@dataclass(frozen=True)
class SentencePair:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class TimeRecord:
    id: str
    variation: str
    editor: str
    source: str
    correction: str
    seconds: float

    def __post_init__(self):
        if self.seconds < 0:
            raise ValueError("seconds must be nonnegative")


@dataclass(frozen=True)
class M2Edit:
    start: int
    end: int
    label: str
    correction: str
    required: str = "REQUIRED"
    none_field: str = "-NONE-"
    annotator: int = 0

    def key(self):
        """Identity used for scoring: span plus correction text."""
        return (self.start, self.end, self.correction.strip())


@dataclass
class M2Document:
    source_tokens: tuple[str, ...]
    annotations: dict[int, list[M2Edit]] = field(default_factory=dict)

    @property
    def source(self) -> str:
        return " ".join(self.source_tokens)


@dataclass(frozen=True)
class DatasetSplit:
    train: tuple[TimeRecord, ...]
    test: tuple[TimeRecord, ...]
    seed: int


def parse_parallel(src_text: str, trg_text: str) -> list[SentencePair]:
    src_lines = src_text.splitlines()
    trg_lines = trg_text.splitlines()
    if len(src_lines) != len(trg_lines):
        raise LineCountMismatch(
            f"source has {len(src_lines)} lines, target has {len(trg_lines)}"
        )
    if not src_lines:
        raise EmptyInput("no sentences")
    return [
        SentencePair(str(k + 1), s, t)
        for k, (s, t) in enumerate(zip(src_lines, trg_lines))
    ]


def parse_m2(text: str) -> list[M2Document]:
    docs: list[M2Document] = []
    doc: M2Document | None = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            doc = None
            continue
        if line.startswith("S ") or line == "S":
            doc = M2Document(tuple(line[2:].split()))
            docs.append(doc)
        elif line.startswith("A "):
            if doc is None:
                raise MalformedLine(f"line {lineno}: edit line before any sentence")
            _parse_edit_line(line, lineno, doc)
        else:
            raise MalformedLine(f"line {lineno}: expected 'S ' or 'A ' prefix")
    return docs


def _parse_edit_line(line: str, lineno: int, doc: M2Document) -> None:
    fields = line[2:].split("|||")
    if len(fields) != 6:
        raise MalformedLine(f"line {lineno}: expected 6 fields, got {len(fields)}")
    span, label, correction, required, none_field, annot = fields
    parts = span.split()
    if len(parts) != 2:
        raise MalformedLine(f"line {lineno}: bad span {span!r}")
    try:
        start, end = int(parts[0]), int(parts[1])
        annotator = int(annot)
    except ValueError as exc:
        raise MalformedLine(f"line {lineno}: {exc}") from exc
    if not label:
        raise MalformedLine(f"line {lineno}: empty label")
    if annotator < 0:
        raise MalformedLine(f"line {lineno}: negative annotator id")
    if label.strip() == NOOP_LABEL:
        doc.annotations.setdefault(annotator, [])
        return
    n = len(doc.source_tokens)
    if not (0 <= start <= end <= n):
        raise SpanOutOfRange(f"line {lineno}: span {start} {end} outside 0..{n}")
    doc.annotations.setdefault(annotator, []).append(
        M2Edit(start, end, label, correction, required, none_field, annotator)
    )


def emit_m2(doc: M2Document) -> str:
    lines = ["S " + " ".join(doc.source_tokens)]
    for annotator in sorted(doc.annotations):
        edits = doc.annotations[annotator]
        if not edits:
            lines.append(f"A -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||{annotator}")
        for e in edits:
            lines.append(
                f"A {e.start} {e.end}|||{e.label}|||{e.correction}"
                f"|||{e.required}|||{e.none_field}|||{e.annotator}"
            )
    return "\n".join(lines) + "\n"


def emit_m2_file(docs) -> str:
    return "\n".join(emit_m2(d) for d in docs)


_RECORD_KEYS = ("id", "variation", "editor", "src", "trg", "seconds")


def parse_time_annotations(text: str) -> list[TimeRecord]:
    records = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedLine(f"line {lineno}: invalid JSON ({exc})") from exc
        missing = [k for k in _RECORD_KEYS if k not in obj]
        if missing:
            raise MalformedLine(f"line {lineno}: missing keys {missing}")
        seconds = obj["seconds"]
        if not isinstance(seconds, (int, float)) or math.isnan(seconds) or seconds < 0:
            raise MalformedLine(f"line {lineno}: bad seconds value {seconds!r}")
        records.append(
            TimeRecord(
                id=str(obj["id"]),
                variation=str(obj["variation"]),
                editor=str(obj["editor"]),
                source=str(obj["src"]),
                correction=str(obj["trg"]),
                seconds=float(seconds),
            )
        )
    return records


def emit_time_annotations(records) -> str:
    lines = [
        json.dumps(
            {
                "id": r.id,
                "variation": r.variation,
                "editor": r.editor,
                "src": r.source,
                "trg": r.correction,
                "seconds": r.seconds,
            },
            ensure_ascii=False,
        )
        for r in records
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def filter_by_time(records, max_seconds: float = 250.0) -> list[TimeRecord]:
    """Drop records strictly slower than ``max_seconds`` (boundary kept)."""
    return [r for r in records if r.seconds <= max_seconds]


def merge_duplicates(records) -> list[TimeRecord]:
    """Collapse records with identical trimmed (source, correction) text.

    Merged records average the seconds and take editor "merged"; singleton
    groups pass through unchanged. First-occurrence order is preserved.
    """
    groups: dict[tuple[str, str], list[TimeRecord]] = {}
    order: list[tuple[str, str]] = []
    for r in records:
        key = (r.source.strip(), r.correction.strip())
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(r)
    merged = []
    for key in order:
        group = groups[key]
        if len(group) == 1:
            merged.append(group[0])
        else:
            mean_seconds = sum(g.seconds for g in group) / len(group)
            merged.append(replace(group[0], editor="merged", seconds=mean_seconds))
    return merged


def split_dataset(records, ratio: float = 0.8, seed: int = 42) -> DatasetSplit:
    if not (0.0 < ratio < 1.0):
        raise BadRatio(f"ratio must be in (0, 1), got {ratio}")
    records = list(records)
    rng = random.Random(seed)
    indices = list(range(len(records)))
    rng.shuffle(indices)
    n_train = int(ratio * len(records))
    train = tuple(records[i] for i in indices[:n_train])
    test = tuple(records[i] for i in indices[n_train:])
    return DatasetSplit(train=train, test=test, seed=seed)


def annotate(sentence: str, sidecar=None) -> AnnotatedSentence:
    """Tokenize a pre-tokenized sentence and attach lemma/POS annotations.

    ``sidecar`` rows, when given, supply (lemma, pos) verbatim; otherwise the
    embedded fallback tagger is used.
    """
    surfaces = sentence.split(" ") if sentence else []
    surfaces = [s for s in surfaces if s]
    if sidecar is not None:
        if len(sidecar) != len(surfaces):
            raise AnnotationMismatch(
                f"sidecar has {len(sidecar)} rows for {len(surfaces)} tokens"
            )
        tokens = tuple(
            AnnotatedToken(surface, row[1], row[2])
            for surface, row in zip(surfaces, sidecar)
        )
    else:
        tokens = tuple(
            AnnotatedToken(surface, *tag_pair)
            for surface, tag_pair in ((s, tagging.tag_token(s)) for s in surfaces)
        )
    return AnnotatedSentence(tokens)


def parse_sidecar(text: str) -> list[list[tuple[str, str, str]]]:
    """Parse TSV annotations: ``surface<TAB>lemma<TAB>POS`` rows, blank line
    between sentences."""
    sentences: list[list[tuple[str, str, str]]] = []
    current: list[tuple[str, str, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            if current:
                sentences.append(current)
                current = []
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise MalformedLine(f"line {lineno}: expected 3 TSV fields")
        current.append((parts[0], parts[1], parts[2]))
    if current:
        sentences.append(current)
    return sentences

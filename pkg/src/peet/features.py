"""Numeric feature vectors over extracted edits, plus z-score standardization.

Levels: COARSE4 (category counts), TYPE25 (24 type counts), FULL55 (the 54
attested category:type labels), EXTENDED (incorrect/ignored category counts
from a source/model-output/target triple) and EXTENDED_FULL (the same split
over all 54 labels). Every level appends the binary sentence-correct flag
and three length features.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum

import numpy as np

from peet.classify import EDIT_TYPES
from peet.errors import NameMismatch, TooFewRows
from peet.tokens import AnnotatedSentence

# Category:type labels attested in post-editing data. One-sided edits can
# never be typed as spelling/morphology/order, so only replacements carry
# those types; produced labels outside this set count under CAT:OTHER.
FULL55_LABELS = tuple(
    sorted(
        [f"R:{t}" for t in EDIT_TYPES]
        + [
            f"{cat}:{t}"
            for cat in ("M", "U")
            for t in (
                "ADJ",
                "ADV",
                "CONJ",
                "CONTR",
                "DET",
                "NOUN",
                "NOUN:POSS",
                "OTHER",
                "PART",
                "PREP",
                "PRON",
                "PUNCT",
                "VERB",
                "VERB:FORM",
                "VERB:TENSE",
            )
        ]
    )
)

LENGTH_FEATURES = ("words_in_trg", "words_in_src", "edited_words")
SENTENCE_CORRECT = "sentence_correct"


class FeatureLevel(str, Enum):
    COARSE4 = "4"
    TYPE25 = "25"
    FULL55 = "55"
    EXTENDED = "extended"
    EXTENDED_FULL = "extended-full"


def feature_names(level: FeatureLevel) -> tuple[str, ...]:
    if level == FeatureLevel.COARSE4:
        block = ("R", "M", "U")
    elif level == FeatureLevel.TYPE25:
        block = EDIT_TYPES
    elif level == FeatureLevel.FULL55:
        block = FULL55_LABELS
    elif level == FeatureLevel.EXTENDED:
        block = tuple(f"incorrect:{c}" for c in ("R", "M", "U")) + tuple(
            f"ignored:{c}" for c in ("R", "M", "U")
        )
    elif level == FeatureLevel.EXTENDED_FULL:
        block = tuple(f"incorrect:{l}" for l in FULL55_LABELS) + tuple(
            f"ignored:{l}" for l in FULL55_LABELS
        )
    else:
        raise ValueError(f"unknown level {level!r}")
    return block + (SENTENCE_CORRECT,) + LENGTH_FEATURES


@dataclass(frozen=True)
class FeatureVector:
    names: tuple[str, ...]
    values: tuple[float, ...]
    level: FeatureLevel

    def __post_init__(self):
        if len(self.names) != len(self.values):
            raise ValueError("names and values must have equal length")

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


def _full55_name(label: str, category: str) -> str:
    return label if label in FULL55_LABELS else f"{category}:OTHER"


def featurize(
    edits,
    src: AnnotatedSentence,
    trg: AnnotatedSentence,
    level: FeatureLevel,
    ignored_edits=None,
) -> FeatureVector:
    """Count edits at the requested granularity and append length features.

    For the EXTENDED levels ``edits`` holds the incorrect set (A - C) and
    ``ignored_edits`` the ignored set (C - A); other levels reject
    ``ignored_edits``.
    """
    extended = level in (FeatureLevel.EXTENDED, FeatureLevel.EXTENDED_FULL)
    if not extended and ignored_edits is not None:
        raise ValueError("ignored_edits is only meaningful for EXTENDED levels")
    ignored = list(ignored_edits) if ignored_edits else []
    edits = list(edits)

    names = feature_names(level)
    counts = dict.fromkeys(names, 0.0)

    def bump(name):
        counts[name] += 1.0

    if level == FeatureLevel.COARSE4:
        for e in edits:
            bump(e.category)
    elif level == FeatureLevel.TYPE25:
        for e in edits:
            bump(e.type)
    elif level == FeatureLevel.FULL55:
        for e in edits:
            bump(_full55_name(e.label, e.category))
    elif level == FeatureLevel.EXTENDED:
        for e in edits:
            bump(f"incorrect:{e.category}")
        for e in ignored:
            bump(f"ignored:{e.category}")
    else:
        for e in edits:
            bump(f"incorrect:{_full55_name(e.label, e.category)}")
        for e in ignored:
            bump(f"ignored:{_full55_name(e.label, e.category)}")

    all_edits = edits + ignored
    counts[SENTENCE_CORRECT] = 0.0 if all_edits else 1.0
    counts["words_in_trg"] = float(len(trg.tokens))
    counts["words_in_src"] = float(len(src.tokens))
    counts["edited_words"] = float(
        sum(
            max(
                e.span.src_span[1] - e.span.src_span[0],
                e.span.trg_span[1] - e.span.trg_span[0],
            )
            for e in all_edits
        )
    )
    return FeatureVector(names, tuple(counts[n] for n in names), level)


@dataclass(frozen=True)
class Standardizer:
    names: tuple[str, ...]
    means: tuple[float, ...]
    stds: tuple[float, ...]
    binary_mask: tuple[bool, ...]

    def mean_array(self) -> np.ndarray:
        return np.asarray(self.means, dtype=float)

    def std_array(self) -> np.ndarray:
        return np.asarray(self.stds, dtype=float)


def fit_standardizer(rows) -> Standardizer:
    """Column means and population stds; the binary sentence-correct column
    is masked and zero-variance columns get std 1."""
    rows = list(rows)
    if len(rows) < 2:
        raise TooFewRows(f"need at least 2 rows, got {len(rows)}")
    names = rows[0].names
    for r in rows[1:]:
        if r.names != names:
            raise NameMismatch("feature names differ across rows")
    X = np.array([r.values for r in rows], dtype=float)
    means = X.mean(axis=0)
    stds = X.std(axis=0)
    stds[stds == 0.0] = 1.0
    mask = np.array([n == SENTENCE_CORRECT for n in names])
    means[mask] = 0.0
    stds[mask] = 1.0
    return Standardizer(names, tuple(means), tuple(stds), tuple(bool(b) for b in mask))


def apply_standardizer(std: Standardizer, v: FeatureVector) -> np.ndarray:
    if v.names != std.names:
        raise NameMismatch("feature names do not match the fitted standardizer")
    return (v.as_array() - std.mean_array()) / std.std_array()


def standardize_matrix(std: Standardizer, rows) -> np.ndarray:
    return np.vstack([apply_standardizer(std, r) for r in rows])


def write_features_csv(rows, seconds) -> str:
    """Serialize feature rows plus the seconds target to CSV text."""
    rows = list(rows)
    seconds = list(seconds)
    if len(rows) != len(seconds):
        raise ValueError("rows and seconds must have equal length")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    names = rows[0].names if rows else ()
    writer.writerow(list(names) + ["seconds"])
    for r, s in zip(rows, seconds):
        if r.names != names:
            raise NameMismatch("feature names differ across rows")
        writer.writerow([_fmt(v) for v in r.values] + [_fmt(s)])
    return buf.getvalue()


def _fmt(v: float) -> str:
    return repr(int(v)) if float(v).is_integer() else repr(float(v))


def read_features_csv(text: str):
    """Parse a feature CSV back into (rows, seconds); level is inferred from
    the header."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise TooFewRows("empty CSV") from None
    if not header or header[-1] != "seconds":
        raise NameMismatch("last CSV column must be 'seconds'")
    names = tuple(header[:-1])
    level = infer_level(names)
    rows = []
    seconds = []
    for raw in reader:
        if not raw:
            continue
        values = [float(x) for x in raw]
        rows.append(FeatureVector(names, tuple(values[:-1]), level))
        seconds.append(values[-1])
    return rows, seconds


def infer_level(names) -> FeatureLevel:
    names = tuple(names)
    for level in FeatureLevel:
        if feature_names(level) == names:
            return level
    raise NameMismatch("header does not match any feature level")

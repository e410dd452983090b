"""Rank GEC systems by estimated post-editing time and correlate with
published human judgment scores.

Multi-reference aggregation defaults to the minimum predicted time per
sentence (a post-editor steers toward the nearest acceptable correction);
``agg="mean"`` is available for sensitivity checks.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from peet import gec_metrics
from peet.classify import extract_edits
from peet.corpus_io import annotate
from peet.errors import LengthMismatch, NameSetMismatch, NoReferences
from peet.features import featurize
from peet.model import PeetModel, predict


@dataclass(frozen=True)
class SystemScore:
    name: str
    mean_seconds: float
    n_sentences: int
    rank: int | None = None


@dataclass(frozen=True)
class HjrTable:
    entries: tuple[tuple[str, float], ...]

    def __post_init__(self):
        names = [n for n, _ in self.entries]
        if not names:
            raise ValueError("HJR table must be nonempty")
        if len(set(names)) != len(names):
            raise ValueError("HJR names must be unique")

    def as_dict(self) -> dict[str, float]:
        return dict(self.entries)


def _sentence_seconds(m: PeetModel, output: str, refs, cache: dict, agg: str) -> float:
    out_ann = cache.setdefault(output, annotate(output))
    preds = []
    for ref in refs:
        ref_ann = cache.setdefault(ref, annotate(ref))
        edits = extract_edits(out_ann, ref_ann)
        preds.append(predict(m, featurize(edits, out_ann, ref_ann, m.level)))
    return min(preds) if agg == "min" else sum(preds) / len(preds)


def peet_score_system(
    m: PeetModel, name: str, outputs, refs_per_sentence, agg: str = "min"
) -> SystemScore:
    """Mean predicted time to post-edit a system's outputs toward the nearest
    reference."""
    outputs = list(outputs)
    refs_per_sentence = [list(r) for r in refs_per_sentence]
    if len(outputs) != len(refs_per_sentence):
        raise LengthMismatch(
            f"{len(outputs)} outputs vs {len(refs_per_sentence)} reference rows"
        )
    if not outputs:
        raise LengthMismatch("no sentences to score")
    if any(not refs for refs in refs_per_sentence):
        raise NoReferences("every sentence needs at least one reference")
    cache: dict = {}
    total = 0.0
    for output, refs in zip(outputs, refs_per_sentence):
        total += _sentence_seconds(m, output, refs, cache, agg)
    return SystemScore(name=name, mean_seconds=total / len(outputs), n_sentences=len(outputs))


def wer_score_system(name: str, outputs, refs_per_sentence, agg: str = "min") -> SystemScore:
    """WER baseline with the same per-sentence reference aggregation."""
    outputs = list(outputs)
    refs_per_sentence = [list(r) for r in refs_per_sentence]
    if len(outputs) != len(refs_per_sentence):
        raise LengthMismatch(
            f"{len(outputs)} outputs vs {len(refs_per_sentence)} reference rows"
        )
    if not outputs:
        raise LengthMismatch("no sentences to score")
    if any(not refs for refs in refs_per_sentence):
        raise NoReferences("every sentence needs at least one reference")
    total = 0.0
    for output, refs in zip(outputs, refs_per_sentence):
        values = [gec_metrics.wer(output.split(), ref.split()) for ref in refs]
        total += min(values) if agg == "min" else sum(values) / len(values)
    return SystemScore(name=name, mean_seconds=total / len(outputs), n_sentences=len(outputs))


def rank_systems(scores) -> list[SystemScore]:
    """Ascending mean score -> rank 1..K; ties break alphabetically."""
    scores = list(scores)
    if not scores:
        raise LengthMismatch("no systems to rank")
    ordered = sorted(scores, key=lambda s: (s.mean_seconds, s.name))
    return [replace(s, rank=i + 1) for i, s in enumerate(ordered)]


def correlate_with_hjr(scores, hjr: HjrTable) -> dict[str, float]:
    """Spearman/Pearson between mean predicted seconds and human judgment
    scores, joined by system name. No sign flip: negative values mean lower
    predicted time tracks higher judged quality."""
    by_name = {s.name: s.mean_seconds for s in scores}
    hjr_map = hjr.as_dict()
    if set(by_name) != set(hjr_map):
        raise NameSetMismatch(
            f"system names {sorted(by_name)} != HJR names {sorted(hjr_map)}"
        )
    names = sorted(by_name)
    xs = [by_name[n] for n in names]
    ys = [hjr_map[n] for n in names]
    return {
        "spearman": gec_metrics.spearman(xs, ys),
        "pearson": gec_metrics.pearson(xs, ys),
    }

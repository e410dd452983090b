"""Span-based GEC scoring, the 1-vs-2 agreement protocol, WER and rank
correlations.

Edits match when source span and correction text are identical
(case-sensitive), following M2-scorer conventions. Reference selection is
greedy per sentence on sentence-level F0.5.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from peet.errors import (
    ConstantInput,
    EmptyReference,
    NoReferences,
    TooFewSets,
)
from peet.kernels import token_distance


@dataclass(frozen=True)
class MatchCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    def __add__(self, other: "MatchCounts") -> "MatchCounts":
        return MatchCounts(self.tp + other.tp, self.fp + other.fp, self.fn + other.fn)


@dataclass(frozen=True)
class PRF:
    precision: float
    recall: float
    f: float
    beta: float


def edit_identity(edit):
    """Matching key for an edit: (start, end, correction text).

    Accepts extracted edits, parsed M2 edits, or pre-built tuples.
    """
    key = getattr(edit, "score_key", None)
    if callable(key):
        return key()
    key = getattr(edit, "key", None)
    if callable(key):
        return key()
    return tuple(edit)


def match_edits(hyp, gold) -> MatchCounts:
    """Count true/false positives and false negatives between edit sets;
    each gold edit matches at most one hypothesis edit."""
    hyp = list(hyp)
    gold = list(gold)
    gold_keys: dict = {}
    for g in gold:
        k = edit_identity(g)
        gold_keys[k] = gold_keys.get(k, 0) + 1
    tp = 0
    for h in hyp:
        k = edit_identity(h)
        if gold_keys.get(k, 0) > 0:
            gold_keys[k] -= 1
            tp += 1
    return MatchCounts(tp=tp, fp=len(hyp) - tp, fn=len(gold) - tp)


def f_beta(counts: MatchCounts, beta: float = 0.5) -> PRF:
    p = counts.tp / (counts.tp + counts.fp) if counts.tp + counts.fp else 0.0
    r = counts.tp / (counts.tp + counts.fn) if counts.tp + counts.fn else 0.0
    b2 = beta * beta
    denom = b2 * p + r
    f = (1 + b2) * p * r / denom if denom else 0.0
    return PRF(precision=p, recall=r, f=f, beta=beta)


def multi_ref_score(hyp_per_sentence, refs_per_sentence, beta: float = 0.5) -> PRF:
    """Corpus PRF where each sentence counts against its best reference.

    Best = highest sentence-level F, ties broken by fewer false positives,
    fewer false negatives, then lowest reference index.
    """
    hyp_per_sentence = list(hyp_per_sentence)
    refs_per_sentence = list(refs_per_sentence)
    if len(hyp_per_sentence) != len(refs_per_sentence):
        raise NoReferences("hypothesis and reference sentence counts differ")
    total = MatchCounts()
    for hyp, refs in zip(hyp_per_sentence, refs_per_sentence):
        refs = list(refs)
        if not refs:
            raise NoReferences("a sentence has no references")
        best = None
        for idx, ref in enumerate(refs):
            counts = match_edits(hyp, ref)
            score = f_beta(counts, beta).f
            rank = (-score, counts.fp, counts.fn, idx)
            if best is None or rank < best[0]:
                best = (rank, counts)
        total = total + best[1]
    return f_beta(total, beta)


def iaa(sets, seed: int = 42, beta: float = 0.5):
    """Score each correction set against two of the others and average.

    ``sets`` holds K >= 3 per-sentence edit lists over the same sources.
    With K == 3 the two other sets are the references; with K > 3 two are
    drawn per hypothesis set with a seed-deterministic generator. Scores are
    returned as percentages.
    """
    sets = [list(s) for s in sets]
    if len(sets) < 3:
        raise TooFewSets(f"need at least 3 correction sets, got {len(sets)}")
    n_sentences = len(sets[0])
    for s in sets:
        if len(s) != n_sentences:
            raise TooFewSets("correction sets cover different sentence counts")
    scores = []
    for k, hyp in enumerate(sets):
        others = [i for i in range(len(sets)) if i != k]
        if len(others) == 2:
            chosen = others
        else:
            chosen = sorted(random.Random(f"{seed}:{k}").sample(others, 2))
        refs = [[sets[i][s] for i in chosen] for s in range(n_sentences)]
        scores.append(100.0 * multi_ref_score(hyp, refs, beta).f)
    return scores, sum(scores) / len(scores)


def wer(hyp_tokens, ref_tokens) -> float:
    """Token-level edit distance divided by reference length."""
    ref_tokens = list(ref_tokens)
    if not ref_tokens:
        raise EmptyReference("reference must be nonempty")
    return token_distance(list(hyp_tokens), ref_tokens) / len(ref_tokens)


def pearson(xs, ys) -> float:
    x = np.asarray(list(xs), dtype=float)
    y = np.asarray(list(ys), dtype=float)
    if x.shape != y.shape or x.size < 2:
        raise ConstantInput("need two sequences of equal length >= 2")
    xd = x - x.mean()
    yd = y - y.mean()
    denom = float(np.sqrt((xd @ xd) * (yd @ yd)))
    if denom == 0.0:
        raise ConstantInput("constant input has undefined correlation")
    return float((xd @ yd) / denom)


def average_ranks(xs) -> list[float]:
    """1-based ranks; tied values share the mean of their positions."""
    xs = list(xs)
    order = sorted(range(len(xs)), key=lambda i: xs[i])
    ranks = [0.0] * len(xs)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and xs[order[j + 1]] == xs[order[i]]:
            j += 1
        mean_rank = (i + j) / 2 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = mean_rank
        i = j + 1
    return ranks


def spearman(xs, ys) -> float:
    return pearson(average_ranks(xs), average_ranks(ys))

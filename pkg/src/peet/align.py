"""Minimum-cost token alignment and merging of non-match runs into spans.

Cost scheme: MATCH 0; INS/DEL 1; SUB = 0.5*[lemma differs] + 0.25*[POS
differs] + 0.25*(1 - char_similarity), floored at 0.1 for non-identical
surfaces; TRANSPOSE(k) for opposing width-k spans (2 <= k <= 4) that are
equal as lowercased-surface multisets, cost k - 0.5. Ties resolve by a fixed
operator preference (MATCH > SUB > DEL > INS > TRANSPOSE) and then by the
leftmost backtrace, so extraction is deterministic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from peet.kernels import char_distance
from peet.tokens import AnnotatedSentence, AnnotatedToken

MATCH = "MATCH"
SUB = "SUB"
INS = "INS"
DEL = "DEL"
TRANSPOSE = "TRANSPOSE"

MAX_TRANSPOSE = 4
SUB_FLOOR = 0.1

_PREFERENCE = {MATCH: 0, SUB: 1, DEL: 2, INS: 3, TRANSPOSE: 4}


@dataclass(frozen=True)
class AlignmentOp:
    kind: str
    src_span: tuple[int, int]
    trg_span: tuple[int, int]
    cost: float

    @property
    def k(self) -> int:
        return self.src_span[1] - self.src_span[0]


@dataclass(frozen=True)
class EditSpan:
    src_span: tuple[int, int]
    trg_span: tuple[int, int]
    src_tokens: tuple[AnnotatedToken, ...]
    trg_tokens: tuple[AnnotatedToken, ...]

    def src_text(self) -> str:
        return " ".join(t.surface for t in self.src_tokens)

    def trg_text(self) -> str:
        return " ".join(t.surface for t in self.trg_tokens)


@lru_cache(maxsize=65536)
def char_similarity(a: str, b: str) -> float:
    """Normalized character overlap: 1 - levenshtein / max length (1.0 when
    both strings are empty)."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - char_distance(a, b) / longest


def sub_cost(src: AnnotatedToken, trg: AnnotatedToken) -> float:
    cost = (
        0.5 * (src.lemma != trg.lemma)
        + 0.25 * (src.pos != trg.pos)
        + 0.25 * (1.0 - char_similarity(src.surface, trg.surface))
    )
    if src.surface != trg.surface and cost < SUB_FLOOR:
        return SUB_FLOOR
    return cost


def align(src: AnnotatedSentence, trg: AnnotatedSentence) -> list[AlignmentOp]:
    """Minimum-cost monotone alignment path covering both sentences.

    Fills a suffix-cost table, then walks forward picking the most-preferred
    op that still achieves the optimum, which yields the leftmost tie-broken
    path.
    """
    s, t = src.tokens, trg.tokens
    n, m = len(s), len(t)
    lower_s = [tok.surface.lower() for tok in s]
    lower_t = [tok.surface.lower() for tok in t]

    # cost[i][j]: minimal cost of aligning s[i:] with t[j:]
    cost = [[0.0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        cost[i][m] = float(n - i)
    for j in range(m + 1):
        cost[n][j] = float(m - j)

    def candidates(i: int, j: int):
        if i < n and j < m:
            if s[i].surface == t[j].surface:
                yield cost[i + 1][j + 1] + 0.0, MATCH, 1
            yield cost[i + 1][j + 1] + sub_cost(s[i], t[j]), SUB, 1
        if i < n:
            yield cost[i + 1][j] + 1.0, DEL, 1
        if j < m:
            yield cost[i][j + 1] + 1.0, INS, 1
        for k in range(2, min(MAX_TRANSPOSE, n - i, m - j) + 1):
            if Counter(lower_s[i : i + k]) == Counter(lower_t[j : j + k]):
                yield cost[i + k][j + k] + (k - 0.5), TRANSPOSE, k

    for i in range(n - 1, -1, -1):
        for j in range(m - 1, -1, -1):
            cost[i][j] = min(c for c, _, _ in candidates(i, j))

    ops: list[AlignmentOp] = []
    i = j = 0
    while i < n or j < m:
        value, kind, k = min(
            candidates(i, j), key=lambda c: (c[0] != cost[i][j], _PREFERENCE[c[1]], c[2])
        )
        if kind == MATCH or kind == SUB:
            step = 0.0 if kind == MATCH else sub_cost(s[i], t[j])
            ops.append(AlignmentOp(kind, (i, i + 1), (j, j + 1), step))
            i, j = i + 1, j + 1
        elif kind == DEL:
            ops.append(AlignmentOp(DEL, (i, i + 1), (j, j), 1.0))
            i += 1
        elif kind == INS:
            ops.append(AlignmentOp(INS, (i, i), (j, j + 1), 1.0))
            j += 1
        else:
            ops.append(AlignmentOp(TRANSPOSE, (i, i + k), (j, j + k), k - 0.5))
            i, j = i + k, j + k
    return ops


def total_cost(ops) -> float:
    return sum(op.cost for op in ops)


def merge_ops(
    ops, src: AnnotatedSentence, trg: AnnotatedSentence, merge_adjacent: bool = True
) -> list[EditSpan]:
    """Collapse the alignment path into edit spans.

    Maximal runs of non-MATCH ops merge into one span; TRANSPOSE ops always
    form their own span. With ``merge_adjacent=False`` every non-MATCH op
    becomes its own span ("all-split" mode).
    """
    spans: list[EditSpan] = []
    run: list[AlignmentOp] = []

    def flush():
        if run:
            spans.append(_span_from_run(run, src, trg))
            run.clear()

    for op in ops:
        if op.kind == MATCH:
            flush()
        elif op.kind == TRANSPOSE:
            flush()
            spans.append(_span_from_run([op], src, trg))
        elif merge_adjacent:
            run.append(op)
        else:
            spans.append(_span_from_run([op], src, trg))
    flush()
    return spans


def _span_from_run(run, src, trg) -> EditSpan:
    i = min(op.src_span[0] for op in run)
    j = max(op.src_span[1] for op in run)
    p = min(op.trg_span[0] for op in run)
    q = max(op.trg_span[1] for op in run)
    return EditSpan((i, j), (p, q), src.tokens[i:j], trg.tokens[p:q])

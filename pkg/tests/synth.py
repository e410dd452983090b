"""Synthetic sentence-pair corpus with planted, typed edits.

Sentences are built from filler words that are unique within a sentence and
disjoint from every edit template, and edit sites are separated by at least
two fillers, so minimum-cost alignment recovers exactly the planted edits.
The planted TYPE25 feature vector is therefore the ground truth for the
end-to-end regression check.
"""

from __future__ import annotations

import math
import random
from collections import Counter

from peet.corpus_io import TimeRecord
from peet.features import FeatureLevel, FeatureVector, feature_names

# (type, src tokens, trg tokens); token sets are pairwise disjoint across
# templates chosen for one sentence, enforced at sampling time.
TEMPLATES = [
    ("DET", ["the"], ["a"]),
    ("DET", ["this"], ["that"]),
    ("PREP", ["in"], ["on"]),
    ("PREP", ["of"], ["for"]),
    ("PRON", ["he"], ["she"]),
    ("PRON", ["they"], ["we"]),
    ("CONJ", ["and"], ["but"]),
    ("ADV", ["very"], ["really"]),
    ("ADV", ["often"], ["never"]),
    ("ADJ", ["big"], ["small"]),
    ("ADJ", ["old"], ["new"]),
    ("NOUN", ["cat"], ["dog"]),
    ("NOUN", ["house"], ["school"]),
    ("VERB", ["eat"], ["run"]),
    ("VERB", ["play"], ["work"]),
    ("NOUN:NUM", ["book"], ["books"]),
    ("NOUN:NUM", ["doors"], ["door"]),
    ("VERB:SVA", ["walk"], ["walks"]),
    ("VERB:SVA", ["goes"], ["go"]),
    ("VERB:TENSE", ["see"], ["saw"]),
    ("VERB:TENSE", ["ate"], ["eats"]),
    ("VERB:FORM", ["worry"], ["worrying"]),
    ("VERB:FORM", ["talking"], ["talked"]),
    ("PUNCT", [","], [";"]),
    ("PUNCT", ["!"], ["."]),
    ("SPELL", ["freind"], ["friend"]),
    ("SPELL", ["wrod"], ["word"]),
    ("ORTH", ["usa"], ["USA"]),
    ("ORTH", ["Monday"], ["monday"]),
    ("OTHER", ["time"], ["running"]),
    ("OTHER", ["quickly"], ["house"]),
    ("WO", ["it", "said"], ["said", "it"]),
    ("DET", [], ["an"]),  # planted as M
    ("PREP", [], ["at"]),
    ("PUNCT", [], ["?"]),
    ("ADV", [], ["also"]),
    ("DET", ["every"], []),  # planted as U
    ("PREP", ["with"], []),
    ("PUNCT", [":"], []),
    ("NOUN", ["water"], []),
]

FILLERS = """
market garden window teacher music coffee river bridge story picture moment
reason system project lesson answer mother father winter summer morning
evening student letter mountain valley island office kitchen bottle journal
account country history language message problem question
""".split()

PLANTED_WEIGHTS = {
    "DET": 3.0,
    "PREP": 4.0,
    "PRON": 1.0,
    "CONJ": 2.0,
    "ADV": 2.0,
    "ADJ": 1.0,
    "NOUN": 3.0,
    "VERB": 3.5,
    "NOUN:NUM": 2.5,
    "VERB:SVA": 1.0,
    "VERB:TENSE": 2.0,
    "VERB:FORM": 1.5,
    "PUNCT": 5.0,
    "SPELL": 2.0,
    "ORTH": 2.5,
    "OTHER": 9.0,
    "WO": 1.5,
    "sentence_correct": -3.0,
    "words_in_trg": 0.25,
    "words_in_src": 0.15,
    "edited_words": 1.0,
}
PLANTED_INTERCEPT = 35.0
TARGET_CEILING = 0.6


def _sample_templates(rng: random.Random, k: int):
    chosen = []
    used_tokens: set[str] = set()
    attempts = 0
    while len(chosen) < k and attempts < 60:
        attempts += 1
        cand = rng.choice(TEMPLATES)
        tokens = set(cand[1]) | set(cand[2])
        if tokens & used_tokens:
            continue
        used_tokens |= tokens
        chosen.append(cand)
    return chosen


def generate_pair(rng: random.Random):
    """One (src_tokens, trg_tokens, truth) triple.

    ``truth`` maps TYPE25 names to planted counts plus the length features.
    """
    k = rng.choices([0, 1, 2, 3], weights=[25, 35, 25, 15])[0]
    templates = _sample_templates(rng, k)
    fillers = rng.sample(FILLERS, 3 + 3 * max(1, len(templates)))
    src: list[str] = []
    trg: list[str] = []
    counts: Counter = Counter()
    edited_words = 0

    def pad(n):
        for _ in range(n):
            if fillers:
                w = fillers.pop()
                src.append(w)
                trg.append(w)

    pad(2)
    for ttype, s_frag, t_frag in templates:
        src.extend(s_frag)
        trg.extend(t_frag)
        counts[ttype] += 1
        edited_words += max(len(s_frag), len(t_frag))
        pad(2)
    pad(1)

    truth = {
        "counts": dict(counts),
        "sentence_correct": 0.0 if templates else 1.0,
        "words_in_trg": float(len(trg)),
        "words_in_src": float(len(src)),
        "edited_words": float(edited_words),
    }
    return src, trg, truth


def truth_feature_vector(truth) -> FeatureVector:
    names = feature_names(FeatureLevel.TYPE25)
    values = []
    for name in names:
        if name == "sentence_correct":
            values.append(truth["sentence_correct"])
        elif name in ("words_in_trg", "words_in_src", "edited_words"):
            values.append(truth[name])
        else:
            values.append(float(truth["counts"].get(name, 0)))
    return FeatureVector(names, tuple(values), FeatureLevel.TYPE25)


def planted_signal(truth) -> float:
    total = PLANTED_INTERCEPT
    for ttype, count in truth["counts"].items():
        total += PLANTED_WEIGHTS[ttype] * count
    total += PLANTED_WEIGHTS["sentence_correct"] * truth["sentence_correct"]
    total += PLANTED_WEIGHTS["words_in_trg"] * truth["words_in_trg"]
    total += PLANTED_WEIGHTS["words_in_src"] * truth["words_in_src"]
    total += PLANTED_WEIGHTS["edited_words"] * truth["edited_words"]
    return total


def generate_corpus(n: int, seed: int = 20_240_817):
    """Records with seconds = planted signal + Gaussian noise sized so the
    oracle correlation ceiling is about TARGET_CEILING."""
    rng = random.Random(seed)
    pairs = [generate_pair(rng) for _ in range(n)]
    signals = [planted_signal(truth) for _, _, truth in pairs]
    mean = sum(signals) / n
    std = math.sqrt(sum((s - mean) ** 2 for s in signals) / n)
    sigma = std * math.sqrt(1.0 / (TARGET_CEILING**2) - 1.0)
    records = []
    truths = []
    for i, ((src, trg, truth), signal) in enumerate(zip(pairs, signals)):
        seconds = max(0.01, signal + rng.gauss(0.0, sigma))
        records.append(
            TimeRecord(
                id=str(i + 1),
                variation="GECTOR",
                editor=f"e{i % 8}",
                source=" ".join(src),
                correction=" ".join(trg),
                seconds=seconds,
            )
        )
        truths.append({**truth, "signal": signal})
    return records, truths, sigma

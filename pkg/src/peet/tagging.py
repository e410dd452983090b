"""Deterministic fallback tagger and lemmatizer.

Lookup order: punctuation by character class, then the embedded lexicon,
then suffix rules (-s/-es resolved against the lexicon, -ed/-ing -> VERB,
-ly -> ADV, -er/-est -> ADJ), defaulting to NOUN. Lemmas come from the
lexicon where known and from longest-match suffix stripping otherwise.
Parity with an industrial tagger is out of scope; determinism is the
contract.
"""

from __future__ import annotations

import string

from peet import _lexicon as lex

_PUNCT_CHARS = set(string.punctuation) | set("…—–‘’“”´`")
_VOWELS = set("aeiou")


def _regular_plural(noun: str) -> str:
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in _VOWELS:
        return noun[:-1] + "ies"
    return noun + "s"


def _verb_3sg(verb: str) -> str:
    if verb.endswith(("s", "x", "z", "ch", "sh", "o")):
        return verb + "es"
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in _VOWELS:
        return verb[:-1] + "ies"
    return verb + "s"


def _regular_past(verb: str) -> str:
    if verb.endswith("e"):
        return verb + "d"
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in _VOWELS:
        return verb[:-1] + "ied"
    return verb + "ed"


def _regular_ing(verb: str) -> str:
    if verb.endswith("e") and not verb.endswith(("ee", "ye", "oe")):
        return verb[:-1] + "ing"
    return verb + "ing"


def _build_word_info() -> dict[str, tuple[str, str]]:
    info: dict[str, tuple[str, str]] = {}

    def put(word, lemma, pos):
        info.setdefault(word, (lemma, pos))

    # Closed classes first so they win over any generated form.
    for w in lex.DETERMINERS:
        put(w, w, "DET")
    for w in lex.PREPOSITIONS:
        put(w, w, "PREP")
    for w in lex.PRONOUNS:
        put(w, w, "PRON")
    for w in lex.CONJUNCTIONS:
        put(w, w, "CONJ")
    for w in lex.PARTICLES:
        put(w, w, "PART")
    for w in lex.CONTRACTION_TOKENS:
        put(w, w, "CONTR")
    for w in lex.MODALS:
        put(w, w, "VERB")
    for w in lex.ADVERBS:
        put(w, w, "ADV")

    for lemma, forms in lex.IRREGULAR_VERBS.items():
        put(lemma, lemma, "VERB")
        for form in forms:
            put(form, lemma, "VERB")
        put(_verb_3sg(lemma), lemma, "VERB")
        put(_regular_ing(lemma), lemma, "VERB")
    for lemma in lex.REGULAR_VERBS:
        put(lemma, lemma, "VERB")
        put(_verb_3sg(lemma), lemma, "VERB")
        put(_regular_past(lemma), lemma, "VERB")
        put(_regular_ing(lemma), lemma, "VERB")

    for lemma, plural in lex.IRREGULAR_NOUNS.items():
        put(lemma, lemma, "NOUN")
        put(plural, lemma, "NOUN")
    for lemma in lex.NOUNS:
        put(lemma, lemma, "NOUN")
        put(_regular_plural(lemma), lemma, "NOUN")

    for lemma, (comp, sup) in lex.IRREGULAR_ADJ_FORMS.items():
        put(lemma, lemma, "ADJ")
        put(comp, lemma, "ADJ")
        put(sup, lemma, "ADJ")
    for lemma in lex.ADJECTIVES:
        put(lemma, lemma, "ADJ")
    for lemma in lex.GRADABLE_ADJECTIVES:
        if lemma.endswith("e"):
            put(lemma + "r", lemma, "ADJ")
            put(lemma + "st", lemma, "ADJ")
        elif lemma.endswith("y") and lemma[-2] not in _VOWELS:
            put(lemma[:-1] + "ier", lemma, "ADJ")
            put(lemma[:-1] + "iest", lemma, "ADJ")
        else:
            put(lemma + "er", lemma, "ADJ")
            put(lemma + "est", lemma, "ADJ")

    for stem in lex.LY_ADVERB_STEMS:
        if stem.endswith("y") and stem[-2] not in _VOWELS:
            put(stem[:-1] + "ily", stem, "ADV")
        else:
            put(stem + "ly", stem, "ADV")

    return info


WORD_INFO = _build_word_info()


def is_punct(surface: str) -> bool:
    return bool(surface) and all(c in _PUNCT_CHARS for c in surface)


def is_known(surface: str) -> bool:
    """True when the lowercased surface form is in the embedded lexicon."""
    return surface.lower() in WORD_INFO


def _first_known(candidates, fallback):
    for cand in candidates:
        if cand and cand in WORD_INFO:
            return cand
    return fallback


def _dedouble(stem: str) -> str:
    if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in _VOWELS:
        return stem[:-1]
    return stem


def tag_token(surface: str) -> tuple[str, str]:
    """Return ``(lemma, pos)`` for one token."""
    if is_punct(surface):
        return surface, "PUNCT"
    low = surface.lower()
    if low in WORD_INFO:
        return WORD_INFO[low]
    if any(c.isdigit() for c in low):
        return low, "OTHER"

    if low.endswith("'s") and len(low) > 2:
        base = low[:-2]
        lemma, pos = tag_token(base)
        return (lemma if pos == "NOUN" else base), "NOUN"
    if low.endswith("s'") and len(low) > 2:
        lemma, pos = tag_token(low[:-1])
        return (lemma if pos == "NOUN" else low[:-2]), "NOUN"

    if low.endswith("ies") and len(low) > 4:
        stem = low[:-3] + "y"
        if stem in WORD_INFO and WORD_INFO[stem][1] == "VERB":
            return WORD_INFO[stem][0], "VERB"
        return stem, "NOUN"
    if low.endswith("ed") and len(low) > 3:
        stem = _first_known(
            [low[:-2], low[:-1], low[:-3] + "y", _dedouble(low[:-2])], low[:-2]
        )
        lemma = WORD_INFO.get(stem, (stem, "VERB"))[0]
        return lemma, "VERB"
    if low.endswith("ing") and len(low) > 4:
        stem = _first_known([low[:-3], low[:-3] + "e", _dedouble(low[:-3])], low[:-3])
        lemma = WORD_INFO.get(stem, (stem, "VERB"))[0]
        return lemma, "VERB"
    if low.endswith("ly") and len(low) > 3:
        stem = _first_known([low[:-2], low[:-3] + "y", low[:-2] + "e"], low[:-2])
        return stem, "ADV"
    if low.endswith("est") and len(low) > 4:
        stem = _first_known(
            [low[:-3], low[:-2], low[:-4] + "y", _dedouble(low[:-3])], low[:-3]
        )
        return stem, "ADJ"
    if low.endswith("er") and len(low) > 3:
        stem = _first_known(
            [low[:-2], low[:-1], low[:-3] + "y", _dedouble(low[:-2])], low[:-2]
        )
        return stem, "ADJ"

    if low.endswith("es") and len(low) > 3:
        stem = low[:-2]
        if stem in WORD_INFO:
            lemma, pos = WORD_INFO[stem]
            return lemma, ("VERB" if pos == "VERB" else "NOUN")
    if low.endswith("s") and len(low) > 2:
        stem = low[:-1]
        if stem in WORD_INFO:
            lemma, pos = WORD_INFO[stem]
            return lemma, ("VERB" if pos == "VERB" else "NOUN")
        return stem, "NOUN"

    return low, "NOUN"

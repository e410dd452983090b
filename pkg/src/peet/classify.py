"""Edit categorization (M/R/U) and typing via a fixed rule cascade.

The cascade is ordered and total: the first matching rule wins and OTHER is
the fallback, so every span maps to exactly one of the 24 types. Rules 5-9
(spelling/morphology) only apply to replacements with material on both
sides; one-sided edits are typed by punctuation class, contraction table or
shared POS.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from peet import tagging
from peet._lexicon import CONTRACTION_PAIRS, CONTRACTION_TOKENS
from peet.align import EditSpan, align, char_similarity, merge_ops
from peet.tokens import AnnotatedSentence

EDIT_TYPES = (
    "ADJ",
    "ADJ:FORM",
    "ADV",
    "CONJ",
    "CONTR",
    "DET",
    "MORPH",
    "NOUN",
    "NOUN:INFL",
    "NOUN:NUM",
    "NOUN:POSS",
    "ORTH",
    "OTHER",
    "PART",
    "PREP",
    "PRON",
    "PUNCT",
    "SPELL",
    "VERB",
    "VERB:FORM",
    "VERB:INFL",
    "VERB:SVA",
    "VERB:TENSE",
    "WO",
)

CATEGORIES = ("M", "R", "U")

_POS_TYPES = {
    "ADJ",
    "ADV",
    "CONJ",
    "DET",
    "NOUN",
    "PART",
    "PREP",
    "PRON",
    "PUNCT",
    "VERB",
}

_CONTRACTION_LOOKUP = {pair for pair in CONTRACTION_PAIRS} | {
    (b, a) for a, b in CONTRACTION_PAIRS
}


@dataclass(frozen=True)
class Edit:
    span: EditSpan
    category: str
    type: str

    @property
    def label(self) -> str:
        return f"{self.category}:{self.type}"

    def key(self):
        """Identity for set operations: span, replacement text, category."""
        return (self.span.src_span, self.span.trg_text(), self.category)

    def score_key(self):
        """Identity for metric matching: span plus replacement text."""
        return (*self.span.src_span, self.span.trg_text())


def categorize(span: EditSpan) -> str:
    if not span.src_tokens:
        return "M"
    if not span.trg_tokens:
        return "U"
    return "R"


def _possessive_marker(tokens) -> bool:
    for t in tokens:
        low = t.surface.lower()
        if low == "'s" or (len(low) > 2 and (low.endswith("'s") or low.endswith("s'"))):
            return True
    return False


def _is_plural_noun(tok) -> bool:
    return tok.surface.lower() != tok.lemma


def _verb_form_class(tok) -> str:
    low = tok.surface.lower()
    if low.endswith("ing"):
        return "ing"
    if low.endswith("ed"):
        return "ed"
    return "base" if low == tok.lemma else "other"


def _adj_grade(tok) -> str:
    low = tok.surface.lower()
    if low.endswith("est"):
        return "est"
    if low.endswith("er"):
        return "er"
    return "plain"


def classify_type(span: EditSpan) -> str:
    src, trg = span.src_tokens, span.trg_tokens
    sides = [side for side in (src, trg) if side]
    one_to_one = len(src) == 1 and len(trg) == 1

    # 1. punctuation only
    if all(tagging.is_punct(t.surface) for side in sides for t in side):
        return "PUNCT"

    src_joined = "".join(t.surface for t in src).lower()
    trg_joined = "".join(t.surface for t in trg).lower()

    # 2. same letters, different casing/spacing
    if src and trg and src_joined == trg_joined:
        return "ORTH"

    # 3. same words, different order
    if src and trg:
        src_bag = Counter(t.surface.lower() for t in src)
        trg_bag = Counter(t.surface.lower() for t in trg)
        if src_bag == trg_bag:
            return "WO"

    # 4. contraction <-> expansion, or a bare clitic inserted/removed
    if one_to_one:
        pair = (src[0].surface.lower(), trg[0].surface.lower())
        if pair in _CONTRACTION_LOOKUP:
            return "CONTR"
    if len(sides) == 1 and len(sides[0]) == 1:
        if sides[0][0].surface.lower() in CONTRACTION_TOKENS:
            return "CONTR"

    if src and trg:
        # 5. unknown word replaced by a similar known one
        if one_to_one:
            s_tok, t_tok = src[0], trg[0]
            if (
                not tagging.is_known(s_tok.surface)
                and tagging.is_known(t_tok.surface)
                and char_similarity(s_tok.surface, t_tok.surface) >= 0.5
            ):
                return "SPELL"
            # 6. same lemma, different word class
            if s_tok.lemma == t_tok.lemma and s_tok.pos != t_tok.pos:
                return "MORPH"

        # 7. noun morphology
        s_head, t_head = src[0], trg[0]
        if (
            s_head.pos == "NOUN"
            and t_head.pos == "NOUN"
            and s_head.lemma == t_head.lemma
        ):
            if _possessive_marker(src) != _possessive_marker(trg):
                return "NOUN:POSS"
            if one_to_one:
                if _is_plural_noun(s_head) != _is_plural_noun(t_head):
                    return "NOUN:NUM"
                if not tagging.is_known(s_head.surface):
                    return "NOUN:INFL"

        # 8. verb morphology
        if one_to_one:
            s_tok, t_tok = src[0], trg[0]
            if (
                s_tok.pos == "VERB"
                and t_tok.pos == "VERB"
                and s_tok.lemma == t_tok.lemma
            ):
                if not tagging.is_known(s_tok.surface):
                    return "VERB:INFL"
                if _is_sva_pair(s_tok, t_tok):
                    return "VERB:SVA"
                s_form, t_form = _verb_form_class(s_tok), _verb_form_class(t_tok)
                if s_form != t_form and ("ing" in (s_form, t_form) or "ed" in (s_form, t_form)):
                    return "VERB:FORM"
                return "VERB:TENSE"

            # 9. adjective gradation
            if (
                s_tok.pos == "ADJ"
                and t_tok.pos == "ADJ"
                and s_tok.lemma == t_tok.lemma
                and _adj_grade(s_tok) != _adj_grade(t_tok)
            ):
                return "ADJ:FORM"
        if _periphrastic_comparison(src, trg) or _periphrastic_comparison(trg, src):
            return "ADJ:FORM"

    # 10. uniform word class across the edit
    pos_set = {t.pos for side in sides for t in side}
    if len(pos_set) == 1 and next(iter(pos_set)) in _POS_TYPES:
        return next(iter(pos_set))

    # 11. fallback
    return "OTHER"


def _is_sva_pair(a, b) -> bool:
    lows = {a.surface.lower(), b.surface.lower()}
    lemma = a.lemma
    third = tagging._verb_3sg(lemma)
    return lows == {lemma, third}


def _periphrastic_comparison(plain_side, graded_side) -> bool:
    """[adj] vs [more|most, adj] with a shared lemma."""
    if len(plain_side) != 1 or len(graded_side) != 2:
        return False
    adverb, adj = graded_side
    return (
        adverb.surface.lower() in ("more", "most")
        and plain_side[0].pos == "ADJ"
        and adj.pos == "ADJ"
        and plain_side[0].lemma == adj.lemma
    )


def make_edit(span: EditSpan) -> Edit:
    return Edit(span, categorize(span), classify_type(span))


def extract_edits(
    src: AnnotatedSentence, trg: AnnotatedSentence, merge_adjacent: bool = True
) -> list[Edit]:
    """Full extraction: align, merge non-match runs, categorize and type."""
    ops = align(src, trg)
    spans = merge_ops(ops, src, trg, merge_adjacent=merge_adjacent)
    return [make_edit(span) for span in spans]


def edit_set_partition(a_edits, c_edits) -> tuple[list[Edit], list[Edit]]:
    """Split two edit sets over the same source into (incorrect, ignored).

    ``incorrect`` holds edits in A absent from C; ``ignored`` holds edits in
    C absent from A. Equality is by :meth:`Edit.key` with multiset semantics.
    """
    c_keys = Counter(e.key() for e in c_edits)
    incorrect = []
    for e in a_edits:
        if c_keys[e.key()] > 0:
            c_keys[e.key()] -= 1
        else:
            incorrect.append(e)
    a_keys = Counter(e.key() for e in a_edits)
    ignored = []
    for e in c_edits:
        if a_keys[e.key()] > 0:
            a_keys[e.key()] -= 1
        else:
            ignored.append(e)
    return incorrect, ignored

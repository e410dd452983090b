"""Annotated token and sentence containers used by alignment and classification."""

from __future__ import annotations

from dataclasses import dataclass, field

# Coarse universal-style tagset. CONTR marks clitic contraction tokens
# ('s, n't, ...); OTHER absorbs numbers, symbols and anything unclassified.
COARSE_POS = (
    "ADJ",
    "ADV",
    "CONJ",
    "CONTR",
    "DET",
    "NOUN",
    "OTHER",
    "PART",
    "PREP",
    "PRON",
    "PUNCT",
    "VERB",
)


@dataclass(frozen=True)
class AnnotatedToken:
    surface: str
    lemma: str
    pos: str

    def __post_init__(self):
        if not self.surface:
            raise ValueError("token surface must be nonempty")


@dataclass(frozen=True)
class AnnotatedSentence:
    tokens: tuple[AnnotatedToken, ...]
    raw: str = field(default="")

    def __post_init__(self):
        joined = " ".join(t.surface for t in self.tokens)
        if self.raw == "":
            object.__setattr__(self, "raw", joined)
        elif self.raw != joined:
            raise ValueError("raw text does not match joined token surfaces")

    def __len__(self) -> int:
        return len(self.tokens)

    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]

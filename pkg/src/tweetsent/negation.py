"""Negated-context detection and polarity flipping.

A negation word opens a context starting at the next token.  The
context closes before the first later token whose surface contains one
of ``, . : ; ! ?`` or at the end of the message, whichever comes first.
Contexts never nest: negation words inside an open context do not start
a new one.  Empty contexts (negation word directly followed by clause
punctuation or the message end) are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tokenizer import Token, TokenizedMessage
from .wordlists import default_negation_words, load_wordlist

NEG_SUFFIX = "_NEG"

_CLAUSE_PUNCTUATION = set(",.:;!?")


def load_negation_words(path) -> frozenset[str]:
    """Load a negation-word list file, one word per line."""
    return load_wordlist(path)


def _surfaces(tokens) -> list[str]:
    if isinstance(tokens, TokenizedMessage):
        return tokens.surfaces()
    return [t.surface if isinstance(t, Token) else t for t in tokens]


def _closes_context(surface: str) -> bool:
    return any(c in _CLAUSE_PUNCTUATION for c in surface)


@dataclass(frozen=True)
class NegationAnnotation:
    """Inclusive [start, end] token spans of negated contexts.

    ``count`` equals ``len(spans)``; each span starts at the token right
    after its negation word.
    """

    spans: tuple[tuple[int, int], ...]
    count: int

    def in_scope(self, index: int) -> bool:
        return any(start <= index <= end for start, end in self.spans)


EMPTY_ANNOTATION = NegationAnnotation(spans=(), count=0)


def mark_negation(
    tokens, negation_words: frozenset[str] | None = None
) -> NegationAnnotation:
    """Find negated-context spans over ``tokens``.

    ``tokens`` may be a TokenizedMessage or a plain list of surfaces.
    Matching is case-insensitive; ``negation_words`` defaults to the
    bundled list.
    """
    if negation_words is None:
        negation_words = default_negation_words()
    surfaces = _surfaces(tokens)
    spans: list[tuple[int, int]] = []
    open_start: int | None = None
    for i, surface in enumerate(surfaces):
        if open_start is not None and _closes_context(surface):
            if open_start < i:
                spans.append((open_start, i - 1))
            open_start = None
        if open_start is None and surface.lower() in negation_words:
            open_start = i + 1
    if open_start is not None and open_start < len(surfaces):
        spans.append((open_start, len(surfaces) - 1))
    return NegationAnnotation(spans=tuple(spans), count=len(spans))


def apply_negation_suffix(tokens, annotation: NegationAnnotation) -> list[str]:
    """Append ``_NEG`` to every surface inside a negated context."""
    surfaces = _surfaces(tokens)
    return [
        s + NEG_SUFFIX if annotation.in_scope(i) else s
        for i, s in enumerate(surfaces)
    ]


def flip_term_polarity(scores: list[float], position_of_negation: int) -> list[float]:
    """Multiply scores strictly after the negation position by -1.

    ``position_of_negation`` is the index of the negation word within
    the scored token list, or -1 when the negation word sits immediately
    before it (flipping everything).  Applying the flip twice restores
    the input.
    """
    return [
        -s if i > position_of_negation else s for i, s in enumerate(scores)
    ]


__all__ = [
    "NEG_SUFFIX",
    "NegationAnnotation",
    "EMPTY_ANNOTATION",
    "default_negation_words",
    "load_negation_words",
    "mark_negation",
    "apply_negation_suffix",
    "flip_term_polarity",
]

"""Sparse feature extraction for whole messages.

Feature names are namespaced ``group|detail``.  The groups:

  wng|...   word 1-4 grams over lowercased, negation-suffixed tokens,
            plus 3/4-grams with one interior token replaced by ``*``
  cng|...   character 3-5 grams inside tokens (urls/mentions skipped)
  caps|...  number of all-caps tokens
  pos|TAG   occurrences per part-of-speech tag (tagged input only)
  ht|...    number of hashtags
  lex|...   per-lexicon score statistics, see below
  pnc|...   punctuation runs and sentence-final punctuation
  emo|...   emoticon presence and final-token polarity
  elo|...   number of elongated words
  cls|ID    presence of each word cluster
  neg|...   number of negated contexts

Lexicon statistics are emitted per (lexicon, term namespace, scope,
affect): ``lex|<name>|<uni/bi/pair>[|<scope>]|<stat>|<affect>``.  The
scope segment is omitted for the all-tokens scope and is ``pos:TAG``,
``hashtag`` or ``caps`` otherwise.  The four stats are ``cnt`` (tokens
scoring above zero), ``sum``, ``max`` and ``last`` (score of the last
token scoring above zero).  Units inside a negated context feed a
separate block whose affect segment carries a ``_NEG`` suffix; the
lexicon is still consulted with the plain surface.

Ngram and count features are binary or raw counts; zero-valued entries
are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .corpus_io import ClusterMap, Lexicon
from .negation import EMPTY_ANNOTATION, NegationAnnotation, apply_negation_suffix
from .tokenizer import TokenizedMessage, emoticon_polarity


@dataclass
class FeatureVector:
    """Sparse name -> value map; zero values are dropped on insert."""

    entries: dict[str, float] = field(default_factory=dict)

    def set(self, name: str, value: float) -> None:
        if value != 0:
            self.entries[name] = float(value)

    def get(self, name: str) -> float:
        return self.entries.get(name, 0.0)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class FeatureDictionary:
    """Bijection between feature names and dense indices.

    Names are sorted, so the mapping is independent of extraction
    order.
    """

    names: tuple[str, ...]
    index: dict[str, int]

    @property
    def size(self) -> int:
        return len(self.names)


@dataclass(frozen=True)
class IndexedVector:
    """A FeatureVector resolved against a FeatureDictionary."""

    indices: np.ndarray
    values: np.ndarray


def format_feature_dump(vector: FeatureVector) -> str:
    """Render a vector as ``name<TAB>value`` lines sorted by name."""
    return "".join(
        f"{name}\t{vector.entries[name]:g}\n" for name in sorted(vector.entries)
    )


def build_feature_dictionary(vectors: Iterable[FeatureVector]) -> FeatureDictionary:
    """Build the name/index bijection from training vectors only."""
    names = set()
    for v in vectors:
        names.update(v.entries)
    ordered = tuple(sorted(names))
    return FeatureDictionary(names=ordered, index={n: i for i, n in enumerate(ordered)})


def vectorize(vector: FeatureVector, dictionary: FeatureDictionary) -> IndexedVector:
    """Resolve names to indices; names unknown to the dictionary drop."""
    pairs = sorted(
        (dictionary.index[name], value)
        for name, value in vector.entries.items()
        if name in dictionary.index
    )
    return IndexedVector(
        indices=np.array([i for i, _ in pairs], dtype=np.int64),
        values=np.array([v for _, v in pairs], dtype=np.float64),
    )


@dataclass(frozen=True)
class MessageFeatureConfig:
    """Toggles and sizes for message-level extraction."""

    word_ngrams: bool = True
    char_ngrams: bool = True
    all_caps: bool = True
    pos_counts: bool = True
    hashtag_count: bool = True
    lexicons: bool = True
    manual_lexicons: bool = True
    auto_lexicons: bool = True
    punctuation: bool = True
    emoticons: bool = True
    elongated: bool = True
    clusters: bool = True
    negation: bool = True
    ngram_max: int = 4
    wildcard_sizes: tuple[int, ...] = (3, 4)
    char_ngram_sizes: tuple[int, ...] = (3, 4, 5)

    @classmethod
    def unigrams_only(cls) -> "MessageFeatureConfig":
        """Bare unigram baseline: no other groups, no negation marking."""
        return cls(
            char_ngrams=False,
            all_caps=False,
            pos_counts=False,
            hashtag_count=False,
            lexicons=False,
            punctuation=False,
            emoticons=False,
            elongated=False,
            clusters=False,
            negation=False,
            ngram_max=1,
            wildcard_sizes=(),
        )

    def without_encodings(self) -> "MessageFeatureConfig":
        """Drop the surface-encoding groups as one unit."""
        return replace(
            self,
            all_caps=False,
            hashtag_count=False,
            punctuation=False,
            emoticons=False,
            elongated=False,
        )


DEFAULT_MESSAGE_CONFIG = MessageFeatureConfig()


# A scoring unit is a set of token positions plus the lookup text, e.g.
# positions (0, 2, 3) for the pair "a---b c".
Unit = tuple[tuple[int, ...], str]


def _unigram_units(surfaces: Sequence[str]) -> list[Unit]:
    return [((i,), s) for i, s in enumerate(surfaces)]


def _bigram_units(surfaces: Sequence[str]) -> list[Unit]:
    return [
        ((i, i + 1), f"{surfaces[i]} {surfaces[i + 1]}")
        for i in range(len(surfaces) - 1)
    ]


def _pair_units(surfaces: Sequence[str]) -> list[Unit]:
    parts: list[tuple[int, int, str]] = [
        (i, i, s) for i, s in enumerate(surfaces)
    ] + [
        (i, i + 1, f"{surfaces[i]} {surfaces[i + 1]}")
        for i in range(len(surfaces) - 1)
    ]
    units = []
    for a_start, a_end, a_text in parts:
        for b_start, b_end, b_text in parts:
            if b_start - a_end - 1 < 1:
                continue
            positions = tuple(range(a_start, a_end + 1)) + tuple(
                range(b_start, b_end + 1)
            )
            units.append((positions, f"{a_text}---{b_text}"))
    # Order by final position so "last" statistics follow message order.
    units.sort(key=lambda u: (u[0][-1], u[0]))
    return units


def _lexicon_lookup(lexicon: Lexicon, namespace: str, text: str, affect: str):
    score = lexicon.score(f"{namespace}:{text}", affect)
    if score is None and namespace == "uni":
        score = lexicon.score(text, affect)
    return score


def _emit_lexicon_block(
    fv: FeatureVector,
    prefix: str,
    affect: str,
    scores: list[float],
) -> None:
    if not scores:
        return
    count = sum(1 for s in scores if s > 0)
    total = sum(scores)
    top = max(scores)
    if count == 0:
        top = 0.0
    last = 0.0
    for s in scores:
        if s > 0:
            last = s
    fv.set(f"{prefix}|cnt|{affect}", count)
    fv.set(f"{prefix}|sum|{affect}", total)
    fv.set(f"{prefix}|max|{affect}", top)
    fv.set(f"{prefix}|last|{affect}", last)


def _scopes(message: TokenizedMessage) -> list[tuple[str, set[int]]]:
    n = len(message.tokens)
    scopes: list[tuple[str, set[int]]] = [("all", set(range(n)))]
    by_tag: dict[str, set[int]] = {}
    hashtags: set[int] = set()
    caps: set[int] = set()
    for i, t in enumerate(message.tokens):
        if t.pos_tag is not None:
            by_tag.setdefault(t.pos_tag, set()).add(i)
        if t.kind == "hashtag":
            hashtags.add(i)
        if t.all_caps:
            caps.add(i)
    for tag in sorted(by_tag):
        scopes.append((f"pos:{tag}", by_tag[tag]))
    if hashtags:
        scopes.append(("hashtag", hashtags))
    if caps:
        scopes.append(("caps", caps))
    return scopes


def _lexicon_features(
    fv: FeatureVector,
    message: TokenizedMessage,
    surfaces: Sequence[str],
    annotation: NegationAnnotation,
    lexicons: Sequence[Lexicon],
    config: MessageFeatureConfig,
) -> None:
    wanted = set()
    for lex in lexicons:
        wanted |= lex.namespaces()
    units_by_ns: dict[str, list[Unit]] = {}
    if "uni" in wanted:
        units_by_ns["uni"] = _unigram_units(surfaces)
    if "bi" in wanted:
        units_by_ns["bi"] = _bigram_units(surfaces)
    if "pair" in wanted:
        units_by_ns["pair"] = _pair_units(surfaces)

    scopes = _scopes(message)
    for lexicon in lexicons:
        for namespace in ("uni", "bi", "pair"):
            if namespace not in lexicon.namespaces():
                continue
            units = units_by_ns[namespace]
            for scope_name, members in scopes:
                in_scope = [
                    u for u in units if all(p in members for p in u[0])
                ]
                if not in_scope:
                    continue
                scope_part = "" if scope_name == "all" else f"|{scope_name}"
                prefix = f"lex|{lexicon.name}|{namespace}{scope_part}"
                for affect in lexicon.affects:
                    plain: list[float] = []
                    negated: list[float] = []
                    for positions, text in in_scope:
                        score = _lexicon_lookup(lexicon, namespace, text, affect)
                        if score is None:
                            continue
                        if annotation.spans and all(
                            annotation.in_scope(p) for p in positions
                        ):
                            negated.append(score)
                        else:
                            plain.append(score)
                    _emit_lexicon_block(fv, prefix, affect, plain)
                    _emit_lexicon_block(fv, prefix, f"{affect}_NEG", negated)


def _word_ngram_features(
    fv: FeatureVector, suffixed: Sequence[str], config: MessageFeatureConfig
) -> None:
    n_tokens = len(suffixed)
    for n in range(1, config.ngram_max + 1):
        for i in range(n_tokens - n + 1):
            window = suffixed[i : i + n]
            fv.set("wng|" + " ".join(window), 1)
            if n in config.wildcard_sizes:
                for hole in range(1, n - 1):
                    gapped = list(window)
                    gapped[hole] = "*"
                    fv.set("wng|" + " ".join(gapped), 1)


def _char_ngram_features(
    fv: FeatureVector,
    message: TokenizedMessage,
    suffixed: Sequence[str],
    config: MessageFeatureConfig,
) -> None:
    for token, surface in zip(message.tokens, suffixed):
        if token.kind in ("url", "mention"):
            continue
        for n in config.char_ngram_sizes:
            for i in range(len(surface) - n + 1):
                fv.set(f"cng|{surface[i : i + n]}", 1)


def _punctuation_features(fv: FeatureVector, message: TokenizedMessage) -> None:
    exclaim = question = mixed = 0
    for t in message.tokens:
        if t.kind != "punctuation":
            continue
        chars = set(t.surface)
        if chars == {"!"}:
            exclaim += 1
        elif chars == {"?"}:
            question += 1
        elif chars == {"!", "?"}:
            mixed += 1
    fv.set("pnc|exclaim|count", exclaim)
    fv.set("pnc|question|count", question)
    fv.set("pnc|mixed|count", mixed)
    if message.tokens:
        final = message.tokens[-1].surface
        if "!" in final or "?" in final:
            fv.set("pnc|last", 1)


def _emoticon_features(fv: FeatureVector, message: TokenizedMessage) -> None:
    for t in message.tokens:
        if t.kind == "emoticon":
            polarity = emoticon_polarity(t.surface)
            if polarity:
                fv.set(f"emo|{polarity}", 1)
    if message.tokens:
        final = message.tokens[-1]
        if final.kind == "emoticon":
            polarity = emoticon_polarity(final.surface)
            if polarity:
                fv.set(f"emo|last_{polarity}", 1)


def extract_message_features(
    msg: TokenizedMessage,
    neg: NegationAnnotation,
    lexicons: Sequence[Lexicon] = (),
    clusters: ClusterMap | None = None,
    config: MessageFeatureConfig = DEFAULT_MESSAGE_CONFIG,
) -> FeatureVector:
    """Extract the message-level feature vector.

    ``neg`` is the message's negated-context annotation; it is ignored
    when the config disables negation handling.
    """
    fv = FeatureVector()
    annotation = neg if config.negation else EMPTY_ANNOTATION
    surfaces = [t.surface.lower() for t in msg.tokens]
    suffixed = apply_negation_suffix(surfaces, annotation)

    if config.word_ngrams:
        _word_ngram_features(fv, suffixed, config)
    if config.char_ngrams:
        _char_ngram_features(fv, msg, suffixed, config)
    if config.all_caps:
        fv.set("caps|count", sum(1 for t in msg.tokens if t.all_caps))
    if config.pos_counts:
        tags: dict[str, int] = {}
        for t in msg.tokens:
            if t.pos_tag is not None:
                tags[t.pos_tag] = tags.get(t.pos_tag, 0) + 1
        for tag, count in tags.items():
            fv.set(f"pos|{tag}", count)
    if config.hashtag_count:
        fv.set("ht|count", sum(1 for t in msg.tokens if t.kind == "hashtag"))
    if config.lexicons:
        active = [
            lex
            for lex in lexicons
            if (config.manual_lexicons if lex.kind == "manual" else config.auto_lexicons)
        ]
        if active:
            _lexicon_features(fv, msg, surfaces, annotation, active, config)
    if config.punctuation:
        _punctuation_features(fv, msg)
    if config.emoticons:
        _emoticon_features(fv, msg)
    if config.elongated:
        fv.set(
            "elo|count",
            sum(
                1
                for t in msg.tokens
                if t.elongated and t.kind in ("word", "hashtag")
            ),
        )
    if config.clusters:
        for t in msg.tokens:
            cid = clusters.get(t.surface.lower()) if clusters is not None else t.cluster
            if cid is not None:
                fv.set(f"cls|{cid}", 1)
    if config.negation:
        fv.set("neg|count", annotation.count)
    return fv

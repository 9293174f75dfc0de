"""Readers and writers for the toolkit's on-disk formats.

All files are UTF-8 text with LF line endings.  Lines starting with ``#``
are comments and blank lines are skipped.  Columns are tab separated.

Message corpus::

    id<TAB>label<TAB>text

Pre-tagged message corpus (``format="tagged"``) adds a fourth column of
``surface/TAG`` pairs separated by single spaces::

    id<TAB>label<TAB>text<TAB>Good/A day/N !/,

Term corpus (``start`` and ``end`` are inclusive token indices into the
toolkit's own tokenization of the normalized text)::

    id<TAB>start<TAB>end<TAB>label<TAB>text

Sentiment lexicon::

    term<TAB>affect<TAB>score

Cluster map::

    token<TAB>cluster-id

Labels are exactly ``positive``, ``negative`` or ``neutral``.  Literal
tabs inside message text are escaped as ``\\t`` (and backslash as
``\\\\``); the loaders undo the escaping.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from pathlib import Path

# Fixed class order used for model weights, reports and tie-breaking.
CLASS_ORDER = ("negative", "neutral", "positive")

POSITIVE = "positive"
NEGATIVE = "negative"
NEUTRAL = "neutral"


class CorpusFormatError(ValueError):
    """Raised when an input file does not match its documented format."""


@dataclass(frozen=True)
class LabeledMessage:
    """One message with a gold polarity label.

    ``tagged`` holds (surface, pos-tag) pairs when the corpus was produced
    by an external tagger; ``None`` means the toolkit tokenizes ``text``
    itself.
    """

    id: str
    text: str
    label: str
    tagged: tuple[tuple[str, str], ...] | None = None


@dataclass(frozen=True)
class TermInstance:
    """A labeled token span inside a message.

    ``start`` and ``end`` are inclusive indices into the tokenization of
    the normalized message text.
    """

    id: str
    text: str
    label: str
    start: int
    end: int


@dataclass(frozen=True)
class Lexicon:
    """A sentiment lexicon mapping terms to per-affect real scores.

    ``entries`` maps term -> affect -> score.  ``kind`` distinguishes
    hand-built lexicons ("manual") from corpus-induced ones ("auto"),
    which ablation experiments toggle separately.
    """

    name: str
    affects: tuple[str, ...]
    entries: dict[str, dict[str, float]] = field(default_factory=dict)
    kind: str = "manual"

    def score(self, term: str, affect: str) -> float | None:
        """Score of ``term`` for ``affect``, or None when absent."""
        by_affect = self.entries.get(term)
        if by_affect is None:
            return None
        return by_affect.get(affect)

    def namespaces(self) -> frozenset[str]:
        """Term namespaces present: "uni", "bi", "pair".

        Unprefixed terms count as unigrams.  Cached after the first
        call, since entries are fixed after construction.
        """
        cached = getattr(self, "_namespace_cache", None)
        if cached is None:
            found = set()
            for term in self.entries:
                if term.startswith("bi:"):
                    found.add("bi")
                elif term.startswith("pair:"):
                    found.add("pair")
                else:
                    found.add("uni")
            cached = frozenset(found)
            object.__setattr__(self, "_namespace_cache", cached)
        return cached

    @classmethod
    def from_word_lists(
        cls,
        name: str,
        positive_words: list[str],
        negative_words: list[str],
    ) -> "Lexicon":
        """Build a polarity lexicon from plain word lists.

        Polarity-only resources carry no magnitudes, so positive words
        score +1.0 under ``positive`` and negative words -1.0 under
        ``negative``.
        """
        entries: dict[str, dict[str, float]] = {}
        for w in positive_words:
            entries.setdefault(w.lower(), {})[POSITIVE] = 1.0
        for w in negative_words:
            entries.setdefault(w.lower(), {})[NEGATIVE] = -1.0
        return cls(name=name, affects=(POSITIVE, NEGATIVE), entries=entries)


@dataclass(frozen=True)
class ClusterMap:
    """Token to word-cluster assignment with ids in [0, 999]."""

    entries: dict[str, int] = field(default_factory=dict)

    def get(self, token: str) -> int | None:
        return self.entries.get(token)


def _data_lines(path: Path) -> list[tuple[int, str]]:
    """Non-comment, non-blank lines of ``path`` as (line number, text)."""
    if not path.exists():
        raise FileNotFoundError(f"no such file: {path}")
    out = []
    with path.open("r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            out.append((lineno, line))
    return out


def _unescape_text(text: str) -> str:
    # Backslash escapes first, so "\\t" round-trips to a backslash and t.
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text):
            nxt = text[i + 1]
            if nxt == "t":
                out.append("\t")
                i += 2
                continue
            if nxt == "\\":
                out.append("\\")
                i += 2
                continue
        out.append(ch)
        i += 1
    return "".join(out)


def _check_label(label: str, lineno: int) -> str:
    if label not in CLASS_ORDER:
        raise CorpusFormatError(f"unknown label '{label}' at line {lineno}")
    return label


def _parse_tagged_column(column: str, lineno: int) -> tuple[tuple[str, str], ...]:
    pairs = []
    for chunk in column.split(" "):
        if not chunk:
            continue
        surface, sep, tag = chunk.rpartition("/")
        if not sep or not surface or not tag:
            raise CorpusFormatError(
                f"malformed surface/TAG pair '{chunk}' at line {lineno}"
            )
        pairs.append((surface, tag))
    if not pairs:
        raise CorpusFormatError(f"empty tagged-token column at line {lineno}")
    return tuple(pairs)


def load_message_corpus(path: str | Path, format: str = "plain") -> list[LabeledMessage]:
    """Load a message corpus.

    ``format`` is ``"plain"`` (three columns) or ``"tagged"`` (four
    columns, the last holding ``surface/TAG`` pairs).
    """
    if format not in ("plain", "tagged"):
        raise ValueError(f"unknown corpus format '{format}'")
    path = Path(path)
    messages = []
    want = 3 if format == "plain" else 4
    for lineno, line in _data_lines(path):
        parts = line.split("\t", want - 1)
        if len(parts) != want:
            raise CorpusFormatError(
                f"expected {want} tab-separated fields at line {lineno}, got {len(parts)}"
            )
        if format == "plain":
            msg_id, label, text = parts
            tagged = None
        else:
            msg_id, label, text, tagged_col = parts
            tagged = _parse_tagged_column(tagged_col, lineno)
        messages.append(
            LabeledMessage(
                id=msg_id,
                text=_unescape_text(text),
                label=_check_label(label, lineno),
                tagged=tagged,
            )
        )
    return messages


def load_raw_corpus(path: str | Path) -> list[tuple[str, str]]:
    """Load an unlabeled corpus of ``id<TAB>text`` lines.

    Used as input for lexicon induction, where labels come from hashtag
    or emoticon pseudo-labeling rather than annotation.
    """
    rows = []
    for lineno, line in _data_lines(Path(path)):
        parts = line.split("\t", 1)
        if len(parts) != 2:
            raise CorpusFormatError(
                f"expected 2 tab-separated fields at line {lineno}, got {len(parts)}"
            )
        rows.append((parts[0], _unescape_text(parts[1])))
    return rows


def load_term_corpus(path: str | Path) -> list[TermInstance]:
    """Load a term corpus and validate every span against the tokenizer."""
    from .tokenizer import normalize, tokenize

    instances = []
    for lineno, line in _data_lines(Path(path)):
        parts = line.split("\t", 4)
        if len(parts) != 5:
            raise CorpusFormatError(
                f"expected 5 tab-separated fields at line {lineno}, got {len(parts)}"
            )
        inst_id, start_s, end_s, label, text = parts
        try:
            start, end = int(start_s), int(end_s)
        except ValueError:
            raise CorpusFormatError(
                f"non-integer span bounds at line {lineno}: {start_s!r}, {end_s!r}"
            ) from None
        text = _unescape_text(text)
        n_tokens = len(tokenize(normalize(text)).tokens)
        if not (0 <= start <= end < n_tokens):
            raise CorpusFormatError(
                f"span [{start}, {end}] of instance '{inst_id}' out of range "
                f"for {n_tokens} tokens (line {lineno})"
            )
        instances.append(
            TermInstance(
                id=inst_id,
                text=text,
                label=_check_label(label, lineno),
                start=start,
                end=end,
            )
        )
    return instances


def load_lexicon(path: str | Path, name: str | None = None, kind: str = "manual") -> Lexicon:
    """Load a ``term<TAB>affect<TAB>score`` lexicon.

    Duplicate (term, affect) rows keep the last value and emit a warning.
    ``name`` defaults to the file stem.
    """
    path = Path(path)
    entries: dict[str, dict[str, float]] = {}
    affects: list[str] = []
    for lineno, line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) != 3:
            raise CorpusFormatError(
                f"expected 3 tab-separated fields at line {lineno}, got {len(parts)}"
            )
        term, affect, score_s = parts
        try:
            score = float(score_s)
        except ValueError:
            raise CorpusFormatError(
                f"non-numeric score {score_s!r} at line {lineno}"
            ) from None
        by_affect = entries.setdefault(term, {})
        if affect in by_affect:
            warnings.warn(
                f"duplicate lexicon entry ({term!r}, {affect!r}) at line {lineno}; "
                "keeping the last value",
                stacklevel=2,
            )
        by_affect[affect] = score
        if affect not in affects:
            affects.append(affect)
    return Lexicon(
        name=name if name is not None else path.stem,
        affects=tuple(affects),
        entries=entries,
        kind=kind,
    )


def write_lexicon(lexicon: Lexicon, path: str | Path) -> None:
    """Write a lexicon sorted by (term, affect) with 6-decimal scores.

    An empty lexicon produces a header-only file.  Scores round-trip
    through :func:`load_lexicon` to within 1e-6.
    """
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# lexicon: {lexicon.name}\n")
        fh.write(f"# affects: {' '.join(lexicon.affects)}\n")
        for term in sorted(lexicon.entries):
            for affect in sorted(lexicon.entries[term]):
                fh.write(f"{term}\t{affect}\t{lexicon.entries[term][affect]:.6f}\n")


def _escape_text(text: str) -> str:
    return text.replace("\\", "\\\\").replace("\t", "\\t")


def write_message_corpus(messages: list[LabeledMessage], path: str | Path) -> None:
    """Write a plain three-column message corpus."""
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        for m in messages:
            fh.write(f"{m.id}\t{m.label}\t{_escape_text(m.text)}\n")


def write_term_corpus(instances: list[TermInstance], path: str | Path) -> None:
    """Write a five-column term corpus."""
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        for t in instances:
            fh.write(
                f"{t.id}\t{t.start}\t{t.end}\t{t.label}\t{_escape_text(t.text)}\n"
            )


def write_raw_corpus(rows: list[tuple[str, str]], path: str | Path) -> None:
    """Write an unlabeled two-column corpus."""
    with Path(path).open("w", encoding="utf-8", newline="\n") as fh:
        for row_id, text in rows:
            fh.write(f"{row_id}\t{_escape_text(text)}\n")


def load_cluster_map(path: str | Path) -> ClusterMap:
    """Load a ``token<TAB>cluster-id`` map; ids must lie in [0, 999]."""
    entries: dict[str, int] = {}
    for lineno, line in _data_lines(Path(path)):
        parts = line.split("\t")
        if len(parts) != 2:
            raise CorpusFormatError(
                f"expected 2 tab-separated fields at line {lineno}, got {len(parts)}"
            )
        token, cluster_s = parts
        try:
            cluster = int(cluster_s)
        except ValueError:
            raise CorpusFormatError(
                f"non-integer cluster id {cluster_s!r} at line {lineno}"
            ) from None
        if not 0 <= cluster <= 999:
            raise CorpusFormatError(
                f"cluster id {cluster} out of range [0, 999] at line {lineno}"
            )
        entries[token] = cluster
    return ClusterMap(entries=entries)

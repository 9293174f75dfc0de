"""End-to-end plumbing: corpus -> features -> model -> report.

The CLI and the ablation harness both go through this module so that a
given corpus, configuration and seed always produce the same model and
the same report.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Sequence

from .corpus_io import ClusterMap, LabeledMessage, Lexicon, TermInstance
from .evaluation import EvalReport, macro_f_pos_neg
from .features_message import (
    DEFAULT_MESSAGE_CONFIG,
    FeatureVector,
    MessageFeatureConfig,
    build_feature_dictionary,
    extract_message_features,
    vectorize,
)
from .features_term import (
    DEFAULT_TERM_CONFIG,
    TermFeatureConfig,
    build_split_vocabulary,
    extract_term_features,
)
from .linear_model import LinearModel, predict, train
from .negation import NegationAnnotation, mark_negation
from .tokenizer import TokenizedMessage, normalize, tokenize, tokens_from_tagged
from .wordlists import default_negation_words, default_stopwords


@dataclass(frozen=True)
class PreparedMessage:
    """A message tokenized and negation-annotated once, reused across runs."""

    id: str
    label: str | None
    tokens: TokenizedMessage
    annotation: NegationAnnotation


def prepare_messages(
    messages: Sequence[LabeledMessage],
    negation_words: frozenset[str] | None = None,
) -> list[PreparedMessage]:
    """Tokenize and annotate a corpus; tagged tokens are kept as given."""
    if negation_words is None:
        negation_words = default_negation_words()
    prepared = []
    for msg in messages:
        if msg.tagged is not None:
            tokens = tokens_from_tagged(msg.tagged)
        else:
            tokens = tokenize(normalize(msg.text))
        prepared.append(
            PreparedMessage(
                id=msg.id,
                label=msg.label,
                tokens=tokens,
                annotation=mark_negation(tokens, negation_words),
            )
        )
    return prepared


def prepare_raw(
    rows: Sequence[tuple[str, str]],
    negation_words: frozenset[str] | None = None,
) -> list[PreparedMessage]:
    """Prepare unlabeled (id, text) rows for prediction."""
    return prepare_messages(
        [LabeledMessage(id=i, text=t, label="neutral") for i, t in rows],
        negation_words,
    )


def extract_message_vectors(
    prepared: Sequence[PreparedMessage],
    lexicons: Sequence[Lexicon] = (),
    clusters: ClusterMap | None = None,
    config: MessageFeatureConfig = DEFAULT_MESSAGE_CONFIG,
) -> list[FeatureVector]:
    return [
        extract_message_features(p.tokens, p.annotation, lexicons, clusters, config)
        for p in prepared
    ]


def extract_term_vectors(
    instances: Sequence[TermInstance],
    lexicons: Sequence[Lexicon] = (),
    negation_words: frozenset[str] | None = None,
    stopwords: frozenset[str] | None = None,
    split_words: frozenset[str] | None = None,
    config: TermFeatureConfig = DEFAULT_TERM_CONFIG,
) -> list[FeatureVector]:
    if negation_words is None:
        negation_words = default_negation_words()
    if stopwords is None:
        stopwords = default_stopwords()
    if split_words is None:
        split_words = build_split_vocabulary(lexicons)
    return [
        extract_term_features(
            inst, lexicons, negation_words, stopwords, split_words, config
        )
        for inst in instances
    ]


@dataclass
class ExperimentResult:
    report: EvalReport
    model: LinearModel


def _train_on(
    vectors: Sequence[FeatureVector],
    labels: Sequence[str],
    C: float,
    tol: float,
    max_epochs: int,
    seed: int,
) -> LinearModel:
    dictionary = build_feature_dictionary(vectors)
    indexed = [vectorize(v, dictionary) for v in vectors]
    return train(
        indexed, labels, dictionary, C=C, tol=tol, max_epochs=max_epochs, seed=seed
    )


def _evaluate_on(
    model: LinearModel,
    vectors: Sequence[FeatureVector],
    labels: Sequence[str],
) -> EvalReport:
    predicted = [predict(model, v) for v in vectors]
    return macro_f_pos_neg(labels, predicted)


def run_message_experiment(
    train_messages: Sequence[LabeledMessage],
    test_messages: Sequence[LabeledMessage],
    lexicons: Sequence[Lexicon] = (),
    clusters: ClusterMap | None = None,
    config: MessageFeatureConfig = DEFAULT_MESSAGE_CONFIG,
    negation_words: frozenset[str] | None = None,
    C: float = 0.005,
    tol: float = 0.1,
    max_epochs: int = 1000,
    seed: int = 42,
) -> ExperimentResult:
    """Train on one message corpus and score on another."""
    train_prep = prepare_messages(train_messages, negation_words)
    test_prep = prepare_messages(test_messages, negation_words)
    model = _train_on(
        extract_message_vectors(train_prep, lexicons, clusters, config),
        [p.label for p in train_prep],
        C, tol, max_epochs, seed,
    )
    report = _evaluate_on(
        model,
        extract_message_vectors(test_prep, lexicons, clusters, config),
        [p.label for p in test_prep],
    )
    return ExperimentResult(report=report, model=model)


def run_term_experiment(
    train_instances: Sequence[TermInstance],
    test_instances: Sequence[TermInstance],
    lexicons: Sequence[Lexicon] = (),
    config: TermFeatureConfig = DEFAULT_TERM_CONFIG,
    negation_words: frozenset[str] | None = None,
    stopwords: frozenset[str] | None = None,
    C: float = 0.005,
    tol: float = 0.1,
    max_epochs: int = 1000,
    seed: int = 42,
) -> ExperimentResult:
    """Train on one term corpus and score on another."""
    split_words = build_split_vocabulary(lexicons)
    model = _train_on(
        extract_term_vectors(
            train_instances, lexicons, negation_words, stopwords, split_words, config
        ),
        [inst.label for inst in train_instances],
        C, tol, max_epochs, seed,
    )
    report = _evaluate_on(
        model,
        extract_term_vectors(
            test_instances, lexicons, negation_words, stopwords, split_words, config
        ),
        [inst.label for inst in test_instances],
    )
    return ExperimentResult(report=report, model=model)


def _message_ablation_config(
    group: str, config: MessageFeatureConfig
) -> MessageFeatureConfig:
    if group == "lexicons":
        return replace(config, lexicons=False)
    if group == "manual-lex":
        return replace(config, manual_lexicons=False)
    if group == "auto-lex":
        return replace(config, auto_lexicons=False)
    if group == "ngrams":
        return replace(config, word_ngrams=False, char_ngrams=False)
    if group == "word-ngrams":
        return replace(config, word_ngrams=False)
    if group == "char-ngrams":
        return replace(config, char_ngrams=False)
    if group == "negation":
        return replace(config, negation=False)
    if group == "pos":
        return replace(config, pos_counts=False)
    if group == "clusters":
        return replace(config, clusters=False)
    if group == "encodings":
        return config.without_encodings()
    raise ValueError(f"unknown feature group '{group}'")


def _term_ablation_variant(
    group: str, config: TermFeatureConfig, lexicons: Sequence[Lexicon]
) -> tuple[TermFeatureConfig, Sequence[Lexicon]]:
    if group == "target":
        return replace(config, target=False), lexicons
    if group == "context":
        return replace(config, context=False), lexicons
    if group == "lexicons":
        return config, ()
    if group == "manual-lex":
        return config, [l for l in lexicons if l.kind != "manual"]
    if group == "auto-lex":
        return config, [l for l in lexicons if l.kind != "auto"]
    raise ValueError(f"unknown feature group '{group}'")


def ablation_runs(
    groups: Sequence[str],
    train_data,
    test_data,
    task: str = "message",
    lexicons: Sequence[Lexicon] = (),
    clusters: ClusterMap | None = None,
    C: float = 0.005,
    tol: float = 0.1,
    max_epochs: int = 1000,
    seed: int = 42,
) -> list[Callable[[], float]]:
    """Deferred runs for an ablation: all-features first, then per group.

    Each callable retrains from scratch and returns the test macro-F.
    Messages are tokenized and negation-annotated once up front.
    """
    if task == "message":
        train_prep = prepare_messages(train_data)
        test_prep = prepare_messages(test_data)
        train_labels = [p.label for p in train_prep]
        test_labels = [p.label for p in test_prep]

        def message_run(config: MessageFeatureConfig) -> Callable[[], float]:
            def run() -> float:
                model = _train_on(
                    extract_message_vectors(train_prep, lexicons, clusters, config),
                    train_labels, C, tol, max_epochs, seed,
                )
                report = _evaluate_on(
                    model,
                    extract_message_vectors(test_prep, lexicons, clusters, config),
                    test_labels,
                )
                return report.macro_f

            return run

        base = DEFAULT_MESSAGE_CONFIG
        return [message_run(base)] + [
            message_run(_message_ablation_config(g, base)) for g in groups
        ]

    split_words = build_split_vocabulary(lexicons)
    train_labels = [inst.label for inst in train_data]
    test_labels = [inst.label for inst in test_data]

    def term_run(
        config: TermFeatureConfig, active: Sequence[Lexicon]
    ) -> Callable[[], float]:
        def run() -> float:
            model = _train_on(
                extract_term_vectors(
                    train_data, active, None, None, split_words, config
                ),
                train_labels, C, tol, max_epochs, seed,
            )
            report = _evaluate_on(
                model,
                extract_term_vectors(
                    test_data, active, None, None, split_words, config
                ),
                test_labels,
            )
            return report.macro_f

        return run

    base = DEFAULT_TERM_CONFIG
    runs = [term_run(base, lexicons)]
    for g in groups:
        config, active = _term_ablation_variant(g, base, lexicons)
        runs.append(term_run(config, active))
    return runs

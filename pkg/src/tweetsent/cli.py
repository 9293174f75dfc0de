"""Command-line interface.

Subcommands: ``build-lexicon``, ``train``, ``predict``, ``evaluate``
and ``ablate``.  Exit codes: 0 on success, 1 on processing errors
(missing files, malformed input, impossible requests), 2 on usage
errors.  All randomness flows through ``--seed``; no environment
variables are consulted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corpus_io import (
    load_cluster_map,
    load_lexicon,
    load_message_corpus,
    load_raw_corpus,
    load_term_corpus,
    write_lexicon,
)
from .evaluation import (
    format_ablation_table,
    format_ablation_tsv,
    format_report,
    macro_f_pos_neg,
    report_kv,
    run_ablation,
)
from .features_message import format_feature_dump
from .lexicon_builder import build_lexicon, load_seed_set
from .linear_model import cross_validate, load_model, predict, save_model
from .pipeline import (
    extract_message_vectors,
    extract_term_vectors,
    prepare_messages,
    prepare_raw,
    run_message_experiment,
    run_term_experiment,
)


def _add_lexicon_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--lexicon",
        action="append",
        default=[],
        metavar="FILE",
        help="hand-built lexicon TSV; repeatable",
    )
    parser.add_argument(
        "--auto-lexicon",
        action="append",
        default=[],
        metavar="FILE",
        help="corpus-induced lexicon TSV; repeatable",
    )


def _load_lexicons(args) -> list:
    lexicons = [load_lexicon(p, kind="manual") for p in args.lexicon]
    lexicons += [load_lexicon(p, kind="auto") for p in args.auto_lexicon]
    return lexicons


def _add_task_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--task", choices=("message", "term"), default="message"
    )
    _add_lexicon_args(parser)
    parser.add_argument("--clusters", metavar="FILE", help="token cluster map TSV")
    parser.add_argument("--format", choices=("plain", "tagged"), default="plain")


def _add_train_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--C", type=float, default=0.005)
    parser.add_argument("--tol", type=float, default=0.1)
    parser.add_argument("--max-epochs", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=42)


def _load_task_data(args, path: str):
    if args.task == "message":
        return load_message_corpus(path, format=args.format)
    return load_term_corpus(path)


def _clusters(args):
    return load_cluster_map(args.clusters) if args.clusters else None


def cmd_build_lexicon(args) -> int:
    corpus = load_raw_corpus(args.input)
    seeds = load_seed_set(args.seeds) if args.seeds else None
    lexicon = build_lexicon(
        corpus,
        labeling=args.labeling,
        seeds=seeds,
        min_count=args.min_count,
        alpha=args.alpha,
        per_message=args.per_message,
        pair_window=args.pair_window,
        name=Path(args.out).stem,
    )
    write_lexicon(lexicon, args.out)
    print(f"wrote {len(lexicon.entries)} terms to {args.out}")
    return 0


def cmd_train(args) -> int:
    data = _load_task_data(args, args.input)
    lexicons = _load_lexicons(args)
    clusters = _clusters(args)
    if args.task == "message":
        prepared = prepare_messages(data)
        vectors = extract_message_vectors(prepared, lexicons, clusters)
        labels = [p.label for p in prepared]
    else:
        vectors = extract_term_vectors(data, lexicons)
        labels = [inst.label for inst in data]
    if args.cv:
        scores = cross_validate(
            vectors, labels, k=args.cv, seed=args.seed,
            C=args.C, tol=args.tol, max_epochs=args.max_epochs,
        )
        for i, s in enumerate(scores):
            print(f"fold {i}\t{s:.2f}")
        print(f"mean\t{sum(scores) / len(scores):.2f}")
    if args.model:
        from .features_message import build_feature_dictionary, vectorize
        from .linear_model import train

        dictionary = build_feature_dictionary(vectors)
        indexed = [vectorize(v, dictionary) for v in vectors]
        model = train(
            indexed, labels, dictionary, C=args.C, tol=args.tol,
            max_epochs=args.max_epochs, seed=args.seed,
        )
        save_model(model, args.model)
        print(f"wrote model ({dictionary.size} features) to {args.model}")
    elif not args.cv:
        raise ValueError("nothing to do: pass --model and/or --cv")
    return 0


def _test_vectors(args, data, lexicons, clusters):
    if args.task == "message":
        prepared = prepare_messages(data)
        vectors = extract_message_vectors(prepared, lexicons, clusters)
        ids = [p.id for p in prepared]
        labels = [p.label for p in prepared]
    else:
        vectors = extract_term_vectors(data, lexicons)
        ids = [inst.id for inst in data]
        labels = [inst.label for inst in data]
    return ids, labels, vectors


def cmd_predict(args) -> int:
    model = load_model(args.model)
    lexicons = _load_lexicons(args)
    clusters = _clusters(args)
    if args.task == "message" and args.raw:
        prepared = prepare_raw(load_raw_corpus(args.input))
        vectors = extract_message_vectors(prepared, lexicons, clusters)
        ids = [p.id for p in prepared]
    else:
        ids, _, vectors = _test_vectors(
            args, _load_task_data(args, args.input), lexicons, clusters
        )
    if args.dump_features:
        with Path(args.dump_features).open(
            "w", encoding="utf-8", newline="\n"
        ) as fh:
            for row_id, v in zip(ids, vectors):
                fh.write(f"# {row_id}\n")
                fh.write(format_feature_dump(v))
    for row_id, v in zip(ids, vectors):
        print(f"{row_id}\t{predict(model, v)}")
    return 0


def cmd_evaluate(args) -> int:
    model = load_model(args.model)
    lexicons = _load_lexicons(args)
    clusters = _clusters(args)
    data = _load_task_data(args, args.input)
    _, labels, vectors = _test_vectors(args, data, lexicons, clusters)
    predicted = [predict(model, v) for v in vectors]
    report = macro_f_pos_neg(labels, predicted)
    if args.kv:
        print(report_kv(report), end="")
    else:
        print(format_report(report), end="")
    return 0


def cmd_ablate(args) -> int:
    train_data = _load_task_data(args, args.input)
    test_data = _load_task_data(args, args.test)
    groups = [g for g in args.groups.split(",") if g]
    rows = run_ablation(
        groups,
        train_data,
        test_data,
        task=args.task,
        lexicons=_load_lexicons(args),
        clusters=_clusters(args),
        C=args.C,
        tol=args.tol,
        max_epochs=args.max_epochs,
        seed=args.seed,
        threads=args.threads,
    )
    if args.tsv:
        print(format_ablation_tsv(rows), end="")
    else:
        print(format_ablation_table(rows), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tweetsent",
        description="Sentiment analysis over short informal text",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-lexicon", help="induce a lexicon from raw text")
    p.add_argument("--input", required=True, help="id<TAB>text corpus")
    p.add_argument("--labeling", choices=("hashtag", "emoticon"), required=True)
    p.add_argument("--seeds", help="hashtag<TAB>polarity seed file")
    p.add_argument("--min-count", type=int, default=5)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--per-message", action="store_true")
    p.add_argument("--pair-window", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_build_lexicon)

    p = sub.add_parser("train", help="train a classifier")
    p.add_argument("--input", required=True)
    _add_task_args(p)
    _add_train_args(p)
    p.add_argument("--cv", type=int, default=0, metavar="K")
    p.add_argument("--model", help="output model file")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("predict", help="label a corpus with a trained model")
    p.add_argument("--input", required=True)
    p.add_argument("--model", required=True)
    _add_task_args(p)
    p.add_argument("--raw", action="store_true", help="input is id<TAB>text")
    p.add_argument("--dump-features", metavar="FILE")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("evaluate", help="score a model on a labeled corpus")
    p.add_argument("--input", required=True)
    p.add_argument("--model", required=True)
    _add_task_args(p)
    p.add_argument("--kv", action="store_true", help="key/value output")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("ablate", help="score feature-group removals")
    p.add_argument("--input", required=True, help="training corpus")
    p.add_argument("--test", required=True, help="evaluation corpus")
    p.add_argument("--groups", required=True, help="comma-separated group names")
    _add_task_args(p)
    _add_train_args(p)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--tsv", action="store_true", help="TSV output")
    p.set_defaults(func=cmd_ablate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

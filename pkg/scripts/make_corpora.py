"""Write the synthetic corpora to TSV files for CLI experiments.

Produces message train/test splits, term train/test splits, and an
unlabeled emoticon corpus for lexicon induction, plus the planted
lexicon covering the message corpus vocabulary.
"""

import argparse
from pathlib import Path

from tweetsent.corpus_io import (
    write_lexicon,
    write_message_corpus,
    write_raw_corpus,
    write_term_corpus,
)
from tweetsent.synthetic import (
    make_emoticon_corpus,
    make_message_corpus,
    make_term_corpus,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="corpora")
    parser.add_argument("--messages", type=int, default=1000)
    parser.add_argument("--terms", type=int, default=600)
    parser.add_argument("--raw", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    messages, lexicon = make_message_corpus(n=args.messages, seed=args.seed)
    split = int(len(messages) * 0.7)
    write_message_corpus(messages[:split], out / "message_train.tsv")
    write_message_corpus(messages[split:], out / "message_test.tsv")
    write_lexicon(lexicon, out / "planted_lexicon.tsv")

    instances, term_lexicon = make_term_corpus(n=args.terms, seed=args.seed)
    split = int(len(instances) * 0.7)
    write_term_corpus(instances[:split], out / "term_train.tsv")
    write_term_corpus(instances[split:], out / "term_test.tsv")
    write_lexicon(term_lexicon, out / "term_lexicon.tsv")

    rows, _, _ = make_emoticon_corpus(n=args.raw, seed=args.seed)
    write_raw_corpus(rows, out / "emoticon_raw.tsv")

    for path in sorted(out.iterdir()):
        print(path)


if __name__ == "__main__":
    main()

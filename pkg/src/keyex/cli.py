"""Command-line entry point: extract, train, eval, features, stats.

All outputs are plain text or delimited files; every source of randomness
is controlled by the --seed flag, so identical invocations produce
identical outputs.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .corpus import load_corpus
from .evaluation import (
    ALLOWED_CUTOFFS,
    corpus_stats,
    evaluate_corpus,
    paired_t_test,
)
from .extractor import ExtractorParams, extract, load_params, save_params
from .features import make_feature_vectors, write_features, FEATURE_COLUMNS
from .text_analysis import Lexicons, load_word_list
from .trainer import TrainerConfig, decode, train

__all__ = ["main"]


def _num_phrases_arg(text: str) -> int:
    value = int(text)
    if not 5 <= value <= 15:
        raise argparse.ArgumentTypeError("num-phrases must be in 5..15")
    return value


def _cutoffs_arg(text: str) -> tuple[int, ...]:
    try:
        cutoffs = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad cutoff list: {text!r}")
    bad = [c for c in cutoffs if c not in ALLOWED_CUTOFFS]
    if bad or not cutoffs:
        raise argparse.ArgumentTypeError(
            f"cutoffs must be drawn from {ALLOWED_CUTOFFS}"
        )
    return cutoffs


def _add_lexicon_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--stopwords", metavar="FILE", help="stop-word list")
    parser.add_argument("--verbs", metavar="FILE", help="common-verb list")
    parser.add_argument(
        "--adjective-suffixes", metavar="FILE", help="adjective ending list"
    )
    parser.add_argument("--stop-phrases", metavar="FILE", help="stop-phrase list")


def _build_lexicons(args: argparse.Namespace) -> Lexicons:
    lexicons = Lexicons.default()
    return lexicons.replace(
        stop_words=_maybe_list(args.stopwords),
        common_verbs=_maybe_list(args.verbs),
        adjective_endings=_maybe_list(args.adjective_suffixes),
        stop_phrases=_maybe_list(args.stop_phrases),
    )


def _maybe_list(path: str | None):
    return None if path is None else sorted(load_word_list(path))


def _load_params_or_defaults(path: str | None) -> ExtractorParams:
    if path is None:
        return ExtractorParams()
    if not Path(path).exists():
        print(
            f"params file {path} not found; using default parameter values",
            file=sys.stderr,
        )
        return ExtractorParams()
    return load_params(path)


def _cmd_extract(args: argparse.Namespace) -> int:
    lexicons = _build_lexicons(args)
    params = _load_params_or_defaults(args.params)
    if args.num_phrases is not None:
        params = params.with_num_phrases(args.num_phrases)
    status = 0
    for path in args.documents:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            print(f"error reading {path}: {exc}", file=sys.stderr)
            status = 1
            continue
        print(f"# {path}")
        for phrase in extract(text, params, lexicons):
            print(phrase.surface)
        print()
    return status


def _cmd_train(args: argparse.Namespace) -> int:
    lexicons = _build_lexicons(args)
    corpus = load_corpus(args.corpus)
    if not corpus:
        print(f"no documents found in {args.corpus}", file=sys.stderr)
        return 1
    config = TrainerConfig(
        population_size=args.pop,
        trials=args.trials,
        num_phrases=args.num_phrases,
        random_seed=args.seed,
    )
    result = train(corpus, config, lexicons)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "genome.txt").write_text(result.best_genome + "\n", encoding="utf-8")
    save_params(decode(result.best_genome, config.num_phrases), out / "params.txt")
    log_lines = [
        f"{record.trial}\t{record.child_fitness:.6f}\t{record.best_fitness:.6f}"
        for record in result.history
    ]
    (out / "training_log.txt").write_text(
        "\n".join(log_lines) + "\n", encoding="utf-8"
    )
    print(
        f"best fitness {result.best_report.fitness:.6f} "
        f"({result.best_report.total_matches} matches / "
        f"{result.best_report.total_machine_phrases} phrases); "
        f"outputs in {out}"
    )
    return 0


def _load_manifest(path: str) -> dict[int, ExtractorParams]:
    """Read 'cutoff = params-path' lines; paths resolve next to the manifest."""
    base = Path(path).parent
    table: dict[int, ExtractorParams] = {}
    for lineno, raw in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'cutoff = params-file'")
        cutoff_text, _, params_path = line.partition("=")
        cutoff = int(cutoff_text.strip())
        table[cutoff] = load_params(base / params_path.strip())
    return table


def _params_for_cutoffs(
    manifest: str | None, params: str | None, cutoffs: tuple[int, ...]
) -> dict[int, ExtractorParams]:
    if manifest is not None:
        return _load_manifest(manifest)
    shared = _load_params_or_defaults(params)
    return {cutoff: shared for cutoff in cutoffs}


def _cmd_eval(args: argparse.Namespace) -> int:
    lexicons = _build_lexicons(args)
    corpus = load_corpus(args.corpus)
    if not corpus:
        print(f"no documents found in {args.corpus}", file=sys.stderr)
        return 1
    cutoffs = args.cutoffs
    table = _params_for_cutoffs(args.manifest, args.params, cutoffs)
    report = evaluate_corpus(corpus, table, cutoffs, lexicons)

    baseline = None
    if args.baseline_manifest is not None or args.baseline_params is not None:
        baseline_table = _params_for_cutoffs(
            args.baseline_manifest, args.baseline_params, cutoffs
        )
        baseline = evaluate_corpus(corpus, baseline_table, cutoffs, lexicons)

    rows = []
    for cutoff in cutoffs:
        row = {
            "cutoff": cutoff,
            "num_docs": len(report.doc_ids),
            "mean_precision": report.means[cutoff],
            "std_precision": report.stds[cutoff],
        }
        if baseline is not None:
            diffs = [
                a - b
                for a, b in zip(
                    report.precisions[cutoff], baseline.precisions[cutoff]
                )
            ]
            outcome = paired_t_test(diffs)
            row.update(
                baseline_mean=baseline.means[cutoff],
                baseline_std=baseline.stds[cutoff],
                diff_mean=sum(diffs) / len(diffs),
                t_statistic=outcome.t_statistic,
                significant="YES" if outcome.significant else "NO",
            )
        rows.append(row)

    _print_eval_table(rows, baseline is not None)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            writer.writerows(rows)
    return 0


def _print_eval_table(rows: list[dict], compared: bool) -> None:
    header = f"{'Phrases':>7}  {'Docs':>5}  {'Precision (mean ± std)':<24}"
    if compared:
        header += f"  {'Baseline (mean ± std)':<24}  {'Diff':>8}  {'Significant':>11}"
    print(header)
    for row in rows:
        line = (
            f"{row['cutoff']:>7}  {row['num_docs']:>5}  "
            f"{row['mean_precision']:.3f} ± {row['std_precision']:.3f}{'':<10}"
        )
        if compared:
            line += (
                f"  {row['baseline_mean']:.3f} ± {row['baseline_std']:.3f}{'':<10}"
                f"  {row['diff_mean']:>+8.3f}  {row['significant']:>11}"
            )
        print(line)


def _cmd_features(args: argparse.Namespace) -> int:
    lexicons = _build_lexicons(args)
    corpus = load_corpus(args.corpus)
    vectors = []
    for entry in corpus:
        vectors.extend(make_feature_vectors(entry.body, entry.gold, lexicons))
    write_features(vectors, args.out)
    print(f"wrote {len(vectors)} vectors ({len(FEATURE_COLUMNS)} columns) to {args.out}")
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    corpus = load_corpus(args.corpus)
    if not corpus:
        rows = []
    else:
        stats = corpus_stats(corpus)
        rows = [
            (
                "Average Number of Keyphrases per Document +/- Standard Deviation",
                f"{stats.keyphrases_per_doc[0]:.1f} ± {stats.keyphrases_per_doc[1]:.1f}",
            ),
            (
                "Average Number of Words per Keyphrase +/- Standard Deviation",
                f"{stats.words_per_keyphrase[0]:.1f} ± {stats.words_per_keyphrase[1]:.1f}",
            ),
            (
                "Average Number of Words per Document +/- Standard Deviation",
                f"{stats.words_per_doc[0]:.0f} ± {stats.words_per_doc[1]:.0f}",
            ),
            (
                "Percentage of the Keyphrases that Appear in the Full Text",
                f"{stats.pct_keyphrases_in_text:.1f}%",
            ),
        ]
    width = max((len(name) for name, _ in rows), default=0)
    print(f"{'Description of Statistic':<{width}}  Value of Statistic")
    for name, value in rows:
        print(f"{name:<{width}}  {value}")
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["statistic", "value"])
            writer.writerows(rows)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="keyex", description="Keyphrase extraction toolkit"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p_extract = commands.add_parser(
        "extract", help="extract keyphrases from documents"
    )
    p_extract.add_argument("documents", nargs="+", metavar="DOC")
    p_extract.add_argument("--params", metavar="FILE")
    p_extract.add_argument(
        "--num-phrases", type=_num_phrases_arg, default=None
    )
    _add_lexicon_flags(p_extract)
    p_extract.set_defaults(handler=_cmd_extract)

    p_train = commands.add_parser(
        "train", help="tune extraction parameters on a corpus"
    )
    p_train.add_argument("--corpus", required=True, metavar="DIR")
    p_train.add_argument("--out", default="trained", metavar="DIR")
    p_train.add_argument(
        "--num-phrases", type=_num_phrases_arg, default=10
    )
    p_train.add_argument("--trials", type=int, default=1050)
    p_train.add_argument("--pop", type=int, default=50)
    p_train.add_argument("--seed", type=int, default=0)
    _add_lexicon_flags(p_train)
    p_train.set_defaults(handler=_cmd_train)

    p_eval = commands.add_parser(
        "eval", help="report average precision per cutoff"
    )
    p_eval.add_argument("--corpus", required=True, metavar="DIR")
    p_eval.add_argument("--manifest", metavar="FILE")
    p_eval.add_argument("--params", metavar="FILE")
    p_eval.add_argument("--baseline-manifest", metavar="FILE")
    p_eval.add_argument("--baseline-params", metavar="FILE")
    p_eval.add_argument(
        "--cutoffs", type=_cutoffs_arg, default=ALLOWED_CUTOFFS
    )
    p_eval.add_argument("--out", metavar="FILE")
    _add_lexicon_flags(p_eval)
    p_eval.set_defaults(handler=_cmd_eval)

    p_features = commands.add_parser(
        "features", help="export feature vectors for external learners"
    )
    p_features.add_argument("--corpus", required=True, metavar="DIR")
    p_features.add_argument("--out", required=True, metavar="FILE")
    _add_lexicon_flags(p_features)
    p_features.set_defaults(handler=_cmd_features)

    p_stats = commands.add_parser("stats", help="summarize a corpus")
    p_stats.add_argument("--corpus", required=True, metavar="DIR")
    p_stats.add_argument("--out", metavar="FILE")
    p_stats.set_defaults(handler=_cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

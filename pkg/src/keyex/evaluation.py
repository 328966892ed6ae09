"""Phrase matching, precision/recall metrics, and corpus-level reports.

Two phrases match when they map to the same sequence of iterated-Lovins
stems, so "neural networks" matches "neural network" but not "networks",
and word order matters. Corpus evaluation reports the per-document
precision against the *requested* number of phrases, averaged per cutoff,
with a paired t-test for comparing two parameter sets.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from typing import Mapping, Sequence

from .corpus import CorpusEntry
from .extractor import ExtractorParams, extract_from_tokens
from .text_analysis import (
    Lexicons,
    Token,
    iterated_lovins_stem,
    tokenize,
)

__all__ = [
    "ALLOWED_CUTOFFS",
    "ConfusionMatrix",
    "CorpusStats",
    "EvalReport",
    "TTestResult",
    "accuracy",
    "corpus_stats",
    "evaluate_corpus",
    "f_measure",
    "match_count",
    "paired_t_test",
    "precision_actual",
    "precision_desired",
    "recall",
    "stem_sequence",
]

ALLOWED_CUTOFFS = (5, 7, 9, 11, 13, 15)


def stem_sequence(phrase: str) -> tuple[str, ...]:
    """The phrase's words mapped through the iterated Lovins stemmer."""
    return tuple(
        iterated_lovins_stem(token.lowered)
        for token in tokenize(phrase)
        if isinstance(token, Token)
    )


def match_count(
    machine_phrases: Sequence[str], human_phrases: Sequence[str]
) -> int:
    """Number of human phrases with a stem-sequence-equal machine phrase.

    Each human phrase is matched at most once; human phrases that share a
    stem sequence collapse to one matchable unit.
    """
    machine = {stem_sequence(p) for p in machine_phrases}
    human = {stem_sequence(p) for p in human_phrases}
    return len(machine & human)


def precision_desired(matches: int, num_desired: int) -> float:
    """Matches over the requested number of phrases."""
    if num_desired < 1:
        raise ValueError("num_desired must be at least 1")
    return matches / num_desired


def precision_actual(matches: int, num_output: int) -> float:
    """Matches over the number of phrases actually produced."""
    if num_output < 1:
        raise ValueError("num_output must be at least 1")
    return matches / num_output


def recall(matches: int, num_human: int) -> float:
    if num_human < 1:
        raise ValueError("num_human must be at least 1")
    return matches / num_human


def f_measure(precision: float, recall_: float) -> float:
    """Harmonic mean of precision and recall; zero when both are zero."""
    if precision + recall_ == 0.0:
        return 0.0
    return 2.0 * precision * recall_ / (precision + recall_)


@dataclass(frozen=True)
class ConfusionMatrix:
    """Agreement counts: a = both keyphrase, d = both not, b/c disagree."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError("confusion matrix counts must be non-negative")


def accuracy(cm: ConfusionMatrix) -> float:
    total = cm.a + cm.b + cm.c + cm.d
    if total < 1:
        raise ValueError("confusion matrix is empty")
    return (cm.a + cm.d) / total


@dataclass(frozen=True)
class EvalReport:
    """Per-document precisions with mean and sample std per cutoff."""

    doc_ids: tuple[str, ...]
    cutoffs: tuple[int, ...]
    precisions: dict[int, tuple[float, ...]]
    means: dict[int, float]
    stds: dict[int, float]


def evaluate_corpus(
    corpus: Sequence[CorpusEntry],
    params_per_cutoff: Mapping[int, ExtractorParams],
    cutoffs: Sequence[int],
    lexicons: Lexicons,
) -> EvalReport:
    """Average per-document precision at each requested cutoff.

    Each cutoff uses its own parameters (re-sized to emit that many
    phrases) because the trainer tunes separately per output size.
    """
    if not corpus:
        raise ValueError("corpus must not be empty")
    for cutoff in cutoffs:
        if cutoff not in ALLOWED_CUTOFFS:
            raise ValueError(f"cutoff {cutoff} not one of {ALLOWED_CUTOFFS}")
        if cutoff not in params_per_cutoff:
            raise ValueError(f"no parameters supplied for cutoff {cutoff}")
    streams = [tokenize(entry.body, lexicons.stop_words) for entry in corpus]
    gold_sets = [
        {stem_sequence(gold) for gold in entry.gold} for entry in corpus
    ]
    precisions: dict[int, tuple[float, ...]] = {}
    means: dict[int, float] = {}
    stds: dict[int, float] = {}
    for cutoff in cutoffs:
        params = params_per_cutoff[cutoff].with_num_phrases(cutoff)
        values = []
        for stream, gold in zip(streams, gold_sets):
            phrases = extract_from_tokens(stream, params, lexicons)
            machine = {stem_sequence(p.surface) for p in phrases}
            values.append(len(machine & gold) / cutoff)
        precisions[cutoff] = tuple(values)
        means[cutoff] = statistics.fmean(values)
        stds[cutoff] = _sample_std(values)
    return EvalReport(
        doc_ids=tuple(entry.id for entry in corpus),
        cutoffs=tuple(cutoffs),
        precisions=precisions,
        means=means,
        stds=stds,
    )


def _sample_std(values: Sequence[float]) -> float:
    if len(values) < 2:
        return 0.0
    return statistics.stdev(values)


@dataclass(frozen=True)
class TTestResult:
    t_statistic: float
    significant: bool
    df: int


def paired_t_test(
    diffs: Sequence[float], confidence: float = 0.95
) -> TTestResult:
    """Two-sided paired t-test on per-document metric differences.

    Zero variance is degenerate: a zero mean is not significant, a
    non-zero mean is treated as significant by convention.
    """
    if confidence != 0.95:
        raise ValueError("only 95% confidence is supported")
    n = len(diffs)
    if n < 2:
        raise ValueError("need at least 2 paired observations")
    mean = statistics.fmean(diffs)
    sd = statistics.stdev(diffs)
    df = n - 1
    if sd == 0.0:
        if mean == 0.0:
            return TTestResult(0.0, False, df)
        return TTestResult(math.copysign(math.inf, mean), True, df)
    t = mean / (sd / math.sqrt(n))
    return TTestResult(t, abs(t) > _t_critical_95(df), df)


def _t_critical_95(df: int) -> float:
    if df < 1:
        raise ValueError("degrees of freedom must be at least 1")
    if df > len(_T_CRITICAL_95):
        return 1.96
    return _T_CRITICAL_95[df - 1]


# Two-sided 95% Student-t critical values for df 1..200.
_T_CRITICAL_95 = (
    12.7062, 4.3027, 3.1824, 2.7764, 2.5706, 2.4469, 2.3646, 2.3060,
    2.2622, 2.2281, 2.2010, 2.1788, 2.1604, 2.1448, 2.1314, 2.1199,
    2.1098, 2.1009, 2.0930, 2.0860, 2.0796, 2.0739, 2.0687, 2.0639,
    2.0595, 2.0555, 2.0518, 2.0484, 2.0452, 2.0423, 2.0395, 2.0369,
    2.0345, 2.0322, 2.0301, 2.0281, 2.0262, 2.0244, 2.0227, 2.0211,
    2.0195, 2.0181, 2.0167, 2.0154, 2.0141, 2.0129, 2.0117, 2.0106,
    2.0096, 2.0086, 2.0076, 2.0066, 2.0057, 2.0049, 2.0040, 2.0032,
    2.0025, 2.0017, 2.0010, 2.0003, 1.9996, 1.9990, 1.9983, 1.9977,
    1.9971, 1.9966, 1.9960, 1.9955, 1.9949, 1.9944, 1.9939, 1.9935,
    1.9930, 1.9925, 1.9921, 1.9917, 1.9913, 1.9908, 1.9905, 1.9901,
    1.9897, 1.9893, 1.9890, 1.9886, 1.9883, 1.9879, 1.9876, 1.9873,
    1.9870, 1.9867, 1.9864, 1.9861, 1.9858, 1.9855, 1.9853, 1.9850,
    1.9847, 1.9845, 1.9842, 1.9840, 1.9837, 1.9835, 1.9833, 1.9830,
    1.9828, 1.9826, 1.9824, 1.9822, 1.9820, 1.9818, 1.9816, 1.9814,
    1.9812, 1.9810, 1.9808, 1.9806, 1.9804, 1.9803, 1.9801, 1.9799,
    1.9798, 1.9796, 1.9794, 1.9793, 1.9791, 1.9790, 1.9788, 1.9787,
    1.9785, 1.9784, 1.9782, 1.9781, 1.9780, 1.9778, 1.9777, 1.9776,
    1.9774, 1.9773, 1.9772, 1.9771, 1.9769, 1.9768, 1.9767, 1.9766,
    1.9765, 1.9763, 1.9762, 1.9761, 1.9760, 1.9759, 1.9758, 1.9757,
    1.9756, 1.9755, 1.9754, 1.9753, 1.9752, 1.9751, 1.9750, 1.9749,
    1.9748, 1.9747, 1.9746, 1.9745, 1.9744, 1.9744, 1.9743, 1.9742,
    1.9741, 1.9740, 1.9739, 1.9739, 1.9738, 1.9737, 1.9736, 1.9735,
    1.9735, 1.9734, 1.9733, 1.9732, 1.9732, 1.9731, 1.9730, 1.9729,
    1.9729, 1.9728, 1.9727, 1.9727, 1.9726, 1.9725, 1.9725, 1.9724,
    1.9723, 1.9723, 1.9722, 1.9721, 1.9721, 1.9720, 1.9720, 1.9719,
)


@dataclass(frozen=True)
class CorpusStats:
    """Summary statistics in the shape of the per-corpus tables."""

    num_docs: int
    keyphrases_per_doc: tuple[float, float]
    words_per_keyphrase: tuple[float, float]
    words_per_doc: tuple[float, float]
    pct_keyphrases_in_text: float


def corpus_stats(corpus: Sequence[CorpusEntry]) -> CorpusStats:
    """Averages of gold list sizes and document lengths, plus the
    percentage of gold keyphrases whose stem sequence occurs in the body.
    """
    if not corpus:
        raise ValueError("corpus must not be empty")
    gold_counts = []
    keyphrase_lengths = []
    word_counts = []
    in_text = 0
    total_gold = 0
    for entry in corpus:
        stream = tokenize(entry.body)
        word_counts.append(sum(1 for t in stream if isinstance(t, Token)))
        gold_counts.append(len(entry.gold))
        doc_stems = [
            iterated_lovins_stem(t.lowered) if isinstance(t, Token) else None
            for t in stream
        ]
        for gold in entry.gold:
            sequence = stem_sequence(gold)
            keyphrase_lengths.append(len(sequence))
            total_gold += 1
            if sequence and _contains_run(doc_stems, sequence):
                in_text += 1
    return CorpusStats(
        num_docs=len(corpus),
        keyphrases_per_doc=(statistics.fmean(gold_counts), _sample_std(gold_counts)),
        words_per_keyphrase=(
            statistics.fmean(keyphrase_lengths) if keyphrase_lengths else 0.0,
            _sample_std(keyphrase_lengths),
        ),
        words_per_doc=(statistics.fmean(word_counts), _sample_std(word_counts)),
        pct_keyphrases_in_text=(100.0 * in_text / total_gold) if total_gold else 0.0,
    )


def _contains_run(
    doc_stems: Sequence[str | None], sequence: tuple[str, ...]
) -> bool:
    size = len(sequence)
    target = list(sequence)
    for start in range(len(doc_stems) - size + 1):
        if doc_stems[start : start + size] == target:
            return True
    return False

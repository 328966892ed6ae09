"""Feature vectors for training external phrase classifiers.

Every unique iterated-Lovins-stemmed phrase of 1-3 consecutive non-stop
words becomes one vector: positional and frequency features normalized by
the document's word count (stop words included), the relative character
length of its most frequent surface form, and the three lexical flags
shared with the extractor. The class bit marks stem-sequence matches with
the gold keyphrases.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Sequence

from .evaluation import stem_sequence
from .extractor import _ends_in_adjective, _looks_proper
from .text_analysis import (
    Lexicons,
    Token,
    ascii_lower,
    iter_candidate_phrases,
    iterated_lovins_stem,
    tokenize,
)

__all__ = ["FEATURE_COLUMNS", "FeatureVector", "make_feature_vectors", "write_features"]

FEATURE_COLUMNS = (
    "stemmed_phrase",
    "whole_phrase",
    "num_words_phrase",
    "first_occur_phrase",
    "first_occur_word",
    "freq_phrase",
    "freq_word",
    "relative_length",
    "proper_noun",
    "final_adjective",
    "common_verb",
    "class",
)


@dataclass(frozen=True)
class FeatureVector:
    stemmed_phrase: str
    whole_phrase: str
    num_words_phrase: int
    first_occur_phrase: float
    first_occur_word: float
    freq_phrase: float
    freq_word: float
    relative_length: float
    proper_noun: int
    final_adjective: int
    common_verb: int
    class_label: int

    def row(self) -> tuple:
        return (
            self.stemmed_phrase,
            self.whole_phrase,
            self.num_words_phrase,
            self.first_occur_phrase,
            self.first_occur_word,
            self.freq_phrase,
            self.freq_word,
            self.relative_length,
            self.proper_noun,
            self.final_adjective,
            self.common_verb,
            self.class_label,
        )


def make_feature_vectors(
    document: str,
    gold_keyphrases: Sequence[str],
    lexicons: Lexicons,
) -> list[FeatureVector]:
    """One vector per unique stemmed candidate phrase, in scan order."""
    stream = tokenize(document, lexicons.stop_words)
    word_count = sum(1 for t in stream if isinstance(t, Token))
    if word_count == 0:
        return []

    stem_cache: dict[str, str] = {}

    def stem_of(token: Token) -> str:
        stem = stem_cache.get(token.lowered)
        if stem is None:
            stem_cache[token.lowered] = stem = iterated_lovins_stem(token.lowered)
        return stem

    lowercase_seen = {
        t.lowered for t in stream if isinstance(t, Token) and t.surface == t.lowered
    }

    phrase_order: list[tuple[str, ...]] = []
    phrase_stats: dict[tuple[str, ...], list] = {}
    word_stats: dict[str, list[int]] = {}
    char_total = 0
    occurrence_total = 0
    for window in iter_candidate_phrases(stream):
        stems = tuple(stem_of(t) for t in window)
        surfaces = tuple(t.surface for t in window)
        position = window[0].position
        char_total += sum(len(s) for s in surfaces) + len(surfaces) - 1
        occurrence_total += 1
        stats = phrase_stats.get(stems)
        if stats is None:
            # [frequency, first position, surface counts, surface first seen]
            phrase_stats[stems] = stats = [0, position, {}, {}]
            phrase_order.append(stems)
        stats[0] += 1
        stats[2][surfaces] = stats[2].get(surfaces, 0) + 1
        stats[3].setdefault(surfaces, position)
        if len(window) == 1:
            word = word_stats.get(stems[0])
            if word is None:
                word_stats[stems[0]] = [1, position]
            else:
                word[0] += 1

    avg_chars = char_total / occurrence_total
    gold_stems = {stem_sequence(gold) for gold in gold_keyphrases}
    vectors = []
    for stems in phrase_order:
        freq, first_pos, surface_counts, surface_first = phrase_stats[stems]
        whole = min(
            surface_counts,
            key=lambda s: (-surface_counts[s], surface_first[s]),
        )
        word_first = min(word_stats[s][1] for s in set(stems))
        word_freq = max(word_stats[s][0] for s in set(stems))
        whole_phrase = " ".join(whole)
        lowered = [ascii_lower(w) for w in whole]
        vectors.append(
            FeatureVector(
                stemmed_phrase=" ".join(stems),
                whole_phrase=whole_phrase,
                num_words_phrase=len(stems),
                first_occur_phrase=first_pos / word_count,
                first_occur_word=word_first / word_count,
                freq_phrase=freq / word_count,
                freq_word=word_freq / word_count,
                relative_length=len(whole_phrase) / avg_chars,
                proper_noun=int(
                    all(
                        _looks_proper(w) and low not in lowercase_seen
                        for w, low in zip(whole, lowered)
                    )
                ),
                final_adjective=int(_ends_in_adjective(lowered[-1], lexicons)),
                common_verb=int(any(w in lexicons.common_verbs for w in lowered)),
                class_label=int(stems in gold_stems),
            )
        )
    return vectors


def write_features(
    vectors: Sequence[FeatureVector], destination: str | Path | IO[str]
) -> None:
    """Write vectors as CSV with the canonical column header."""
    if isinstance(destination, (str, Path)):
        with open(destination, "w", encoding="utf-8", newline="") as handle:
            _write(vectors, handle)
    else:
        _write(vectors, destination)


def _write(vectors: Sequence[FeatureVector], handle: IO[str]) -> None:
    writer = csv.writer(handle)
    writer.writerow(FEATURE_COLUMNS)
    for vector in vectors:
        writer.writerow(vector.row())

"""The parameterized keyphrase extraction pipeline.

From a tokenized document the pipeline scores single word stems by
frequency and first occurrence, expands the best stems to their
highest-scoring 1-3 word stem phrases, recovers the most frequent whole
phrase with the best capitalization for each, and filters the result down
to at most ``num_phrases`` keyphrases. Twelve parameters control the
scoring and filtering; ten of them are tunable by the genetic trainer.

Everything here is a pure function of (document, params, lexicons), so
documents can be processed in parallel freely.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .text_analysis import (
    Lexicons,
    PhraseBoundary,
    Token,
    ascii_lower,
    iter_candidate_phrases,
    tokenize,
)

__all__ = [
    "ExtractorParams",
    "Keyphrase",
    "StemCandidate",
    "StemPhraseCandidate",
    "SurfacedPhrase",
    "expand_and_dedup",
    "extract",
    "extract_from_tokens",
    "final_filter",
    "load_params",
    "position_factor",
    "realize_surface",
    "save_params",
    "score_stem_phrases",
    "top_single_stems",
]

_MIN_WORD_CHARS = 3


@dataclass(frozen=True)
class ExtractorParams:
    """The twelve extraction parameters with their sample defaults.

    ``num_working`` defaults to five times ``num_phrases``; every other
    field must stay inside its tunable range.
    """

    num_phrases: int = 10
    num_working: int | None = None
    factor_two_one: float = 2.33
    factor_three_one: float = 5.00
    min_length_low_rank: float = 0.9
    min_rank_low_length: int = 5
    first_low_thresh: int = 40
    first_high_thresh: int = 400
    first_low_factor: float = 2.0
    first_high_factor: float = 0.65
    stem_length: int = 5
    suppress_proper: bool = False

    def __post_init__(self) -> None:
        if self.num_working is None:
            object.__setattr__(self, "num_working", 5 * self.num_phrases)
        _check_range("num_phrases", self.num_phrases, 5, 15)
        if self.num_working < 1:
            raise ValueError("num_working must be positive")
        _check_range("factor_two_one", self.factor_two_one, 1.0, 3.0)
        _check_range("factor_three_one", self.factor_three_one, 1.0, 5.0)
        _check_range("min_length_low_rank", self.min_length_low_rank, 0.3, 3.0)
        _check_range("min_rank_low_length", self.min_rank_low_length, 1, 20)
        _check_range("first_low_thresh", self.first_low_thresh, 1, 1000)
        _check_range("first_high_thresh", self.first_high_thresh, 1, 4000)
        _check_range("first_low_factor", self.first_low_factor, 1.0, 15.0)
        _check_range("first_high_factor", self.first_high_factor, 0.01, 1.0)
        _check_range("stem_length", self.stem_length, 1, 10)

    def with_num_phrases(self, num_phrases: int) -> "ExtractorParams":
        """Copy with a new output size and the derived working-list size."""
        return replace(
            self, num_phrases=num_phrases, num_working=5 * num_phrases
        )


def _check_range(name: str, value, low, high) -> None:
    if not low <= value <= high:
        raise ValueError(f"{name}={value} outside [{low}, {high}]")


@dataclass(frozen=True)
class StemCandidate:
    """A single stem with its occurrence statistics and score."""

    stem: str
    frequency: int
    first_position: int
    score: float


@dataclass(frozen=True)
class StemPhraseCandidate:
    """A 1-3 stem phrase with its occurrence statistics and score."""

    stems: tuple[str, ...]
    frequency: int
    first_position: int
    score: float


@dataclass(frozen=True)
class SurfacedPhrase:
    """A stem phrase realized as a whole mixed-case phrase."""

    stems: tuple[str, ...]
    surface: str
    score: float


@dataclass(frozen=True)
class Keyphrase:
    """One emitted keyphrase: whole phrase, stem key, score, 1-based rank."""

    surface: str
    stem_key: str
    score: float
    rank: int


def position_factor(first_position: int, params: ExtractorParams) -> float:
    """Score multiplier for where a stem first appears.

    The early test is applied first, so a position below the low threshold
    gets the early factor even if it is also above the high threshold.
    Positions equal to a threshold are neutral.
    """
    if first_position < params.first_low_thresh:
        return params.first_low_factor
    if first_position > params.first_high_thresh:
        return params.first_high_factor
    return 1.0


def _eligible_words(stream: Sequence[Token | PhraseBoundary]) -> Iterable[Token]:
    for item in stream:
        if (
            isinstance(item, Token)
            and not item.is_stop
            and len(item.surface) >= _MIN_WORD_CHARS
        ):
            yield item


def top_single_stems(
    stream: Sequence[Token | PhraseBoundary], params: ExtractorParams
) -> list[StemCandidate]:
    """Rank truncation stems by frequency times position factor.

    Words shorter than three characters and stop words are dropped before
    stemming. Ties break toward the earlier first occurrence. At most
    ``num_working`` candidates are returned.
    """
    stats: dict[str, list[int]] = {}
    for token in _eligible_words(stream):
        stem = token.lowered[: params.stem_length]
        entry = stats.get(stem)
        if entry is None:
            stats[stem] = [1, token.position]
        else:
            entry[0] += 1
    candidates = [
        StemCandidate(stem, freq, pos, freq * position_factor(pos, params))
        for stem, (freq, pos) in stats.items()
    ]
    candidates.sort(key=lambda c: (-c.score, c.first_position))
    return candidates[: params.num_working]


def score_stem_phrases(
    stream: Sequence[Token | PhraseBoundary], params: ExtractorParams
) -> dict[str, StemPhraseCandidate]:
    """Score every 1-3 word candidate phrase, keyed by its stemmed form.

    Phrases are runs of consecutive non-stop words unbroken by punctuation.
    Scores follow the single-stem rule, then are multiplied by the two- or
    three-word expansion factor.
    """
    stats: dict[tuple[str, ...], list[int]] = {}
    for window in iter_candidate_phrases(stream):
        stems = tuple(t.lowered[: params.stem_length] for t in window)
        entry = stats.get(stems)
        if entry is None:
            stats[stems] = [1, window[0].position]
        else:
            entry[0] += 1
    length_factor = (1.0, params.factor_two_one, params.factor_three_one)
    result = {}
    for stems, (freq, pos) in stats.items():
        score = freq * position_factor(pos, params) * length_factor[len(stems) - 1]
        result[" ".join(stems)] = StemPhraseCandidate(stems, freq, pos, score)
    return result


def expand_and_dedup(
    top_stems: Sequence[StemCandidate],
    phrase_candidates: Mapping[str, StemPhraseCandidate],
) -> list[StemPhraseCandidate]:
    """Expand each top stem to its best containing phrase, then dedup.

    The returned candidates keep the order (and carry the scores) of their
    source single stems; when several stems expand to the same phrase only
    the highest-ranked occurrence survives.
    """
    containing: dict[str, list[StemPhraseCandidate]] = {}
    for candidate in phrase_candidates.values():
        for stem in candidate.stems:
            containing.setdefault(stem, []).append(candidate)

    expanded: list[StemPhraseCandidate] = []
    seen: set[tuple[str, ...]] = set()
    for source in top_stems:
        matches = containing.get(source.stem)
        if not matches:
            continue
        best = min(
            matches, key=lambda c: (-c.score, c.first_position, len(c.stems))
        )
        if best.stems in seen:
            continue
        seen.add(best.stems)
        expanded.append(replace(best, score=source.score))
    return expanded


@dataclass
class _SurfaceStats:
    count: int = 0
    first_position: int = 0
    words: tuple[str, ...] = ()


class _SurfaceIndex:
    """Whole-phrase frequencies and capitalization variants for a document."""

    def __init__(
        self, stream: Sequence[Token | PhraseBoundary], stem_length: int
    ) -> None:
        self.by_stems: dict[tuple[str, ...], dict[tuple[str, ...], _SurfaceStats]] = {}
        self.caps: dict[str, dict[str, int]] = {}
        self.lowercase_seen: set[str] = set()
        self.phrase_char_total = 0
        self.phrase_count = 0
        for item in stream:
            if isinstance(item, Token):
                variants = self.caps.setdefault(item.lowered, {})
                if item.surface not in variants:
                    variants[item.surface] = item.position
                if item.surface == item.lowered:
                    self.lowercase_seen.add(item.lowered)
        for window in iter_candidate_phrases(stream):
            stems = tuple(t.lowered[:stem_length] for t in window)
            lowered = tuple(t.lowered for t in window)
            surfaces = self.by_stems.setdefault(stems, {})
            stats = surfaces.get(lowered)
            if stats is None:
                surfaces[lowered] = stats = _SurfaceStats(
                    first_position=window[0].position, words=lowered
                )
            stats.count += 1
            self.phrase_char_total += (
                sum(len(t.surface) for t in window) + len(window) - 1
            )
            self.phrase_count += 1

    def average_phrase_length(self) -> float:
        if self.phrase_count == 0:
            return 0.0
        return self.phrase_char_total / self.phrase_count

    def most_frequent_whole(
        self, stems: Sequence[str], lexicons: Lexicons
    ) -> tuple[str, ...] | None:
        """Best surviving whole phrase for a stem phrase, or None.

        Whole phrases ending in an adjective suffix or containing a common
        verb have their frequency forced to zero.
        """
        surfaces = self.by_stems.get(tuple(stems))
        if not surfaces:
            return None
        best: _SurfaceStats | None = None
        for stats in surfaces.values():
            if _ends_in_adjective(stats.words[-1], lexicons):
                continue
            if any(w in lexicons.common_verbs for w in stats.words):
                continue
            if best is None or (-stats.count, stats.first_position) < (
                -best.count,
                best.first_position,
            ):
                best = stats
        return best.words if best is not None else None

    def capitalize(self, lowered_words: Sequence[str]) -> list[str]:
        """Pick each word's fewest-capitals variant, repairing consistency.

        A rendering is inconsistent when one word looks like a proper noun
        while another is all lowercase; lowercase words are then stepped
        through their variants (in increasing capital count) until the
        rendering is consistent, falling back to the fewest-capitals form.
        """
        variants = [
            sorted(
                self.caps.get(word, {word: 0}).items(),
                key=lambda kv: (_count_caps(kv[0]), kv[1]),
            )
            for word in lowered_words
        ]
        chosen = [0] * len(variants)

        def rendering() -> list[str]:
            return [variants[i][chosen[i]][0] for i in range(len(variants))]

        if len(variants) == 1 or _is_consistent(rendering()):
            return rendering()
        while True:
            advanced = False
            for i, word in enumerate(rendering()):
                if word == ascii_lower(word) and chosen[i] + 1 < len(variants[i]):
                    chosen[i] += 1
                    advanced = True
            if not advanced:
                break
            if _is_consistent(rendering()):
                return rendering()
        return [variants[i][0][0] for i in range(len(variants))]


def _count_caps(word: str) -> int:
    return sum(1 for c in word if c.isupper())


def _looks_proper(word: str) -> bool:
    return bool(word) and word[0].isupper() and any(c.islower() for c in word[1:])


def _is_consistent(words: Sequence[str]) -> bool:
    has_proper = any(_looks_proper(w) for w in words)
    has_lower = any(w == ascii_lower(w) for w in words)
    return not (has_proper and has_lower)


def _ends_in_adjective(word: str, lexicons: Lexicons) -> bool:
    return any(word.endswith(suffix) for suffix in lexicons.adjective_endings)


def realize_surface(
    stems: Sequence[str],
    stream: Sequence[Token | PhraseBoundary],
    lexicons: Lexicons,
    stem_length: int,
) -> str | None:
    """Whole mixed-case phrase for a stem phrase, or None when rejected.

    Rejection happens when every matching whole phrase ends in an
    adjective suffix or contains a common verb.
    """
    index = _SurfaceIndex(stream, stem_length)
    return _realize(index, stems, lexicons)


def _realize(
    index: _SurfaceIndex, stems: Sequence[str], lexicons: Lexicons
) -> str | None:
    whole = index.most_frequent_whole(stems, lexicons)
    if whole is None:
        return None
    return " ".join(index.capitalize(whole))


def final_filter(
    phrases: Sequence[SurfacedPhrase],
    stream: Sequence[Token | PhraseBoundary],
    params: ExtractorParams,
    lexicons: Lexicons,
    avg_phrase_len: float | None = None,
) -> list[Keyphrase]:
    """Emit phrases that pass the output tests, in rank order.

    A phrase must not be a proper noun (when suppression is on), must not
    end in an adjective suffix, contain a common verb, or match a stop
    phrase, and must be long enough relative to the document's average
    candidate phrase, highly ranked, or shaped like an abbreviation.
    """
    index = _SurfaceIndex(stream, params.stem_length)
    if avg_phrase_len is None:
        avg_phrase_len = index.average_phrase_length()
    emitted: list[Keyphrase] = []
    for rank, phrase in enumerate(phrases, start=1):
        if len(emitted) >= params.num_phrases:
            break
        words = phrase.surface.split(" ")
        lowered = [ascii_lower(w) for w in words]
        if params.suppress_proper and _is_proper_phrase(words, lowered, index):
            continue
        if _ends_in_adjective(lowered[-1], lexicons):
            continue
        if any(w in lexicons.common_verbs for w in lowered):
            continue
        if ascii_lower(phrase.surface) in lexicons.stop_phrases:
            continue
        long_enough = (
            avg_phrase_len > 0
            and len(phrase.surface) / avg_phrase_len > params.min_length_low_rank
        )
        high_rank = rank < params.min_rank_low_length
        if not (long_enough or high_rank or _is_abbreviation(phrase.surface)):
            continue
        emitted.append(
            Keyphrase(
                surface=phrase.surface,
                stem_key=" ".join(phrase.stems),
                score=phrase.score,
                rank=len(emitted) + 1,
            )
        )
    return emitted


def _is_proper_phrase(
    words: Sequence[str], lowered: Sequence[str], index: _SurfaceIndex
) -> bool:
    return all(
        _looks_proper(w) and low not in index.lowercase_seen
        for w, low in zip(words, lowered)
    )


def _is_abbreviation(surface: str) -> bool:
    return 2 <= len(surface) <= 6 and surface.isalpha() and surface.isupper()


def extract_from_tokens(
    stream: Sequence[Token | PhraseBoundary],
    params: ExtractorParams,
    lexicons: Lexicons,
) -> list[Keyphrase]:
    """Run the full pipeline on an already tokenized document."""
    stems = top_single_stems(stream, params)
    if not stems:
        return []
    phrases = score_stem_phrases(stream, params)
    expanded = expand_and_dedup(stems, phrases)
    index = _SurfaceIndex(stream, params.stem_length)
    surfaced = []
    for candidate in expanded:
        surface = _realize(index, candidate.stems, lexicons)
        if surface is not None:
            surfaced.append(
                SurfacedPhrase(candidate.stems, surface, candidate.score)
            )
    return final_filter(
        surfaced, stream, params, lexicons, index.average_phrase_length()
    )


def extract(
    document: str, params: ExtractorParams, lexicons: Lexicons
) -> list[Keyphrase]:
    """Extract at most ``num_phrases`` keyphrases from a document."""
    stream = tokenize(document, lexicons.stop_words)
    return extract_from_tokens(stream, params, lexicons)


# Parameter files hold one "name = value" line per parameter; missing
# names fall back to the defaults above, unknown names are rejected.

_PARAM_NAMES = {f.name for f in fields(ExtractorParams)}
_INT_PARAMS = {
    "num_phrases",
    "num_working",
    "min_rank_low_length",
    "first_low_thresh",
    "first_high_thresh",
    "stem_length",
}


def load_params(path: str | Path) -> ExtractorParams:
    """Parse a params file; '#' comments and blank lines are allowed."""
    values: dict[str, object] = {}
    for lineno, raw in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'name = value'")
        name, _, text = line.partition("=")
        name = name.strip().lower()
        text = text.strip()
        if name not in _PARAM_NAMES:
            raise ValueError(f"{path}:{lineno}: unknown parameter {name!r}")
        if name == "suppress_proper":
            values[name] = _parse_flag(text)
        elif name in _INT_PARAMS:
            values[name] = int(text)
        else:
            values[name] = float(text)
    return ExtractorParams(**values)


def _parse_flag(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("1", "true", "yes"):
        return True
    if lowered in ("0", "false", "no"):
        return False
    raise ValueError(f"expected boolean flag, got {text!r}")


def save_params(params: ExtractorParams, path: str | Path) -> None:
    """Write a params file readable by :func:`load_params`."""
    lines = []
    for f in fields(ExtractorParams):
        value = getattr(params, f.name)
        if f.name == "suppress_proper":
            value = int(value)
        lines.append(f"{f.name} = {value}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

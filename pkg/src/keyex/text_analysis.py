"""Tokenization, lexicons, and the stemming helpers used by the pipeline.

A document is turned into a stream of word tokens and phrase-boundary
markers. Words are runs of letters/digits that may contain internal
hyphens or apostrophes ("base-rate", "don't"); every other punctuation
character becomes a boundary marker that no candidate phrase may cross.
Apostrophes hanging off a word ("Bayes'") are trimmed without creating a
boundary. Positions are 1-based and count every word token, stop words
included.

All functions here are pure; a Lexicons value is immutable after
construction, so everything is safe to share across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from .lovins import iterated_lovins_stem, lovins_stem

__all__ = [
    "BOUNDARY",
    "Lexicons",
    "PhraseBoundary",
    "Token",
    "ascii_lower",
    "iter_candidate_phrases",
    "iterated_lovins_stem",
    "load_word_list",
    "lovins_stem",
    "stem_phrase",
    "tokenize",
    "truncation_stem",
    "truncation_stemmer",
]

_ASCII_LOWER = str.maketrans(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ", "abcdefghijklmnopqrstuvwxyz"
)

# Word characters are any alphanumerics except underscore; apostrophes
# (straight or typographic) and hyphens join a token only between word
# characters.
_TOKEN_RE = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*", re.UNICODE)
_APOSTROPHES = frozenset("'’")

DEFAULT_ADJECTIVE_ENDINGS = (
    "al", "ic", "ible", "able", "ive", "ous", "ary", "ful", "less", "ish",
)


def ascii_lower(text: str) -> str:
    """Lower-case A-Z only; other characters pass through untouched."""
    return text.translate(_ASCII_LOWER)


class PhraseBoundary:
    """Marker emitted for punctuation; phrases never span one."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "BOUNDARY"


BOUNDARY = PhraseBoundary()


@dataclass(frozen=True, slots=True)
class Token:
    """A positioned word occurrence.

    position counts every word token in the document (stop words
    included), starting at 1.
    """

    surface: str
    lowered: str
    position: int
    is_stop: bool


def tokenize(
    text: str, stop_words: Iterable[str] = frozenset()
) -> list[Token | PhraseBoundary]:
    """Split text into word tokens and phrase-boundary markers.

    Each punctuation character between words yields one boundary marker;
    apostrophes never do. Empty input yields an empty stream.
    """
    stop = stop_words if isinstance(stop_words, frozenset) else frozenset(stop_words)
    stream: list[Token | PhraseBoundary] = []
    position = 0
    cursor = 0
    for match in _TOKEN_RE.finditer(text):
        _emit_boundaries(text[cursor : match.start()], stream)
        cursor = match.end()
        surface = match.group()
        lowered = ascii_lower(surface)
        position += 1
        stream.append(Token(surface, lowered, position, lowered in stop))
    _emit_boundaries(text[cursor:], stream)
    return stream


def _emit_boundaries(gap: str, stream: list[Token | PhraseBoundary]) -> None:
    for char in gap:
        if not char.isspace() and char not in _APOSTROPHES:
            stream.append(BOUNDARY)


def iter_candidate_phrases(
    stream: Sequence[Token | PhraseBoundary],
) -> Iterator[tuple[Token, ...]]:
    """Yield every run of 1-3 consecutive non-stop tokens, in scan order.

    Runs are broken by boundary markers and stop words. At each starting
    token the 1-word window is yielded before the 2- and 3-word ones.
    """
    run: list[Token] = []
    for item in stream:
        if isinstance(item, Token) and not item.is_stop:
            run.append(item)
            continue
        yield from _windows(run)
        run.clear()
    yield from _windows(run)


def _windows(run: list[Token]) -> Iterator[tuple[Token, ...]]:
    for start in range(len(run)):
        for size in (1, 2, 3):
            if start + size <= len(run):
                yield tuple(run[start : start + size])


def truncation_stem(word: str, stem_length: int) -> str:
    """First stem_length characters of the lowered word."""
    if not 1 <= stem_length <= 10:
        raise ValueError(f"stem_length must be in [1, 10], got {stem_length}")
    return ascii_lower(word)[:stem_length]


def truncation_stemmer(stem_length: int) -> Callable[[str], str]:
    """A stemmer that cuts words to a fixed number of characters."""
    if not 1 <= stem_length <= 10:
        raise ValueError(f"stem_length must be in [1, 10], got {stem_length}")
    return lambda word: ascii_lower(word)[:stem_length]


def stem_phrase(words: Sequence[str], stem: Callable[[str], str]) -> str:
    """Stem each word and join with single spaces, preserving order."""
    return " ".join(stem(ascii_lower(word)) for word in words)


def load_word_list(path: str | Path) -> frozenset[str]:
    """Read one entry per line; '#' comments and blank lines are skipped.

    Entries are lower-cased on load.
    """
    entries = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            entries.add(ascii_lower(line))
    return frozenset(entries)


def _packaged_word_list(name: str) -> frozenset[str]:
    text = (resources.files("keyex") / "data" / name).read_text("utf-8")
    entries = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            entries.add(ascii_lower(line))
    return frozenset(entries)


_DEFAULT_LEXICONS: "Lexicons | None" = None


@dataclass(frozen=True)
class Lexicons:
    """Word lists steering candidate filtering and surface selection.

    All entries must be lowercase; use the loaders or ``Lexicons.default``
    rather than building instances from raw user input.
    """

    stop_words: frozenset[str]
    common_verbs: frozenset[str] = frozenset()
    adjective_endings: tuple[str, ...] = DEFAULT_ADJECTIVE_ENDINGS
    stop_phrases: frozenset[str] = frozenset()

    @staticmethod
    def default() -> "Lexicons":
        """The packaged stop-word and common-verb lists."""
        global _DEFAULT_LEXICONS
        if _DEFAULT_LEXICONS is None:
            _DEFAULT_LEXICONS = Lexicons(
                stop_words=_packaged_word_list("stop_words.txt"),
                common_verbs=_packaged_word_list("common_verbs.txt"),
            )
        return _DEFAULT_LEXICONS

    def replace(
        self,
        stop_words: Iterable[str] | None = None,
        common_verbs: Iterable[str] | None = None,
        adjective_endings: Iterable[str] | None = None,
        stop_phrases: Iterable[str] | None = None,
    ) -> "Lexicons":
        """Copy with the given lists swapped in (entries lower-cased)."""
        return Lexicons(
            stop_words=_lower_set(stop_words, self.stop_words),
            common_verbs=_lower_set(common_verbs, self.common_verbs),
            adjective_endings=(
                self.adjective_endings
                if adjective_endings is None
                else tuple(ascii_lower(e) for e in adjective_endings)
            ),
            stop_phrases=_lower_set(stop_phrases, self.stop_phrases),
        )


def _lower_set(
    values: Iterable[str] | None, fallback: frozenset[str]
) -> frozenset[str]:
    if values is None:
        return fallback
    return frozenset(ascii_lower(v) for v in values)

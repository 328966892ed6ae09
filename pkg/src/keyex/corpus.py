"""Loading and splitting corpora of documents with gold keyphrases.

A corpus directory holds paired files: ``<id>.txt`` with the document body
and ``<id>.key`` with one gold keyphrase per line. Entries are sorted by
id so every downstream computation iterates in a reproducible order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

__all__ = ["CorpusEntry", "SplitSpec", "load_corpus", "parse_split_spec", "split"]


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    body: str
    gold: tuple[str, ...]


def load_corpus(directory: str | Path) -> list[CorpusEntry]:
    """Load all ``<id>.txt`` / ``<id>.key`` pairs, sorted by id.

    A body without a key file (or the reverse) is an error naming the id;
    an empty directory yields an empty corpus.
    """
    directory = Path(directory)
    bodies = {p.stem: p for p in directory.glob("*.txt")}
    keys = {p.stem: p for p in directory.glob("*.key")}
    for doc_id in sorted(bodies.keys() - keys.keys()):
        raise ValueError(f"document {doc_id!r} has a .txt file but no .key file")
    for doc_id in sorted(keys.keys() - bodies.keys()):
        raise ValueError(f"document {doc_id!r} has a .key file but no .txt file")
    entries = []
    for doc_id in sorted(bodies):
        gold = tuple(
            line.strip()
            for line in keys[doc_id].read_text(encoding="utf-8").splitlines()
            if line.strip()
        )
        entries.append(
            CorpusEntry(doc_id, bodies[doc_id].read_text(encoding="utf-8"), gold)
        )
    return entries


@dataclass(frozen=True)
class SplitSpec:
    """Either explicit train/test id lists or a seeded random ratio."""

    train_ids: tuple[str, ...] | None = None
    test_ids: tuple[str, ...] | None = None
    ratio: float | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        explicit = self.train_ids is not None or self.test_ids is not None
        if explicit:
            if self.train_ids is None or self.test_ids is None or self.ratio is not None:
                raise ValueError(
                    "give both train and test id lists, or a ratio, not a mix"
                )
            overlap = set(self.train_ids) & set(self.test_ids)
            if overlap:
                raise ValueError(f"ids in both splits: {sorted(overlap)}")
        else:
            if self.ratio is None or not 0.0 < self.ratio < 1.0:
                raise ValueError("ratio must be in (0, 1)")

    @staticmethod
    def explicit(train_ids: Sequence[str], test_ids: Sequence[str]) -> "SplitSpec":
        return SplitSpec(train_ids=tuple(train_ids), test_ids=tuple(test_ids))

    @staticmethod
    def random(ratio: float, seed: int) -> "SplitSpec":
        return SplitSpec(ratio=ratio, seed=seed)


def split(
    corpus: Sequence[CorpusEntry], spec: SplitSpec
) -> tuple[list[CorpusEntry], list[CorpusEntry]]:
    """Partition a corpus into (train, test); never loses or duplicates.

    A ratio split shuffles ids with the spec's seed and puts
    round(ratio * N) entries in the training set (half rounds up);
    explicit id lists must cover the corpus exactly.
    """
    by_id = {entry.id: entry for entry in corpus}
    if spec.ratio is not None:
        ids = sorted(by_id)
        random.Random(spec.seed).shuffle(ids)
        n_train = int(spec.ratio * len(ids) + 0.5)
        train_ids = set(ids[:n_train])
    else:
        assert spec.train_ids is not None and spec.test_ids is not None
        unknown = (set(spec.train_ids) | set(spec.test_ids)) - by_id.keys()
        if unknown:
            raise ValueError(f"split names unknown ids: {sorted(unknown)}")
        missing = by_id.keys() - set(spec.train_ids) - set(spec.test_ids)
        if missing:
            raise ValueError(f"split leaves ids unassigned: {sorted(missing)}")
        train_ids = set(spec.train_ids)
    train = [entry for entry in corpus if entry.id in train_ids]
    test = [entry for entry in corpus if entry.id not in train_ids]
    return train, test


def parse_split_spec(path: str | Path) -> SplitSpec:
    """Read a split config: 'ratio'/'seed' lines or 'train'/'test' id lists."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'name = value'")
        name, _, text = line.partition("=")
        values[name.strip().lower()] = text.strip()
    unknown = values.keys() - {"ratio", "seed", "train", "test"}
    if unknown:
        raise ValueError(f"{path}: unknown keys {sorted(unknown)}")
    if "train" in values or "test" in values:
        return SplitSpec.explicit(
            _id_list(values.get("train", "")), _id_list(values.get("test", ""))
        )
    return SplitSpec.random(
        float(values.get("ratio", "")), int(values.get("seed", "0"))
    )


def _id_list(text: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in text.split(",") if part.strip())

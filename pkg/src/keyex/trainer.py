"""Steady-state genetic search over the tunable extraction parameters.

Ten parameters are packed into a 72-bit binary genome. Each trial selects
two parents by linear rank bias, recombines them with crossover restricted
to the positions where they differ, mutates the child at a rate that grows
as the parents get more similar, and replaces the worst individual in the
population. Fitness is the corpus-level precision of the extractor output
multiplied by a quadratic penalty for emitting fewer phrases than
requested; matching uses the iterated Lovins stemmer so the score does not
depend on the genome's own stem length.

Runs are fully reproducible from (seed, corpus, config).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

from .corpus import CorpusEntry
from .evaluation import stem_sequence
from .extractor import ExtractorParams, extract_from_tokens
from .text_analysis import Lexicons, tokenize

__all__ = [
    "FitnessEvaluator",
    "FitnessReport",
    "GENOME_LENGTH",
    "TrainerConfig",
    "TrainResult",
    "TrialRecord",
    "adaptive_mutation",
    "decode",
    "encode",
    "fitness",
    "fitness_report",
    "random_genome",
    "reduced_surrogate_crossover",
    "select_parent",
    "train",
]

# (field, bits, minimum, maximum, integer-valued); fields are laid out in
# this order, most significant bit first within each field.
_GENE_FIELDS: tuple[tuple[str, int, float, float, bool], ...] = (
    ("factor_two_one", 8, 1.0, 3.0, False),
    ("factor_three_one", 8, 1.0, 5.0, False),
    ("min_length_low_rank", 8, 0.3, 3.0, False),
    ("min_rank_low_length", 5, 1, 20, True),
    ("first_low_thresh", 10, 1, 1000, True),
    ("first_high_thresh", 12, 1, 4000, True),
    ("first_low_factor", 8, 1.0, 15.0, False),
    ("first_high_factor", 8, 0.01, 1.0, False),
    ("stem_length", 4, 1, 10, True),
)
_FLAG_FIELD = "suppress_proper"

GENOME_LENGTH = sum(bits for _, bits, _, _, _ in _GENE_FIELDS) + 1
assert GENOME_LENGTH == 72


def _check_genome(genome: str) -> None:
    if len(genome) != GENOME_LENGTH or set(genome) - {"0", "1"}:
        raise ValueError(f"genome must be {GENOME_LENGTH} bits of '0'/'1'")


def random_genome(rng: random.Random) -> str:
    return f"{rng.getrandbits(GENOME_LENGTH):0{GENOME_LENGTH}b}"


def decode(genome: str, num_phrases: int = 10) -> ExtractorParams:
    """Map a genome to parameters; every bit pattern decodes.

    Each field's bits are read as an unsigned integer v spanning the
    field's range linearly; integer fields round to the nearest value and
    ``num_working`` is derived as five times ``num_phrases``.
    """
    _check_genome(genome)
    values: dict[str, object] = {}
    offset = 0
    for name, bits, low, high, integer in _GENE_FIELDS:
        code = int(genome[offset : offset + bits], 2)
        offset += bits
        span = (1 << bits) - 1
        value = low + code * (high - low) / span
        if integer:
            value = min(int(high), max(int(low), round(value)))
        values[name] = value
    values[_FLAG_FIELD] = genome[offset] == "1"
    return ExtractorParams(
        num_phrases=num_phrases, num_working=5 * num_phrases, **values
    )


def encode(params: ExtractorParams) -> str:
    """Inverse of :func:`decode`, up to one quantization step per field."""
    pieces = []
    for name, bits, low, high, _ in _GENE_FIELDS:
        span = (1 << bits) - 1
        value = getattr(params, name)
        code = round((value - low) * span / (high - low))
        code = min(span, max(0, code))
        pieces.append(f"{code:0{bits}b}")
    pieces.append("1" if params.suppress_proper else "0")
    return "".join(pieces)


def reduced_surrogate_crossover(
    parent_a: str, parent_b: str, rng: random.Random
) -> str:
    """One-point crossover with the cut restricted to differing loci.

    The child takes parent_a's bits before the cut and parent_b's from the
    cut onward; identical parents yield a copy.
    """
    _check_genome(parent_a)
    _check_genome(parent_b)
    diffs = [i for i in range(GENOME_LENGTH) if parent_a[i] != parent_b[i]]
    if not diffs:
        return parent_a
    point = diffs[rng.randrange(len(diffs))]
    return parent_a[:point] + parent_b[point:]


def adaptive_mutation(
    child: str,
    parent_a: str,
    parent_b: str,
    mutation_rate: float,
    rng: random.Random,
) -> str:
    """Flip each bit with probability scaled by parental similarity.

    The per-bit probability is mutation_rate * (1 - hamming/72): identical
    parents mutate at the full rate, maximally different parents not at
    all.
    """
    _check_genome(child)
    hamming = sum(1 for a, b in zip(parent_a, parent_b) if a != b)
    probability = mutation_rate * (1.0 - hamming / GENOME_LENGTH)
    if probability <= 0.0:
        return child
    bits = []
    for bit in child:
        if rng.random() < probability:
            bits.append("1" if bit == "0" else "0")
        else:
            bits.append(bit)
    return "".join(bits)


def select_parent(
    ranked: Sequence[str], selection_bias: float, rng: random.Random
) -> str:
    """Sample from a best-first ranked population by linear rank bias.

    With bias b the index is floor(N*(b - sqrt(b^2 - 4(b-1)u)) / (2(b-1)))
    for uniform u; bias 1 degenerates to uniform selection.
    """
    size = len(ranked)
    u = rng.random()
    if selection_bias == 1.0:
        return ranked[int(size * u)]
    b = selection_bias
    index = int(size * (b - math.sqrt(b * b - 4.0 * (b - 1.0) * u)) / (2.0 * (b - 1.0)))
    return ranked[min(index, size - 1)]


@dataclass(frozen=True)
class FitnessReport:
    """Corpus-level match counts and the resulting fitness."""

    total_matches: int
    total_machine_phrases: int
    precision: float
    penalty: float
    fitness: float


def fitness_report(
    total_matches: int, total_machine_phrases: int, total_desired: int
) -> FitnessReport:
    """Fitness from corpus totals: precision times the output-size penalty.

    Precision is matches over machine output (zero when nothing was
    emitted); the penalty is the squared ratio of output to desired count,
    clamped to one so only under-production is punished.
    """
    if total_desired < 1:
        raise ValueError("total_desired must be positive")
    precision = (
        total_matches / total_machine_phrases if total_machine_phrases else 0.0
    )
    penalty = min(
        1.0,
        (total_machine_phrases * total_machine_phrases)
        / (total_desired * total_desired),
    )
    return FitnessReport(
        total_matches=total_matches,
        total_machine_phrases=total_machine_phrases,
        precision=precision,
        penalty=penalty,
        fitness=precision * penalty,
    )


@dataclass(frozen=True)
class TrainerConfig:
    population_size: int = 50
    trials: int = 1050
    selection_bias: float = 2.0
    mutation_rate: float = 0.2
    num_phrases: int = 10
    random_seed: int = 0

    def __post_init__(self) -> None:
        if self.population_size < 2:
            raise ValueError("population_size must be at least 2")
        if self.trials < self.population_size:
            raise ValueError("trials must be at least population_size")
        if not 1.0 <= self.selection_bias <= 2.0:
            raise ValueError("selection_bias must be in [1, 2]")
        if not 0.0 <= self.mutation_rate <= 1.0:
            raise ValueError("mutation_rate must be in [0, 1]")
        if not 5 <= self.num_phrases <= 15:
            raise ValueError("num_phrases must be in [5, 15]")


class FitnessEvaluator:
    """Evaluates genomes against a fixed training corpus.

    Documents are tokenized and gold keyphrases stemmed once up front;
    evaluating a genome then only runs the extractor.
    """

    def __init__(
        self,
        corpus: Sequence[CorpusEntry],
        num_phrases: int,
        lexicons: Lexicons,
    ) -> None:
        if not corpus:
            raise ValueError("training corpus must not be empty")
        self.num_phrases = num_phrases
        self.lexicons = lexicons
        self._documents = [
            (
                tokenize(entry.body, lexicons.stop_words),
                {stem_sequence(gold) for gold in entry.gold},
            )
            for entry in corpus
        ]
        self.total_desired = len(corpus) * num_phrases

    def evaluate_params(self, params: ExtractorParams) -> FitnessReport:
        total_matches = 0
        total_machine = 0
        for stream, gold_stems in self._documents:
            phrases = extract_from_tokens(stream, params, self.lexicons)
            total_machine += len(phrases)
            machine_stems = {stem_sequence(p.surface) for p in phrases}
            total_matches += len(machine_stems & gold_stems)
        return fitness_report(total_matches, total_machine, self.total_desired)

    def evaluate(self, genome: str) -> FitnessReport:
        return self.evaluate_params(decode(genome, self.num_phrases))


def fitness(
    genome: str,
    corpus: Sequence[CorpusEntry],
    num_phrases: int,
    lexicons: Lexicons,
) -> FitnessReport:
    """Fitness of one genome on a training corpus."""
    return FitnessEvaluator(corpus, num_phrases, lexicons).evaluate(genome)


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    child_fitness: float
    best_fitness: float


@dataclass(frozen=True)
class TrainResult:
    best_genome: str
    best_report: FitnessReport
    history: tuple[TrialRecord, ...]


def train(
    corpus: Sequence[CorpusEntry],
    config: TrainerConfig,
    lexicons: Lexicons,
) -> TrainResult:
    """Run the steady-state search and return the best genome ever seen.

    Exactly one individual is replaced per trial: the child enters and the
    worst of the resulting population+1 is dropped, so the population size
    never changes. Fitness ties break toward the earlier creation.
    """
    evaluator = FitnessEvaluator(corpus, config.num_phrases, lexicons)
    rng = random.Random(config.random_seed)
    cache: dict[str, FitnessReport] = {}

    def evaluate(genome: str) -> FitnessReport:
        report = cache.get(genome)
        if report is None:
            cache[genome] = report = evaluator.evaluate(genome)
        return report

    # Population entries are (fitness, creation_index, genome), kept
    # best-first; creation order breaks ties.
    population: list[tuple[float, int, str]] = []
    best_genome = ""
    best_report: FitnessReport | None = None
    creation = 0
    for _ in range(config.population_size):
        genome = random_genome(rng)
        report = evaluate(genome)
        population.append((report.fitness, creation, genome))
        if best_report is None or report.fitness > best_report.fitness:
            best_genome, best_report = genome, report
        creation += 1
    population.sort(key=lambda entry: (-entry[0], entry[1]))

    history = []
    for trial in range(1, config.trials + 1):
        ranked = [entry[2] for entry in population]
        parent_a = select_parent(ranked, config.selection_bias, rng)
        parent_b = select_parent(ranked, config.selection_bias, rng)
        child = reduced_surrogate_crossover(parent_a, parent_b, rng)
        child = adaptive_mutation(
            child, parent_a, parent_b, config.mutation_rate, rng
        )
        report = evaluate(child)
        population.append((report.fitness, creation, child))
        population.sort(key=lambda entry: (-entry[0], entry[1]))
        population.pop()
        if report.fitness > best_report.fitness:
            best_genome, best_report = child, report
        creation += 1
        history.append(TrialRecord(trial, report.fitness, best_report.fitness))

    return TrainResult(best_genome, best_report, tuple(history))

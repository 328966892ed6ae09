"""Keyphrase extraction toolkit.

Extracts 1-3 word keyphrases that appear verbatim in a document, tunes
the extraction parameters with a steady-state genetic search against a
training corpus, and evaluates output against hand-assigned keyphrases by
stem-sequence matching.
"""

from .corpus import CorpusEntry, SplitSpec, load_corpus, split
from .evaluation import (
    ConfusionMatrix,
    CorpusStats,
    EvalReport,
    accuracy,
    corpus_stats,
    evaluate_corpus,
    f_measure,
    match_count,
    paired_t_test,
    precision_actual,
    precision_desired,
    recall,
    stem_sequence,
)
from .extractor import (
    ExtractorParams,
    Keyphrase,
    extract,
    load_params,
    save_params,
)
from .features import FeatureVector, make_feature_vectors, write_features
from .text_analysis import (
    Lexicons,
    Token,
    iterated_lovins_stem,
    lovins_stem,
    stem_phrase,
    tokenize,
    truncation_stem,
)
from .trainer import (
    FitnessReport,
    TrainerConfig,
    TrainResult,
    decode,
    encode,
    fitness,
    train,
)

__version__ = "0.1.0"

__all__ = [
    "ConfusionMatrix",
    "CorpusEntry",
    "CorpusStats",
    "EvalReport",
    "ExtractorParams",
    "FeatureVector",
    "FitnessReport",
    "Keyphrase",
    "Lexicons",
    "SplitSpec",
    "Token",
    "TrainResult",
    "TrainerConfig",
    "accuracy",
    "corpus_stats",
    "decode",
    "encode",
    "evaluate_corpus",
    "extract",
    "f_measure",
    "fitness",
    "iterated_lovins_stem",
    "load_corpus",
    "load_params",
    "lovins_stem",
    "make_feature_vectors",
    "match_count",
    "paired_t_test",
    "precision_actual",
    "precision_desired",
    "recall",
    "save_params",
    "split",
    "stem_phrase",
    "stem_sequence",
    "tokenize",
    "train",
    "truncation_stem",
    "write_features",
]

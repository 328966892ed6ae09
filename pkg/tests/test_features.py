"""Tests for feature-vector generation and export."""

import csv
import io

from keyex.features import FEATURE_COLUMNS, make_feature_vectors, write_features
from keyex.text_analysis import Lexicons, Token, iter_candidate_phrases, tokenize

LEX = Lexicons.default()


def test_first_occurrence_normalization():
    # ten words; the opening phrase starts at word 1
    doc = "alpha beams scan metal surfaces while dawn breaks over water"
    vectors = make_feature_vectors(doc, [], LEX)
    first = next(v for v in vectors if v.whole_phrase == "alpha")
    assert first.first_occur_phrase == 0.1
    assert first.first_occur_word == 0.1


def test_word_count_includes_stop_words():
    # "the" counts toward the normalizer even though it forms no phrases
    doc = "alpha the alpha the alpha"
    vectors = make_feature_vectors(doc, [], LEX)
    assert len(vectors) == 1
    assert vectors[0].freq_phrase == 3 / 5


def test_no_gold_all_class_zero():
    doc = "alpha beams scan metal surfaces"
    vectors = make_feature_vectors(doc, [], LEX)
    assert vectors and all(v.class_label == 0 for v in vectors)


def test_class_marks_stem_matches():
    doc = "Neural networks classify images. Neural networks generalize."
    vectors = make_feature_vectors(doc, ["neural network"], LEX)
    flagged = [v for v in vectors if v.class_label == 1]
    assert [v.whole_phrase for v in flagged] == ["Neural networks"]


def test_vectors_unique_per_stemmed_phrase():
    doc = "Neural networks classify images. Neural networks generalize."
    vectors = make_feature_vectors(doc, [], LEX)
    keys = [v.stemmed_phrase for v in vectors]
    assert len(keys) == len(set(keys))
    stream = tokenize(doc, LEX.stop_words)
    from keyex.text_analysis import iterated_lovins_stem

    expected = {
        tuple(iterated_lovins_stem(t.lowered) for t in window)
        for window in iter_candidate_phrases(stream)
    }
    assert len(vectors) == len(expected)


def test_feature_invariants():
    doc = (
        "Neural networks classify images. Deep neural networks generalize "
        "better than shallow networks on image benchmarks."
    )
    vectors = make_feature_vectors(doc, ["neural networks", "image"], LEX)
    gold_count = 2
    assert sum(v.class_label for v in vectors) <= gold_count
    for v in vectors:
        assert v.num_words_phrase in (1, 2, 3)
        assert 0.0 < v.first_occur_phrase <= 1.0
        assert 0.0 < v.first_occur_word <= v.first_occur_phrase
        assert 0.0 < v.freq_phrase <= v.freq_word <= 1.0
        assert v.relative_length > 0.0
        assert v.proper_noun in (0, 1)
        assert v.final_adjective in (0, 1)
        assert v.common_verb in (0, 1)


def test_lexical_flags_match_extractor_conventions():
    doc = "Musical Pattern manage tests. Musical Pattern manage tests."
    vectors = make_feature_vectors(doc, [], LEX)
    by_phrase = {v.whole_phrase: v for v in vectors}
    assert by_phrase["Musical"].final_adjective == 1
    assert by_phrase["manage"].common_verb == 1
    # "Musical Pattern" is always capitalized and never seen lowercase
    assert by_phrase["Musical Pattern"].proper_noun == 1
    assert by_phrase["manage"].proper_noun == 0


def test_empty_document_no_vectors():
    assert make_feature_vectors("", [], LEX) == []
    assert make_feature_vectors("...", [], LEX) == []


def test_write_features_header_and_rows():
    doc = "alpha beams scan metal"
    vectors = make_feature_vectors(doc, ["alpha beams"], LEX)
    buffer = io.StringIO()
    write_features(vectors, buffer)
    rows = list(csv.reader(io.StringIO(buffer.getvalue())))
    assert rows[0] == list(FEATURE_COLUMNS)
    assert len(rows) == len(vectors) + 1
    header = rows[0]
    assert header[0] == "stemmed_phrase" and header[1] == "whole_phrase"
    assert header[-1] == "class"


def test_write_features_to_path(tmp_path):
    doc = "alpha beams scan metal"
    vectors = make_feature_vectors(doc, [], LEX)
    out = tmp_path / "features.csv"
    write_features(vectors, out)
    content = out.read_text(encoding="utf-8")
    assert content.startswith(",".join(FEATURE_COLUMNS))

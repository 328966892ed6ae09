"""Tests for the suffix-stripping stemmer and its iterated variant."""

import pytest
from hypothesis import given, strategies as st

from keyex.lovins import iterated_lovins_stem, lovins_stem

words = st.text(alphabet="abcdefghijklmnopqrstuvwxyz'", min_size=1, max_size=24)


def test_known_stems():
    assert lovins_stem("psychology") == "psycholog"
    assert lovins_stem("psychologist") == "psycholog"
    assert lovins_stem("policy") == "polic"
    assert lovins_stem("police") == "polic"
    assert lovins_stem("incredible") == "incred"


def test_iteration_reaches_fixpoint():
    assert lovins_stem("incredible") == "incred"
    assert lovins_stem("incred") == "incr"
    assert lovins_stem("incr") == "incr"
    assert iterated_lovins_stem("incredible") == "incr"
    assert iterated_lovins_stem("incr") == "incr"


def test_plural_and_adjective_conflation():
    assert iterated_lovins_stem("networks") == "network"
    assert iterated_lovins_stem("network") == "network"
    assert iterated_lovins_stem("neural") == "neur"
    assert iterated_lovins_stem("evolution") == "evolut"


def test_short_words_unchanged():
    # removal must leave at least two characters; 1-2 letter words never change
    assert lovins_stem("a") == "a"
    assert lovins_stem("ax") == "ax"
    assert lovins_stem("the") == "th"


def test_no_rule_matches():
    assert lovins_stem("xyzzyq") == "xyzzyq"


def test_recoding_rules():
    # undoubling, iev -> ief, respelling after removal
    assert lovins_stem("sitting") == "sit"
    assert lovins_stem("believes") == "belief"
    assert lovins_stem("absorption") == "absorb"
    assert lovins_stem("inclusion") == "inclus"


def test_case_folded_on_entry():
    assert lovins_stem("Psychology") == "psycholog"
    assert iterated_lovins_stem("NETWORKS") == "network"


@given(words)
def test_never_lengthens(word):
    assert len(lovins_stem(word)) <= len(word)


@given(words)
def test_iterated_at_most_single(word):
    assert len(iterated_lovins_stem(word)) <= len(lovins_stem(word))


@given(words)
def test_iterated_is_fixpoint(word):
    stem = iterated_lovins_stem(word)
    assert iterated_lovins_stem(stem) == stem

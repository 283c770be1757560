# -*- coding: utf-8 -*-
"""Module implements tests of :mod:`~keyphrase_bench.helpers.codec`."""
import random
import time
from pathlib import Path

import pytest

from keyphrase_bench.helpers.codec import (
    SEPARATORS,
    canonical_form,
    canonical_stem,
    join,
    normalize,
    parse,
    porter_stem,
)
from keyphrase_bench.helpers.tokenizer import is_punctuation


WORDS = (
    "graph",
    "theory",
    "deep",
    "learning",
    "state-of-the-art",
    "3.5",
    "U.S.",
    "networks",
    "parsing",
    "x",
)

NOISE = (",", ";", ",,,,", " ; ", " - ", "--", "...", " ", "  ", "\t", "-", "(", ")")


@pytest.fixture(scope="module")
def porter_reference(variables, logger):
    """Provide word/stem pairs of the published Porter reference vocabulary.

    Paths are read from the ``porter_vocabulary`` and ``porter_output``
    entries of ``--variables``.
    """
    vocabulary = variables.get("porter_vocabulary", None)
    output = variables.get("porter_output", None)

    if not vocabulary or not output:
        pytest.skip("Porter reference vocabulary not configured")

    with Path(vocabulary).open(encoding="utf-8") as words_file, Path(output).open(
        encoding="utf-8"
    ) as stems_file:
        pairs = [
            (word.strip(), stem.strip()) for word, stem in zip(words_file, stems_file)
        ]

    logger.info("Loaded %d reference pairs", len(pairs))

    return pairs


@pytest.mark.usefixtures("logger")
class TestParse:
    """Test implementation of :func:`~keyphrase_bench.helpers.codec.parse`."""

    @pytest.mark.parametrize(
        "keyphrase_string,expected",
        [
            (
                "health care,,,,immune system; human -; metabolism, immunity,,,,",
                ["health care", "immune system", "human", "metabolism", "immunity"],
            ),
            ("", []),
            (None, []),
            (",,, ;; - ,", []),
            ("  deep   learning ,parsing", ["deep learning", "parsing"]),
            ("single", ["single"]),
        ],
    )
    def test_parse(self, logger, keyphrase_string, expected):
        """Test splitting of noisy keyphrase strings."""
        phrases = parse(keyphrase_string)

        logger.info("Parsed %r into %s", keyphrase_string, phrases)

        assert phrases == expected  # noqa

    def test_join_parse(self):
        """Test that parsing a joined list returns the clean list."""
        phrases = ["health care", "immune system", "human"]

        assert join(phrases) == "health care, immune system, human"  # noqa
        assert parse(join(phrases)) == phrases  # noqa


@pytest.mark.usefixtures("logger")
class TestStemming:
    """Test Porter stemming and canonical forms."""

    @pytest.mark.parametrize(
        "word,stem",
        [
            ("caresses", "caress"),
            ("ponies", "poni"),
            ("cats", "cat"),
            ("feed", "feed"),
            ("agreed", "agre"),
            ("plastered", "plaster"),
            ("motoring", "motor"),
            ("sing", "sing"),
            ("conflated", "conflat"),
            ("troubled", "troubl"),
            ("sized", "size"),
            ("hopping", "hop"),
            ("falling", "fall"),
            ("filing", "file"),
            ("happy", "happi"),
            ("relational", "relat"),
            ("conditional", "condit"),
            ("generalization", "gener"),
            ("oscillators", "oscil"),
            ("images", "imag"),
            ("segmentation", "segment"),
            ("Networks", "network"),
        ],
    )
    def test_porter_stem(self, word, stem):
        """Test curated pairs of the reference algorithm."""
        assert porter_stem(word) == stem  # noqa

    def test_canonical_stem_fixed_point(self):
        """Test that canonical stems are stable under stemming."""
        assert porter_stem("agreed") == "agre"  # noqa
        assert canonical_stem("agreed") == "agr"  # noqa
        assert porter_stem(canonical_stem("agreed")) == canonical_stem("agreed")  # noqa

    def test_porter_reference_vocabulary(self, logger, porter_reference):
        """Test the stemmer against every pair of the reference vocabulary."""
        timer_start = time.time()

        mismatches = [
            (word, stem, porter_stem(word))
            for word, stem in porter_reference
            if porter_stem(word) != stem
        ]

        duration = time.time() - timer_start

        logger.info("Stemmed %d words in %.2f s", len(porter_reference), duration)

        assert not mismatches, mismatches[:10]  # noqa
        assert duration < 5.0  # noqa


@pytest.mark.usefixtures("logger")
class TestNormalize:
    """Test implementation of :func:`~keyphrase_bench.helpers.codec.normalize`."""

    @pytest.mark.parametrize(
        "phrases,expected",
        [
            (["Neural Networks", "neural network"], ["neural network"]),
            (
                ["image segmentation", "Images Segmentation", "parsing"],
                ["imag segment", "par"],
            ),
            ([], []),
            (["agreed terms", "agreeing term"], ["agr term"]),
            (["graph", "graphs", "graphing"], ["graph"]),
        ],
    )
    def test_normalize(self, phrases, expected):
        """Test canonicalization and first-occurrence deduplication."""
        assert normalize(phrases) == expected  # noqa

    @pytest.mark.parametrize(
        "phrases",
        [
            ["agreed", "generalization of networks", "the conditional sky"],
            ["oscillators", "feed", "hopping relational databases"],
        ],
    )
    def test_normalize_idempotent(self, phrases):
        """Test that normalizing a normalized list changes nothing."""
        normalized = normalize(phrases)

        assert normalize(normalized) == normalized  # noqa

    def test_canonical_form(self):
        """Test per-token canonical forms."""
        assert canonical_form("Deep  Neural Networks") == "deep neural network"  # noqa


@pytest.fixture(scope="module")
def noisy_strings():
    """Provide random keyphrase strings with separator and punctuation noise."""
    generator = random.Random(23)

    return [
        "".join(
            generator.choice(WORDS if generator.random() < 0.5 else NOISE)
            for _ in range(generator.randint(0, 25))
        )
        for _ in range(1000)
    ]


@pytest.fixture(scope="module")
def random_lists():
    """Provide random lists of clean phrases."""
    generator = random.Random(29)

    return [
        [
            " ".join(generator.choices(WORDS, k=generator.randint(1, 4)))
            for _ in range(generator.randint(0, 8))
        ]
        for _ in range(1000)
    ]


@pytest.mark.usefixtures("logger")
class TestParseFuzz:
    """Test properties of :func:`~keyphrase_bench.helpers.codec.parse` on
    random input."""

    def test_clean_phrases(self, logger, noisy_strings):
        """Test that no phrase is empty, punctuation-only or carries noise."""
        for keyphrase_string in noisy_strings:
            for phrase in parse(keyphrase_string):
                assert phrase  # noqa
                assert phrase == " ".join(phrase.split())  # noqa
                assert not SEPARATORS.search(phrase)  # noqa
                assert not any(is_punctuation(token) for token in phrase.split())  # noqa

        logger.info("Parsed %d noisy strings", len(noisy_strings))

    def test_parse_stable(self, noisy_strings):
        """Test that parsing a joined parse result changes nothing."""
        for keyphrase_string in noisy_strings:
            phrases = parse(keyphrase_string)

            assert parse(join(phrases)) == phrases  # noqa

    def test_round_trip(self, random_lists):
        """Test that clean lists survive joining and parsing."""
        for phrases in random_lists:
            assert parse(join(phrases)) == phrases  # noqa

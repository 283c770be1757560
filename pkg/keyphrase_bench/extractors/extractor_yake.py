# -*- coding: utf-8 -*-
r"""Module exports statistical feature extractor :class:`ExtractorYake`.

:class:`ExtractorYake` scores every term (stem of a content token) with five
local features and combines the term scores of a candidate into a phrase
score. Lower scores are better.

Term features, for a term with frequency :math:`TF`:

* casing: :math:`C / (1 + \ln TF)` where :math:`C` counts acronym occurrences
  and capitalized occurrences that do not start a sentence;
* position: :math:`\ln \ln (3 + M)` where :math:`M` is the median index of
  the sentences the term occurs in;
* frequency: :math:`TF / (\mu + \sigma)` over the frequencies of all terms;
* relatedness: :math:`1 + (D_L + D_R) \cdot TF / \max TF` where :math:`D_L`
  and :math:`D_R` are the ratios of distinct to total left and right
  neighbours within the co-occurrence window;
* sentence spread: fraction of sentences containing the term.

A term score is
:math:`rel \cdot pos / (case + freq / rel + spread / rel)` and a candidate
score is :math:`\prod S(t) / (TF_{phrase} \cdot (1 + \sum S(t)))`.

Note
----
Casing is only informative when the original cased text is supplied; for
lowercased corpora the casing feature is zero for every term.

Example
-------
Use the module and :class:`ExtractorYake` like this:

.. code-block:: python

    from keyphrase_bench.extractors.config import ExtractorConfig
    from keyphrase_bench.extractors.extractor_yake import ExtractorYake

    extractor = ExtractorYake(config=ExtractorConfig(n_keyphrases=7))

    phrases = extractor.run(title_tokens, abstract_tokens, cased_text=text)
"""
import math
from collections import defaultdict
from dataclasses import dataclass
from logging import getLogger
from time import time

import numpy as np

from .candidates import sentence_ids
from .extractor_abstract import ExtractorAbstract
from ..helpers.codec import porter_stem
from ..helpers.tokenizer import is_punctuation, tokenize


@dataclass(frozen=True)
class TermStats:
    """Per-term statistics of one document.

    Attributes
    ----------
    term : :obj:`str`
        Porter stem of the term.

    frequency : :obj:`int`
        Number of occurrences.

    first_position : :obj:`int`
        Token offset of the first occurrence.

    casing_count : :obj:`int`
        Acronym or non-initial capitalized occurrences in the cased text.

    left_right_dispersion : :obj:`float`
        Mean of left and right distinct-neighbour ratios, in ``[0, 1]``.

    sentence_spread : :obj:`float`
        Fraction of sentences containing the term, in ``[0, 1]``.

    median_sentence : :obj:`float`
        Median sentence index of the occurrences.

    """

    term: str
    frequency: int
    first_position: int
    casing_count: int
    left_right_dispersion: float
    sentence_spread: float
    median_sentence: float


def term_score(casing, position, frequency, relatedness, spread):
    """Combine term features into a term score (lower is better).

    Parameters
    ----------
    casing : :obj:`float`
        Casing feature, ``>= 0``.

    position : :obj:`float`
        Position feature, ``> 0``.

    frequency : :obj:`float`
        Normalized frequency feature, ``> 0``.

    relatedness : :obj:`float`
        Relatedness feature, ``>= 1``.

    spread : :obj:`float`
        Sentence spread feature, ``> 0``.

    Returns
    -------
    :obj:`float`
        Term score.

    """
    return (relatedness * position) / (
        casing + frequency / relatedness + spread / relatedness
    )


def _context_blocks(doc_tokens, sentences, breaks):
    """Return a block id per token; neighbours only count inside one block."""
    blocks = []
    current = 0

    for offset, token in enumerate(doc_tokens):
        if is_punctuation(token):
            current += 1
            blocks.append(None)
            continue

        new_sentence = offset and sentences[offset] != sentences[offset - 1]

        if offset in breaks or new_sentence:
            current += 1

        blocks.append(current)

    return blocks


def _distinct_ratio(neighbours):
    """Return distinct / total neighbours, ``0.0`` without neighbours."""
    return len(set(neighbours)) / len(neighbours) if neighbours else 0.0


def compute_term_stats(doc_tokens, cased_tokens, stopwords, window=1, breaks=()):
    """Compute :class:`TermStats` of every content term of a document.

    Parameters
    ----------
    doc_tokens : :obj:`list` of :obj:`str`
        Lowercased document tokens.

    cased_tokens : :obj:`list` of :obj:`str`
        The same tokens before lowercasing.

    stopwords : :obj:`frozenset`
        Words that are not terms.

    window : :obj:`int`, optional
        Neighbours on each side counted as context.
        (default 1)

    breaks : :obj:`set` of :obj:`int`, optional
        Offsets that start a new sentence.
        (default no breaks)

    Returns
    -------
    :obj:`dict`
        Stem to :class:`TermStats`, in first-occurrence order.

    """
    sentences = sentence_ids(doc_tokens, breaks)
    blocks = _context_blocks(doc_tokens, sentences, breaks)
    n_sentences = sentences[-1] + 1 if sentences else 0

    positions = defaultdict(list)
    casing = defaultdict(int)
    left = defaultdict(list)
    right = defaultdict(list)

    for offset, token in enumerate(doc_tokens):
        if token.lower() in stopwords or is_punctuation(token):
            continue

        term = porter_stem(token)
        positions[term].append(offset)

        cased = cased_tokens[offset]
        sentence_start = offset == 0 or sentences[offset] != sentences[offset - 1]

        if (len(cased) > 1 and cased.isupper()) or (
            cased[:1].isupper() and not sentence_start
        ):
            casing[term] += 1

        for neighbour in range(max(0, offset - window), offset):
            if blocks[neighbour] == blocks[offset]:
                left[term].append(doc_tokens[neighbour])

        for neighbour in range(offset + 1, min(len(doc_tokens), offset + window + 1)):
            if blocks[neighbour] == blocks[offset]:
                right[term].append(doc_tokens[neighbour])

    stats = {}

    for term, offsets in positions.items():
        term_sentences = [sentences[offset] for offset in offsets]

        stats[term] = TermStats(
            term=term,
            frequency=len(offsets),
            first_position=offsets[0],
            casing_count=casing[term],
            left_right_dispersion=(
                _distinct_ratio(left[term]) + _distinct_ratio(right[term])
            )
            / 2.0,
            sentence_spread=len(set(term_sentences)) / n_sentences,
            median_sentence=float(np.median(term_sentences)),
        )

    return stats


def score_terms(stats):
    """Return the term score of every term of ``stats``."""
    if not stats:
        return {}

    frequencies = np.array([term.frequency for term in stats.values()], dtype=float)
    normalizer = frequencies.mean() + frequencies.std()
    max_frequency = frequencies.max()

    scores = {}

    for term, term_stats in stats.items():
        tf = term_stats.frequency

        scores[term] = term_score(
            casing=term_stats.casing_count / (1.0 + math.log(tf)),
            position=math.log(math.log(3.0 + term_stats.median_sentence)),
            frequency=tf / normalizer,
            relatedness=1.0
            + 2.0 * term_stats.left_right_dispersion * tf / max_frequency,
            spread=term_stats.sentence_spread,
        )

    return scores


def phrase_score(term_scores, frequency):
    """Combine the term scores of a phrase occurring ``frequency`` times."""
    return math.prod(term_scores) / (frequency * (1.0 + math.fsum(term_scores)))


class ExtractorYake(ExtractorAbstract):
    """Class for statistical feature keyphrase extraction.

    Performs candidate extraction of the parent
    :class:`~keyphrase_bench.extractors.extractor_abstract.ExtractorAbstract`,
    then scores candidates from their term features. Ties are broken by
    earlier first occurrence, then lexicographic order.

    Attributes
    ----------
    __logger : :obj:`~logging.Logger`
        Channel to be used for log output specific to the module.

    """

    __logger = getLogger(__name__)

    method = "yake"

    def _cased_tokens(self, doc_tokens, cased_text):
        """Align tokens of ``cased_text`` with ``doc_tokens``."""
        if cased_text is None:
            return doc_tokens

        cased_tokens = tokenize(cased_text)

        if [token.lower() for token in cased_tokens] != list(doc_tokens):
            self.__logger.warning(
                "cased text does not align with document tokens, ignoring casing"
            )
            return doc_tokens

        return cased_tokens

    def rank(self, title_tokens, abstract_tokens, cased_text=None):
        """Rank candidates by phrase score, lowest first.

        Parameters
        ----------
        title_tokens : :obj:`list` of :obj:`str`
            Lowercased title tokens.

        abstract_tokens : :obj:`list` of :obj:`str`
            Lowercased abstract tokens.

        cased_text : :obj:`str`, optional
            Title and abstract before lowercasing, for the casing feature.
            (default :obj:`None`)

        Returns
        -------
        :obj:`list` of :class:`CandidatePhrase`
            Scored candidates, best first.

        """
        candidates = super().rank(title_tokens, abstract_tokens, cased_text)

        action_tag = "scoring"

        timer_start = time()

        doc_tokens = list(title_tokens) + list(abstract_tokens)
        breaks = self.breaks(title_tokens, abstract_tokens)

        stats = compute_term_stats(
            doc_tokens,
            self._cased_tokens(doc_tokens, cased_text),
            self._stopwords,
            window=self._config.cooccurrence_window,
            breaks=breaks,
        )
        scores = score_terms(stats)

        for candidate in candidates:
            candidate.score = phrase_score(
                [scores[stem] for stem in candidate.stems], candidate.frequency
            )

        ranked = sorted(
            candidates,
            key=lambda candidate: (
                candidate.score,
                candidate.first_offset,
                candidate.surface,
            ),
        )

        timer_stop = time()

        self._update_metrics(
            tag=action_tag, start=timer_start, finish=timer_stop, success=bool(ranked)
        )

        return ranked


def yake_extract(
    title_tokens, abstract_tokens, original_cased_text, config, stopwords=None
):
    """Extract up to ``config.n_keyphrases`` keyphrases with :class:`ExtractorYake`."""
    extractor = ExtractorYake(config=config, stopwords=stopwords)

    return extractor.run(title_tokens, abstract_tokens, cased_text=original_cased_text)

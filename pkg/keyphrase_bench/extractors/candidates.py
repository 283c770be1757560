# -*- coding: utf-8 -*-
r"""Module extracts candidate phrases from a tokenized document.

Candidates are built without a part-of-speech tagger: the document is cut
into maximal runs of tokens that are neither stopwords nor punctuation, and
every contiguous sub-span of a run of at most ``max_phrase_len`` tokens is a
candidate. Identical surface candidates are merged with all their occurrence
spans.

Example
-------
::

    from keyphrase_bench.extractors.candidates import extract_candidates
    from keyphrase_bench.extractors.config import ExtractorConfig

    tokens = "the quick brown fox over the lazy dog".split()
    candidates = extract_candidates(
        tokens, ExtractorConfig(), stopwords=frozenset({"the", "over"})
    )

    [candidate.surface for candidate in candidates]
    # ['quick', 'quick brown', 'quick brown fox', 'brown', 'brown fox', 'fox',
    #  'lazy', 'lazy dog', 'dog']

"""
from dataclasses import dataclass, field
from typing import List, Tuple

from ..helpers.codec import canonical_form, porter_stem
from ..helpers.tokenizer import SENTENCE_END_TOKENS, is_punctuation, load_stopwords


@dataclass
class CandidatePhrase:
    """Candidate phrase with its occurrences in the document.

    Attributes
    ----------
    tokens : :obj:`tuple` of :obj:`str`
        Surface tokens.

    stems : :obj:`tuple` of :obj:`str`
        Porter stem of every token.

    occurrences : :obj:`list` of :obj:`tuple`
        ``(start, end)`` token offsets of every occurrence, ``end`` exclusive,
        in document order.

    score : :obj:`float`
        Ranking score, set by the extractor.

    """

    tokens: Tuple[str, ...]
    stems: Tuple[str, ...]
    occurrences: List[Tuple[int, int]] = field(default_factory=list)
    score: float = 0.0

    @property
    def surface(self):
        """:obj:`str` Single-space joined surface tokens."""
        return " ".join(self.tokens)

    @property
    def canonical(self):
        """:obj:`str` Canonical comparison form of the phrase."""
        return canonical_form(self.surface)

    @property
    def first_offset(self):
        """:obj:`int` Start offset of the first occurrence."""
        return self.occurrences[0][0]

    @property
    def frequency(self):
        """:obj:`int` Number of occurrences."""
        return len(self.occurrences)

    @property
    def offsets(self):
        """:obj:`list` Start offsets of all occurrences."""
        return [start for start, _ in self.occurrences]


def sentence_ids(doc_tokens, breaks=()):
    """Return the sentence index of every token.

    A sentence ends after a sentence-final punctuation token and before every
    offset in ``breaks`` (e.g. the start of the abstract after the title).
    """
    ids = []
    current = 0
    pending = False

    for offset, token in enumerate(doc_tokens):
        if offset and (pending or offset in breaks):
            current += 1

        pending = token in SENTENCE_END_TOKENS
        ids.append(current)

    return ids


def chunk_runs(doc_tokens, stopwords, breaks=()):
    """Return the maximal runs of content token offsets.

    Runs end at stopwords, punctuation tokens and offsets in ``breaks``.
    """
    runs = []
    current = []

    for offset, token in enumerate(doc_tokens):
        if offset in breaks and current:
            runs.append(current)
            current = []

        if token.lower() in stopwords or is_punctuation(token):
            if current:
                runs.append(current)
                current = []
            continue

        current.append(offset)

    if current:
        runs.append(current)

    return runs


def extract_candidates(doc_tokens, config, stopwords=None, breaks=()):
    """Extract candidate phrases of a lowercased document.

    Parameters
    ----------
    doc_tokens : :obj:`list` of :obj:`str`
        Lowercased tokens of title and abstract.

    config : :class:`~keyphrase_bench.extractors.config.ExtractorConfig`
        Provides ``max_phrase_len``.

    stopwords : :obj:`frozenset`, optional
        Words that delimit candidates.
        (default bundled English stopword list)

    breaks : :obj:`set` of :obj:`int`, optional
        Offsets where a new chunk must start.
        (default no breaks)

    Returns
    -------
    :obj:`list` of :class:`CandidatePhrase`
        Candidates ordered by first occurrence, then by length.

    """
    stopwords = load_stopwords() if stopwords is None else stopwords

    candidates = {}

    for run in chunk_runs(doc_tokens, stopwords, breaks):
        for index, start in enumerate(run):
            longest = min(config.max_phrase_len, len(run) - index)

            for length in range(1, longest + 1):
                span = (start, start + length)
                tokens = tuple(doc_tokens[span[0] : span[1]])

                candidate = candidates.get(tokens)
                if candidate is None:
                    candidate = CandidatePhrase(
                        tokens=tokens,
                        stems=tuple(porter_stem(token) for token in tokens),
                    )
                    candidates[tokens] = candidate

                candidate.occurrences.append(span)

    return list(candidates.values())

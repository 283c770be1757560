# -*- coding: utf-8 -*-
r"""Module implements record cleaning, filtering and model normalization.

Filtering follows the release rules of the corpus:

* records whose abstract is not English are removed, using the ratio of
  function words among the abstract's word tokens;
* title and abstract are lowercased and tokenized;
* records with fewer abstract, title or keyword tokens than the split's
  :class:`~keyphrase_bench.corpus.records.FilterThresholds` are removed.

Model normalization replaces every decimal digit with ``#`` and truncates
source and target to :class:`~keyphrase_bench.corpus.records.ModelTextLimits`.

Example
-------
::

    from keyphrase_bench.corpus.preprocess import clean_and_filter
    from keyphrase_bench.corpus.records import FilterThresholds, RawRecord

    outcome = clean_and_filter(
        RawRecord(title="...", abstract="...", keywords=("a b", "c")),
        FilterThresholds.for_split("test"),
    )

    if not outcome.kept:
        print(outcome.reason)

"""
import re
from collections import Counter
from logging import getLogger

from .records import FilterOutcome, ModelExample, PaperRecord
from ..helpers.codec import parse
from ..helpers.tokenizer import (
    is_punctuation,
    load_function_words,
    strip_section_tags,
    tokenize,
)


_logger = getLogger(__name__)

DEFAULT_ENGLISH_THRESHOLD = 0.15

REJECT_EMPTY_ABSTRACT = "empty_abstract"
REJECT_NOT_ENGLISH = "not_english"
REJECT_ABSTRACT_TOO_SHORT = "abstract_too_short"
REJECT_TITLE_TOO_SHORT = "title_too_short"
REJECT_KEYWORDS_TOO_SHORT = "keywords_too_short"

REJECTION_REASONS = (
    REJECT_EMPTY_ABSTRACT,
    REJECT_NOT_ENGLISH,
    REJECT_ABSTRACT_TOO_SHORT,
    REJECT_TITLE_TOO_SHORT,
    REJECT_KEYWORDS_TOO_SHORT,
)

_DIGIT = re.compile(r"\d")


def english_ratio(text, function_words=None):
    """Return the fraction of word tokens of ``text`` that are function words.

    Punctuation-only tokens are not counted; text without word tokens has a
    ratio of ``0.0``.
    """
    function_words = function_words or load_function_words()

    words = [token for token in tokenize(text.lower()) if not is_punctuation(token)]

    if not words:
        return 0.0

    return sum(1 for word in words if word in function_words) / len(words)


def detect_english(record, function_words=None, threshold=DEFAULT_ENGLISH_THRESHOLD):
    """Check whether the abstract of ``record`` is English.

    Parameters
    ----------
    record : :class:`~keyphrase_bench.corpus.records.RawRecord`
        Record with a non-empty abstract.

    function_words : :obj:`frozenset`, optional
        English function words.
        (default bundled list)

    threshold : :obj:`float`, optional
        Minimum function word ratio.
        (default 0.15)

    Returns
    -------
    :obj:`bool`
        :obj:`True`, if the function word ratio reaches ``threshold``.

    """
    return english_ratio(record.abstract, function_words) >= threshold


def _keyword_token_count(keyphrase_string):
    """Count word tokens of the parsed keyphrases of a keyphrase string."""
    return sum(
        1
        for phrase in parse(keyphrase_string)
        for token in tokenize(phrase)
        if not is_punctuation(token)
    )


def clean_and_filter(
    raw,
    thresholds,
    split="train",
    function_words=None,
    english_threshold=DEFAULT_ENGLISH_THRESHOLD,
    strip_tags=False,
):
    """Clean ``raw`` and decide whether it is kept.

    Parameters
    ----------
    raw : :class:`~keyphrase_bench.corpus.records.RawRecord`
        Record to clean.

    thresholds : :class:`~keyphrase_bench.corpus.records.FilterThresholds`
        Inclusive minimum token counts.

    split : :obj:`str`, optional
        Split name stored on the kept record.
        (default ``train``)

    function_words : :obj:`frozenset`, optional
        English function words for language identification.
        (default bundled list)

    english_threshold : :obj:`float`, optional
        Minimum function word ratio.
        (default 0.15)

    strip_tags : :obj:`bool`, optional
        Remove layout markers (``--T``, ``Figure 2``) before tokenizing.
        (default :obj:`False`)

    Returns
    -------
    :class:`~keyphrase_bench.corpus.records.FilterOutcome`
        Kept record, or the machine-readable rejection reason.

    """
    if strip_tags:
        raw = type(raw)(
            title=strip_section_tags(raw.title),
            abstract=strip_section_tags(raw.abstract),
            keywords=raw.keywords,
        )

    if not raw.abstract.strip():
        return FilterOutcome(reason=REJECT_EMPTY_ABSTRACT)

    if not detect_english(raw, function_words, english_threshold):
        return FilterOutcome(reason=REJECT_NOT_ENGLISH)

    record = PaperRecord.from_raw(raw, split=split)

    counts = {
        "abstract": len(record.abstract_tokens),
        "title": len(record.title_tokens),
        "keywords": _keyword_token_count(record.keyphrase_string),
    }

    if counts["abstract"] < thresholds.min_abstract_tokens:
        return FilterOutcome(reason=REJECT_ABSTRACT_TOO_SHORT, counts=counts)

    if counts["title"] < thresholds.min_title_tokens:
        return FilterOutcome(reason=REJECT_TITLE_TOO_SHORT, counts=counts)

    if counts["keywords"] < thresholds.min_keyword_tokens:
        return FilterOutcome(reason=REJECT_KEYWORDS_TOO_SHORT, counts=counts)

    return FilterOutcome(record=record, counts=counts)


def mask_digits(token):
    """Replace every decimal digit character of ``token`` with ``#``."""
    return _DIGIT.sub("#", token)


def normalize_for_model(record, limits):
    """Build the model-ready example of ``record``.

    Parameters
    ----------
    record : :class:`~keyphrase_bench.corpus.records.PaperRecord`
        Kept record.

    limits : :class:`~keyphrase_bench.corpus.records.ModelTextLimits`
        Source and target length limits.

    Returns
    -------
    :class:`~keyphrase_bench.corpus.records.ModelExample`
        Digit-masked source (title + abstract) and target (tokenized keyphrase
        string), truncated to the limits.

    """
    source = record.doc_tokens[: limits.max_source_tokens]
    target = tokenize(record.keyphrase_string)[: limits.max_target_tokens]

    return ModelExample(
        source=tuple(mask_digits(token) for token in source),
        target=tuple(mask_digits(token) for token in target),
    )


def count_tokens(examples):
    """Count source and target tokens of ``examples``.

    Partial counts of disjoint example streams add up with ``+`` to the
    counts of the whole stream.
    """
    counts = Counter()

    for example in examples:
        counts.update(example.source)
        counts.update(example.target)

    return counts


def rank_tokens(counts, cap):
    """Return the ``cap`` most frequent ``(token, count)`` pairs.

    Ties are broken by lexicographic token order, so the result only depends
    on ``counts``.
    """
    if cap < 1:
        _logger.error("Exception: vocabulary cap must be positive, got %s", cap)
        raise ValueError("invalid_config: vocabulary cap must be > 0")

    return sorted(counts.items(), key=lambda item: (-item[1], item[0]))[:cap]


def build_vocab(examples, cap):
    """Build a vocabulary of the ``cap`` most frequent tokens.

    Parameters
    ----------
    examples : iterable of :class:`~keyphrase_bench.corpus.records.ModelExample`
        Model-ready examples.

    cap : :obj:`int`
        Maximum vocabulary size.

    Returns
    -------
    :obj:`dict`
        Token to rank (``0`` is the most frequent token).

    """
    ranked = rank_tokens(count_tokens(examples), cap)

    return {token: rank for rank, (token, _) in enumerate(ranked)}

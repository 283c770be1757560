# -*- coding: utf-8 -*-
r"""Module maps extraction method names to extractor classes.

:func:`extract_record` is a module-level function so that it can be sent to
worker processes of :class:`~keyphrase_bench.helpers.pool.WorkerPool` through
:func:`functools.partial`.
"""
from functools import lru_cache
from logging import getLogger

from .extractor_topicrank import ExtractorTopicRank
from .extractor_yake import ExtractorYake
from ..corpus.records import PaperRecord


_logger = getLogger(__name__)

EXTRACTORS = {
    ExtractorYake.method: ExtractorYake,
    ExtractorTopicRank.method: ExtractorTopicRank,
}


def get_extractor(method, config=None, stopwords=None):
    """Create the extractor registered as ``method``.

    Raises
    ------
    :obj:`ValueError`
        If ``method`` is not registered (``unknown_method``).

    """
    try:
        extractor_class = EXTRACTORS[method]
    except KeyError:
        _logger.error("Exception: unknown extraction method '%s'", method)
        raise ValueError(
            "unknown_method: '{}', expected one of {}".format(
                method, ", ".join(sorted(EXTRACTORS))
            )
        )

    return extractor_class(config=config, stopwords=stopwords)


@lru_cache(maxsize=8)
def _cached_extractor(method, config, stopwords):
    """Return one extractor per process and parameter set."""
    return get_extractor(method, config=config, stopwords=stopwords)


def extract_record(record, method, config, stopwords=None, n=None):
    """Extract keyphrases of one raw record.

    Parameters
    ----------
    record : :class:`~keyphrase_bench.corpus.records.RawRecord`
        Record whose title and abstract are lowercased and tokenized first.

    method : :obj:`str`
        Registered method name.

    config : :class:`~keyphrase_bench.extractors.config.ExtractorConfig`
        Extraction parameters.

    stopwords : :obj:`frozenset`, optional
        Candidate delimiters.
        (default bundled list)

    n : :obj:`int`, optional
        Number of keyphrases.
        (default ``config.n_keyphrases``)

    Returns
    -------
    :obj:`list` of :obj:`str`
        Keyphrase list, best first.

    """
    extractor = _cached_extractor(method, config, stopwords)
    paper = PaperRecord.from_raw(record)

    return extractor.run(
        paper.title_tokens, paper.abstract_tokens, cased_text=record.cased_text, n=n
    )

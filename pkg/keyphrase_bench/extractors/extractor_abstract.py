# -*- coding: utf-8 -*-
"""Module exports generic extractor implementation :class:`ExtractorAbstract`.

:class:`ExtractorAbstract` is used as a base class for all other extractor
subclasses. Its main purpose is to provide a common interface for ranking
candidates and returning keyphrase lists, and to gather per-stage metrics. It
also establishes common extractor properties like ``_config`` or
``_stopwords``.

The base class ranks candidates by first occurrence, which makes it a usable
positional baseline on its own.

Example
-------
Use the module and :class:`ExtractorAbstract` like this for more specific
extractor implementations.

.. code-block:: python

    from time import time

    from keyphrase_bench.extractors.extractor_abstract import ExtractorAbstract


    class ExtractorLongest(ExtractorAbstract):
        method = "longest"

        def rank(self, title_tokens, abstract_tokens, cased_text=None):
            candidates = super().rank(title_tokens, abstract_tokens, cased_text)

            action_tag = "scoring"

            # get stage start timestamp
            timer_start = time()

            # longer candidates first, stable on document order
            ranked = sorted(candidates, key=lambda c: -len(c.tokens))

            # get stage finish timestamp
            timer_stop = time()

            self._update_metrics(
                tag=action_tag, start=timer_start, finish=timer_stop, success=True
            )

            return ranked
"""
from logging import getLogger
from time import time

from .candidates import extract_candidates
from .config import ExtractorConfig
from ..helpers.tokenizer import load_stopwords


class ExtractorAbstract:
    """Class for generic extractor maintaining metrics.

    Ranks candidates by their first occurrence; subclasses implement specific
    scoring by overriding :meth:`rank`.

    Attributes
    ----------
    __logger : :obj:`~logging.Logger`
        Channel to be used for log output specific to the module.

    method : :obj:`str`
        Name of the extraction method, reflected in metrics and reports.

    _config : :class:`~keyphrase_bench.extractors.config.ExtractorConfig`
        Extraction parameters.

    _stopwords : :obj:`frozenset`
        Words that delimit candidates.

    _extractor_metrics : :obj:`dict`
        Dictionary to store stage metrics of the latest document.

    """

    __logger = getLogger(__name__)

    method = "first_occurrence"

    def __init__(self, *args, config=None, stopwords=None, **kwargs):
        """Initialize class instance.

        Keyword Arguments
        -----------------
        config : :class:`~keyphrase_bench.extractors.config.ExtractorConfig`, optional
            Extraction parameters.
            (default ``ExtractorConfig()``)

        stopwords : :obj:`frozenset`, optional
            Words that delimit candidates.
            (default bundled English stopword list)

        """
        self._config = config or ExtractorConfig()
        self._stopwords = load_stopwords() if stopwords is None else stopwords

        self._extractor_metrics = {}

        self.__logger.debug(
            "Created instance from %s(config='%s', stopwords=%d words)",
            self.__class__.__name__,
            self._config,
            len(self._stopwords),
        )

    def _update_metrics(self, tag="", start=0.0, finish=0.0, success=False, **kwargs):
        """Record latest metrics.

        Updates metrics with provided values for specific stage ``tag``, so
        that stages of nested subclasses are kept apart.

        Keyword Arguments
        -----------------
        tag : :obj:`str`
            Stage tag to report metrics under (e.g. "candidates", "ranking").

        start : :obj:`float`
            UNIX epoch timestamp when stage started.

        finish : :obj:`float`
            UNIX epoch timestamp when stage finished.

        success : :obj:`bool`
            Flag indicating if stage produced any result (:obj:`True`)
            or not (:obj:`False`).

        """
        metrics_dict = {}

        metrics_dict["success"] = success

        metrics_dict["timestamp_start"] = start
        metrics_dict["timestamp_finish"] = finish

        metrics_dict["duration"] = finish - start

        self._extractor_metrics.update({tag: metrics_dict})

    @property
    def metrics(self):
        """:obj:`dict` Stage metrics of the latest document, keyed by method name."""
        return {self.method: self._extractor_metrics}

    @property
    def config(self):
        """:class:`ExtractorConfig` Parameters in use."""
        return self._config

    @staticmethod
    def breaks(title_tokens, abstract_tokens):
        """Return chunk break offsets separating title from abstract."""
        if title_tokens and abstract_tokens:
            return frozenset({len(title_tokens)})

        return frozenset()

    def rank(self, title_tokens, abstract_tokens, cased_text=None):
        """Extract candidates and rank them by first occurrence.

        Parameters
        ----------
        title_tokens : :obj:`list` of :obj:`str`
            Lowercased title tokens.

        abstract_tokens : :obj:`list` of :obj:`str`
            Lowercased abstract tokens.

        cased_text : :obj:`str`, optional
            Title and abstract before lowercasing; unused by the base class.
            (default :obj:`None`)

        Returns
        -------
        :obj:`list` of :class:`CandidatePhrase`
            All candidates, best first.

        """
        action_tag = "candidates"

        timer_start = time()

        doc_tokens = list(title_tokens) + list(abstract_tokens)

        candidates = extract_candidates(
            doc_tokens,
            self._config,
            stopwords=self._stopwords,
            breaks=self.breaks(title_tokens, abstract_tokens),
        )

        timer_stop = time()

        self._update_metrics(
            tag=action_tag,
            start=timer_start,
            finish=timer_stop,
            success=bool(candidates),
        )

        return candidates

    def run(self, title_tokens, abstract_tokens, cased_text=None, n=None):
        """Run extraction on one document.

        Ranks candidates with :meth:`rank`, removes stem-level duplicates and
        keeps the ``n`` best, so that a shorter output is always a prefix of a
        longer one.

        Parameters
        ----------
        title_tokens : :obj:`list` of :obj:`str`
            Lowercased title tokens.

        abstract_tokens : :obj:`list` of :obj:`str`
            Lowercased abstract tokens.

        cased_text : :obj:`str`, optional
            Title and abstract before lowercasing.
            (default :obj:`None`)

        n : :obj:`int`, optional
            Number of keyphrases to return.
            (default ``config.n_keyphrases``)

        Returns
        -------
        :obj:`list` of :obj:`str`
            Keyphrase list, best first.

        """
        self._extractor_metrics = {}

        limit = n or self._config.n_keyphrases

        seen = set()
        phrases = []

        for candidate in self.rank(title_tokens, abstract_tokens, cased_text):
            if len(phrases) >= limit:
                break

            if candidate.canonical in seen:
                continue

            seen.add(candidate.canonical)
            phrases.append(candidate.surface)

        self.__logger.debug("Extractor metrics: %s", self.metrics)

        return phrases

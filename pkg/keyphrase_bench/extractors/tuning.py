# -*- coding: utf-8 -*-
r"""Module tunes extractor parameters on a validation corpus.

A grid is either a list of parameter mappings, tried in list order, or a
mapping of parameter names to value lists, expanded to the cartesian product
in key order. Every grid point is scored by the macro-averaged F1@k of the
extractor on the validation documents; the first best point wins.

Example
-------
::

    from keyphrase_bench.extractors.tuning import tune

    result = tune("yake", validation, {"max_phrase_len": [1, 2, 3]}, k=5)

    result.best.max_phrase_len
    [(row.point, row.score) for row in result.scoreboard]
"""
import math
from dataclasses import dataclass
from functools import partial
from itertools import product
from logging import getLogger
from typing import Dict, List

from .config import ExtractorConfig
from .registry import EXTRACTORS, extract_record
from ..helpers.codec import normalize
from ..metrics.matching import f1_at_k


_logger = getLogger(__name__)


@dataclass(frozen=True)
class GridScore:
    """Validation score of one grid point."""

    point: Dict[str, object]
    config: ExtractorConfig
    score: float
    document_count: int

    def to_mapping(self):
        """Return the scoreboard row as a plain :obj:`dict`."""
        return {
            "point": dict(self.point),
            "config": self.config.to_mapping(),
            "score": self.score,
            "document_count": self.document_count,
        }


@dataclass(frozen=True)
class TuningResult:
    """Winning configuration and the scores of every grid point."""

    best: ExtractorConfig
    scoreboard: List[GridScore]


def expand_grid(grid):
    """Return the grid points of ``grid`` as a list of mappings.

    Raises
    ------
    :obj:`ValueError`
        If the grid has no point (``empty_grid``).

    """
    if isinstance(grid, dict):
        names = list(grid)
        values = [
            value if isinstance(value, (list, tuple)) else [value]
            for value in grid.values()
        ]
        points = (
            [dict(zip(names, combination)) for combination in product(*values)]
            if names
            else []
        )
    else:
        points = [dict(point) for point in grid or []]

    if not points:
        _logger.error("Exception: parameter grid has no point")
        raise ValueError("empty_grid: parameter grid has no point")

    return points


def _validation_documents(validation):
    """Keep records with a non-empty normalized gold list."""
    documents = [record for record in validation if normalize(record.keywords)]

    if not documents:
        _logger.error("Exception: no validation record has gold keyphrases")
        raise ValueError("empty_corpus: no validation record has gold keyphrases")

    return documents


def tune(method, validation, grid, k, base_config=None, stopwords=None, pool=None):
    """Select the grid point maximizing macro F1@k on ``validation``.

    Parameters
    ----------
    method : :obj:`str`
        Registered extraction method.

    validation : iterable of :class:`~keyphrase_bench.corpus.records.RawRecord`
        Validation records with gold keywords.

    grid : :obj:`list` or :obj:`dict`
        Parameter grid, see :func:`expand_grid`.

    k : :obj:`int`
        Cutoff; extractors return ``k`` keyphrases during tuning.

    base_config : :class:`~keyphrase_bench.extractors.config.ExtractorConfig`, optional
        Parameters not set by the grid.
        (default ``ExtractorConfig()``)

    stopwords : :obj:`frozenset`, optional
        Candidate delimiters.
        (default bundled list)

    pool : :class:`~keyphrase_bench.helpers.pool.WorkerPool`, optional
        Pool mapping documents to workers.
        (default in-process)

    Returns
    -------
    :class:`TuningResult`
        Best configuration, with ``n_keyphrases`` set to ``k``, and the
        scoreboard in grid order.

    Raises
    ------
    :obj:`ValueError`
        On unknown method, empty grid, invalid grid point or empty validation.

    """
    if method not in EXTRACTORS:
        _logger.error("Exception: unknown extraction method '%s'", method)
        raise ValueError("unknown_method: '{}'".format(method))

    points = expand_grid(grid)
    documents = _validation_documents(validation)
    base_config = base_config or ExtractorConfig()

    if pool is not None:
        mapper = pool.map
    else:
        mapper = lambda func, items: list(map(func, items))  # noqa: E731

    scoreboard = []
    best = None

    for point in points:
        config = base_config.replace(**point).replace(n_keyphrases=k)

        predictions = mapper(
            partial(
                extract_record, method=method, config=config, stopwords=stopwords
            ),
            documents,
        )

        score = math.fsum(
            f1_at_k(predicted, record.keywords, k).f1
            for predicted, record in zip(predictions, documents)
        ) / len(documents)

        row = GridScore(
            point=point, config=config, score=score, document_count=len(documents)
        )
        scoreboard.append(row)

        _logger.info("grid point %s: macro F1@%d = %.6f", point, k, score)

        if best is None or row.score > best.score:
            best = row

    _logger.info("best grid point %s", best.point)

    return TuningResult(best=best.config, scoreboard=scoreboard)

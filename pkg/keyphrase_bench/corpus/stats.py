# -*- coding: utf-8 -*-
r"""Module computes corpus statistics.

Statistics count records, parsed keyphrases, title tokens and abstract tokens,
and report per-record averages. :class:`StatsAccumulator` gathers totals from
partial record streams that can be merged in any order.
"""
from dataclasses import dataclass
from logging import getLogger


_logger = getLogger(__name__)

TABLE_LABELS = (
    ("record_count", "Records"),
    ("total_keyphrases", "Keyphrases"),
    ("total_title_tokens", "Title tokens"),
    ("total_abstract_tokens", "Abstract tokens"),
    ("avg_keyphrases_per_record", "Av. Keyphrase"),
    ("avg_title_tokens", "Av. Title"),
    ("avg_abstract_tokens", "Av. Abstract"),
)


@dataclass(frozen=True)
class CorpusStats:
    """Corpus totals and per-record averages."""

    record_count: int
    total_keyphrases: int
    total_title_tokens: int
    total_abstract_tokens: int
    avg_keyphrases_per_record: float
    avg_title_tokens: float
    avg_abstract_tokens: float

    def as_rows(self):
        """Return ``(label, value)`` pairs labelled like the dataset tables."""
        return [(label, getattr(self, name)) for name, label in TABLE_LABELS]


class StatsAccumulator:
    """Class to accumulate corpus totals.

    Attributes
    ----------
    record_count : :obj:`int`
        Records seen.

    total_keyphrases : :obj:`int`
        Keyphrases parsed from keyphrase strings.

    total_title_tokens : :obj:`int`
        Title tokens.

    total_abstract_tokens : :obj:`int`
        Abstract tokens.

    """

    def __init__(self):
        """Initialize empty totals."""
        self.record_count = 0
        self.total_keyphrases = 0
        self.total_title_tokens = 0
        self.total_abstract_tokens = 0

    def add(self, record):
        """Add the counts of one paper record."""
        self.record_count += 1
        self.total_keyphrases += len(record.keyphrases)
        self.total_title_tokens += len(record.title_tokens)
        self.total_abstract_tokens += len(record.abstract_tokens)

        return self

    def merge(self, other):
        """Add the totals of ``other`` to this accumulator."""
        self.record_count += other.record_count
        self.total_keyphrases += other.total_keyphrases
        self.total_title_tokens += other.total_title_tokens
        self.total_abstract_tokens += other.total_abstract_tokens

        return self

    def result(self):
        """Return the :class:`CorpusStats` of the accumulated totals.

        Raises
        ------
        :obj:`ValueError`
            If no record was accumulated.

        """
        if self.record_count == 0:
            _logger.error("Exception: cannot compute statistics of an empty corpus")
            raise ValueError("empty_corpus: no records")

        count = self.record_count

        return CorpusStats(
            record_count=count,
            total_keyphrases=self.total_keyphrases,
            total_title_tokens=self.total_title_tokens,
            total_abstract_tokens=self.total_abstract_tokens,
            avg_keyphrases_per_record=self.total_keyphrases / count,
            avg_title_tokens=self.total_title_tokens / count,
            avg_abstract_tokens=self.total_abstract_tokens / count,
        )


def compute_stats(records):
    """Compute :class:`CorpusStats` of a stream of paper records.

    Raises
    ------
    :obj:`ValueError`
        If ``records`` is empty (``empty_corpus``).

    """
    accumulator = StatsAccumulator()

    for record in records:
        accumulator.add(record)

    return accumulator.result()

# -*- coding: utf-8 -*-
r"""Module defines :class:`ExtractorConfig`, the tunable extractor parameters.

The configuration is a frozen dataclass. It is validated on creation, derived
with :meth:`ExtractorConfig.replace` and converted from/to plain mappings, so
that YAML or JSON config files, CLI overrides and tuning results share one
representation.
"""
from dataclasses import asdict, dataclass, fields, replace
from logging import getLogger


_logger = getLogger(__name__)

SELECTION_STRATEGIES = ("first_occurrence", "frequency", "centroid")

DEFAULT_GRID = {
    "max_phrase_len": [1, 2, 3],
    "cooccurrence_window": [1, 2],
    "clustering_threshold": [0.25, 0.5],
}


@dataclass(frozen=True)
class ExtractorConfig:
    """Parameters shared by the extractors.

    Attributes
    ----------
    max_phrase_len : :obj:`int`
        Maximum number of tokens of a candidate phrase.

    cooccurrence_window : :obj:`int`
        Number of neighbouring tokens on each side counted as term context.

    clustering_threshold : :obj:`float`
        Minimum average stem-bag similarity of merged topics, in ``(0, 1]``.

    damping : :obj:`float`
        Damping factor of the topic graph ranking, in ``(0, 1]``.

    pagerank_tolerance : :obj:`float`
        L1 change of scores below which power iteration stops.

    pagerank_max_iters : :obj:`int`
        Maximum number of power iterations.

    n_keyphrases : :obj:`int`
        Number of keyphrases to return.

    selection : :obj:`str`
        Strategy picking one candidate per topic, one of
        :data:`SELECTION_STRATEGIES`.

    """

    max_phrase_len: int = 3
    cooccurrence_window: int = 1
    clustering_threshold: float = 0.25
    damping: float = 0.85
    pagerank_tolerance: float = 1e-6
    pagerank_max_iters: int = 100
    n_keyphrases: int = 10
    selection: str = "first_occurrence"

    def __post_init__(self):
        """Validate parameter ranges."""
        problems = []

        for name in (
            "max_phrase_len",
            "cooccurrence_window",
            "pagerank_max_iters",
            "n_keyphrases",
        ):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                problems.append("{} must be a positive integer".format(name))

        if not 0.0 < self.clustering_threshold <= 1.0:
            problems.append("clustering_threshold must be in (0, 1]")

        if not 0.0 < self.damping <= 1.0:
            problems.append("damping must be in (0, 1]")

        if not self.pagerank_tolerance > 0.0:
            problems.append("pagerank_tolerance must be positive")

        if self.selection not in SELECTION_STRATEGIES:
            problems.append(
                "selection must be one of {}".format(", ".join(SELECTION_STRATEGIES))
            )

        if problems:
            message = "; ".join(problems)
            _logger.error("Exception: invalid extractor config: %s", message)
            raise ValueError("invalid_config: {}".format(message))

    @classmethod
    def from_mapping(cls, data):
        """Build a config from a mapping, rejecting unknown keys."""
        known = {field.name for field in fields(cls)}
        unknown = sorted(set(data) - known)

        if unknown:
            raise ValueError(
                "invalid_config: unknown parameters {}".format(", ".join(unknown))
            )

        return cls(**data)

    def to_mapping(self):
        """Return the config as a plain :obj:`dict`."""
        return asdict(self)

    def replace(self, **overrides):
        """Return a copy with ``overrides`` applied; :obj:`None` values are ignored."""
        overrides = {
            key: value for key, value in overrides.items() if value is not None
        }

        if not overrides:
            return self

        unknown = sorted(set(overrides) - {field.name for field in fields(self)})

        if unknown:
            raise ValueError(
                "invalid_config: unknown parameters {}".format(", ".join(unknown))
            )

        return replace(self, **overrides)

# -*- coding: utf-8 -*-
r"""Module exports topic graph extractor :class:`ExtractorTopicRank`.

:class:`ExtractorTopicRank` groups candidates into topics and ranks the
topics instead of the candidates:

1. candidates are clustered by average-linkage agglomerative clustering over
   the Jaccard similarity of their stem bags; merging stops when no pair of
   clusters reaches ``clustering_threshold``;
2. topics form a complete graph, the weight of an edge is
   :math:`\sum 1 / |p_i - p_j|` over the start offsets of all occurrences of
   candidates of both topics;
3. topics are ranked by the damped stationary distribution of the graph,
   computed by power iteration;
4. one candidate per topic is emitted, best topic first.

Example
-------
Use the module and :class:`ExtractorTopicRank` like this:

.. code-block:: python

    from keyphrase_bench.extractors.config import ExtractorConfig
    from keyphrase_bench.extractors.extractor_topicrank import ExtractorTopicRank

    extractor = ExtractorTopicRank(config=ExtractorConfig(n_keyphrases=5))

    phrases = extractor.run(title_tokens, abstract_tokens)

    # per-stage durations of the latest document
    extractor.metrics
"""
from dataclasses import dataclass, field
from logging import getLogger
from time import time
from typing import List

import numpy as np
from scipy.cluster.hierarchy import fcluster, linkage
from scipy.spatial.distance import pdist

from .candidates import CandidatePhrase
from .extractor_abstract import ExtractorAbstract


_logger = getLogger(__name__)

# keeps pairs of exactly ``clustering_threshold`` similarity together
_DISTANCE_SLACK = 1e-12


@dataclass
class TopicCluster:
    """Candidates expressing one topic.

    Attributes
    ----------
    members : :obj:`list` of :class:`CandidatePhrase`
        Member candidates in document order.

    rank_score : :obj:`float`
        Normalized graph rank of the topic.

    """

    members: List[CandidatePhrase] = field(default_factory=list)
    rank_score: float = 0.0

    @property
    def first_offset(self):
        """:obj:`int` Earliest start offset of any member."""
        return min(member.first_offset for member in self.members)

    @property
    def offsets(self):
        """:obj:`list` Start offsets of all occurrences of all members."""
        return sorted(offset for member in self.members for offset in member.offsets)


def jaccard(first, second):
    """Return the Jaccard similarity of two stem collections."""
    first, second = set(first), set(second)
    union = first | second

    return len(first & second) / len(union) if union else 0.0


def cluster_topics(candidates, config):
    """Group ``candidates`` into topic clusters.

    Parameters
    ----------
    candidates : :obj:`list` of :class:`CandidatePhrase`
        Candidates with stems, in document order.

    config : :class:`~keyphrase_bench.extractors.config.ExtractorConfig`
        Provides ``clustering_threshold``.

    Returns
    -------
    :obj:`list` of :class:`TopicCluster`
        Partition of ``candidates``, ordered by earliest member.

    """
    if not candidates:
        return []

    if len(candidates) == 1:
        return [TopicCluster(members=list(candidates))]

    vocabulary = sorted({stem for candidate in candidates for stem in candidate.stems})
    column = {stem: index for index, stem in enumerate(vocabulary)}

    bags = np.zeros((len(candidates), len(vocabulary)), dtype=bool)
    for row, candidate in enumerate(candidates):
        bags[row, [column[stem] for stem in candidate.stems]] = True

    link = linkage(pdist(bags, metric="jaccard"), method="average")
    labels = fcluster(
        link,
        t=1.0 - config.clustering_threshold + _DISTANCE_SLACK,
        criterion="distance",
    )

    groups = {}
    for index, label in enumerate(labels):
        groups.setdefault(label, []).append(index)

    clusters = [
        TopicCluster(members=[candidates[index] for index in indices])
        for indices in sorted(groups.values(), key=min)
    ]

    _logger.debug(
        "clustered %d candidates into %d topics", len(candidates), len(clusters)
    )

    return clusters


def topic_weights(clusters):
    """Return the symmetric edge weight matrix of the topic graph.

    The weight of topics ``i`` and ``j`` sums ``1 / max(|p - q|, 1)`` over the
    start offsets ``p`` of topic ``i`` and ``q`` of topic ``j``; the diagonal
    is zero.
    """
    offsets = [np.asarray(cluster.offsets, dtype=float) for cluster in clusters]
    weights = np.zeros((len(clusters), len(clusters)))

    for i in range(len(clusters)):
        for j in range(i + 1, len(clusters)):
            distances = np.abs(offsets[i][:, None] - offsets[j][None, :])
            weights[i, j] = weights[j, i] = np.sum(1.0 / np.maximum(distances, 1.0))

    return weights


def rank_topics(weights, damping=0.85, tolerance=1e-6, max_iters=100):
    """Compute the damped stationary distribution of a weighted graph.

    Parameters
    ----------
    weights : :class:`numpy.ndarray`
        Square non-negative edge weight matrix.

    damping : :obj:`float`, optional
        Probability of following an edge rather than jumping uniformly.
        (default 0.85)

    tolerance : :obj:`float`, optional
        Iteration stops once the L1 change of the scores is below it.
        (default 1e-6)

    max_iters : :obj:`int`, optional
        Iteration stops after this many steps anyway.
        (default 100)

    Returns
    -------
    :class:`numpy.ndarray`
        Non-negative scores summing to one.

    """
    weights = np.asarray(weights, dtype=float)
    size = weights.shape[0]

    if size == 0:
        return np.zeros(0)

    out_weight = weights.sum(axis=1, keepdims=True)

    # rows without edges jump uniformly
    transition = np.divide(
        weights,
        out_weight,
        out=np.full_like(weights, 1.0 / size),
        where=out_weight > 0,
    )

    scores = np.full(size, 1.0 / size)

    for iteration in range(1, max_iters + 1):
        updated = (1.0 - damping) / size + damping * (transition.T @ scores)
        delta = np.abs(updated - scores).sum()
        scores = updated

        if delta < tolerance:
            break

    _logger.debug("power iteration stopped after %d steps", iteration)

    return scores / scores.sum()


def _centrality(candidate, members):
    """Mean stem-bag similarity of ``candidate`` to the other ``members``."""
    others = [member for member in members if member is not candidate]

    if not others:
        return 0.0

    return sum(jaccard(candidate.stems, other.stems) for other in others) / len(
        others
    )


def select_candidate(cluster, strategy="first_occurrence"):
    """Pick the candidate representing ``cluster``.

    Parameters
    ----------
    cluster : :class:`TopicCluster`
        Topic to pick from.

    strategy : :obj:`str`, optional
        ``first_occurrence`` takes the earliest member, ``frequency`` the most
        frequent and ``centroid`` the member most similar to the others.
        Remaining ties go to the earliest, then lexicographically smallest
        member.
        (default ``first_occurrence``)

    Returns
    -------
    :class:`~keyphrase_bench.extractors.candidates.CandidatePhrase`
        Selected member.

    """
    def key(member):
        if strategy == "frequency":
            primary = -member.frequency
        elif strategy == "centroid":
            primary = -_centrality(member, cluster.members)
        else:
            primary = 0

        return (primary, member.first_offset, member.surface)

    return min(cluster.members, key=key)


class ExtractorTopicRank(ExtractorAbstract):
    """Class for topic graph keyphrase extraction.

    Performs candidate extraction of the parent
    :class:`~keyphrase_bench.extractors.extractor_abstract.ExtractorAbstract`,
    then clusters, ranks topics and selects one candidate per topic.

    Attributes
    ----------
    __logger : :obj:`~logging.Logger`
        Channel to be used for log output specific to the module.

    """

    __logger = getLogger(__name__)

    method = "topicrank"

    def rank(self, title_tokens, abstract_tokens, cased_text=None):
        """Rank topic representatives, best topic first.

        Parameters
        ----------
        title_tokens : :obj:`list` of :obj:`str`
            Lowercased title tokens.

        abstract_tokens : :obj:`list` of :obj:`str`
            Lowercased abstract tokens.

        cased_text : :obj:`str`, optional
            Unused by this extractor.
            (default :obj:`None`)

        Returns
        -------
        :obj:`list` of :class:`CandidatePhrase`
            One candidate per topic, ``score`` set to the topic rank.

        """
        candidates = super().rank(title_tokens, abstract_tokens, cased_text)

        action_tag = "clustering"

        timer_start = time()

        clusters = cluster_topics(candidates, self._config)

        timer_stop = time()

        self._update_metrics(
            tag=action_tag, start=timer_start, finish=timer_stop, success=bool(clusters)
        )

        action_tag = "ranking"

        timer_start = time()

        scores = rank_topics(
            topic_weights(clusters),
            damping=self._config.damping,
            tolerance=self._config.pagerank_tolerance,
            max_iters=self._config.pagerank_max_iters,
        )

        for cluster, score in zip(clusters, scores):
            cluster.rank_score = float(score)

        ranked = []
        for cluster in sorted(
            clusters, key=lambda cluster: (-cluster.rank_score, cluster.first_offset)
        ):
            selected = select_candidate(cluster, self._config.selection)
            selected.score = cluster.rank_score
            ranked.append(selected)

        timer_stop = time()

        self._update_metrics(
            tag=action_tag, start=timer_start, finish=timer_stop, success=bool(ranked)
        )

        self.__logger.debug("ranked %d topics", len(ranked))

        return ranked


def topicrank_extract(title_tokens, abstract_tokens, config, stopwords=None):
    """Extract up to ``config.n_keyphrases`` keyphrases with topic ranking."""
    extractor = ExtractorTopicRank(config=config, stopwords=stopwords)

    return extractor.run(title_tokens, abstract_tokens)

# -*- coding: utf-8 -*-
r"""Module computes full-match and partial-match F1@k of keyphrase lists.

Both lists are canonicalized with :func:`~keyphrase_bench.helpers.codec.normalize`
(stemmed, deduplicated) before the first ``k`` predictions are compared with the
gold list. Precision is divided by the number of predictions actually used,
``min(k, len(predictions))``, unless ``strict_k`` asks for a fixed ``k``.

Example
-------
::

    from keyphrase_bench.metrics.matching import f1_at_k, overlap_partial_f1_at_k

    report = f1_at_k(["neural networks", "parsing"], ["neural network"], k=5)
    report.precision, report.recall, report.f1
    # (0.5, 1.0, 0.666...)

    overlap_partial_f1_at_k(["intelligent system"], ["system design"], k=5).f1
    # 0.5
"""
from dataclasses import dataclass
from logging import getLogger

from ..helpers.codec import canonical_form, normalize


_logger = getLogger(__name__)

CUTOFF_PRESETS = (5, 7)


@dataclass(frozen=True)
class CutoffK:
    """Number of top predictions taken into account."""

    k: int

    def __post_init__(self):
        """Validate that ``k`` is positive."""
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise ValueError("invalid_config: cutoff must be a positive integer")

    @classmethod
    def presets(cls):
        """Return the default cutoffs."""
        return tuple(cls(k) for k in CUTOFF_PRESETS)


@dataclass(frozen=True)
class MatchReport:
    """Precision, recall and F1 of one document at one cutoff.

    Attributes
    ----------
    precision : :obj:`float`
        Credit divided by the precision denominator.

    recall : :obj:`float`
        Credit divided by ``gold_count``.

    f1 : :obj:`float`
        Harmonic mean of ``precision`` and ``recall``, ``0.0`` if both are 0.

    matched : :obj:`int`
        Predictions that received any credit.

    predicted_used : :obj:`int`
        Normalized predictions compared, at most ``k``.

    gold_count : :obj:`int`
        Normalized gold keyphrases.

    credit : :obj:`float`
        Sum of match credits; equals ``matched`` for full matches.

    """

    precision: float
    recall: float
    f1: float
    matched: int
    predicted_used: int
    gold_count: int
    credit: float = 0.0


def harmonic_mean(precision, recall):
    """Return ``2PR / (P + R)``, or ``0.0`` when ``P + R`` is zero."""
    if precision + recall <= 0.0:
        return 0.0

    return 2.0 * precision * recall / (precision + recall)


def _cutoff(k):
    """Return ``k`` as a validated integer."""
    return CutoffK(k.k if isinstance(k, CutoffK) else k).k


def _prepare(predicted, gold, k):
    """Normalize both lists and truncate the predictions to ``k``."""
    k = _cutoff(k)
    gold_normalized = normalize(gold)

    if not gold_normalized:
        _logger.error("Exception: cannot score against an empty gold list")
        raise ValueError("empty_gold: gold keyphrase list is empty")

    return normalize(predicted)[:k], gold_normalized, k


def _report(credit, matched, used, gold_count, k, strict_k):
    """Build a :class:`MatchReport` from match counts."""
    denominator = k if strict_k else used

    precision = credit / denominator if denominator else 0.0
    recall = credit / gold_count

    return MatchReport(
        precision=precision,
        recall=recall,
        f1=harmonic_mean(precision, recall),
        matched=matched,
        predicted_used=used,
        gold_count=gold_count,
        credit=float(credit),
    )


def f1_at_k(predicted, gold, k, strict_k=False):
    """Compute full-match F1 of the top ``k`` predictions.

    Parameters
    ----------
    predicted : :obj:`list` of :obj:`str`
        Predicted keyphrases, best first.

    gold : :obj:`list` of :obj:`str`
        Gold keyphrases.

    k : :obj:`int` or :class:`CutoffK`
        Cutoff.

    strict_k : :obj:`bool`, optional
        Divide precision by ``k`` instead of the predictions used.
        (default :obj:`False`)

    Returns
    -------
    :class:`MatchReport`
        Scores of the document.

    Raises
    ------
    :obj:`ValueError`
        If ``gold`` normalizes to an empty list (``empty_gold``).

    """
    predicted_top, gold_normalized, k = _prepare(predicted, gold, k)

    matched = len(set(predicted_top) & set(gold_normalized))

    return _report(
        matched, matched, len(predicted_top), len(gold_normalized), k, strict_k
    )


def overlap_coefficient(first, second):
    """Return ``|A & B| / min(|A|, |B|)`` of two token sets."""
    first, second = set(first), set(second)

    if not first or not second:
        return 0.0

    return len(first & second) / min(len(first), len(second))


def overlap_partial_f1_at_k(predicted, gold, k, strict_k=False):
    """Compute partial-match F1 of the top ``k`` predictions.

    Predictions equal to an unmatched gold phrase take it first with credit 1.
    Every other prediction, in rank order, takes the unmatched gold phrase with
    the highest token-set overlap coefficient (earliest gold phrase on ties) and
    that coefficient as credit; a prediction sharing no token gets nothing.

    Parameters
    ----------
    predicted : :obj:`list` of :obj:`str`
        Predicted keyphrases, best first.

    gold : :obj:`list` of :obj:`str`
        Gold keyphrases.

    k : :obj:`int` or :class:`CutoffK`
        Cutoff.

    strict_k : :obj:`bool`, optional
        Divide precision by ``k`` instead of the predictions used.
        (default :obj:`False`)

    Returns
    -------
    :class:`MatchReport`
        Scores of the document, never below those of :func:`f1_at_k`.

    """
    predicted_top, gold_normalized, k = _prepare(predicted, gold, k)

    unmatched = set(range(len(gold_normalized)))
    credits = [0.0] * len(predicted_top)
    gold_index = {phrase: index for index, phrase in enumerate(gold_normalized)}

    partial = []
    for rank, phrase in enumerate(predicted_top):
        index = gold_index.get(phrase)

        if index is not None:
            credits[rank] = 1.0
            unmatched.discard(index)
        else:
            partial.append(rank)

    for rank in partial:
        tokens = predicted_top[rank].split()
        best_index, best_credit = None, 0.0

        for index in sorted(unmatched):
            credit = overlap_coefficient(tokens, gold_normalized[index].split())

            if credit > best_credit:
                best_index, best_credit = index, credit

        if best_index is not None:
            credits[rank] = best_credit
            unmatched.discard(best_index)

    matched = sum(1 for credit in credits if credit > 0.0)

    return _report(
        sum(credits),
        matched,
        len(predicted_top),
        len(gold_normalized),
        k,
        strict_k,
    )


def absent_gold_count(gold, doc_tokens):
    """Count gold keyphrases whose canonical form does not occur in a document.

    Parameters
    ----------
    gold : :obj:`list` of :obj:`str`
        Gold keyphrases.

    doc_tokens : :obj:`list` of :obj:`str`
        Tokens of title and abstract.

    Returns
    -------
    :obj:`tuple` of :obj:`int`
        ``(absent, total)`` over the normalized gold list.

    """
    gold_normalized = normalize(gold)
    document = " {} ".format(canonical_form(" ".join(doc_tokens)))

    absent = sum(
        1 for phrase in gold_normalized if " {} ".format(phrase) not in document
    )

    return absent, len(gold_normalized)

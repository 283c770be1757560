# -*- coding: utf-8 -*-
r"""Module computes ROUGE-1 and ROUGE-L F1 of token sequences.

Scoring is delegated to :mod:`rouge_score` with a tokenizer that passes token
lists through, so the sequences given here are compared token for token: no
stemming, no stopword removal and no further normalization. Keyphrase strings
are turned into token sequences with :func:`rouge_tokens`, which cleans them
with :func:`~keyphrase_bench.helpers.codec.parse` first; a raw keyphrase
string and its parsed form give the same tokens.

Two empty sequences score ``1.0``; one empty sequence scores ``0.0``.
"""
from dataclasses import dataclass

from rouge_score.rouge_scorer import RougeScorer

from ..helpers.codec import parse
from ..helpers.tokenizer import tokenize


@dataclass(frozen=True)
class RougeScore:
    """Precision, recall and F1 (beta = 1) of one ROUGE variant."""

    precision: float
    recall: float
    f1: float

    @property
    def fmeasure(self):
        """:obj:`float` Alias of ``f1``."""
        return self.f1


class IdentityTokenizer:
    """Tokenizer for :class:`~rouge_score.rouge_scorer.RougeScorer` passing
    token lists through unchanged."""

    def tokenize(self, tokens):
        """Return ``tokens`` as a list."""
        return list(tokens)


_scorer = RougeScorer(["rouge1", "rougeL"], tokenizer=IdentityTokenizer())

PERFECT = RougeScore(precision=1.0, recall=1.0, f1=1.0)
ZERO = RougeScore(precision=0.0, recall=0.0, f1=0.0)


def rouge_tokens(keyphrase_string):
    """Lowercase and tokenize the parsed keyphrases of ``keyphrase_string``."""
    return tokenize(" ".join(parse(keyphrase_string)).lower())


def is_both_empty(pred_tokens, gold_tokens):
    """:obj:`True`, if the both-empty convention applies."""
    return not pred_tokens and not gold_tokens


def _score(rouge_type, pred_tokens, gold_tokens):
    """Score ``pred_tokens`` against ``gold_tokens`` with ``rouge_type``."""
    if is_both_empty(pred_tokens, gold_tokens):
        return PERFECT

    if not pred_tokens or not gold_tokens:
        return ZERO

    score = _scorer.score(gold_tokens, pred_tokens)[rouge_type]

    return RougeScore(
        precision=score.precision, recall=score.recall, f1=score.fmeasure
    )


def rouge1_f1(pred_tokens, gold_tokens):
    """Compute clipped unigram overlap ROUGE-1.

    Parameters
    ----------
    pred_tokens : :obj:`list` of :obj:`str`
        Predicted token sequence.

    gold_tokens : :obj:`list` of :obj:`str`
        Reference token sequence.

    Returns
    -------
    :class:`RougeScore`
        Precision against ``pred_tokens``, recall against ``gold_tokens``.

    """
    return _score("rouge1", pred_tokens, gold_tokens)


def rougel_f1(pred_tokens, gold_tokens):
    """Compute longest common subsequence ROUGE-L.

    Parameters
    ----------
    pred_tokens : :obj:`list` of :obj:`str`
        Predicted token sequence.

    gold_tokens : :obj:`list` of :obj:`str`
        Reference token sequence.

    Returns
    -------
    :class:`RougeScore`
        Precision against ``pred_tokens``, recall against ``gold_tokens``.

    """
    return _score("rougeL", pred_tokens, gold_tokens)

# -*- coding: utf-8 -*-
r"""Module aggregates per-document scores into reports and formats them.

Per-document scores are collected by :class:`ReportAccumulator`, which keeps
every value and sums with :func:`math.fsum`; partial accumulators can be
merged in any order and still give bit-identical averages.

Reports have the row shape of the usual result tables: method, F1@5, F1@7,
ROUGE-1 F1 and ROUGE-L F1, optionally followed by partial-match F1 columns.

Example
-------
::

    from keyphrase_bench.metrics.report import format_table, macro_aggregate
    from keyphrase_bench.metrics.report import score_document

    scores = [score_document(line, gold) for line, gold in zip(lines, golds)]
    report = macro_aggregate(scores, method="yake")

    print(format_table([report]))
"""
import math
from collections import defaultdict
from dataclasses import dataclass, field
from logging import getLogger
from typing import Dict

from .matching import (
    CUTOFF_PRESETS,
    MatchReport,
    f1_at_k,
    harmonic_mean,
    overlap_partial_f1_at_k,
)
from .rouge import RougeScore, is_both_empty, rouge1_f1, rouge_tokens, rougel_f1
from ..helpers.codec import parse


_logger = getLogger(__name__)

ROUGE_COLUMNS = ("R1F1", "RLF1")

TABLE_COLUMNS = ("F1@5", "F1@7") + ROUGE_COLUMNS


@dataclass(frozen=True)
class DocumentScores:
    """Scores of one document.

    Attributes
    ----------
    full : :obj:`dict`
        Cutoff to full-match :class:`~keyphrase_bench.metrics.matching.MatchReport`.

    rouge1 : :class:`~keyphrase_bench.metrics.rouge.RougeScore`
        ROUGE-1 of the keyphrase strings.

    rougel : :class:`~keyphrase_bench.metrics.rouge.RougeScore`
        ROUGE-L of the keyphrase strings.

    partial : :obj:`dict`
        Cutoff to partial-match report, empty unless requested.

    empty_prediction : :obj:`bool`
        The prediction parsed to no keyphrase.

    both_empty_rouge : :obj:`bool`
        ROUGE was decided by the both-empty convention.

    """

    full: Dict[int, MatchReport]
    rouge1: RougeScore
    rougel: RougeScore
    partial: Dict[int, MatchReport] = field(default_factory=dict)
    empty_prediction: bool = False
    both_empty_rouge: bool = False

    @classmethod
    def from_tuple(cls, scores):
        """Build scores from ``(F1@5 report, F1@7 report, ROUGE-1, ROUGE-L)``."""
        at_5, at_7, rouge1, rougel = scores

        return cls(full={5: at_5, 7: at_7}, rouge1=rouge1, rougel=rougel)


def score_document(
    prediction, gold, cutoffs=CUTOFF_PRESETS, strict_k=False, partial=False
):
    """Score one prediction line against its gold keyphrase string.

    Parameters
    ----------
    prediction : :obj:`str`
        Predicted keyphrase string.

    gold : :obj:`str`
        Gold keyphrase string; it must contain at least one keyphrase.

    cutoffs : :obj:`tuple` of :obj:`int`, optional
        Cutoffs of F1@k.
        (default ``(5, 7)``)

    strict_k : :obj:`bool`, optional
        Divide precision by ``k`` instead of the predictions used.
        (default :obj:`False`)

    partial : :obj:`bool`, optional
        Also compute partial-match F1@k.
        (default :obj:`False`)

    Returns
    -------
    :class:`DocumentScores`
        Scores of the document.

    """
    predicted = parse(prediction)
    gold_phrases = parse(gold)

    pred_tokens = rouge_tokens(prediction)
    gold_tokens = rouge_tokens(gold)

    partial_reports = {}
    if partial:
        partial_reports = {
            k: overlap_partial_f1_at_k(predicted, gold_phrases, k, strict_k)
            for k in cutoffs
        }

    return DocumentScores(
        full={k: f1_at_k(predicted, gold_phrases, k, strict_k) for k in cutoffs},
        partial=partial_reports,
        rouge1=rouge1_f1(pred_tokens, gold_tokens),
        rougel=rougel_f1(pred_tokens, gold_tokens),
        empty_prediction=not predicted,
        both_empty_rouge=is_both_empty(pred_tokens, gold_tokens),
    )


@dataclass(frozen=True)
class EvalReport:
    """Averaged scores of one method on one corpus.

    Attributes
    ----------
    method : :obj:`str`
        Method name shown in the first column.

    f1_at : :obj:`dict`
        Cutoff to full-match F1.

    rouge1_f1 : :obj:`float`
        Macro-averaged ROUGE-1 F1.

    rougel_f1 : :obj:`float`
        Macro-averaged ROUGE-L F1.

    document_count : :obj:`int`
        Scored documents.

    partial_f1_at : :obj:`dict`
        Cutoff to partial-match F1, empty unless requested.

    averaging : :obj:`str`
        ``macro`` or ``micro`` averaging of F1@k.

    diagnostics : :obj:`dict`
        Counts of skipped documents, empty predictions and similar.

    """

    method: str
    f1_at: Dict[int, float]
    rouge1_f1: float
    rougel_f1: float
    document_count: int
    partial_f1_at: Dict[int, float] = field(default_factory=dict)
    averaging: str = "macro"
    diagnostics: Dict[str, float] = field(default_factory=dict)

    @property
    def f1_at_5(self):
        """:obj:`float` F1@5, :obj:`None` if not computed."""
        return self.f1_at.get(5)

    @property
    def f1_at_7(self):
        """:obj:`float` F1@7, :obj:`None` if not computed."""
        return self.f1_at.get(7)

    def with_diagnostics(self, **diagnostics):
        """Return a copy with ``diagnostics`` added."""
        merged = dict(self.diagnostics)
        merged.update(diagnostics)

        return EvalReport(
            method=self.method,
            f1_at=dict(self.f1_at),
            rouge1_f1=self.rouge1_f1,
            rougel_f1=self.rougel_f1,
            document_count=self.document_count,
            partial_f1_at=dict(self.partial_f1_at),
            averaging=self.averaging,
            diagnostics=merged,
        )

    def to_mapping(self):
        """Return the structured form of the report."""
        return {
            "method": self.method,
            "averaging": self.averaging,
            "document_count": self.document_count,
            "f1_at": {str(k): value for k, value in sorted(self.f1_at.items())},
            "partial_f1_at": {
                str(k): value for k, value in sorted(self.partial_f1_at.items())
            },
            "rouge1_f1": self.rouge1_f1,
            "rougel_f1": self.rougel_f1,
            "diagnostics": dict(self.diagnostics),
        }

    @classmethod
    def from_mapping(cls, data):
        """Build a report from its structured form."""
        try:
            return cls(
                method=data["method"],
                f1_at={int(k): float(v) for k, v in data["f1_at"].items()},
                rouge1_f1=float(data["rouge1_f1"]),
                rougel_f1=float(data["rougel_f1"]),
                document_count=int(data["document_count"]),
                partial_f1_at={
                    int(k): float(v) for k, v in data.get("partial_f1_at", {}).items()
                },
                averaging=data.get("averaging", "macro"),
                diagnostics=dict(data.get("diagnostics", {})),
            )
        except (KeyError, TypeError, AttributeError) as error:
            _logger.exception("Exception: malformed report")
            raise ValueError("malformed_report: {}".format(error))

    def column(self, name):
        """Return the value of table column ``name``, :obj:`None` if absent."""
        if name == "R1F1":
            return self.rouge1_f1

        if name == "RLF1":
            return self.rougel_f1

        prefix, _, k = name.partition("@")
        values = self.partial_f1_at if prefix == "pF1" else self.f1_at

        return values.get(int(k))


class ReportAccumulator:
    """Class to collect per-document scores for averaging.

    Values are kept per document and summed with :func:`math.fsum`, so the
    averages do not depend on the order in which documents or partial
    accumulators were added.
    """

    def __init__(self):
        """Initialize empty collections."""
        self.document_count = 0
        self.f1 = defaultdict(list)
        self.partial_f1 = defaultdict(list)
        self.rouge1 = []
        self.rougel = []
        self.credit = defaultdict(list)
        self.used = defaultdict(int)
        self.gold = defaultdict(int)
        self.empty_predictions = 0
        self.both_empty_rouge = 0

    def add(self, scores):
        """Add :class:`DocumentScores` (or a 4-tuple) of one document."""
        if not isinstance(scores, DocumentScores):
            scores = DocumentScores.from_tuple(scores)

        self.document_count += 1

        for k, report in scores.full.items():
            self.f1[k].append(report.f1)
            self.credit[k].append(report.credit)
            self.used[k] += report.predicted_used
            self.gold[k] += report.gold_count

        for k, report in scores.partial.items():
            self.partial_f1[k].append(report.f1)

        self.rouge1.append(scores.rouge1.f1)
        self.rougel.append(scores.rougel.f1)

        self.empty_predictions += int(scores.empty_prediction)
        self.both_empty_rouge += int(scores.both_empty_rouge)

        return self

    def merge(self, other):
        """Add everything collected by ``other``."""
        self.document_count += other.document_count

        for k, values in other.f1.items():
            self.f1[k].extend(values)
        for k, values in other.partial_f1.items():
            self.partial_f1[k].extend(values)
        for k, values in other.credit.items():
            self.credit[k].extend(values)
        for k, count in other.used.items():
            self.used[k] += count
        for k, count in other.gold.items():
            self.gold[k] += count

        self.rouge1.extend(other.rouge1)
        self.rougel.extend(other.rougel)
        self.empty_predictions += other.empty_predictions
        self.both_empty_rouge += other.both_empty_rouge

        return self

    def _mean(self, values):
        return math.fsum(values) / self.document_count

    def _micro_f1(self, k, strict_k):
        credit = math.fsum(self.credit[k])
        denominator = k * self.document_count if strict_k else self.used[k]

        precision = credit / denominator if denominator else 0.0
        recall = credit / self.gold[k] if self.gold[k] else 0.0

        return harmonic_mean(precision, recall)

    def result(self, method="", micro=False, strict_k=False):
        """Return the :class:`EvalReport` of the collected scores.

        Parameters
        ----------
        method : :obj:`str`, optional
            Method name of the report.
            (default empty)

        micro : :obj:`bool`, optional
            Micro-average F1@k over all documents; ROUGE stays macro-averaged.
            (default :obj:`False`)

        strict_k : :obj:`bool`, optional
            Micro precision denominator is ``k`` per document.
            (default :obj:`False`)

        Raises
        ------
        :obj:`ValueError`
            If no document was added (``no_documents``).

        """
        if self.document_count == 0:
            _logger.error("Exception: cannot aggregate an empty score stream")
            raise ValueError("no_documents: no document scores to aggregate")

        if micro:
            f1_at = {k: self._micro_f1(k, strict_k) for k in sorted(self.f1)}
        else:
            f1_at = {k: self._mean(values) for k, values in sorted(self.f1.items())}

        return EvalReport(
            method=method,
            f1_at=f1_at,
            rouge1_f1=self._mean(self.rouge1),
            rougel_f1=self._mean(self.rougel),
            document_count=self.document_count,
            partial_f1_at={
                k: self._mean(values) for k, values in sorted(self.partial_f1.items())
            },
            averaging="micro" if micro else "macro",
            diagnostics={
                "empty_predictions": self.empty_predictions,
                "both_empty_rouge": self.both_empty_rouge,
            },
        )


def macro_aggregate(per_document, method=""):
    """Average per-document F1 and ROUGE scores.

    Parameters
    ----------
    per_document : iterable
        :class:`DocumentScores`, or ``(F1@5, F1@7, ROUGE-1, ROUGE-L)`` tuples.

    method : :obj:`str`, optional
        Method name of the report.
        (default empty)

    Returns
    -------
    :class:`EvalReport`
        Arithmetic means of the per-document scores.

    Raises
    ------
    :obj:`ValueError`
        If ``per_document`` is empty (``no_documents``).

    """
    accumulator = ReportAccumulator()

    for scores in per_document:
        accumulator.add(scores)

    return accumulator.result(method=method)


def micro_aggregate(per_document, method="", strict_k=False):
    """Pool match counts over documents before computing F1@k.

    ROUGE scores are still macro-averaged. Raises like :func:`macro_aggregate`.
    """
    accumulator = ReportAccumulator()

    for scores in per_document:
        accumulator.add(scores)

    return accumulator.result(method=method, micro=True, strict_k=strict_k)


def report_columns(reports):
    """Return the table columns covering every report in ``reports``."""
    full = sorted({k for report in reports for k in report.f1_at})
    partial = sorted({k for report in reports for k in report.partial_f1_at})

    return (
        ["F1@{}".format(k) for k in full]
        + ["pF1@{}".format(k) for k in partial]
        + list(ROUGE_COLUMNS)
    )


def _format_value(value, percent, digits):
    if value is None:
        return "-"

    return "{:.{}f}".format(value * 100.0 if percent else value, digits)


def format_table(reports, percent=False, digits=4):
    """Format ``reports`` as tab-separated rows with a header line.

    Parameters
    ----------
    reports : :obj:`list` of :class:`EvalReport`
        One row per report.

    percent : :obj:`bool`, optional
        Show values multiplied by 100.
        (default :obj:`False`)

    digits : :obj:`int`, optional
        Decimal digits.
        (default 4)

    Returns
    -------
    :obj:`str`
        Table text ending with a newline.

    """
    columns = report_columns(reports)
    lines = ["\t".join(["method"] + columns)]

    for report in reports:
        lines.append(
            "\t".join(
                [report.method]
                + [
                    _format_value(report.column(column), percent, digits)
                    for column in columns
                ]
            )
        )

    return "\n".join(lines) + "\n"


def format_combined(reports, columns=TABLE_COLUMNS, digits=2):
    """Format reports of several datasets as one table in percent.

    Parameters
    ----------
    reports : :obj:`list` of :obj:`tuple`
        ``(dataset, report)`` pairs; rows follow the first appearance of each
        method, column groups the first appearance of each dataset.

    columns : :obj:`tuple` of :obj:`str`, optional
        Columns per dataset.
        (default ``F1@5, F1@7, R1F1, RLF1``)

    digits : :obj:`int`, optional
        Decimal digits.
        (default 2)

    Returns
    -------
    :obj:`str`
        Table text ending with a newline; missing cells are ``-``.

    """
    datasets = list(dict.fromkeys(dataset for dataset, _ in reports))
    methods = list(dict.fromkeys(report.method for _, report in reports))
    cells = {(dataset, report.method): report for dataset, report in reports}

    header = ["method"] + [
        "{} {}".format(dataset, column) for dataset in datasets for column in columns
    ]
    lines = ["\t".join(header)]

    for method in methods:
        row = [method]

        for dataset in datasets:
            report = cells.get((dataset, method))

            for column in columns:
                value = report.column(column) if report is not None else None
                row.append(_format_value(value, True, digits))

        lines.append("\t".join(row))

    return "\n".join(lines) + "\n"

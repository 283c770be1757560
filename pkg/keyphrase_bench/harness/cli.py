# -*- coding: utf-8 -*-
r"""Module implements the ``kpbench`` command-line interface.

Commands
--------
* ``preprocess`` cleans and filters a raw corpus for one split
* ``stats`` prints corpus statistics
* ``prepare`` writes model-ready source, target and vocabulary files
* ``extract`` runs an unsupervised extractor over a corpus
* ``score`` scores a prediction file against its gold corpus
* ``tune`` selects extractor parameters on a validation corpus
* ``report`` combines score reports of several datasets into one table
* ``replay`` re-runs the command recorded in a run manifest

Every option can also be given as an environment variable named
``KPBENCH_<COMMAND>_<OPTION>``, e.g. ``KPBENCH_EXTRACT_JOBS=4``. Logs go to
stderr; tables go to stdout.

Exit codes are ``0`` on success, ``1`` on a hard input error and ``2`` when
some lines were skipped.

Example
-------
.. code-block:: bash

    kpbench preprocess raw_test.jsonl --split test --output test.jsonl
    kpbench tune val.jsonl --method yake --grid grid.yaml --k 5 --output yake.json
    kpbench extract test.jsonl --method yake --config yake.json --n 7 \
        --output yake.txt
    kpbench score yake.txt test.jsonl --k 5 --k 7 --output yake.report.json
"""
import logging
import sys
from functools import partial
from pathlib import Path

import click
import yaml

from .manifest import RunManifest
from .. import __version__
from ..corpus.io import dump_line, read_predictions, read_records, write_json
from ..corpus.io import write_lines
from ..corpus.preprocess import (
    DEFAULT_ENGLISH_THRESHOLD,
    REJECTION_REASONS,
    clean_and_filter,
    count_tokens,
    normalize_for_model,
    rank_tokens,
)
from ..corpus.records import (
    SPLITS,
    FilterThresholds,
    ModelTextLimits,
    PaperRecord,
)
from ..corpus.stats import StatsAccumulator
from ..extractors.config import DEFAULT_GRID, SELECTION_STRATEGIES, ExtractorConfig
from ..extractors.registry import EXTRACTORS, extract_record
from ..extractors.tuning import tune
from ..helpers.codec import join, normalize
from ..helpers.pool import WorkerPool
from ..helpers.tokenizer import load_function_words, load_stopwords
from ..metrics.matching import CUTOFF_PRESETS, absent_gold_count
from ..metrics.report import (
    EvalReport,
    ReportAccumulator,
    format_combined,
    format_table,
    score_document,
)


_logger = logging.getLogger(__name__)

LOG_FORMAT = "%(filename)-25s %(lineno)-4d %(levelname)-8s %(asctime)s %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

EXIT_PARTIAL_FAILURE = 2

_jobs_option = click.option(
    "--jobs",
    type=int,
    default=1,
    show_default=True,
    help="Worker processes, 0 for all CPU cores.",
)
_progress_option = click.option(
    "--progress/--no-progress", default=False, help="Show a progress bar on stderr."
)


def _fail(message, *args):
    """Log ``message`` and abort the command with exit code 1."""
    _logger.error("Exception: %s", message % args)
    raise click.ClickException(message % args)


def _read_corpus(path):
    """Read every line of a corpus file, aborting if it cannot be opened."""
    try:
        return list(read_records(path))
    except OSError as error:
        _fail("cannot read corpus '%s': %s", path, error.strerror or error)


def _read_mapping(path):
    """Load a YAML or JSON file."""
    try:
        with Path(path).open(encoding="utf-8") as handle:
            return yaml.safe_load(handle)
    except OSError as error:
        _fail("cannot read '%s': %s", path, error.strerror or error)
    except yaml.YAMLError as error:
        _fail("cannot parse '%s': %s", path, error)


def _load_config(config_path, **overrides):
    """Build the effective :class:`ExtractorConfig` of a command."""
    data = _read_mapping(config_path) if config_path else {}

    try:
        return ExtractorConfig.from_mapping(data or {}).replace(**overrides)
    except (TypeError, ValueError) as error:
        _fail("%s", error)


def _finish(ctx, skipped):
    """Exit with the partial failure code if ``skipped`` lines were dropped."""
    if skipped:
        _logger.warning("%d lines skipped, see log above", skipped)
        ctx.exit(EXIT_PARTIAL_FAILURE)


@click.group(context_settings={"auto_envvar_prefix": "KPBENCH"})
@click.version_option(__version__, prog_name="kpbench")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default="INFO",
    show_default=True,
    help="Verbosity of the log on stderr.",
)
def main(log_level):
    """Keyphrase extraction and evaluation toolkit."""
    logging.basicConfig(
        format=LOG_FORMAT,
        datefmt=LOG_DATE_FORMAT,
        level=log_level.upper(),
        stream=sys.stderr,
    )


@main.command()
@click.argument("corpus", type=click.Path(dir_okay=False))
@click.option("--split", type=click.Choice(SPLITS), default="train", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), required=True)
@click.option(
    "--rejections",
    type=click.Path(dir_okay=False),
    default=None,
    help="Rejection log (default <output>.rejections.json).",
)
@click.option("--function-words", type=click.Path(dir_okay=False), default=None)
@click.option(
    "--english-threshold",
    type=float,
    default=DEFAULT_ENGLISH_THRESHOLD,
    show_default=True,
)
@click.option(
    "--strip-section-tags",
    is_flag=True,
    default=False,
    help="Remove layout markers such as --T or Figure 2 before tokenizing.",
)
@_jobs_option
@_progress_option
@click.pass_context
def preprocess(
    ctx,
    corpus,
    split,
    output,
    rejections,
    function_words,
    english_threshold,
    strip_section_tags,
    jobs,
    progress,
):
    """Clean and filter a raw CORPUS for one split."""
    lines = _read_corpus(corpus)
    thresholds = FilterThresholds.for_split(split)
    rejections = rejections or "{}.rejections.json".format(output)

    malformed = [line for line in lines if line.error and line.error != "blank_line"]
    records = [line for line in lines if line.record is not None]

    with WorkerPool(jobs=jobs, progress=progress, description="preprocess") as pool:
        outcomes = pool.map(
            partial(
                clean_and_filter,
                thresholds=thresholds,
                split=split,
                function_words=load_function_words(function_words),
                english_threshold=english_threshold,
                strip_tags=strip_section_tags,
            ),
            [line.record for line in records],
        )

    kept = []
    rejected = [
        {"line": line.line_number, "reason": "malformed_line", "detail": line.error}
        for line in malformed
    ]
    reason_counts = {reason: 0 for reason in REJECTION_REASONS}

    for line, outcome in zip(records, outcomes):
        if outcome.kept:
            kept.append(dump_line(outcome.record.to_mapping()))
            continue

        reason_counts[outcome.reason] += 1
        rejected.append(
            {
                "line": line.line_number,
                "reason": outcome.reason,
                "counts": outcome.counts,
            }
        )
        _logger.debug("line %d: rejected (%s)", line.line_number, outcome.reason)

    rejected.sort(key=lambda entry: entry["line"])

    write_lines(output, kept)
    write_json(
        rejections,
        {
            "kept": len(kept),
            "malformed": len(malformed),
            "reasons": reason_counts,
            "rejected": rejected,
        },
    )

    RunManifest.create(
        "preprocess",
        ctx.params,
        inputs=[corpus],
        config={
            "thresholds": vars(thresholds),
            "english_threshold": english_threshold,
            "strip_section_tags": strip_section_tags,
        },
    ).write(output)

    _logger.info(
        "kept %d of %d records, rejected %s",
        len(kept),
        len(records),
        {reason: count for reason, count in reason_counts.items() if count},
    )

    if not records:
        _fail("empty_corpus: '%s' holds no record", corpus)

    _finish(ctx, len(malformed))


def _paper_records(corpus):
    """Read a corpus as :class:`PaperRecord` objects and the count of bad lines."""
    lines = _read_corpus(corpus)
    malformed = sum(1 for line in lines if line.error and line.error != "blank_line")

    records = [PaperRecord.from_raw(line.record) for line in lines if line.record]

    return records, malformed


@main.command()
@click.argument("corpus", type=click.Path(dir_okay=False))
@click.option(
    "--output",
    type=click.Path(dir_okay=False),
    default=None,
    help="Also write the statistics as JSON.",
)
@click.pass_context
def stats(ctx, corpus, output):
    """Print record, keyphrase and token statistics of CORPUS."""
    records, malformed = _paper_records(corpus)

    accumulator = StatsAccumulator()
    for record in records:
        accumulator.add(record)

    try:
        result = accumulator.result()
    except ValueError as error:
        _fail("%s", error)

    for label, value in result.as_rows():
        if isinstance(value, float):
            click.echo("{}\t{:.4f}".format(label, value))
        else:
            click.echo("{}\t{}".format(label, value))

    if output:
        write_json(output, vars(result))
        RunManifest.create("stats", ctx.params, inputs=[corpus]).write(output)

    _finish(ctx, malformed)


@main.command()
@click.argument("corpus", type=click.Path(dir_okay=False))
@click.option(
    "--output",
    type=click.Path(dir_okay=False),
    required=True,
    help="Prefix of the .source.txt, .target.txt and .vocab.tsv files.",
)
@click.option("--max-source-tokens", type=int, default=270, show_default=True)
@click.option("--max-target-tokens", type=int, default=21, show_default=True)
@click.option("--vocab-cap", type=int, default=90000, show_default=True)
@click.pass_context
def prepare(ctx, corpus, output, max_source_tokens, max_target_tokens, vocab_cap):
    """Write digit-masked, truncated model examples of CORPUS and a vocabulary."""
    try:
        limits = ModelTextLimits(max_source_tokens, max_target_tokens, vocab_cap)
    except ValueError as error:
        _fail("%s", error)

    records, malformed = _paper_records(corpus)

    if not records:
        _fail("empty_corpus: '%s' holds no record", corpus)

    examples = [normalize_for_model(record, limits) for record in records]

    write_lines(output + ".source.txt", (" ".join(ex.source) for ex in examples))
    write_lines(output + ".target.txt", (" ".join(ex.target) for ex in examples))
    write_lines(
        output + ".vocab.tsv",
        (
            "{}\t{}".format(token, count)
            for token, count in rank_tokens(count_tokens(examples), limits.vocab_cap)
        ),
    )

    RunManifest.create(
        "prepare", ctx.params, inputs=[corpus], config=vars(limits)
    ).write(output + ".vocab.tsv")

    _finish(ctx, malformed)


def _extractor_options(func):
    """Add extractor parameter overrides to a command."""
    options = [
        click.option(
            "--method", type=click.Choice(sorted(EXTRACTORS)), required=True
        ),
        click.option(
            "--config",
            "config_path",
            type=click.Path(dir_okay=False),
            default=None,
            help="YAML or JSON extractor parameters, e.g. written by tune.",
        ),
        click.option("--max-phrase-len", type=int, default=None),
        click.option("--cooccurrence-window", type=int, default=None),
        click.option("--clustering-threshold", type=float, default=None),
        click.option("--damping", type=float, default=None),
        click.option("--selection", type=click.Choice(SELECTION_STRATEGIES)),
        click.option(
            "--stopwords",
            type=click.Path(dir_okay=False),
            default=None,
            help="Stopword list, one word per line.",
        ),
    ]

    for option in reversed(options):
        func = option(func)

    return func


@main.command()
@click.argument("corpus", type=click.Path(dir_okay=False))
@_extractor_options
@click.option("--n", "n", type=int, default=None, help="Keyphrases per document.")
@click.option("--output", type=click.Path(dir_okay=False), required=True)
@_jobs_option
@_progress_option
@click.pass_context
def extract(
    ctx,
    corpus,
    method,
    config_path,
    max_phrase_len,
    cooccurrence_window,
    clustering_threshold,
    damping,
    selection,
    stopwords,
    n,
    output,
    jobs,
    progress,
):
    """Write one keyphrase string per line of CORPUS."""
    config = _load_config(
        config_path,
        max_phrase_len=max_phrase_len,
        cooccurrence_window=cooccurrence_window,
        clustering_threshold=clustering_threshold,
        damping=damping,
        selection=selection,
        n_keyphrases=n,
    )

    lines = _read_corpus(corpus)
    records = [line for line in lines if line.record is not None]
    skipped = sum(1 for line in lines if line.error and line.error != "blank_line")

    with WorkerPool(jobs=jobs, progress=progress, description=method) as pool:
        results = pool.map(
            partial(
                extract_record,
                method=method,
                config=config,
                stopwords=load_stopwords(stopwords),
            ),
            [line.record for line in records],
        )

    phrases = {line.line_number: result for line, result in zip(records, results)}

    # malformed lines keep their place as empty predictions
    write_lines(
        output,
        (join(phrases.get(line.line_number, [])) for line in lines),
    )

    RunManifest.create(
        "extract", ctx.params, inputs=[corpus], config=config.to_mapping()
    ).write(output)

    if not records:
        _fail("empty_corpus: '%s' holds no record", corpus)

    _finish(ctx, skipped)


def _score_line(pair, cutoffs, strict_k, partial_match):
    """Score one ``(prediction, gold string)`` pair."""
    prediction, gold = pair

    return score_document(
        prediction, gold, cutoffs=cutoffs, strict_k=strict_k, partial=partial_match
    )


@main.command()
@click.argument("predictions", type=click.Path(dir_okay=False))
@click.argument("gold", type=click.Path(dir_okay=False))
@click.option(
    "--k",
    "cutoffs",
    type=int,
    multiple=True,
    default=CUTOFF_PRESETS,
    show_default=True,
)
@click.option("--strict-k", is_flag=True, default=False, help="Precision over k.")
@click.option("--partial", "partial_match", is_flag=True, default=False)
@click.option("--micro", is_flag=True, default=False, help="Micro-average F1@k.")
@click.option("--method", default=None, help="Row label (default file stem).")
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@_jobs_option
@_progress_option
@click.pass_context
def score(
    ctx,
    predictions,
    gold,
    cutoffs,
    strict_k,
    partial_match,
    micro,
    method,
    output,
    jobs,
    progress,
):
    """Score PREDICTIONS line by line against the GOLD corpus."""
    cutoffs = tuple(sorted(set(cutoffs)))
    if not cutoffs or min(cutoffs) < 1:
        _fail("invalid_config: cutoffs must be positive integers")

    try:
        predicted_lines = read_predictions(predictions)
    except OSError as error:
        _fail("cannot read predictions '%s': %s", predictions, error.strerror or error)

    gold_lines = _read_corpus(gold)

    if len(predicted_lines) != len(gold_lines):
        _fail(
            "line count mismatch: %d predictions, %d gold lines",
            len(predicted_lines),
            len(gold_lines),
        )

    pairs = []
    malformed = 0
    skipped_empty_gold = 0
    absent = total = 0

    for prediction, line in zip(predicted_lines, gold_lines):
        if line.record is None:
            malformed += 1
            continue

        if not normalize(line.record.keywords):
            skipped_empty_gold += 1
            _logger.info("line %d: empty gold, skipped", line.line_number)
            continue

        if line.record.title or line.record.abstract:
            document = PaperRecord.from_raw(line.record)
            absent_count, gold_count = absent_gold_count(
                line.record.keywords, document.doc_tokens
            )
            absent += absent_count
            total += gold_count

        pairs.append((prediction, line.record.keyphrase_string))

    with WorkerPool(jobs=jobs, progress=progress, description="score") as pool:
        documents = pool.map(
            partial(
                _score_line,
                cutoffs=cutoffs,
                strict_k=strict_k,
                partial_match=partial_match,
            ),
            pairs,
        )

    accumulator = ReportAccumulator()
    for document in documents:
        accumulator.add(document)

    try:
        report = accumulator.result(
            method=method or Path(predictions).stem, micro=micro, strict_k=strict_k
        )
    except ValueError as error:
        _fail("%s", error)

    diagnostics = {
        "skipped_empty_gold": skipped_empty_gold,
        "malformed_gold_lines": malformed,
    }
    if total:
        diagnostics["absent_gold_fraction"] = absent / total

    report = report.with_diagnostics(**diagnostics)

    click.echo(format_table([report]), nl=False)

    for name, value in sorted(report.diagnostics.items()):
        _logger.info("%s: %s", name, value)

    if output:
        write_json(output, report.to_mapping())
        RunManifest.create(
            "score",
            ctx.params,
            inputs=[predictions, gold],
            config={
                "cutoffs": list(cutoffs),
                "strict_k": strict_k,
                "partial": partial_match,
                "micro": micro,
            },
        ).write(output)

    _finish(ctx, malformed)


@main.command("tune")
@click.argument("validation", type=click.Path(dir_okay=False))
@_extractor_options
@click.option(
    "--grid",
    "grid_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="YAML grid: a list of points or a mapping of value lists.",
)
@click.option("--k", type=int, default=5, show_default=True)
@click.option(
    "--output",
    type=click.Path(dir_okay=False),
    required=True,
    help="Winning configuration (JSON).",
)
@click.option(
    "--scoreboard",
    type=click.Path(dir_okay=False),
    default=None,
    help="Per-point scores (default <output>.scoreboard.tsv).",
)
@_jobs_option
@_progress_option
@click.pass_context
def tune_command(
    ctx,
    validation,
    method,
    config_path,
    max_phrase_len,
    cooccurrence_window,
    clustering_threshold,
    damping,
    selection,
    stopwords,
    grid_path,
    k,
    output,
    scoreboard,
    jobs,
    progress,
):
    """Select extractor parameters maximizing F1@K on the VALIDATION corpus."""
    base_config = _load_config(
        config_path,
        max_phrase_len=max_phrase_len,
        cooccurrence_window=cooccurrence_window,
        clustering_threshold=clustering_threshold,
        damping=damping,
        selection=selection,
    )
    grid = _read_mapping(grid_path) if grid_path else DEFAULT_GRID

    lines = _read_corpus(validation)
    records = [line.record for line in lines if line.record is not None]
    malformed = sum(1 for line in lines if line.error and line.error != "blank_line")

    with WorkerPool(jobs=jobs, progress=progress, description="tune") as pool:
        try:
            result = tune(
                method,
                records,
                grid,
                k,
                base_config=base_config,
                stopwords=load_stopwords(stopwords),
                pool=pool,
            )
        except (TypeError, ValueError) as error:
            _fail("%s", error)

    names = list(dict.fromkeys(name for row in result.scoreboard for name in row.point))
    table = ["\t".join(names + ["F1@{}".format(k)])]
    for row in result.scoreboard:
        table.append(
            "\t".join(
                [str(row.point.get(name, "-")) for name in names]
                + ["{:.6f}".format(row.score)]
            )
        )

    click.echo("\n".join(table))

    write_json(output, result.best.to_mapping())
    write_lines(scoreboard or "{}.scoreboard.tsv".format(output), table)

    RunManifest.create(
        "tune",
        ctx.params,
        inputs=[validation] + ([grid_path] if grid_path else []),
        config={"base": base_config.to_mapping(), "k": k},
    ).write(output)

    _finish(ctx, malformed)


@main.command()
@click.argument("reports", nargs=-1, required=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def report(ctx, reports, output):
    """Combine score REPORTS given as DATASET=PATH into one table in percent."""
    loaded = []
    paths = []

    for argument in reports:
        dataset, separator, path = argument.partition("=")

        if not separator or not dataset or not path:
            raise click.BadParameter(
                "expected DATASET=PATH, got '{}'".format(argument), param_hint="REPORTS"
            )

        paths.append(path)
        data = _read_mapping(path)

        try:
            loaded.append((dataset, EvalReport.from_mapping(data or {})))
        except ValueError as error:
            _fail("'%s': %s", path, error)

    table = format_combined(loaded)
    click.echo(table, nl=False)

    if output:
        write_lines(output, table.splitlines())
        RunManifest.create("report", ctx.params, inputs=paths).write(output)


@main.command()
@click.argument("manifest", type=click.Path(dir_okay=False))
@click.pass_context
def replay(ctx, manifest):
    """Re-run the command recorded in a run MANIFEST."""
    try:
        recorded = RunManifest.read(manifest)
    except OSError as error:
        _fail("cannot read manifest '%s': %s", manifest, error.strerror or error)
    except ValueError as error:
        _fail("%s", error)

    command = main.get_command(ctx, recorded.command)

    if command is None or command is replay:
        _fail("invalid_config: cannot replay command '%s'", recorded.command)

    _logger.info("replaying '%s' from '%s'", recorded.command, manifest)

    ctx.invoke(command, **recorded.parameters)

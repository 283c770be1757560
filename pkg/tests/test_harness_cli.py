# -*- coding: utf-8 -*-
"""Module implements tests of the ``kpbench`` command-line interface."""
import json

import pytest
from click.testing import CliRunner

from keyphrase_bench.corpus.io import read_predictions, read_records, write_lines
from keyphrase_bench.harness.cli import main
from keyphrase_bench.harness.manifest import RunManifest, manifest_path
from keyphrase_bench.helpers.codec import parse

pytest_plugins = ["tests.fixtures.corpus_data"]


@pytest.fixture(scope="module")
def runner(logger):
    """Provide CliRunner instance."""
    logger.info("Initialize CliRunner() instance...")

    return CliRunner()


def _invoke(runner, *args, **kwargs):
    """Invoke ``kpbench`` with string arguments."""
    return runner.invoke(main, [str(arg) for arg in args], **kwargs)


def _load(path):
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


@pytest.mark.usefixtures("logger")
class TestPreprocess:
    """Test the ``preprocess`` command."""

    @pytest.mark.parametrize("split,kept,too_short", [("train", 16, 1), ("test", 15, 2)])
    def test_raw_corpus(self, runner, tmp_path, raw_corpus_path, split, kept, too_short):
        """Test kept records and the rejection log of the raw corpus."""
        output = tmp_path / "corpus.jsonl"

        result = _invoke(
            runner, "preprocess", raw_corpus_path, "--split", split, "--output", output
        )

        assert result.exit_code == 0, result.output  # noqa
        assert len(read_predictions(output)) == kept  # noqa

        rejections = _load(str(output) + ".rejections.json")

        assert rejections["kept"] == kept  # noqa
        assert rejections["reasons"]["abstract_too_short"] == too_short  # noqa
        assert rejections["reasons"]["not_english"] == 1  # noqa
        assert len(rejections["rejected"]) == 20 - kept  # noqa
        assert all(  # noqa
            json.loads(line)["split"] == split for line in read_predictions(output)
        )
        assert manifest_path(output).exists()  # noqa

    def test_empty_input(self, runner, tmp_path):
        """Test that an empty corpus writes an empty output and fails."""
        corpus = tmp_path / "empty.jsonl"
        corpus.write_text("", encoding="utf-8")
        output = tmp_path / "out.jsonl"

        result = _invoke(runner, "preprocess", corpus, "--output", output)

        assert result.exit_code == 1  # noqa
        assert output.read_text(encoding="utf-8") == ""  # noqa

    def test_malformed_line(self, runner, tmp_path, raw_corpus_path):
        """Test that a malformed line is logged and signals partial failure."""
        corpus = tmp_path / "corpus.jsonl"
        lines = read_predictions(raw_corpus_path)
        write_lines(corpus, lines[:3] + ["{not json"] + lines[3:])
        output = tmp_path / "out.jsonl"

        result = _invoke(runner, "preprocess", corpus, "--output", output)

        rejections = _load(str(output) + ".rejections.json")

        assert result.exit_code == 2  # noqa
        assert len(read_predictions(output)) == 16  # noqa
        assert rejections["malformed"] == 1  # noqa
        assert rejections["rejected"][0]["line"] == 4  # noqa

    def test_missing_input(self, runner, tmp_path):
        """Test that an unreadable corpus is a hard error."""
        result = _invoke(
            runner,
            "preprocess",
            tmp_path / "missing.jsonl",
            "--output",
            tmp_path / "out.jsonl",
        )

        assert result.exit_code == 1  # noqa


@pytest.mark.usefixtures("logger")
class TestStatsAndPrepare:
    """Test the ``stats`` and ``prepare`` commands."""

    def test_stats(self, runner, tmp_path, stats_corpus_path):
        """Test the printed table and the JSON output."""
        output = tmp_path / "stats.json"

        result = _invoke(runner, "stats", stats_corpus_path, "--output", output)

        assert result.exit_code == 0  # noqa
        assert "Records\t3" in result.output  # noqa
        assert "Av. Title\t3.0000" in result.output  # noqa
        assert _load(output)["total_abstract_tokens"] == 29  # noqa

    def test_stats_empty(self, runner, tmp_path):
        """Test that an empty corpus is a hard error."""
        corpus = tmp_path / "empty.jsonl"
        corpus.write_text("", encoding="utf-8")

        assert _invoke(runner, "stats", corpus).exit_code == 1  # noqa

    def test_prepare(self, runner, tmp_path, stats_corpus_path):
        """Test source, target and vocabulary files."""
        prefix = tmp_path / "model"

        result = _invoke(
            runner,
            "prepare",
            stats_corpus_path,
            "--output",
            prefix,
            "--max-source-tokens",
            5,
        )

        sources = read_predictions(str(prefix) + ".source.txt")
        targets = read_predictions(str(prefix) + ".target.txt")
        vocab = read_predictions(str(prefix) + ".vocab.tsv")

        assert result.exit_code == 0  # noqa
        assert len(sources) == len(targets) == 3  # noqa
        assert all(len(source.split()) <= 5 for source in sources)  # noqa
        assert all(len(row.split("\t")) == 2 for row in vocab)  # noqa


@pytest.mark.usefixtures("logger")
class TestExtract:
    """Test the ``extract`` command."""

    @pytest.mark.parametrize("method", ["yake", "topicrank"])
    def test_deterministic(self, runner, tmp_path, raw_corpus_path, method):
        """Test output size and byte-identical serial and parallel runs."""
        outputs = [tmp_path / "{}.txt".format(name) for name in ("a", "b", "c")]

        for output, jobs in zip(outputs, (1, 1, 2)):
            result = _invoke(
                runner,
                "extract",
                raw_corpus_path,
                "--method",
                method,
                "--n",
                7,
                "--output",
                output,
                "--jobs",
                jobs,
            )
            assert result.exit_code == 0, result.output  # noqa

        lines = read_predictions(outputs[0])

        assert len(lines) == 20  # noqa
        assert all(0 < len(parse(line)) <= 7 for line in lines)  # noqa
        assert outputs[0].read_bytes() == outputs[1].read_bytes()  # noqa
        assert outputs[0].read_bytes() == outputs[2].read_bytes()  # noqa
        assert RunManifest.read(manifest_path(outputs[0])).config == (  # noqa
            RunManifest.read(manifest_path(outputs[2])).config
        )
        assert "jobs" not in RunManifest.read(manifest_path(outputs[2])).parameters  # noqa

    def test_prefix(self, runner, tmp_path, raw_corpus_path):
        """Test that five keyphrases are a prefix of seven per document."""
        files = {}

        for n in (5, 7):
            files[n] = tmp_path / "yake{}.txt".format(n)
            _invoke(
                runner,
                "extract",
                raw_corpus_path,
                "--method",
                "yake",
                "--n",
                n,
                "--output",
                files[n],
            )

        for five, seven in zip(read_predictions(files[5]), read_predictions(files[7])):
            assert parse(seven)[:5] == parse(five)  # noqa

    def test_environment(self, runner, tmp_path, raw_corpus_path):
        """Test options given as environment variables."""
        output = tmp_path / "out.txt"

        result = _invoke(
            runner,
            "extract",
            raw_corpus_path,
            "--method",
            "topicrank",
            "--output",
            output,
            env={"KPBENCH_EXTRACT_N": "3"},
        )

        assert result.exit_code == 0  # noqa
        assert all(len(parse(line)) <= 3 for line in read_predictions(output))  # noqa

    def test_malformed_line(self, runner, tmp_path, raw_corpus_path):
        """Test that a malformed line keeps its place as an empty prediction."""
        corpus = tmp_path / "corpus.jsonl"
        lines = read_predictions(raw_corpus_path)
        write_lines(corpus, lines[:1] + ["[1, 2]"] + lines[1:])
        output = tmp_path / "out.txt"

        result = _invoke(
            runner, "extract", corpus, "--method", "yake", "--output", output
        )

        predictions = read_predictions(output)

        assert result.exit_code == 2  # noqa
        assert len(predictions) == 21  # noqa
        assert predictions[1] == ""  # noqa

    def test_unknown_method(self, runner, tmp_path, raw_corpus_path):
        """Test that an unknown method is a usage error."""
        result = _invoke(
            runner,
            "extract",
            raw_corpus_path,
            "--method",
            "keybert",
            "--output",
            tmp_path / "out.txt",
        )

        assert result.exit_code == 2  # noqa
        assert not (tmp_path / "out.txt").exists()  # noqa

    def test_invalid_override(self, runner, tmp_path, raw_corpus_path):
        """Test that an invalid parameter is a hard error."""
        result = _invoke(
            runner,
            "extract",
            raw_corpus_path,
            "--method",
            "yake",
            "--max-phrase-len",
            0,
            "--output",
            tmp_path / "out.txt",
        )

        assert result.exit_code == 1  # noqa


@pytest.mark.usefixtures("logger")
class TestScore:
    """Test the ``score`` command."""

    def test_predictions_equal_gold(self, runner, tmp_path, raw_corpus_path):
        """Test that gold keyphrase strings as predictions score 1."""
        predictions = tmp_path / "gold.txt"
        write_lines(
            predictions,
            (line.record.keyphrase_string for line in read_records(raw_corpus_path)),
        )
        output = tmp_path / "report.json"

        result = _invoke(
            runner, "score", predictions, raw_corpus_path, "--output", output
        )

        report = _load(output)

        assert result.exit_code == 0, result.output  # noqa
        assert report["document_count"] == 20  # noqa
        assert report["f1_at"] == {"5": 1.0, "7": 1.0}  # noqa
        assert report["rouge1_f1"] == pytest.approx(1.0)  # noqa
        assert report["rougel_f1"] == pytest.approx(1.0)  # noqa
        assert 0.0 <= report["diagnostics"]["absent_gold_fraction"] <= 1.0  # noqa

    @pytest.mark.parametrize(
        "keywords",
        [
            "health care,,,,immune system; human -; metabolism, immunity,,,,",
            "graph theory ;; -- ; social networks,",
            "Neural Networks, deep  learning ... ; x",
        ],
    )
    def test_raw_keyword_strings(self, runner, tmp_path, keywords):
        """Test that unparsed gold keyword strings as predictions score 1."""
        gold = tmp_path / "gold.jsonl"
        write_lines(gold, [json.dumps({"keywords": keywords})])
        predictions = tmp_path / "raw.txt"
        write_lines(predictions, [keywords])
        output = tmp_path / "report.json"

        result = _invoke(runner, "score", predictions, gold, "--output", output)

        report = _load(output)

        assert result.exit_code == 0, result.output  # noqa
        assert report["f1_at"] == {"5": 1.0, "7": 1.0}  # noqa
        assert report["rouge1_f1"] == pytest.approx(1.0)  # noqa
        assert report["rougel_f1"] == pytest.approx(1.0)  # noqa

    def test_empty_predictions(self, runner, tmp_path, raw_corpus_path):
        """Test that empty prediction lines score 0."""
        predictions = tmp_path / "empty.txt"
        write_lines(predictions, [""] * 20)
        output = tmp_path / "report.json"

        result = _invoke(
            runner, "score", predictions, raw_corpus_path, "--output", output
        )

        report = _load(output)

        assert result.exit_code == 0  # noqa
        assert report["f1_at"] == {"5": 0.0, "7": 0.0}  # noqa
        assert (report["rouge1_f1"], report["rougel_f1"]) == (0.0, 0.0)  # noqa
        assert report["diagnostics"]["empty_predictions"] == 20  # noqa

    def test_sample(self, logger, runner, tmp_path, sample_files):
        """Test the sample predictions against hand-computed values."""
        predictions, gold, expected = sample_files
        output = tmp_path / "sample.json"

        result = _invoke(runner, "score", predictions, gold, "--output", output)

        report = _load(output)

        logger.info("Sample report %s", report)

        assert result.exit_code == 0  # noqa
        assert report["document_count"] == expected["document_count"]  # noqa
        assert report["diagnostics"] == expected["diagnostics"]  # noqa
        assert report["method"] == "sample_predictions"  # noqa

        for k in ("5", "7"):
            assert abs(report["f1_at"][k] - expected["f1_at"][k]) < 1e-9  # noqa
        for name in ("rouge1_f1", "rougel_f1"):
            assert abs(report[name] - expected[name]) < 1e-9  # noqa

    def test_partial_and_cutoffs(self, runner, tmp_path, sample_files):
        """Test custom cutoffs and partial-match columns."""
        predictions, gold, _ = sample_files
        output = tmp_path / "sample.json"

        result = _invoke(
            runner,
            "score",
            predictions,
            gold,
            "--k",
            3,
            "--k",
            10,
            "--partial",
            "--strict-k",
            "--output",
            output,
        )

        report = _load(output)

        assert result.exit_code == 0  # noqa
        assert sorted(report["f1_at"]) == ["10", "3"]  # noqa
        assert sorted(report["partial_f1_at"]) == ["10", "3"]  # noqa
        assert all(  # noqa
            report["partial_f1_at"][k] >= report["f1_at"][k] for k in ("3", "10")
        )
        assert "pF1@3" in result.output  # noqa

    def test_line_count_mismatch(self, runner, tmp_path, sample_files):
        """Test that misaligned files are a hard error."""
        predictions, gold, _ = sample_files
        short = tmp_path / "short.txt"
        write_lines(short, read_predictions(predictions)[:-1])

        result = _invoke(runner, "score", short, gold)

        assert result.exit_code == 1  # noqa
        assert "line count mismatch" in result.output  # noqa


@pytest.mark.usefixtures("logger")
class TestTuneReportReplay:
    """Test the ``tune``, ``report`` and ``replay`` commands."""

    def test_tune(self, runner, tmp_path, tune_corpus_path, data_dir):
        """Test that the bigram-gold corpus selects three-token candidates."""
        output = tmp_path / "best.json"

        result = _invoke(
            runner,
            "tune",
            tune_corpus_path,
            "--method",
            "yake",
            "--grid",
            data_dir / "grid_phrase_len.yaml",
            "--k",
            5,
            "--output",
            output,
        )

        scoreboard = read_predictions(str(output) + ".scoreboard.tsv")

        assert result.exit_code == 0, result.output  # noqa
        assert _load(output)["max_phrase_len"] == 3  # noqa
        assert scoreboard == [  # noqa
            "max_phrase_len\tF1@5",
            "1\t0.000000",
            "3\t0.500000",
        ]

    def test_tune_single_point(self, runner, tmp_path, tune_corpus_path, data_dir):
        """Test a grid of one point."""
        output = tmp_path / "best.json"

        result = _invoke(
            runner,
            "tune",
            tune_corpus_path,
            "--method",
            "topicrank",
            "--grid",
            data_dir / "grid_single.yaml",
            "--output",
            output,
        )

        assert result.exit_code == 0  # noqa
        assert _load(output)["max_phrase_len"] == 2  # noqa
        assert len(read_predictions(str(output) + ".scoreboard.tsv")) == 2  # noqa

    def test_tune_empty_grid(self, runner, tmp_path, tune_corpus_path, data_dir):
        """Test that an empty grid is a hard error."""
        result = _invoke(
            runner,
            "tune",
            tune_corpus_path,
            "--method",
            "yake",
            "--grid",
            data_dir / "grid_empty.yaml",
            "--output",
            tmp_path / "best.json",
        )

        assert result.exit_code == 1  # noqa
        assert "empty_grid" in result.output  # noqa

    def test_report(self, runner, tmp_path, sample_files):
        """Test a combined table of two datasets."""
        predictions, gold, _ = sample_files
        first, second = tmp_path / "first.json", tmp_path / "second.json"

        _invoke(runner, "score", predictions, gold, "--output", first)
        _invoke(runner, "score", predictions, gold, "--output", second)

        table = tmp_path / "table.tsv"
        result = _invoke(
            runner,
            "report",
            "oagk={}".format(first),
            "hulth={}".format(second),
            "--output",
            table,
        )

        rows = [row.split("\t") for row in read_predictions(table)]

        assert result.exit_code == 0  # noqa
        assert rows[0][:2] == ["method", "oagk F1@5"]  # noqa
        assert rows[1][0] == "sample_predictions"  # noqa
        assert rows[1][1] == "62.54"  # noqa
        assert len(rows[1]) == 9  # noqa

    def test_report_bad_argument(self, runner):
        """Test that reports must be given as DATASET=PATH."""
        assert _invoke(runner, "report", "report.json").exit_code == 2  # noqa

    def test_replay(self, runner, tmp_path, raw_corpus_path):
        """Test that replaying a manifest re-creates the output byte for byte."""
        output = tmp_path / "out.txt"

        _invoke(
            runner,
            "extract",
            raw_corpus_path,
            "--method",
            "topicrank",
            "--selection",
            "frequency",
            "--n",
            5,
            "--output",
            output,
        )

        original = output.read_bytes()
        manifest = manifest_path(output)
        recorded = RunManifest.read(manifest)
        output.unlink()

        result = _invoke(runner, "replay", manifest)

        assert result.exit_code == 0, result.output  # noqa
        assert recorded.config["selection"] == "frequency"  # noqa
        assert output.read_bytes() == original  # noqa
        assert RunManifest.read(manifest) == recorded  # noqa

    def test_replay_invalid(self, runner, tmp_path):
        """Test that a file that is no manifest is a hard error."""
        path = tmp_path / "bad.manifest.json"
        path.write_text("[]", encoding="utf-8")

        assert _invoke(runner, "replay", path).exit_code == 1  # noqa


@pytest.mark.usefixtures("logger")
class TestBenchmark:
    """Test extractor scores on a public benchmark, when available."""

    @pytest.mark.parametrize("method,expected", [("yake", 0.1935), ("topicrank", 0.165)])
    def test_benchmark_f1(self, variables, logger, runner, tmp_path, method, expected):
        """Test tuned F1@5 on the benchmark test split within 6 points."""
        validation = variables.get("hulth_validation", None)
        test = variables.get("hulth_test", None)

        if not validation or not test:
            pytest.skip("Benchmark corpus not configured")

        config = tmp_path / "best.json"
        predictions = tmp_path / "predictions.txt"
        output = tmp_path / "report.json"

        _invoke(
            runner, "tune", validation, "--method", method, "--k", 5, "--output", config
        )
        _invoke(
            runner,
            "extract",
            test,
            "--method",
            method,
            "--config",
            config,
            "--n",
            7,
            "--output",
            predictions,
            "--jobs",
            0,
        )
        _invoke(runner, "score", predictions, test, "--output", output)

        report = _load(output)

        logger.info("%s on benchmark: %s", method, report)

        assert abs(report["f1_at"]["5"] - expected) <= 0.06  # noqa


def _command_arguments(command, request, output):
    """Build the arguments of one ``command`` run writing to ``output``."""
    if command == "preprocess":
        corpus = request.getfixturevalue("raw_corpus_path")
        return [command, corpus, "--split", "test", "--output", output]

    if command == "stats":
        corpus = request.getfixturevalue("stats_corpus_path")
        return [command, corpus, "--output", output]

    if command == "prepare":
        corpus = request.getfixturevalue("stats_corpus_path")
        return [command, corpus, "--output", output]

    if command == "extract":
        corpus = request.getfixturevalue("raw_corpus_path")
        return [command, corpus, "--method", "topicrank", "--output", output]

    if command == "score":
        predictions, gold, _ = request.getfixturevalue("sample_files")
        return [command, predictions, gold, "--partial", "--output", output]

    corpus = request.getfixturevalue("tune_corpus_path")
    grid = request.getfixturevalue("data_dir") / "grid_phrase_len.yaml"
    return [command, corpus, "--method", "yake", "--grid", grid, "--output", output]


@pytest.mark.usefixtures("logger")
class TestDeterminism:
    """Test byte-identical outputs of repeated and parallel runs."""

    @pytest.mark.parametrize(
        "command,jobs",
        [
            ("preprocess", (1, 1, 2)),
            ("stats", (None, None)),
            ("prepare", (None, None)),
            ("extract", (1, 1, 2)),
            ("score", (1, 1, 2)),
            ("tune", (1, 1, 2)),
        ],
    )
    def test_repeated_runs(self, logger, runner, request, tmp_path, command, jobs):
        """Test that every output file, manifest included, is byte-identical."""
        workdir = tmp_path / "run"
        workdir.mkdir()
        output = workdir / "out"

        snapshots = []
        for run_jobs in jobs:
            for path in workdir.iterdir():
                path.unlink()

            arguments = _command_arguments(command, request, output)
            if run_jobs is not None:
                arguments += ["--jobs", run_jobs]

            result = _invoke(runner, *arguments)

            assert result.exit_code == 0, result.output  # noqa

            snapshots.append(
                {path.name: path.read_bytes() for path in sorted(workdir.iterdir())}
            )

        logger.info("Command '%s' wrote %s", command, sorted(snapshots[0]))

        assert manifest_path(output).name in snapshots[0]  # noqa
        assert all(snapshot == snapshots[0] for snapshot in snapshots[1:])  # noqa

# -*- coding: utf-8 -*-
r"""Module reads and writes line-delimited corpora and prediction files.

A corpus file holds one JSON object per line with string fields ``title``,
``abstract`` and ``keywords``. A prediction file holds one keyphrase string per
line, aligned by line number with its gold corpus.

Malformed corpus lines do not stop reading: :func:`read_records` yields a
:class:`CorpusLine` with an ``error`` for them, so callers can log and count
them and carry on.
"""
import json
from dataclasses import dataclass
from logging import getLogger
from pathlib import Path
from typing import Optional

from .records import RawRecord


_logger = getLogger(__name__)


@dataclass(frozen=True)
class CorpusLine:
    """One line of a corpus file: the decoded record or a parsing error."""

    line_number: int
    record: Optional[RawRecord] = None
    error: Optional[str] = None


def read_records(path):
    """Yield a :class:`CorpusLine` for every non-blank line of ``path``.

    Raises
    ------
    :obj:`OSError`
        If ``path`` cannot be opened.

    """
    with Path(path).open(encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            if not line.strip():
                yield CorpusLine(line_number, error="blank_line")
                continue

            try:
                record = RawRecord.from_mapping(json.loads(line))
            except ValueError as error:
                _logger.warning("line %d: malformed record: %s", line_number, error)
                yield CorpusLine(line_number, error=str(error))
            else:
                yield CorpusLine(line_number, record=record)


def dump_line(data):
    """Serialize ``data`` into one deterministic JSON line (no newline)."""
    return json.dumps(data, ensure_ascii=False, sort_keys=True)


def write_lines(path, lines):
    """Write ``lines`` to ``path``, one per line, UTF-8 with ``\\n`` endings."""
    path = Path(path)
    count = 0

    with path.open("w", encoding="utf-8", newline="\n") as handle:
        for line in lines:
            handle.write(line)
            handle.write("\n")
            count += 1

    _logger.info("wrote %d lines to '%s'", count, path)

    return count


def write_json(path, data):
    """Write ``data`` to ``path`` as indented, key-sorted JSON."""
    path = Path(path)

    with path.open("w", encoding="utf-8", newline="\n") as handle:
        json.dump(data, handle, ensure_ascii=False, sort_keys=True, indent=2)
        handle.write("\n")

    _logger.debug("wrote JSON document to '%s'", path)


def read_predictions(path):
    """Return the lines of a prediction file without line endings."""
    with Path(path).open(encoding="utf-8") as handle:
        return [line.rstrip("\r\n") for line in handle]

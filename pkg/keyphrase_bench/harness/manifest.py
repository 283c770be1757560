# -*- coding: utf-8 -*-
r"""Module records how an output file was produced.

A :class:`RunManifest` is written next to every output as
``<output>.manifest.json``. It holds the command name, its parameters, the
configuration snapshot and the tool version, and nothing that changes between
runs (no timestamps, no host names, no degree of parallelism), so two runs of
the same command produce identical manifests and ``kpbench replay`` can
re-create the output from it.
"""
import json
from dataclasses import dataclass, field
from logging import getLogger
from pathlib import Path
from typing import Dict, List

from .. import __version__
from ..corpus.io import write_json


_logger = getLogger(__name__)

MANIFEST_SUFFIX = ".manifest.json"

# parameters that change how a command runs, never what it writes
EXECUTION_PARAMETERS = frozenset({"jobs", "progress"})


def manifest_path(output):
    """Return the manifest path belonging to ``output``."""
    return Path(str(output) + MANIFEST_SUFFIX)


def _plain(value):
    """Convert tuples and paths into JSON-friendly values."""
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]

    if isinstance(value, Path):
        return str(value)

    return value


@dataclass(frozen=True)
class RunManifest:
    """Snapshot of one command invocation.

    Attributes
    ----------
    command : :obj:`str`
        Command name, e.g. ``extract``.

    parameters : :obj:`dict`
        Command parameters as passed on the command line.

    inputs : :obj:`list` of :obj:`str`
        Input paths read by the command.

    config : :obj:`dict`
        Effective configuration (extractor parameters, thresholds, limits or
        metric flags).

    version : :obj:`str`
        Version of :mod:`keyphrase_bench`.

    seed_free : :obj:`bool`
        Marks the output as free of random seeds, i.e. fully determined by
        inputs and parameters.

    """

    command: str
    parameters: Dict[str, object] = field(default_factory=dict)
    inputs: List[str] = field(default_factory=list)
    config: Dict[str, object] = field(default_factory=dict)
    version: str = __version__
    seed_free: bool = True

    @classmethod
    def create(cls, command, parameters, inputs=(), config=None):
        """Build a manifest, dropping execution-only parameters."""
        return cls(
            command=command,
            parameters={
                name: _plain(value)
                for name, value in sorted(parameters.items())
                if name not in EXECUTION_PARAMETERS
            },
            inputs=[str(path) for path in inputs],
            config=_plain(dict(config or {})),
        )

    def to_mapping(self):
        """Return the manifest as a plain :obj:`dict`."""
        return {
            "command": self.command,
            "parameters": dict(self.parameters),
            "inputs": list(self.inputs),
            "config": dict(self.config),
            "version": self.version,
            "seed_free": self.seed_free,
        }

    def write(self, output):
        """Write the manifest next to ``output`` and return its path."""
        path = manifest_path(output)
        write_json(path, self.to_mapping())

        _logger.debug("wrote manifest of '%s' to '%s'", self.command, path)

        return path

    @classmethod
    def read(cls, path):
        """Load a manifest written by :meth:`write`.

        Raises
        ------
        :obj:`ValueError`
            If the file is not a manifest.

        """
        with Path(path).open(encoding="utf-8") as handle:
            data = json.load(handle)

        if not isinstance(data, dict) or "command" not in data:
            _logger.error("Exception: '%s' is not a run manifest", path)
            raise ValueError("invalid_config: '{}' is not a run manifest".format(path))

        if data.get("version") != __version__:
            _logger.warning(
                "manifest written by version %s, running %s",
                data.get("version"),
                __version__,
            )

        return cls(
            command=data["command"],
            parameters=dict(data.get("parameters", {})),
            inputs=list(data.get("inputs", [])),
            config=dict(data.get("config", {})),
            version=data.get("version", __version__),
            seed_free=bool(data.get("seed_free", True)),
        )

# -*- coding: utf-8 -*-
"""Run the command-line interface with ``python -m keyphrase_bench``."""
from .harness.cli import main


main()

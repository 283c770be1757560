# -*- coding: utf-8 -*-
"""Module defines common test fixtures."""
from logging import getLogger
from pathlib import Path

import pytest


DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def logger():
    """Provide logger instance."""
    logger = getLogger(__name__)

    return logger


@pytest.fixture(scope="session")
def data_dir():
    """Provide path of the bundled test data."""
    return DATA_DIR

"""Shared fixtures for the rational-tiles test suite.

Solving the cases is the expensive part of most tests, so the full
classification is computed once per session and per-case fixtures read
their results from it.
"""

import pytest

from rational_tiles.classification import classify
from rational_tiles.utils.logger import init_logger


@pytest.fixture(scope="session", autouse=True)
def _logging(tmp_path_factory):
    init_logger("INFO", log_dir=tmp_path_factory.mktemp("logs"))


@pytest.fixture(scope="session")
def full_classification():
    return classify()


@pytest.fixture(scope="session")
def case_results(full_classification):
    """Case results of the full run, by case id."""
    return {result.case_id: result for result in full_classification.results}


@pytest.fixture(scope="session")
def b3_a4(case_results):
    return case_results["b3+a4"]


@pytest.fixture(scope="session")
def abd(case_results):
    return case_results["abd"]

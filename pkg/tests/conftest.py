"""Shared corpora, computed once per session, plus the acceptance summary."""

from __future__ import annotations

import pytest

from corekit import (
    enumerate_connected_graphs,
    enumerate_trees,
    enumerate_unicyclic,
    fixture,
    FIXTURE_NAMES,
)

import helpers


@pytest.fixture(scope="session")
def all_fixtures():
    """name -> Graph for every packaged fixture."""
    return {name: fixture(name) for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def trees_by_n():
    """n -> list of free trees, n = 1..12."""
    return {n: list(enumerate_trees(n)) for n in range(1, 13)}


@pytest.fixture(scope="session")
def unicyclic_by_n():
    """n -> list of pairwise non-isomorphic unicyclic graphs, n = 3..12."""
    return {n: list(enumerate_unicyclic(n)) for n in range(3, 13)}


@pytest.fixture(scope="session")
def connected_by_n():
    """n -> list of pairwise non-isomorphic connected graphs, n = 1..7."""
    return {n: list(enumerate_connected_graphs(n)) for n in range(1, 8)}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if helpers.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in helpers.ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

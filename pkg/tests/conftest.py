import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gallai_ramsey.graph import ColoredCompleteGraph  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rainbow_k3():
    return ColoredCompleteGraph.from_edges(3, 3, {(0, 1): 1, (0, 2): 2, (1, 2): 3})


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)

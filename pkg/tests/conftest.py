import sys
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from weakfrieze import Polygon, cells, glue_many, validate_dissection  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


def trivial_pieces(p, d):
    return [{e: 1 for e in combinations(c, 2)} for c in cells(p, d)]


@pytest.fixture
def nonagon():
    p = Polygon(9)
    return p, validate_dissection(p, [(1, 6), (2, 5)])


@pytest.fixture
def fig1_map(nonagon):
    p, d = nonagon
    return glue_many(p, d, trivial_pieces(p, d))


@pytest.fixture
def pentagon_fan():
    p = Polygon(5)
    return p, validate_dissection(p, [(0, 2), (0, 3)])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

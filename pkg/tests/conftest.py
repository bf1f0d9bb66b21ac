import pytest

from trigonal_strata.splitting import SplittingType
from trigonal_strata.theory import TrigonalContext

# Nodes of the g=11, n=3, d=0 picture with their drawn dimensions.
EXAMPLE_DIMS = {
    (-8, -5, 0): 0,
    (-7, -6, 0): 0,
    (-8, -4, -1): 1,
    (-7, -5, -1): 2,
    (-8, -3, -2): 2,
    (-6, -6, -1): 3,
    (-7, -4, -2): 4,
    (-7, -3, -3): 5,
    (-6, -5, -2): 6,
}

# Arrows of the same picture, read off node coordinates, smaller -> larger.
EXAMPLE_ARROWS = {
    ((-8, -5, 0), (-7, -6, 0)),
    ((-8, -5, 0), (-8, -4, -1)),
    ((-7, -6, 0), (-7, -5, -1)),
    ((-8, -4, -1), (-7, -5, -1)),
    ((-8, -4, -1), (-8, -3, -2)),
    ((-7, -5, -1), (-7, -4, -2)),
    ((-7, -5, -1), (-6, -6, -1)),
    ((-8, -3, -2), (-7, -4, -2)),
    ((-7, -4, -2), (-7, -3, -3)),
    ((-7, -4, -2), (-6, -5, -2)),
    ((-6, -6, -1), (-6, -5, -2)),
}


def T(*xs):
    return SplittingType(tuple(xs))


@pytest.fixture
def ctx11():
    return TrigonalContext.of(11, 3, 0)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

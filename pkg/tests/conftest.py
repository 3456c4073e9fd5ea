import pytest

from necklace_bq.quiver import jordan_quiver, parse_quiver

OCTAGON_TEXT = """
vertex LU
vertex LD
vertex ML
vertex MR
vertex RU
vertex RD
arrow g: LU -> LD
arrow e: ML -> LD
arrow f: ML -> LU
arrow a: ML -> MR
arrow d: RD -> MR
arrow b: MR -> RU
arrow c: RU -> RD
"""


@pytest.fixture
def jordan():
    return jordan_quiver()


@pytest.fixture
def octagon():
    return parse_quiver(OCTAGON_TEXT)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

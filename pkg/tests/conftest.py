import pytest

from mvkit import chain, direct_product, read_algebra, read_map
from mvkit.io import fixture_path

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def ex33():
    return read_algebra(fixture_path("example_3_3.mvalg"))


@pytest.fixture(scope="session")
def ex44():
    return read_algebra(fixture_path("example_4_4.mvalg"))


@pytest.fixture(scope="session")
def fixture_maps():
    return {
        "3.3": read_map(fixture_path("example_3_3_d.mvmap"), 6),
        "3.6": read_map(fixture_path("example_3_6_d.mvmap"), 4),
        "3.17": read_map(fixture_path("example_3_17_d.mvmap"), 3),
        "4.4": read_map(fixture_path("example_4_4_g.mvmap"), 4),
    }


SMALL = {
    "S2": chain(2),
    "S3": chain(3),
    "S4": chain(4),
    "S5": chain(5),
    "S2xS2": direct_product(chain(2), chain(2)),
    "S2xS3": direct_product(chain(2), chain(3)),
    "S2xS2xS2": direct_product(chain(2), chain(2), chain(2)),
}


@pytest.fixture(params=sorted(SMALL), scope="session")
def small(request):
    return request.param, SMALL[request.param]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import pytest

from framecert import certify, codes

ACCEPTANCE_RESULTS: dict[str, str] = {}


@pytest.fixture(scope="session")
def D_matrix():
    return codes.moonshine_frame_matrix()


@pytest.fixture(scope="session")
def D(D_matrix):
    return codes.from_generators(D_matrix)


@pytest.fixture(scope="session")
def C(D):
    return codes.dual(D)


@pytest.fixture(scope="session")
def C_short(C):
    return codes.shorten(C, 0)


@pytest.fixture(scope="session")
def D_short(D):
    return codes.shorten(D, 0)


@pytest.fixture(scope="session")
def partition(D_matrix):
    return certify.BlockPartition.from_generator_rows(D_matrix)


@pytest.fixture(scope="session")
def ctx(C, partition):
    return certify.SteinerContext(C, partition)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{ACCEPTANCE_RESULTS[name]}  {name}")

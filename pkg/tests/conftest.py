import pytest

from lenecklace import GrassmannNecklace, LeDiagram, shape_from_rows

# type (3,8) diagram from Oh's worked example, read off the drawn filling
EX38_PLUS = {(1, 2), (1, 7), (1, 8), (3, 4), (3, 7), (3, 8), (6, 7)}
EX38_TERMS = [(1, 3, 6), (2, 3, 6), (3, 6, 7), (4, 6, 7), (6, 7, 8), (6, 7, 8), (1, 7, 8), (1, 6, 8)]

EX48_TERMS = [
    (1, 2, 4, 7), (2, 3, 4, 7), (3, 4, 7, 8), (4, 6, 7, 8),
    (5, 6, 7, 8), (4, 6, 7, 8), (1, 4, 7, 8), (1, 4, 7, 8),
]
EX48_PLUS = {(1, 3), (1, 8), (2, 3), (2, 6), (2, 8), (4, 5)}


@pytest.fixture
def ex38_diagram():
    return LeDiagram(shape_from_rows(3, 8, [1, 3, 6]), frozenset(EX38_PLUS))


@pytest.fixture
def ex38_necklace():
    return GrassmannNecklace(3, 8, tuple(EX38_TERMS))


@pytest.fixture
def ex48_necklace():
    return GrassmannNecklace(4, 8, tuple(EX48_TERMS))


@pytest.fixture
def ex48_diagram():
    return LeDiagram(shape_from_rows(4, 8, [1, 2, 4, 7]), frozenset(EX48_PLUS))


_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for the acceptance summary."""
    label = request.node.get_closest_marker("criterion").args[0]
    entry = [label, "FAIL"]
    _ACCEPTANCE.append(entry)
    yield entry
    # a test body that reaches the end sets entry[1] = "PASS"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in _ACCEPTANCE:
        terminalreporter.write_line(f"{status}  {label}")

import pytest

from symdefect import load_bundled

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def graphs():
    names = ("c3", "c5", "fig2", "w5", "fig3_g1", "fig3_g2", "fig4_g1", "fig4_g2")
    return {name: load_bundled(name) for name in names}


@pytest.fixture
def c3(graphs):
    return graphs["c3"]


@pytest.fixture
def c5(graphs):
    return graphs["c5"]


@pytest.fixture
def fig2(graphs):
    return graphs["fig2"]


@pytest.fixture
def w5(graphs):
    return graphs["w5"]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

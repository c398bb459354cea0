import pytest

from bisect2.generators import gen_named


@pytest.fixture
def k4():
    return gen_named("k4")


@pytest.fixture
def petersen():
    return gen_named("petersen")


@pytest.fixture
def prism():
    return gen_named("prism")


@pytest.fixture
def theta():
    return gen_named("theta")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" in nodeid and getattr(rep, "when", "call") == "call":
                rows.append((nodeid.split("::")[-1], "PASS" if outcome == "passed" else "FAIL"))
    if rows:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(rows):
            terminalreporter.write_line(f"{status}  {name}")

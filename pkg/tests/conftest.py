import pytest
from hypothesis import strategies as st

from neutrosophic import NeutrosophicTriplet
from neutrosophic.verify import GridSpec

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
triplets = st.builds(NeutrosophicTriplet, unit, unit, unit)


@pytest.fixture(scope="session")
def lattice():
    return GridSpec(0.1).points()


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py::test_criterion_" in getattr(rep, "nodeid", "") and rep.when == "call":
                name = rep.nodeid.split("::")[-1].removeprefix("test_")
                lines.append(f"{'PASS' if rep.passed else 'FAIL'}  {name}")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: s.split()[1]):
            terminalreporter.write_line(line)

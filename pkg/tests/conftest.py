import pytest
from hypothesis import strategies as st

from liftweber import ProblemInstance

EXAMPLE1_LP = [(4, 4), (3, 1), (6, 4), (6, 2)]
EXAMPLE1_LT = [4, 1, 2, 3]
EXAMPLE1_CSV = "4,4,4\n3,1,1\n6,4,2\n6,2,3\n"


@pytest.fixture
def example1():
    return ProblemInstance.from_lists(EXAMPLE1_LP, EXAMPLE1_LT)


@st.composite
def small_instances(draw, max_m=8, lo=-5, hi=5, max_w=5):
    m = draw(st.integers(1, max_m))
    coord = st.integers(lo, hi)
    lp = draw(st.lists(st.tuples(coord, coord), min_size=m, max_size=m))
    lt = draw(st.lists(st.integers(1, max_w), min_size=m, max_size=m))
    return ProblemInstance.from_lists(lp, lt)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" in nodeid and rep.when == "call":
                lines.append((nodeid.split("::")[-1], outcome))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(lines):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")

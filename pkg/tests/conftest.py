import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from earring import Word  # noqa: E402

letters = st.integers(1, 4).flatmap(lambda i: st.sampled_from([i, -i]))
codes = st.lists(letters, max_size=16)
words = codes.map(Word)


_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = dict(report.user_properties).get("criterion")
    if crit is not None:
        _criteria[crit] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_criteria, key=lambda c: int(c.split()[0])):
        terminalreporter.write_line(f"criterion {crit}: {_criteria[crit]}")


@pytest.fixture
def criterion(record_property):
    def mark(label):
        record_property("criterion", label)
    return mark

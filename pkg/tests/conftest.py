import pytest
from hypothesis import strategies as st

from dyckcat.oracle import brute_enumerate
from dyckcat.path_core import DyckWord

# filled by tests/test_acceptance.py, printed at the end of the run
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def dyck_words(min_n=1, max_n=8):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.sampled_from(brute_enumerate(n).words)).map(DyckWord)


@pytest.fixture(scope="session")
def oracle_sets():
    return {n: brute_enumerate(n) for n in range(0, 13)}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        passed, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")

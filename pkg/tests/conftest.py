import pytest

from kumcoh import kummer4 as k4


@pytest.fixture(scope="session")
def h4():
    return k4.build_h4()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, failed = RESULTS[n]
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}"
        terminalreporter.write_line(line + (f" (failed: {', '.join(failed)})" if failed else ""))

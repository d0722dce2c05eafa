import time

SUITE_BUDGET_S = 60.0

ACCEPTANCE_LINES: list[str] = []
_START = {"t": time.perf_counter()}


def pytest_sessionstart(session):
    _START["t"] = time.perf_counter()


def elapsed() -> float:
    return time.perf_counter() - _START["t"]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    total = elapsed()
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
    verdict = "PASS" if total < SUITE_BUDGET_S else "FAIL"
    terminalreporter.write_line(
        f"{verdict} suite runtime: {total:.1f} s (budget {SUITE_BUDGET_S:.0f} s)")


def pytest_sessionfinish(session, exitstatus):
    if elapsed() >= SUITE_BUDGET_S and session.exitstatus == 0:
        session.exitstatus = 1

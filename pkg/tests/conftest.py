import re
import sys
import time
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SUITE_BUDGET = 60.0
_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_results: dict[int, tuple[str, list[str]]] = {}
_started = time.perf_counter()


def pytest_sessionstart(session):
    global _started
    _started = time.perf_counter()


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m or "test_acceptance" not in report.nodeid:
        return
    n = int(m.group(1))
    title, outcomes = _results.setdefault(n, (m.group(2).replace("_", " "), []))
    if report.when == "call" or report.outcome != "passed":
        outcomes.append(report.outcome)


@pytest.hookimpl(tryfirst=True)
def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _started
    session.config._suite_elapsed = elapsed
    if elapsed > SUITE_BUDGET and session.exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    elapsed = getattr(config, "_suite_elapsed", time.perf_counter() - _started)
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_results):
        title, outcomes = _results[n]
        passed = bool(outcomes) and all(o == "passed" for o in outcomes)
        if n == 12:
            within = elapsed <= SUITE_BUDGET
            passed = passed and within
            title += f" (suite {elapsed:.1f}s, budget {SUITE_BUDGET:.0f}s)"
        tr.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {n}: {title}")

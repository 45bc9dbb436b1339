import pytest

_outcomes: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if report.passed and not hasattr(report, "wasxfail"):
            verdict = "PASS"
        elif hasattr(report, "wasxfail"):
            verdict = "FAIL (expected failure)"
        elif report.skipped:
            verdict = "SKIPPED"
        else:
            verdict = "FAIL"
        _outcomes.setdefault(marker.args[0], []).append((item.name, verdict))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        parts = _outcomes[number]
        failed = [f"{name}: {v}" for name, v in parts if v != "PASS"]
        line = f"criterion {number}: {'FAIL' if failed else 'PASS'}"
        if failed:
            line += "  [" + "; ".join(failed) + "]"
        terminalreporter.write_line(line)

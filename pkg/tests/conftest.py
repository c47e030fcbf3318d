import pytest

_criteria: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    label = getattr(getattr(item, "function", None), "criterion", None)
    if label is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = "PASS" if report.outcome == "passed" else "FAIL"
        if _criteria.get(label[0], ("", "PASS"))[1] == "FAIL":
            status = "FAIL"
        _criteria[label[0]] = (label[1], status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria, key=lambda s: int(s)):
        text, status = _criteria[key]
        terminalreporter.write_line(f"[{status}] criterion {key}: {text}")

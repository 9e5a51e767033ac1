"""Shared fixtures and the per-criterion summary for the acceptance suite."""
import pytest

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.name.startswith("test_criterion_") and (rep.when == "call" or rep.failed):
        doc = (item.function.__doc__ or "").strip().splitlines()
        title = doc[0] if doc else item.name
        if item.name not in _criteria or rep.failed:
            _criteria[item.name] = ("PASS" if rep.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda n: int(n.split("_")[2])):
        status, title = _criteria[name]
        terminalreporter.write_line(f"criterion {name.split('_')[2]}: {status}  {title}")

import pytest

_acceptance = {}


@pytest.fixture
def acceptance_note(request):
    """Attach a one-line measurement to the acceptance summary."""

    def note(text):
        _acceptance.setdefault(request.node.nodeid, {})["note"] = text

    return note


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    entry = _acceptance.setdefault(item.nodeid, {})
    entry["number"], entry["title"] = marker.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        entry["outcome"] = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for entry in sorted(_acceptance.values(), key=lambda e: e.get("number", 0)):
        if "outcome" not in entry:
            continue
        line = f"[{entry['outcome']}] criterion {entry['number']}: {entry['title']}"
        if entry.get("note"):
            line += f" -- {entry['note']}"
        terminalreporter.write_line(line)

"""Print one PASS/FAIL line per acceptance criterion at the end of the run."""

_LINES = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    num, title = mark.args
    ok = call.excinfo is None
    details = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
    _LINES[num] = f"criterion {num:>2} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{details}]" if details else "")


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_LINES):
        terminalreporter.write_line(_LINES[num])

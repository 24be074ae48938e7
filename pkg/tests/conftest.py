"""Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""

_verdicts: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    detail = "; ".join(str(v) for k, v in item.user_properties if k == "detail")
    _verdicts[number] = ("PASS" if call.excinfo is None else "FAIL", title, detail)


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_verdicts):
        status, title, detail = _verdicts[number]
        line = f"{status} criterion {number:>2}: {title}"
        if detail:
            line += f" [{detail}]"
        terminalreporter.write_line(line)

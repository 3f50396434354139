_outcomes: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, description): numbered acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark:
            item.user_properties.append(("acceptance", mark.args))


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "acceptance" not in props:
        return
    number, description = props["acceptance"]
    if report.when == "call" or report.failed:
        prev = _outcomes.get(number, ("PASS", description))[0]
        status = "FAIL" if report.failed or prev == "FAIL" else "PASS"
        _outcomes[number] = (status, description)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        status, description = _outcomes[number]
        terminalreporter.write_line(f"criterion {number}: {status} - {description}")

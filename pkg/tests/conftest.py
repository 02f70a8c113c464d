import os

import pytest

_ACCEPTANCE: dict[int, tuple[str, str, str]] = {}


def pytest_addoption(parser):
    parser.addoption(
        "--corpus9",
        default=os.environ.get("DEGSIM_CORPUS9"),
        help="exhaustive 9-vertex graph6 corpus for the search acceptance checks "
        "(default: $DEGSIM_CORPUS9)",
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if rep.skipped:
        reason = rep.longrepr[2] if isinstance(rep.longrepr, tuple) else ""
        _ACCEPTANCE[number] = ("SKIPPED", title, reason.removeprefix("Skipped: "))
    elif rep.when == "call":
        detail = "" if rep.passed else str(rep.longrepr.reprcrash.message).splitlines()[0]
        _ACCEPTANCE[number] = ("PASS" if rep.passed else "FAIL", title, detail)
    elif rep.failed:
        _ACCEPTANCE[number] = ("FAIL", title, f"error during {rep.when}")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title, detail = _ACCEPTANCE[number]
        line = f"{status:<8}{number}. {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))

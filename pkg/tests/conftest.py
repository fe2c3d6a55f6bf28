import re

_CRITERIA: dict = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\w+)", report.nodeid)
    if not m:
        return
    key = m.group(1)
    entry = _CRITERIA.setdefault(key, {"outcome": "passed", "duration": 0.0})
    entry["duration"] += report.duration
    if report.failed:
        entry["outcome"] = "failed"
    elif report.skipped and entry["outcome"] == "passed":
        entry["outcome"] = "skipped"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key, entry in sorted(_CRITERIA.items(), key=lambda kv: kv[0]):
        number, _, name = key.partition("_")
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[entry["outcome"]]
        terminalreporter.write_line(
            f"criterion {number:<3} {name.replace('_', ' '):<40} {status}  ({entry['duration']:.2f} s)"
        )

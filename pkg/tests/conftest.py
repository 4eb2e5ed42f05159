"""One summary line per acceptance criterion at the end of a run."""

import re

_PATTERN = re.compile(r"test_acceptance\.py::test_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = {}
    for status, flag in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(status, []):
            hit = _PATTERN.search(getattr(rep, "nodeid", ""))
            if hit is None:
                continue
            num = int(hit.group(1))
            if flag == "FAIL" or num not in rows:
                rows[num] = (hit.group(2).replace("_", "-"), flag)
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(rows):
        slug, flag = rows[num]
        terminalreporter.write_line(f"ACCEPTANCE {num} {slug}: {flag}")

import re


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One line per acceptance criterion, printed after capture ends so
    it shows up in any pytest invocation."""
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            m = re.search(r"test_criterion_(\d+)", getattr(report, "nodeid", ""))
            if m:
                outcomes[int(m.group(1))] = "PASS" if status == "passed" else "FAIL"
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(outcomes):
        terminalreporter.write_line(f"criterion {number:>2}: {outcomes[number]}")

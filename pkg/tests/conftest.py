import re


def pytest_terminal_summary(terminalreporter):
    """Surface the acceptance suite's one-line-per-criterion verdicts."""
    lines = {}
    for reports in terminalreporter.stats.values():
        for rep in reports:
            if getattr(rep, "when", None) != "call":
                continue
            if "test_acceptance" not in str(getattr(rep, "nodeid", "")):
                continue
            for line in getattr(rep, "capstdout", "").splitlines():
                m = re.match(r"criterion (\d+) ", line)
                if m:
                    lines[int(m.group(1))] = line
    if lines:
        terminalreporter.section("acceptance criteria")
        for key in sorted(lines):
            terminalreporter.write_line(lines[key])

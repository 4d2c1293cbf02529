ACCEPT_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPT_LINES:
            terminalreporter.write_line(line)

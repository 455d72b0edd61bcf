ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def record(number: int, title: str, passed: bool) -> bool:
    ACCEPTANCE[number] = (title, passed)
    return passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {title}")

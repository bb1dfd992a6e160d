import pytest

CRITERIA: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def record():
    """Store one pass/fail line for an acceptance criterion."""

    def _record(key: str, ok: bool, detail: str = "") -> bool:
        CRITERIA[key] = (ok, detail)
        print(f"criterion {key}: {'PASS' if ok else 'FAIL'} {detail}")
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA, key=lambda k: (int(k.split(".")[0]), k)):
        ok, detail = CRITERIA[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")

from __future__ import annotations

import pytest

_ACCEPTANCE: dict[int, tuple[str, str, str]] = {}


@pytest.fixture
def record_acceptance():
    """Record one criterion's verdict for the end-of-run summary."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE[number] = ("PASS" if ok else "FAIL", title, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        verdict, title, detail = _ACCEPTANCE[number]
        line = f"{verdict} [{number}] {title}"
        if detail:
            line += f": {detail}"
        terminalreporter.write_line(line)

"""Shared fixtures; collects acceptance-criterion outcomes for the summary."""

import pytest

_ACCEPTANCE: dict[str, list[tuple[str, bool, str]]] = {}


@pytest.fixture
def acceptance_log():
    """Record one acceptance check; fails the test if the check fails."""

    def record(criterion: str, label: str, ok: bool, detail: str = ""):
        _ACCEPTANCE.setdefault(criterion, []).append((label, bool(ok), detail))
        assert ok, f"{criterion} [{label}] {detail}"

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    tw = terminalreporter
    tw.write_sep("=", "acceptance criteria")
    for crit in sorted(_ACCEPTANCE, key=lambda c: [int(p) if p.isdigit() else p
                                                   for p in c.split()]):
        entries = _ACCEPTANCE[crit]
        passed = sum(1 for e in entries if e[1])
        status = "PASS" if passed == len(entries) else "FAIL"
        tw.write_line(f"{crit}: {status} ({passed}/{len(entries)} checks)")
        for label, good, detail in entries:
            if not good:
                tw.write_line(f"    failed: {label} -- {detail}")

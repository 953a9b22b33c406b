import pytest

# criterion id -> (passed, detail); filled in by test_acceptance.py
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE, key=lambda c: int(c[1:])):
        ok, detail = ACCEPTANCE[cid]
        terminalreporter.write_line(f"{cid} {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def record():
    def _record(cid: str, ok: bool, detail: str) -> None:
        ACCEPTANCE[cid] = (ok, detail)
        print(f"{cid} {'PASS' if ok else 'FAIL'}  {detail}")
    return _record

import pytest

from skolemcircles.enumeration import iter_circles

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def circles_by_order():
    cache = {}

    def get(m):
        if m not in cache:
            cache[m] = list(iter_circles(m))
        return cache[m]

    return get


@pytest.fixture
def acceptance_record():
    def record(name: str, ok: bool, detail: str = ""):
        _ACCEPTANCE.append((name, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")

import pytest
from hypothesis import strategies as st

from symstrata.hodge import Flavor, HodgeClass, HodgeTable

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def classes(max_degree=6, max_type=3, max_mult=3):
    return st.builds(
        HodgeClass,
        st.integers(0, max_degree),
        st.integers(0, max_type),
        st.integers(0, max_type),
        st.integers(1, max_mult),
    )


def tables(flavor=Flavor.COMPACT, max_size=4, tate=False, **kw):
    cls = classes(**kw)
    if tate:
        cls = cls.map(lambda c: HodgeClass(c.degree, c.hp, c.hp, c.mult))
    return st.lists(cls, max_size=max_size).map(lambda cs: HodgeTable(tuple(cs), flavor))


@pytest.fixture
def cache_path(tmp_path, monkeypatch):
    path = tmp_path / "counts.jsonl"
    monkeypatch.setenv("SYMSTRATA_CACHE", str(path))
    return path

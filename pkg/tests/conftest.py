import time

import pytest

from modkit import catalog

ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def corpus_timed():
    t0 = time.perf_counter()
    entries = catalog.standard_corpus(25)
    return entries, time.perf_counter() - t0


@pytest.fixture(scope="session")
def corpus(corpus_timed):
    return corpus_timed[0]


@pytest.fixture(scope="session")
def semion():
    return catalog.semion()


@pytest.fixture(scope="session")
def antisemion():
    return catalog.antisemion()


@pytest.fixture(scope="session")
def ising():
    return catalog.ising()


@pytest.fixture(scope="session")
def toric():
    return catalog.toric_code()


@pytest.fixture(scope="session")
def rank1():
    return catalog.trivial()


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion."""

    def record(tag: str, ok: bool, detail: str) -> None:
        ACCEPTANCE.append((tag, bool(ok), detail))
        print(f"{tag}: {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for tag, ok, detail in sorted(ACCEPTANCE, key=lambda r: int(r[0].split()[-1])):
        terminalreporter.write_line(f"{tag}: {'PASS' if ok else 'FAIL'} {detail}")

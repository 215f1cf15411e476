import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# keep test runs single-process unless the caller asks otherwise
os.environ.setdefault("HEXPACK_THREADS", "1")


class _Acceptance:
    """Collects per-criterion checks; a failed check also fails the calling test."""

    def __init__(self):
        self.results: dict[int, list[tuple[str, bool, str]]] = {}

    def check(self, criterion: int, label: str, ok: bool, detail=""):
        self.results.setdefault(criterion, []).append((label, bool(ok), str(detail)))
        assert ok, f"criterion {criterion}: {label} ({detail})"


_ACCEPTANCE = _Acceptance()


@pytest.fixture
def acceptance():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE.results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_ACCEPTANCE.results):
        checks = _ACCEPTANCE.results[criterion]
        status = "PASS" if all(ok for _, ok, _ in checks) else "FAIL"
        terminalreporter.write_line(f"criterion {criterion:2d}: {status}")
        for label, ok, detail in checks:
            mark = "ok  " if ok else "FAIL"
            terminalreporter.write_line(f"    [{mark}] {label}" + (f": {detail}" if detail else ""))


@pytest.fixture
def rng():
    import numpy as np
    return np.random.default_rng(12345)

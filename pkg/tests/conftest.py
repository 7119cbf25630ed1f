import sys
import time
from pathlib import Path

import pytest

HERE = Path(__file__).resolve().parent
ROOT = HERE.parent
DATA = ROOT / "data"

sys.path.insert(0, str(HERE))


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def lam():
    from ncminors.corpus import lambda_algebra
    return lambda_algebra()


@pytest.fixture(scope="session")
def dual():
    from ncminors.corpus import dual_numbers
    return dual_numbers()


@pytest.fixture(scope="session")
def mat2():
    from ncminors.corpus import matrix_algebra
    return matrix_algebra(2)


# acceptance criteria report one line each; the lines are echoed after the run
ACCEPTANCE: dict[int, str] = {}


class Criterion:
    def __init__(self, number: int, name: str, budget: float):
        self.number, self.name, self.budget = number, name, budget
        self.witness = ""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, kind, err, tb):
        elapsed = time.perf_counter() - self.start
        timing = f"{elapsed:.2f} s" + (f", budget {self.budget:g} s" if self.budget is not None else "")
        ok = kind is None and (self.budget is None or elapsed < self.budget)
        detail = self.witness if kind is None else f"{kind.__name__}: {err}"
        line = f"{'PASS' if ok else 'FAIL'} criterion {self.number} {self.name}: {detail} ({timing})"
        ACCEPTANCE[self.number] = line
        print(line)
        if kind is None:
            assert ok, line
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])

from functools import lru_cache

import pytest

from impregnation import ConstantPcFront, ModelParams, SolverConfig, run

# (criterion, passed, detail) rows appended by test_acceptance
ACCEPTANCE_LOG: list[tuple[str, bool, str]] = []


@lru_cache(maxsize=None)
def cached_run(sigma=5.0, eta=6.0, d=0.1, kplus=10.0, kminus=0.1, n=1000, tol=1e-6):
    front = ConstantPcFront(sigma)
    params = ModelParams(eta=eta, d=d, kplus=kplus, kminus=kminus)
    return front, params, run(front, params, n, SolverConfig(tol=tol))


@pytest.fixture(scope="session")
def run_k10():
    return cached_run(kplus=10.0)


@pytest.fixture(scope="session")
def run_k100():
    return cached_run(kplus=100.0)


@pytest.fixture(scope="session")
def run_pure_fill():
    return cached_run(kplus=0.0, kminus=0.0)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LOG:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")

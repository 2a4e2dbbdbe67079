import random

import pytest
from hypothesis import HealthCheck, settings

from lowcell.group_algebra import LaurentPoly
from lowcell.root_datum import standard_datum
from lowcell.steinberg import steinberg_data

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def _no_disk_cache(monkeypatch):
    monkeypatch.delenv("LOWCELL_CACHE_DIR", raising=False)


@pytest.fixture
def a1():
    return standard_datum("A1", "root")


@pytest.fixture
def a2():
    return standard_datum("A2", "root")


@pytest.fixture
def a1_data(a1):
    return steinberg_data(a1, cache_dir=False)


@pytest.fixture
def a2_data(a2):
    return steinberg_data(a2, cache_dir=False)


def random_poly(rng: random.Random, rank: int, terms: int = 4, spread: int = 2) -> LaurentPoly:
    return LaurentPoly({
        tuple(rng.randint(-spread, spread) for _ in range(rank)): rng.randint(-3, 3)
        for _ in range(terms)
    })


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

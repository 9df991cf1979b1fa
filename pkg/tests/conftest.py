import random

import pytest

from picard3.clifford import GramParams


def pytest_runtest_logreport(report):
    # one visible pass/fail line per acceptance criterion
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        status = "PASS" if report.passed else "FAIL"
        print(f"\n[acceptance] {name}: {status}")


@pytest.fixture
def rng():
    return random.Random(20240901)


def random_gram_params(rng, bound=5):
    while True:
        p = GramParams(*(rng.randint(-bound, bound) for _ in range(6)))
        if p.disc != 0:
            return p

import random

import pytest
from hypothesis import HealthCheck, settings

from triangle_cone.polyalg import Polynomial
from triangle_cone.rootsys import build_root_system
from triangle_cone.weyl import weyl_group

settings.register_profile("suite", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")

FAMILIES = ("A3", "B3", "C3")


@pytest.fixture(scope="session", params=FAMILIES)
def rs(request):
    return build_root_system(request.param)


@pytest.fixture(scope="session")
def C3():
    return build_root_system("C3")


@pytest.fixture(scope="session")
def B3():
    return build_root_system("B3")


@pytest.fixture(scope="session")
def A3():
    return build_root_system("A3")


def random_polynomial(rng: random.Random, nvars: int, max_degree: int, nterms: int = 6) -> Polynomial:
    terms = {}
    for _ in range(nterms):
        d = rng.randint(0, max_degree)
        exps = [0] * nvars
        for _ in range(d):
            exps[rng.randrange(nvars)] += 1
        terms[tuple(exps)] = rng.randint(-5, 5)
    return Polynomial(nvars, terms)


def group(rs):
    return weyl_group(rs)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

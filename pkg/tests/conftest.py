import random
from math import gcd

import pytest

from chevbass.modarith import crt_combine, primitive_root
from chevbass.unitgroup import UnitSubgroup


def brute_order(a, n):
    a %= n
    x, e = a, 1
    while x != 1 % n:
        x = x * a % n
        e += 1
    return e


def brute_dlog(base, target, n):
    x = 1 % n
    for e in range(n + 1):
        if x == target % n:
            return e
        x = x * base % n
    return None


def units(n):
    return [x for x in range(n) if gcd(x, n) == 1] if n > 1 else [0]


def delta(p, m, gamma_order):
    """<(1 + p^2, gamma)> mod p^4 m with gamma of the given order mod m."""
    g = primitive_root(m)
    gamma = pow(g, (m - 1) // gamma_order, m)
    x, mod = crt_combine([(1 + p * p, p**4), (gamma, m)])
    return UnitSubgroup(mod, (x,))


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

import itertools
from math import gcd
import random

import pytest
from hypothesis import given, settings, strategies as st

from chevbass import kernels
from chevbass._pykernels import bsgs as py_bsgs, local_smith as py_smith

backends = [kernels.python] + ([kernels.compiled] if kernels.compiled else [])


def matmul(A, B, pm):
    return [[sum(a * b for a, b in zip(row, col)) % pm for col in zip(*B)] for row in A]


@pytest.mark.parametrize("mod", backends, ids=lambda m: m.__name__)
def test_local_smith_invariants(mod):
    rng = random.Random(7)
    for _ in range(200):
        p = rng.choice([2, 3, 5, 7])
        t = rng.randint(1, 4)
        pm = p**t
        r, c = rng.randint(0, 5), rng.randint(1, 5)
        A = [[rng.randrange(pm) * rng.choice([1, p, p * p]) % pm for _ in range(c)] for _ in range(r)]
        vals, V, Vi = mod.local_smith(A, c, p, t)
        assert len(vals) == c
        ident = [[int(i == j) for j in range(c)] for i in range(c)]
        assert matmul(V, Vi, pm) == ident
        if r:
            AV = matmul(A, V, pm)
            for i, v in enumerate(vals):
                assert all(row[i] % p**v == 0 for row in AV)


def test_local_smith_counts_kernel():
    rng = random.Random(11)
    for _ in range(60):
        p, t = rng.choice([(2, 2), (3, 2), (2, 3), (5, 1)])
        pm = p**t
        c = rng.randint(1, 3)
        A = [[rng.randrange(pm) for _ in range(c)] for _ in range(rng.randint(1, 3))]
        vals, _, _ = kernels.local_smith(A, c, p, t)
        brute = sum(
            all(sum(a * x for a, x in zip(row, xs)) % pm == 0 for row in A)
            for xs in itertools.product(range(pm), repeat=c)
        )
        assert brute == p ** sum(vals)


@pytest.mark.skipif(kernels.compiled is None, reason="extension not built")
@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 163]), st.integers(1, 5), st.data())
def test_backends_agree_on_smith(p, t, data):
    pm = p**t
    if pm >= 1 << 31:
        return
    c = data.draw(st.integers(1, 6))
    r = data.draw(st.integers(0, 6))
    A = data.draw(st.lists(st.lists(st.integers(0, pm - 1), min_size=c, max_size=c), min_size=r, max_size=r))
    assert kernels.compiled.local_smith(A, c, p, t) == py_smith(A, c, p, t)


@pytest.mark.skipif(kernels.compiled is None, reason="extension not built")
@settings(max_examples=300, deadline=None)
@given(st.integers(2, 5000), st.data())
def test_backends_agree_on_bsgs(n, data):
    g = data.draw(st.integers(1, n - 1).filter(lambda g: gcd(g, n) == 1))
    y = data.draw(st.integers(0, n - 1))
    order = data.draw(st.integers(1, n))
    assert kernels.compiled.bsgs(g, y, n, order) == py_bsgs(g, y, n, order)


@pytest.mark.parametrize("mod", backends, ids=lambda m: m.__name__)
def test_bsgs_least_solution(mod):
    assert mod.bsgs(2, 8, 163, 162) == 3
    assert mod.bsgs(10, 46, 81, 9) == 5
    assert mod.bsgs(10, 2, 81, 9) == -1
    assert mod.bsgs(3, 1, 7, 6) == 0


def test_large_modulus_routes_to_python():
    p, t = 2**31 - 1, 2
    vals, _, _ = kernels.local_smith([[p, 0], [0, 1]], 2, p, t)
    assert sorted(vals) == [0, 1]


def test_engine_on_python_fallback(monkeypatch):
    from chevbass import unitgroup
    from chevbass.cbalgo import chevalley_bass
    from chevbass.field import AbelianFieldSpec, invariants
    from chevbass.modarith import factorize

    monkeypatch.setattr(kernels, "compiled", None)
    for fn in (factorize, unitgroup.decompose, unitgroup.subgroup_basis, invariants):
        fn.cache_clear()
    assert chevalley_bass(AbelianFieldSpec(13203, (8353,))).lambda_cb == 36
    assert chevalley_bass(AbelianFieldSpec(16, (15,)), full_scan=True).lambda_cb == 16

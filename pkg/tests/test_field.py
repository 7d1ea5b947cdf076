import random
from math import gcd

import pytest

from chevbass.field import (
    AbelianFieldSpec, conductor, cyclotomic_spec, f_prime, invariants, lift_spec,
    roots_of_unity_count, theorem1_bounds,
)
from chevbass.modarith import lcm
from chevbass.oracle import all_subgroups
from chevbass.unitgroup import equal, reduce


def brute_conductor(m, H):
    elems = set(H.elements())
    for d in range(1, m + 1):
        if m % d or d % 4 == 2:
            continue
        if all(x in elems for x in range(m) if x % d == 1 % d and gcd(x, m) == 1):
            return d


def brute_lambda(m, H):
    # largest w with zeta_w in K: the character x -> x mod w is trivial on H
    best = 1
    for w in range(1, m + 1):
        if m % w == 0 and all(x % w == 1 % w for x in H.elements()):
            best = max(best, w)
    return best if best % 2 == 0 else 2 * best


@pytest.mark.parametrize("r, f, lam", [(1, 1, 2), (4, 4, 4), (7, 7, 14), (12, 12, 12), (9, 9, 18)])
def test_cyclotomic_invariants(r, f, lam):
    inv = invariants(cyclotomic_spec(r))
    assert (inv.conductor, inv.lam) == (f, lam)


def test_rational_field():
    inv = invariants(AbelianFieldSpec(1))
    assert (inv.f_prime, inv.lower_bound, inv.upper_bound) == (4, 4, 4)
    assert cyclotomic_spec(2) == cyclotomic_spec(1)


def test_real_subfield_of_zeta_16():
    inv = invariants(AbelianFieldSpec(16, (15,)))
    assert (inv.conductor, inv.lam, inv.f_prime) == (16, 2, 16)


def test_invariants_exhaustive():
    for m in range(1, 101):
        for H in all_subgroups(m):
            spec = AbelianFieldSpec(m, H.generators)
            inv = invariants(spec)
            assert inv.conductor == brute_conductor(m, H)
            assert inv.lam == brute_lambda(m, H) == roots_of_unity_count(spec)
            assert inv.f_prime % inv.lam == 0
            assert inv.lower_bound == lcm(4, inv.lam, inv.f_prime // inv.lam)
            assert inv.upper_bound % inv.lower_bound == 0
            f, gf = conductor(spec)
            assert equal(gf, reduce(H, f))


def test_f_prime_examples():
    assert f_prime(7, 14) == 28
    assert f_prime(16, 2) == 16
    assert f_prime(13203, 18) == 13203 // 163 * 4
    assert theorem1_bounds(7, 14) == (28, 28)


def test_presentation_independence():
    rng = random.Random(1)
    for _ in range(40):
        m = rng.randrange(2, 200)
        Hs = all_subgroups(m) if m < 60 else [None]
        H = rng.choice(Hs)
        spec = AbelianFieldSpec(m, H.generators if H else ())
        base = invariants(spec)
        for c in (2, 3, 5, 7, 11):
            inv = invariants(lift_spec(spec, c))
            assert (inv.conductor, inv.lam, inv.f_prime) == (base.conductor, base.lam, base.f_prime)
            assert equal(inv.gf_group, base.gf_group)

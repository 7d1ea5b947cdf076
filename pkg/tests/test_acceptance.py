"""End-to-end acceptance criteria.

Each test records one PASS/FAIL line with its runtime and limit; the
lines are printed in the pytest terminal summary and also when this file
is run directly (``python3 tests/test_acceptance.py``).
"""

import random
import time
from math import prod

import pytest

from chevbass import cohom, oracle, unitgroup
from chevbass.cbalgo import chevalley_bass
from chevbass.cohom import h1_full
from chevbass.field import AbelianFieldSpec, cyclotomic_spec, invariants, lift_spec
from chevbass.modarith import factorize, is_prime
from chevbass.report import ReportDocument
from chevbass.selftest import CYCLOTOMIC_TABLE
from chevbass.unitgroup import decompose, omega, subgroup_basis

RESULTS: list[str] = []


class Criterion:
    def __init__(self, number, name, limit):
        self.number, self.name, self.limit = number, name, limit
        self.failures: list[str] = []
        self.cases = 0

    def check(self, ok, detail):
        self.cases += 1
        if not ok:
            self.failures.append(detail() if callable(detail) else detail)

    def __enter__(self):
        for fn in (factorize, decompose, subgroup_basis, invariants, unitgroup._membership_lattice):
            fn.cache_clear()  # time each criterion cold
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        dt = time.perf_counter() - self.t0
        if exc is not None:
            self.failures.append(f"raised {exc!r}")
        ok = not self.failures and dt < self.limit
        RESULTS.append(
            f"{'PASS' if ok else 'FAIL'}  criterion {self.number} {self.name}: "
            f"{self.cases} cases, {len(self.failures)} failures, {dt:.2f}s (limit {self.limit}s)"
        )
        if exc is None:
            assert not self.failures, self.failures[:5]
            assert dt < self.limit, f"{dt:.1f}s exceeds {self.limit}s"
        return False


def random_spec(rng, max_m):
    m = rng.randrange(2, max_m + 1)
    G = decompose(m)
    gens = tuple(G.element([rng.randrange(o) for o in G.orders]) for _ in range(rng.randint(0, 2)))
    return AbelianFieldSpec(m, gens)


def test_1_cyclotomic_table():
    with Criterion(1, "cyclotomic table", 5) as c:
        for r, want in CYCLOTOMIC_TABLE.items():
            got = chevalley_bass(cyclotomic_spec(r)).lambda_cb
            c.check(got == want, f"Q(zeta_{r}): {got} != {want}")


def _family(c, p, m):
    for k, want in ((2, 4 * p**2), (3, 4 * p**3), (4, 4 * p**4)):
        D = oracle.example_delta(p, m, p**k)
        rep = chevalley_bass(AbelianFieldSpec(D.modulus, D.generators))
        inv = rep.invariants
        c.check(rep.lambda_cb == want, f"p={p} gamma order {p}^{k}: {rep.lambda_cb} != {want}")
        c.check((inv.lam, inv.f_prime) == (2 * p**2, 4 * p**4), f"p={p} k={k}: lambda, f' = {inv.lam}, {inv.f_prime}")


def test_2_three_case_family_p3():
    with Criterion("2a", "three-case family p=3, m=163", 60) as c:
        _family(c, 3, 163)


def test_2_three_case_family_p5():
    with Criterion("2b", "three-case family p=5", 600) as c:
        m = next(m for m in range(626, 10**6, 625) if is_prime(m))
        c.check(m == 11251, f"smallest prime 1 mod 625 is {m}")
        _family(c, 5, m)


def _bounds_ok(c, spec):
    rep = chevalley_bass(spec)
    inv, lam = rep.invariants, rep.lambda_cb
    c.check(lam % inv.lower_bound == 0 and inv.upper_bound % lam == 0,
            lambda: f"{spec}: {inv.lower_bound} | {lam} | {inv.upper_bound} fails")
    c.check(factorize(lam).primes == factorize(inv.lam).primes,
            lambda: f"{spec}: primes of {lam} vs lambda={inv.lam}")
    c.check(lam % 4 == 0, lambda: f"{spec}: {lam} not divisible by 4")


def test_3_bound_battery():
    rng = random.Random(3)
    with Criterion(3, "bound battery", 600) as c:
        for m in range(1, 61):
            for H in oracle.all_subgroups(m):
                _bounds_ok(c, AbelianFieldSpec(m, H.generators))
        for _ in range(200):
            _bounds_ok(c, random_spec(rng, 3000))


def test_4_oracle_equivalence():
    with Criterion(4, "oracle equivalence", 300) as c:
        for n in range(1, 101):
            mods = [(p, t) for p, e in factorize(n) for t in range(1, e + 1) if p**t <= 81]
            if not mods:
                continue
            for H in oracle.all_subgroups(n):
                basis = subgroup_basis(H)
                table = oracle.ElementTable.from_subgroup(H)
                for p, t in mods:
                    eng = cohom.h1(basis, p, t).invariant_factors
                    orc = oracle.h1_bruteforce(table, p, t).invariant_factors
                    c.check(eng == orc, lambda: f"n={n} H={H.generators} p^t={p}^{t}: {eng} vs {orc}")
                    if len(basis.basis) == 1:
                        (g, e), = basis.basis
                        cyc = oracle.cyclic_h1(g % p**t, e, p, t)
                        c.check(eng == cyc, lambda: f"n={n} H={H.generators} p^t={p}^{t}: {eng} vs cyclic {cyc}")


def test_5_omega_vanishing():
    cases = [(p, k, nu) for p in (3, 5) for nu in range(1, 6) for k in range(1, nu + 1)]
    cases += [(2, k, nu) for nu in range(2, 7) for k in range(2, nu + 1)]
    with Criterion(5, "Omega vanishing", 10) as c:
        for p, k, nu in cases:
            h = cohom.h1(subgroup_basis(omega(p, k, nu)), p, nu)
            c.check(h.trivial, f"H^1 Omega({p},{k},{nu}) = {h.invariant_factors}")
            h2 = oracle.cyclic_h2((1 + p**k) % p**nu, p ** (nu - k), p, nu)
            c.check(not h2, f"H^2 Omega({p},{k},{nu}) = {h2}")


def test_6_exponent_lambda():
    rng = random.Random(6)
    with Criterion(6, "H^1 exponent lambda", 300) as c:
        for _ in range(30):
            spec = random_spec(rng, 3000)
            inv = invariants(spec)
            for _ in range(20):
                n = rng.randrange(1, 10**4 + 1)
                ex = h1_full(spec, n, inv).exponent
                c.check(inv.lam % ex == 0, lambda: f"{spec} n={n}: exponent {ex} does not divide {inv.lam}")
            qs = set()
            for p, e in factorize(inv.lam):
                qs.add(next(q for q in range(p**e + 1, 10**8, p**e) if is_prime(q) and spec.modulus % q))
            n = inv.f_prime * prod(qs)
            ex = h1_full(spec, n, inv).exponent
            c.check(ex == inv.lam, lambda: f"{spec} n={n}: exponent {ex} != {inv.lam}")


def test_7_presentation_independence():
    rng = random.Random(7)
    with Criterion(7, "presentation independence", 300) as c:
        for _ in range(50):
            spec = random_spec(rng, 1500)
            cof = rng.randint(1, 20)
            a = ReportDocument.from_report(chevalley_bass(spec)).numeric_content()
            b = ReportDocument.from_report(chevalley_bass(lift_spec(spec, cof))).numeric_content()
            c.check(a == b, f"{spec} lifted by {cof}: {a} vs {b}")


def test_8_settlement():
    with Criterion(8, "three-case H^1 settlement", 30) as c:
        rows = oracle.settle_example_section(3, 163)
        for r in rows:
            c.check(r.agrees, f"{r}")
        g = {r.module_exponent: r for r in rows if r.case == "minimal" and r.group == "G_{p^3 m}"}
        c.check(g[3].oracle == g[3].engine == (3,), f"mu_{{p^3}}: {g[3]}")
        c.check(g[2].oracle == g[2].engine == (9,), f"mu_{{p^2}}: {g[2]}")


if __name__ == "__main__":
    import sys
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(RESULTS))
    sys.exit(0 if all(r.startswith("PASS") for r in RESULTS) else 1)

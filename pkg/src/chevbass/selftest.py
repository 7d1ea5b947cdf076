"""Self-test batteries behind ``chevbass selftest``."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import cohom, oracle
from .cbalgo import chevalley_bass
from .errors import ChevBassError
from .field import AbelianFieldSpec, cyclotomic_spec
from .modarith import factorize
from .unitgroup import omega, subgroup_basis

DEPTHS = {
    "quick": {"oracle_n": 24, "bounds_m": 24, "settle": False},
    "default": {"oracle_n": 100, "bounds_m": 60, "settle": True},
}


@dataclass
class Battery:
    name: str
    passed: int = 0
    failed: int = 0
    first_failure: str = ""
    seconds: float = 0.0

    def record(self, ok: bool, detail: Callable[[], str]) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if not self.first_failure:
                self.first_failure = detail()


@dataclass
class SelftestResult:
    batteries: list[Battery] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(b.failed == 0 for b in self.batteries)


def _oracle_sweep(b: Battery, max_n: int) -> None:
    for n in range(1, max_n + 1):
        mods = [(p, t) for p, e in factorize(n) for t in range(1, e + 1) if p**t <= 81]
        if not mods:
            continue
        for H in oracle.all_subgroups(n):
            basis = subgroup_basis(H)
            table = oracle.ElementTable.from_subgroup(H)
            for p, t in mods:
                eng = cohom.h1(basis, p, t).invariant_factors
                brute = oracle.h1_bruteforce(table, p, t).invariant_factors
                b.record(eng == brute, lambda: f"n={n} H={H.generators} p={p} t={t}: engine {eng} vs oracle {brute}")
                if len(basis.basis) == 1:
                    (g, e), = basis.basis
                    cyc = oracle.cyclic_h1(g % p**t, e, p, t)
                    b.record(eng == cyc, lambda: f"n={n} H={H.generators} p={p} t={t}: engine {eng} vs cyclic {cyc}")


def _omega_cases() -> Iterator[tuple[int, int, int]]:
    for p in (3, 5):
        for nu in range(1, 6):
            for k in range(1, nu + 1):
                yield p, k, nu
    for nu in range(2, 7):
        for k in range(2, nu + 1):
            yield 2, k, nu


def _omega_vanishing(b: Battery) -> None:
    for p, k, nu in _omega_cases():
        basis = subgroup_basis(omega(p, k, nu))
        h = cohom.h1(basis, p, nu)
        b.record(h.trivial, lambda: f"H^1(Omega_{p}^({k},{nu})) = {h.invariant_factors}")
        a, e = (1 + p**k) % p**nu, p ** (nu - k)
        h2 = oracle.cyclic_h2(a, e, p, nu)
        b.record(not h2, lambda: f"H^2(Omega_{p}^({k},{nu})) = {h2}")


def _bounds(b: Battery, max_m: int) -> None:
    for m in range(1, max_m + 1):
        for H in oracle.all_subgroups(m):
            spec = AbelianFieldSpec(m, H.generators)
            try:
                rep = chevalley_bass(spec)
                ok, why = True, ""
            except ChevBassError as exc:
                ok, why = False, str(exc)
            b.record(ok, lambda: f"m={m} H={H.generators}: {why}")


CYCLOTOMIC_TABLE = {r: r for r in (4, 8, 12, 16, 20, 24, 36, 60)} | {
    r: 4 * r for r in (1, 3, 5, 7, 9, 15, 21)
}


def _cyclotomic(b: Battery) -> None:
    for r, want in CYCLOTOMIC_TABLE.items():
        got = chevalley_bass(cyclotomic_spec(r)).lambda_cb
        b.record(got == want, lambda: f"Q(zeta_{r}): {got} != {want}")


def _family(b: Battery, settle: bool) -> None:
    p, m = 3, 163
    for k in (2, 3, 4):
        delta = oracle.example_delta(p, m, p**k)
        rep = chevalley_bass(AbelianFieldSpec(delta.modulus, delta.generators))
        want = 4 * p**k
        b.record(rep.lambda_cb == want, lambda: f"gamma of order {p}^{k}: {rep.lambda_cb} != {want}")
    if settle:
        for row in oracle.settle_example_section(p, m):
            b.record(row.agrees, lambda: f"{row}")


def run(depth: str = "default", log: Callable[[str], None] = print) -> SelftestResult:
    cfg = DEPTHS[depth]
    result = SelftestResult()
    plan = [
        ("oracle equivalence", lambda b: _oracle_sweep(b, cfg["oracle_n"])),
        ("Omega vanishing", _omega_vanishing),
        ("bound battery", lambda b: _bounds(b, cfg["bounds_m"])),
        ("cyclotomic table", _cyclotomic),
        ("three-case family", lambda b: _family(b, cfg["settle"])),
    ]
    for name, fn in plan:
        b = Battery(name)
        t0 = time.perf_counter()
        try:
            fn(b)
        except Exception as exc:  # a crash is a failure, not an abort
            b.record(False, lambda: f"crashed: {exc!r}")
        b.seconds = time.perf_counter() - t0
        result.batteries.append(b)
        status = "ok" if b.failed == 0 else "FAIL"
        log(f"{status:4}  {name:<20} {b.passed:6d} passed {b.failed:4d} failed  {b.seconds:7.2f}s")
        if b.first_failure:
            log(f"      first failure: {b.first_failure}")
    return result

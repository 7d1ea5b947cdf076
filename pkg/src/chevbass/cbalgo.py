"""Computation of the Chevalley-Bass number of an abelian field.

For each prime p dividing lambda the p-adic valuation of the
Chevalley-Bass number is the least admissible j for which every map
H^1(G_n, mu_{p^j}) -> H^1(G_n, mu_{p^t}) in a finite family of (n, t) is
surjective.  The family: t in a window determined by ord_p exp(G_f) and
ord_p(lambda), and n = p^t times a product of distinct primes q | f with
q = 1 mod p.  Every subset of those primes is checked, since the
reduction step that produces n keeps exactly the qualifying primes of an
arbitrary n whose support lies in f.

When the lower and upper bounds coincide the scan is skipped.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Callable, Optional

from .cohom import induced_map_surjective
from .errors import InputError, InternalError
from .field import AbelianFieldSpec, FieldInvariants, galois_group_n, invariants
from .modarith import factorize, valuation
from .unitgroup import subgroup_basis


class Shortcut(str, enum.Enum):
    BOUNDS = "bounds-coincide"
    TWO_PART_ODD_F = "f-odd-two-part"
    NONE = "none"


@dataclass(frozen=True)
class Check:
    j: int
    t: int
    n: int
    surjective: bool


@dataclass(frozen=True)
class PrimeResult:
    p: int
    valuation: int
    checks: tuple[Check, ...]
    shortcut: Shortcut


@dataclass(frozen=True)
class CBReport:
    spec: AbelianFieldSpec
    invariants: FieldInvariants
    lambda_cb: int
    per_prime: tuple[PrimeResult, ...]

    @property
    def total_checks(self) -> int:
        return sum(len(r.checks) for r in self.per_prime)

    def validate(self) -> None:
        inv = self.invariants
        lam = self.lambda_cb
        if lam != prod(r.p**r.valuation for r in self.per_prime):
            raise InternalError("Chevalley-Bass number does not match its valuations")
        if lam % inv.lower_bound or inv.upper_bound % lam:
            raise InternalError(f"{lam} violates the bounds {inv.lower_bound} | . | {inv.upper_bound}")
        if factorize(lam).primes != factorize(inv.lam).primes:
            raise InternalError(f"primes of {lam} differ from those of lambda={inv.lam}")
        if lam % 4:
            raise InternalError(f"{lam} is not a multiple of 4")


CheckCallback = Callable[[int, Check], None]


def _scan_plan(inv: FieldInvariants, p: int):
    """(start j, cap j, t-range for a given j) for primes handled by the scan."""
    f, lam = inv.conductor, inv.lam
    vf = valuation(p, f)
    vl = valuation(p, lam)
    vexp = valuation(p, inv.gf.exponent)
    cap = valuation(p, inv.f_prime)
    if p != 2 or lam % 4 == 0:
        start = max(vl, vf - vl)
        return start, cap, lambda j: range(j + 1, vexp + vl)
    # p = 2, 4 | f, zeta_4 not in K; t = j is vacuous and skipped.  The
    # window must reach t = ord_2(f): e.g. Q(zeta_16)^+ needs the check at
    # t = 4 to reject j = 3, while ord_2 exp(G_f) + 2 = 3.
    start = max(2, vf - 1)
    return start, cap, lambda j: range(j + 1, max(vexp + 2, vf) + 1)


def _moduli(inv: FieldInvariants, p: int, t: int) -> list[int]:
    qs = [q for q in factorize(inv.conductor).primes if q != p and q % p == 1]
    base = p**t
    return [base * prod(c) for r in range(len(qs) + 1) for c in combinations(qs, r)]


def checks_for(spec: AbelianFieldSpec, inv: FieldInvariants, p: int, j: int,
               threads: int = 1) -> list[Check]:
    """Surjectivity checks deciding whether j is accepted, in (t, n) order,
    stopping at the first failure."""
    _, _, t_range = _scan_plan(inv, p)
    jobs = [(t, n) for t in t_range(j) for n in _moduli(inv, p, t)]

    def run(job):
        t, n = job
        basis = subgroup_basis(galois_group_n(spec, n, inv))
        ok, _ = induced_map_surjective(basis, p, j, t)
        return Check(j, t, n, ok)

    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(threads) as pool:
            checks = list(pool.map(run, jobs))
    else:
        checks = []
        for job in jobs:
            checks.append(run(job))
            if not checks[-1].surjective:
                break
    for i, c in enumerate(checks):
        if not c.surjective:
            return checks[: i + 1]
    return checks


def ord_p_cb(spec: AbelianFieldSpec, inv: Optional[FieldInvariants], p: int,
             on_check: Optional[CheckCallback] = None, threads: int = 1) -> PrimeResult:
    inv = inv or invariants(spec)
    if inv.lam % p:
        raise InputError(f"{p} does not divide lambda={inv.lam}")
    if p == 2 and inv.conductor % 2 == 1:
        return PrimeResult(2, 2, (), Shortcut.TWO_PART_ODD_F)
    start, cap, t_range = _scan_plan(inv, p)
    log: list[Check] = []
    j = start
    while j < cap:
        checks = checks_for(spec, inv, p, j, threads)
        for c in checks:
            log.append(c)
            if on_check:
                on_check(p, c)
        if all(c.surjective for c in checks):
            break
        j += 1
    return PrimeResult(p, j, tuple(log), Shortcut.NONE)


def chevalley_bass(spec: AbelianFieldSpec, full_scan: bool = False,
                   on_check: Optional[CheckCallback] = None, threads: int = 1) -> CBReport:
    inv = invariants(spec)
    primes = factorize(inv.lam).primes
    if not full_scan and inv.lower_bound == inv.upper_bound:
        lam = inv.lower_bound
        per = tuple(PrimeResult(p, valuation(p, lam), (), Shortcut.BOUNDS) for p in primes)
    else:
        per = tuple(ord_p_cb(spec, inv, p, on_check, threads) for p in primes)
        lam = prod(r.p**r.valuation for r in per)
    report = CBReport(spec, inv, lam, per)
    report.validate()
    return report

"""Abelian number fields presented as fixed fields inside Q(zeta_m).

A field is given by a modulus m and generators of the subgroup
H = Gal(Q(zeta_m)/K) of (Z/mZ)^x.  From that we derive the conductor f,
the Galois group G_f mod f, the number of roots of unity lambda, the
integer f' and the two-sided bound on the Chevalley-Bass number.

Note on K = Q (f = 1): f' is computed with the odd-conductor rule, giving
f' = 4.  That is the only reading consistent with the Chevalley-Bass
number of Q being 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from . import unitgroup as ug
from .errors import InputError, InternalError
from .modarith import factorize, lcm
from .unitgroup import SubgroupBasis, UnitSubgroup


@dataclass(frozen=True)
class AbelianFieldSpec:
    modulus: int
    galois_gens: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "galois_gens", tuple(self.galois_gens))
        # validates modulus and coprimality
        UnitSubgroup(self.modulus, self.galois_gens)

    @property
    def subgroup(self) -> UnitSubgroup:
        return UnitSubgroup(self.modulus, self.galois_gens)


@dataclass(frozen=True)
class FieldInvariants:
    conductor: int
    gf: SubgroupBasis
    lam: int
    f_prime: int
    lower_bound: int
    upper_bound: int

    @property
    def gf_group(self) -> UnitSubgroup:
        return self.gf.subgroup()


def cyclotomic_spec(r: int) -> AbelianFieldSpec:
    """Q(zeta_r)."""
    if r < 1:
        raise InputError(f"r must be positive, got {r}")
    return AbelianFieldSpec(r if r > 2 else 1, ())


def conductor(spec: AbelianFieldSpec) -> tuple[int, UnitSubgroup]:
    H = spec.subgroup
    m = spec.modulus
    for d in factorize(m).divisors():
        if d % 4 == 2:
            continue
        if ug.is_subgroup(ug.kernel_generators(m, d), H):
            return d, ug.reduce(H, d)
    raise InternalError(f"no conductor found for modulus {m}")


def _lambda_from(f: int, gf: UnitSubgroup) -> int:
    lam = 1
    for p, e in factorize(f):
        k = 0
        while k < e and all(g % p ** (k + 1) == 1 for g in gf.generators):
            k += 1
        lam *= p**k
    if f % 2 == 1:
        lam *= 2
    return lam


def roots_of_unity_count(spec: AbelianFieldSpec) -> int:
    f, gf = conductor(spec)
    return _lambda_from(f, gf)


def f_prime(f: int, lam: int) -> int:
    if f % 4 == 2:
        raise InternalError(f"conductor {f} is 2 mod 4")
    out = 1
    for p, e in factorize(f):
        if lam % p == 0:
            out *= p**e
    return out if f % 4 == 0 else 4 * out


def theorem1_bounds(f: int, lam: int) -> tuple[int, int]:
    """(lcm(4, lambda, f'/lambda), f'); the first divides the second."""
    fp = f_prime(f, lam)
    if fp % lam:
        raise InternalError(f"lambda={lam} does not divide f'={fp}")
    lower = lcm(4, lam, fp // lam)
    if fp % lower:
        raise InternalError(f"lower bound {lower} does not divide f'={fp}")
    return lower, fp


@lru_cache(maxsize=1024)
def invariants(spec: AbelianFieldSpec) -> FieldInvariants:
    f, gf = conductor(spec)
    lam = _lambda_from(f, gf)
    lower, upper = theorem1_bounds(f, lam)
    return FieldInvariants(f, ug.subgroup_basis(gf), lam, upper, lower, upper)


def galois_group_n(spec: AbelianFieldSpec, n: int, inv: FieldInvariants | None = None) -> UnitSubgroup:
    """G_n = Gal(K(zeta_n)/K) as a subgroup of (Z/nZ)^x."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    inv = inv or invariants(spec)
    d = gcd(n, inv.conductor)
    return ug.preimage(ug.reduce(inv.gf_group, d), n)


def lift_spec(spec: AbelianFieldSpec, cofactor: int) -> AbelianFieldSpec:
    """The same field presented at modulus cofactor * m."""
    n = spec.modulus * cofactor
    return AbelianFieldSpec(n, ug.preimage(spec.subgroup, n).generators)

"""Structure of (Z/nZ)^x and its subgroups.

Subgroups always carry their modulus.  Moving between moduli goes through
:func:`reduce` and :func:`preimage` explicitly; nothing is coerced
silently.  Elements are handled in exponent coordinates with respect to
the canonical decomposition returned by :func:`decompose`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod

from . import linalg
from .errors import InputError, InternalError
from .modarith import crt_lift, dlog, factorize, mult_order, primitive_root


@dataclass(frozen=True)
class UnitGroupDecomposition:
    modulus: int
    # (generator, order, prime-power part it lives on)
    components: tuple[tuple[int, int, int], ...]

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(o for _, o, _ in self.components)

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(g for g, _, _ in self.components)

    def coordinates(self, x: int) -> list[int]:
        """Exponent vector of the unit x, each entry reduced mod its order."""
        n = self.modulus
        x %= n
        if gcd(x, n) != 1:
            raise InputError(f"{x} is not a unit modulo {n}")
        out = []
        for (g, order, part), sign in zip(self.components, _sign_flags(self)):
            y = x % part
            if sign == "minus":
                # the -1 component of a 2-part with exponent >= 2
                out.append(0 if y % 4 == 1 else 1)
                continue
            if sign == "five":
                if y % 4 == 3:
                    y = part - y
            e = dlog(g % part, y, part, order)
            if e is None:
                raise InternalError(f"{x} has no logarithm base {g} mod {part}")
            out.append(e)
        return out

    def element(self, exps) -> int:
        n = self.modulus
        out = 1 % n
        for (g, order, _), e in zip(self.components, exps):
            out = out * pow(g, e % order, n) % n
        return out


def _sign_flags(dec: UnitGroupDecomposition) -> list[str]:
    flags = []
    for g, order, part in dec.components:
        if part % 2 == 0:
            flags.append("minus" if g % part == part - 1 else "five")
        else:
            flags.append("cyclic")
    return flags


@lru_cache(maxsize=4096)
def decompose(n: int) -> UnitGroupDecomposition:
    if n < 1:
        raise InputError(f"modulus must be positive, got {n}")
    comps = []
    for q, e in factorize(n):
        part = q**e
        if q == 2:
            if e >= 2:
                comps.append((crt_lift(part - 1, part, n), 2, part))
            if e >= 3:
                comps.append((crt_lift(5, part, n), 1 << (e - 2), part))
        else:
            g = primitive_root(q, e)
            comps.append((crt_lift(g, part, n), (q - 1) * q ** (e - 1), part))
    return UnitGroupDecomposition(n, tuple(comps))


@dataclass(frozen=True)
class UnitSubgroup:
    modulus: int
    generators: tuple[int, ...] = ()

    def __post_init__(self):
        n = self.modulus
        if not isinstance(n, int) or n < 1:
            raise InputError(f"modulus must be a positive integer, got {n!r}")
        gens = []
        for g in self.generators:
            if gcd(g, n) != 1:
                raise InputError(f"generator {g} is not coprime to {n}")
            g %= n
            if g != 1 % n and g not in gens:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    def elements(self) -> list[int]:
        """All elements, sorted.  Only sensible for small groups."""
        n = self.modulus
        seen = {1 % n}
        frontier = [1 % n]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = x * g % n
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)


@dataclass(frozen=True)
class SubgroupBasis:
    modulus: int
    basis: tuple[tuple[int, int], ...]

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(b for b, _ in self.basis)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.basis)

    @property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def exponent(self) -> int:
        return self.basis[-1][1] if self.basis else 1

    def subgroup(self) -> UnitSubgroup:
        return UnitSubgroup(self.modulus, self.generators)


def full_group(n: int) -> UnitSubgroup:
    return UnitSubgroup(n, decompose(n).generators)


def trivial_group(n: int) -> UnitSubgroup:
    return UnitSubgroup(n, ())


def _exponent_rows(H: UnitSubgroup) -> tuple[UnitGroupDecomposition, list[list[int]]]:
    dec = decompose(H.modulus)
    return dec, [dec.coordinates(g) for g in H.generators]


@lru_cache(maxsize=8192)
def subgroup_basis(H: UnitSubgroup) -> SubgroupBasis:
    """Invariant-factor basis of H, orders in a divisibility chain."""
    n = H.modulus
    if not H.generators:
        return SubgroupBasis(n, ())
    dec, rows = _exponent_rows(H)
    rel = linalg.kernel_mod(rows, dec.orders)
    g = len(rows)
    diag, _, Vi = linalg.smith(rel, g)
    basis = []
    for d, coeffs in zip(diag, Vi):
        if d == 1:
            continue
        if d == 0:
            raise InternalError("relation lattice of a finite group must have full rank")
        x = 1 % n
        for h, c in zip(H.generators, coeffs):
            x = x * pow(h, c, n) % n
        if mult_order(x, n) != d:
            raise InternalError(f"basis element {x} mod {n} should have order {d}")
        basis.append((x, d))
    basis.sort(key=lambda b: b[1])
    return SubgroupBasis(n, tuple(basis))


def subgroup_order(H: UnitSubgroup) -> int:
    return subgroup_basis(H).order


def subgroup_exponent(H: UnitSubgroup) -> int:
    return subgroup_basis(H).exponent


@lru_cache(maxsize=8192)
def _membership_lattice(H: UnitSubgroup):
    dec, rows = _exponent_rows(H)
    c = len(dec.orders)
    diag = [[o if j == i else 0 for j in range(c)] for i, o in enumerate(dec.orders)]
    return dec, linalg.hermite_rows(rows + diag, c)


def contains(H: UnitSubgroup, x: int) -> bool:
    n = H.modulus
    if gcd(x, n) != 1:
        return False
    dec, h = _membership_lattice(H)
    return not any(linalg.reduce_by_hermite(h, dec.coordinates(x)))


def is_subgroup(A: UnitSubgroup, B: UnitSubgroup) -> bool:
    """A <= B."""
    if A.modulus != B.modulus:
        raise InputError(f"moduli differ: {A.modulus} vs {B.modulus}")
    return all(contains(B, g) for g in A.generators)


def equal(A: UnitSubgroup, B: UnitSubgroup) -> bool:
    return is_subgroup(A, B) and is_subgroup(B, A)


def reduce(H: UnitSubgroup, d: int) -> UnitSubgroup:
    if d < 1 or H.modulus % d:
        raise InputError(f"{d} does not divide {H.modulus}")
    return UnitSubgroup(d, tuple(g % d for g in H.generators))


def kernel_generators(n: int, d: int) -> UnitSubgroup:
    """Generators of ker((Z/nZ)^x -> (Z/dZ)^x)."""
    if d < 1 or n % d:
        raise InputError(f"{d} does not divide {n}")
    gens = []
    for q, a in factorize(n):
        part = q**a
        b = 0
        dd = d
        while dd % q == 0:
            dd //= q
            b += 1
        if a == b:
            continue
        if q == 2:
            if b >= 2:
                local = [1 + (1 << b)]
            elif a == 1:
                local = []
            elif a == 2:
                local = [3]
            else:
                local = [part - 1, 5]
        elif b >= 1:
            local = [1 + q**b]
        else:
            local = [primitive_root(q, a)]
        gens += [crt_lift(x, part, n) for x in local]
    return UnitSubgroup(n, tuple(gens))


def preimage(H: UnitSubgroup, n: int) -> UnitSubgroup:
    """Inverse image of H (mod d) under (Z/nZ)^x -> (Z/dZ)^x."""
    d = H.modulus
    if n < 1 or n % d:
        raise InputError(f"{d} does not divide {n}")
    # the part of n supported on primes of d, and its coprime cofactor
    full = 1
    for q, a in factorize(n):
        if d % q == 0:
            full *= q**a
    lifts = tuple(crt_lift(g, full, n) for g in H.generators)
    return UnitSubgroup(n, lifts + kernel_generators(n, d).generators)


def omega(p: int, k: int, nu: int) -> UnitSubgroup:
    """ker((Z/p^nu Z)^x -> (Z/p^k Z)^x)."""
    if not 1 <= k <= nu:
        raise InputError(f"need 1 <= k <= nu, got k={k}, nu={nu}")
    return kernel_generators(p**nu, p**k)

"""Exact integer utilities: factorization, valuations, CRT, orders, discrete logs.

Every function here is pure and works on Python integers, so there is no
overflow concern at any size; the only hard limit is the trial-division
bound used by :func:`factorize`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from typing import Iterable, Optional

from . import kernels
from .errors import FactorizationBoundError, InputError

#: Trial division runs up to this bound.  Any n whose second largest prime
#: factor is below it factors completely; in particular every n <= 2**50.
TRIAL_DIVISION_BOUND = 1 << 25

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3 * 10**24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def divisors(self) -> list[int]:
        """All positive divisors in increasing order."""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)

    def __iter__(self):
        return iter(self.factors)


@lru_cache(maxsize=65536)
def factorize(n: int, bound: int = TRIAL_DIVISION_BOUND) -> Factorization:
    if not isinstance(n, int) or n < 1:
        raise InputError(f"cannot factor {n!r}: expected a positive integer")
    factors = []
    rem = n
    for p in (2, 3):
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            factors.append((p, e))
    p, step = 5, 2
    if rem > 1 and is_prime(rem):
        p = rem
    while p * p <= rem:
        if p > bound:
            if is_prime(rem):
                break
            raise FactorizationBoundError(
                f"{n} has a composite cofactor {rem} with no prime factor below {bound}"
            )
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            factors.append((p, e))
            if rem > 1 and is_prime(rem):
                break
        p += step
        step = 6 - step
    if rem > 1:
        factors.append((rem, 1))
    return Factorization(n, tuple(factors))


def valuation(p: int, n: int) -> int:
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if n < 1:
        raise InputError(f"valuation needs a positive integer, got {n}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def euler_phi(n: int) -> int:
    return prod((p - 1) * p ** (e - 1) for p, e in factorize(n))


def crt_combine(residues: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Combine ``(residue, modulus)`` pairs with pairwise coprime moduli.

    Returns ``(r, M)`` with ``0 <= r < M`` the unique solution modulo the
    product ``M``.
    """
    r, m = 0, 1
    for a, q in residues:
        if q < 1:
            raise InputError(f"modulus must be positive, got {q}")
        if gcd(m, q) != 1:
            raise InputError(f"moduli {m} and {q} are not coprime")
        # r + m*k = a (mod q)
        k = (a - r) * pow(m, -1, q) % q if q > 1 else 0
        r, m = r + m * k, m * q
        r %= m
    return r, m


def crt_lift(value: int, part: int, n: int) -> int:
    """The residue mod n that is ``value`` mod ``part`` and 1 on the cofactor.

    ``part`` must be a unitary divisor of ``n`` (coprime to ``n // part``).
    """
    return crt_combine([(value % part, part), (1, n // part)])[0]


def _order_from(a: int, n: int, group_order: Factorization) -> int:
    e = group_order.value
    for p, k in group_order:
        for _ in range(k):
            if pow(a, e // p, n) == 1:
                e //= p
            else:
                break
    return e


def mult_order(a: int, n: int) -> int:
    if n < 1:
        raise InputError(f"modulus must be positive, got {n}")
    a %= n
    if gcd(a, n) != 1:
        raise InputError(f"{a} is not a unit modulo {n}")
    if n <= 2:
        return 1
    return _order_from(a, n, factorize(carmichael(n)))


def carmichael(n: int) -> int:
    """Exponent of (Z/nZ)^x."""
    out = 1
    for p, e in factorize(n):
        if p == 2:
            lam = 1 if e == 1 else 2 if e == 2 else 1 << (e - 2)
        else:
            lam = (p - 1) * p ** (e - 1)
        out = out * lam // gcd(out, lam)
    return out


def primitive_root(q: int, e: int = 1) -> int:
    """Smallest primitive root mod q, lifted to a generator mod q**e."""
    if q == 2:
        raise InputError("(Z/2^eZ)^x is not cyclic in general; use the {-1, 5} pair")
    if e < 1 or not is_prime(q):
        raise InputError(f"need an odd prime and e >= 1, got q={q}, e={e}")
    fac = factorize(q - 1)
    g = 2
    while any(pow(g, (q - 1) // r, q) == 1 for r in fac.primes):
        g += 1
    if e >= 2 and pow(g, q - 1, q * q) == 1:
        g += q
    return g


def dlog(base: int, target: int, n: int, order: int) -> Optional[int]:
    """Least e >= 0 with base**e = target (mod n), or None if target is not
    a power of base.

    ``order`` must be the multiplicative order of ``base``.  Pohlig-Hellman
    splits the problem into prime-order pieces, each solved by baby-step
    giant-step.
    """
    base %= n
    target %= n
    if order < 1 or pow(base, order, n) != 1 % n:
        raise InputError(f"{base} does not have order dividing {order} mod {n}")
    if gcd(target, n) != 1:
        return None
    if n == 1:
        return 0
    pieces = []
    for p, k in factorize(order):
        pk = p**k
        cof = order // pk
        h = pow(base, cof, n)
        y = pow(target, cof, n)
        gamma = pow(h, p ** (k - 1), n)  # order p
        x = 0
        for i in range(k):
            # strip the known low digits and push into the order-p subgroup
            yi = pow(y * pow(h, -x, n) % n, p ** (k - 1 - i), n)
            d = kernels.bsgs(gamma, yi, n, p)
            if d < 0:
                return None
            x += d * p**i
        pieces.append((x, pk))
    e = crt_combine(pieces)[0]
    if pow(base, e, n) != target:
        return None
    return e


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def maximal_divisors(n: int) -> list[int]:
    """n // p for each prime p dividing n."""
    return [n // p for p in factorize(n).primes]


__all__ = [
    "Factorization",
    "TRIAL_DIVISION_BOUND",
    "carmichael",
    "crt_combine",
    "crt_lift",
    "dlog",
    "euler_phi",
    "factorize",
    "is_prime",
    "lcm",
    "maximal_divisors",
    "mult_order",
    "primitive_root",
    "valuation",
]

"""Independent checks for the cohomology engine.

``h1_bruteforce`` works with cocycles as functions on *every* element of
G and never touches the engine's linear algebra: it counts solutions of
linear systems over Z/p^t by dense numpy elimination and reads the
invariant factors off the sizes of the p^s-torsion subgroups of H^1.
The cyclic formulas are closed forms in the valuations of a - 1 and of
the norm element.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

import numpy as np

from .cohom import H1Group, h1
from .errors import InputError, OracleSizeError
from .modarith import crt_combine, primitive_root
from .unitgroup import UnitSubgroup, reduce, subgroup_basis

DEFAULT_ELEMENT_BOUND = 300


@dataclass(frozen=True)
class ElementTable:
    modulus: int
    elements: tuple[int, ...]

    @classmethod
    def from_subgroup(cls, H: UnitSubgroup, bound: int = DEFAULT_ELEMENT_BOUND) -> "ElementTable":
        order = subgroup_basis(H).order
        if order > bound:
            raise OracleSizeError(f"subgroup of order {order} exceeds the oracle bound {bound}")
        return cls(H.modulus, tuple(H.elements()))

    def __post_init__(self):
        n = self.modulus
        els = set(self.elements)
        if 1 % n not in els:
            raise InputError("element table must contain 1")
        for a in self.elements:
            for b in self.elements:
                if a * b % n not in els:
                    raise InputError(f"table not closed: {a}*{b} mod {n}")


def _vp(x: int, p: int, t: int) -> int:
    if x % p**t == 0:
        return t
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _log_solution_count(A: np.ndarray, p: int, t: int) -> int:
    """log_p of the number of x in (Z/p^t)^cols with A x = 0."""
    pm = p**t
    A = np.unique(A % pm, axis=0) if A.size else A
    ncols = A.shape[1]
    if A.shape[0] == 0:
        return t * ncols
    powers = [p**k for k in range(1, t + 1)]
    total = 0
    while A.shape[0] and A.shape[1]:
        val = np.zeros(A.shape, dtype=np.int64)
        for pk in powers:
            val += (A % pk == 0)
        i, j = np.unravel_index(np.argmin(val), val.shape)
        v = int(val[i, j])
        if v == t:
            break
        pv = p**v
        unit = int(A[i, j]) // pv
        inv = pow(unit, -1, pm)
        row = (A[i] * inv) % pm
        factors = (A[:, j] // pv) % pm
        A = (A - np.outer(factors, row)) % pm
        total += v
        A = np.delete(np.delete(A, i, axis=0), j, axis=1)
        A = A[np.any(A != 0, axis=1)]
    return total + t * A.shape[1]


def _cocycle_system(table: ElementTable, p: int, t: int) -> np.ndarray:
    n = table.modulus
    pm = p**t
    idx = {g: i for i, g in enumerate(table.elements)}
    k = len(table.elements)
    rows = []
    for g in table.elements:
        for h in table.elements:
            # c(gh) - c(g) - g c(h) = 0
            r = [0] * k
            r[idx[g * h % n]] += 1
            r[idx[g]] -= 1
            r[idx[h]] -= g
            rows.append(r)
    return np.array(rows, dtype=np.int64) % pm


def h1_bruteforce(table: ElementTable, p: int, t: int,
                  bound: int = DEFAULT_ELEMENT_BOUND) -> H1Group:
    """H^1(G, mu_{p^t}) from the full cocycle condition.

    Only the invariant factors are produced; representatives are left
    empty since cocycles here live on all of G rather than on a basis.
    """
    n = table.modulus
    if n % p**t:
        raise InputError(f"{p}^{t} does not divide {n}")
    k = len(table.elements)
    if k > bound:
        raise OracleSizeError(f"{k} elements exceed the oracle bound {bound}")
    if t == 0 or k == 1:
        return H1Group(p, t)
    pm = p**t
    if pm >= 1 << 31:
        raise OracleSizeError(f"module {p}^{t} too large for int64 elimination")
    C = _cocycle_system(table, p, t)
    # unknowns (c(g) for g in G, m); rows C c = 0 and p^s c(g) = (g - 1) m
    Cext = np.hstack([C, np.zeros((C.shape[0], 1), dtype=np.int64)])
    logs = []
    for s in range(t + 1):
        extra = np.zeros((k, k + 1), dtype=np.int64)
        for i, g in enumerate(table.elements):
            extra[i, i] = p**s % pm
            extra[i, k] = (1 - g) % pm
        logs.append(_log_solution_count(np.vstack([Cext, extra]), p, t) - t)
    # logs[s] = log_p |H^1[p^s]|; r_s = #factors with exponent >= s
    r = [logs[s] - logs[s - 1] for s in range(1, t + 1)] + [0]
    factors = []
    for d in range(1, t + 1):
        factors += [p**d] * (r[d - 1] - r[d])
    return H1Group(p, t, tuple(sorted(factors)))


def _cyclic_valuations(a: int, e: int, p: int, t: int) -> tuple[int, int]:
    pm = p**t
    if e < 1 or pow(a, e, pm) != 1 % pm:
        raise InputError(f"{a}^{e} is not 1 mod {p}^{t}")
    norm = sum(pow(a, l, pm) for l in range(e)) % pm
    return _vp(norm, p, t), _vp((a - 1) % pm, p, t)


def cyclic_h1(a: int, e: int, p: int, t: int) -> tuple[int, ...]:
    """ker(N) / im(a - 1) on Z/p^t for a cyclic group of order e acting by a."""
    vn, va = _cyclic_valuations(a, e, p, t)
    # |ker N| = p^vn, |im(a-1)| = p^(t - va); both cyclic
    d = vn + va - t
    return (p**d,) if d > 0 else ()


def cyclic_h2(a: int, e: int, p: int, t: int) -> tuple[int, ...]:
    """Fixed points modulo norms."""
    vn, va = _cyclic_valuations(a, e, p, t)
    # |fixed| = p^va, |N M| = p^(t - vn)
    d = va + vn - t
    return (p**d,) if d > 0 else ()


@dataclass(frozen=True)
class SettlementRow:
    case: str
    group: str
    module_exponent: int
    oracle: tuple[int, ...]
    engine: tuple[int, ...]
    claimed: Optional[tuple[int, ...]]
    note: str = ""

    @property
    def agrees(self) -> bool:
        return self.oracle == self.engine and (self.claimed is None or self.claimed == self.oracle)


def all_subgroups(n: int) -> list[UnitSubgroup]:
    """Every subgroup of (Z/nZ)^x, each once.  Test helper for small n."""
    full = [x for x in range(n) if gcd(x, n) == 1] if n > 1 else [0]
    cyclic = {}
    for x in full:
        cyclic.setdefault(frozenset(UnitSubgroup(n, (x,)).elements()), (x,))
    found = dict(cyclic)
    frontier = dict(cyclic)
    while frontier:
        nxt = {}
        for elems, gens in frontier.items():
            for c, (x,) in cyclic.items():
                if c <= elems:
                    continue
                H = UnitSubgroup(n, gens + (x,))
                key = frozenset(H.elements())
                if key not in found and key not in nxt:
                    nxt[key] = H.generators
        found.update(nxt)
        frontier = nxt
    return sorted((UnitSubgroup(n, g) for g in found.values()), key=lambda H: (len(H.elements()), H.generators))


def example_delta(p: int, m: int, gamma_order: int) -> UnitSubgroup:
    """The cyclic group generated by (1 + p^2, gamma) mod p^4 m."""
    if (m - 1) % p**4:
        raise InputError(f"need p^4 | m - 1, got p={p}, m={m}")
    if (m - 1) % gamma_order:
        raise InputError(f"no element of order {gamma_order} mod {m}")
    g = primitive_root(m)
    gamma = pow(g, (m - 1) // gamma_order, m)
    x, mod = crt_combine([(1 + p * p, p**4), (gamma, m)])
    return UnitSubgroup(mod, (x,))


def settle_example_section(p: int = 3, m: int = 163,
                           bound: int = DEFAULT_ELEMENT_BOUND) -> list[SettlementRow]:
    """H^1 values for the three-case family Delta = <(1 + p^2, gamma)>,
    next to the expected values.

    In the minimal case the value Z/p comes from a quotient computed in
    Z/p^3, so it belongs to mu_{p^3} and not mu_{p^2}.  Rows without an
    expected value carry ``None``.
    """
    claims = {
        ("minimal", "G_{p^3 m}", 2): ((p**2,), ""),
        ("minimal", "G_{p^3 m}", 3): ((p,), "quotient computed in Z/p^3"),
        ("intermediate", "Delta", 2): ((p**2,), ""),
        ("intermediate", "Delta", 3): ((p**2,), ""),
        ("intermediate", "Delta", 4): ((p,), ""),
        ("maximal", "Delta", 3): ((p**2,), ""),
        ("maximal", "Delta", 4): ((p**2,), ""),
    }
    out = []
    for case, go in (("minimal", p**2), ("intermediate", p**3), ("maximal", p**4)):
        delta = example_delta(p, m, go)
        groups = {
            "G_{p^3 m}": reduce(delta, p**3 * m),
            "Delta": delta,
        }
        for label, G in groups.items():
            table = ElementTable.from_subgroup(G, bound)
            top = 3 if label == "G_{p^3 m}" else 4
            for t in range(2, top + 1):
                orc = h1_bruteforce(table, p, t, bound).invariant_factors
                eng = h1(subgroup_basis(G), p, t).invariant_factors
                claim, note = claims.get((case, label, t), (None, ""))
                out.append(SettlementRow(case, label, t, orc, eng, claim, note))
    return out

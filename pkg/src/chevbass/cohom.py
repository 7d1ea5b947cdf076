"""H^1 of finite abelian subgroups of (Z/nZ)^x with coefficients in mu_{p^t}.

The module mu_{p^t} is written additively as Z/p^t, and a unit g acts by
multiplication by g mod p^t.  With a basis b_1..b_k of G (orders e_i), a
1-cocycle is determined by its values x_i = c(b_i) subject to

    N_i x_i = 0,          N_i = 1 + a_i + ... + a_i^(e_i - 1)
    (a_j - 1) x_i = (a_i - 1) x_j   for i < j

where a_i = b_i mod p^t.  Coboundaries are ((a_1 - 1) m, ..., (a_k - 1) m).
The inclusion mu_{p^j} -> mu_{p^t} is multiplication by p^(t-j).

All structure computations go through the local Smith form over Z/p^t.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import prod

from . import kernels
from .errors import InputError
from .field import AbelianFieldSpec, FieldInvariants, galois_group_n, invariants
from .modarith import factorize, lcm
from .unitgroup import SubgroupBasis, subgroup_basis


@dataclass(frozen=True)
class CharacterAction:
    p: int
    t: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class H1Group:
    p: int
    t: int
    invariant_factors: tuple[int, ...] = ()
    # cocycle values on the basis generators, one per invariant factor
    representatives: tuple[tuple[int, ...], ...] = ()

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def trivial(self) -> bool:
        return not self.invariant_factors


def character(basis: SubgroupBasis, p: int, t: int) -> CharacterAction:
    pm = p**t
    if basis.modulus % pm:
        raise InputError(f"{p}^{t} does not divide {basis.modulus}")
    return CharacterAction(p, t, tuple(b % pm for b in basis.generators))


def norm_element(a: int, e: int, pm: int) -> int:
    """1 + a + ... + a^(e-1) mod pm, by doubling."""
    # (s, q) = (sum_{l<k} a^l, a^k)
    s, q = 0, 1
    base_s, base_q = 1, a % pm
    while e:
        if e & 1:
            s = (s + q * base_s) % pm
            q = q * base_q % pm
        base_s = (base_s + base_q * base_s) % pm
        base_q = base_q * base_q % pm
        e >>= 1
    return s


def cocycle_constraints(values, orders, pm: int) -> list[list[int]]:
    k = len(values)
    rows = []
    for i, (a, e) in enumerate(zip(values, orders)):
        row = [0] * k
        row[i] = norm_element(a, e, pm)
        rows.append(row)
    for i in range(k):
        for j in range(i + 1, k):
            row = [0] * k
            row[i] = (values[j] - 1) % pm
            row[j] = (1 - values[i]) % pm
            rows.append(row)
    return rows


@dataclass
class _CocycleModule:
    """Z^1 as V * (p^(t-d_1) Z/p^t  x ... x  p^(t-d_k) Z/p^t) ~ (+) Z/p^d_i."""

    p: int
    t: int
    d: list[int]
    V: list[list[int]]
    Vi: list[list[int]]
    pm: int = field(init=False)

    def __post_init__(self):
        self.pm = self.p**self.t

    def coords(self, z) -> list[int]:
        k = len(self.d)
        out = []
        for i in range(k):
            y = sum(self.Vi[i][l] * z[l] for l in range(k)) % self.pm
            step = self.p ** (self.t - self.d[i])
            if y % step:
                raise InputError("vector is not a cocycle")
            out.append((y // step) % self.p ** self.d[i])
        return out

    def vector(self, w) -> tuple[int, ...]:
        k = len(self.d)
        y = [w[i] * self.p ** (self.t - self.d[i]) for i in range(k)]
        return tuple(sum(self.V[r][i] * y[i] for i in range(k)) % self.pm for r in range(k))


def _cocycles(rows, k: int, p: int, t: int) -> _CocycleModule:
    d, V, Vi = kernels.local_smith(rows, k, p, t)
    return _CocycleModule(p, t, list(d), V, Vi)


def _quotient(Z: _CocycleModule, rels):
    """Invariant factors and generators of Z / <rels> (rels in coordinates)."""
    p, t, k = Z.p, Z.t, len(Z.d)
    rows = [[p**Z.d[i] if j == i else 0 for j in range(k)] for i in range(k)]
    rows += [list(r) for r in rels]
    v, _, Vi = kernels.local_smith(rows, k, p, t)
    factors, gens = [], []
    for i in range(k):
        if v[i] > 0:
            factors.append(p ** v[i])
            gens.append(Vi[i])
    order = sorted(range(len(factors)), key=lambda i: factors[i])
    return [factors[i] for i in order], [gens[i] for i in order]


def _setup(basis: SubgroupBasis, p: int, t: int):
    act = character(basis, p, t)
    pm = p**t
    rows = cocycle_constraints(act.values, basis.orders, pm)
    cob = tuple((a - 1) % pm for a in act.values)
    return act, rows, cob


def h1(basis: SubgroupBasis, p: int, t: int) -> H1Group:
    """H^1(G, mu_{p^t}) for G given by its basis; requires p^t | modulus."""
    if t < 0:
        raise InputError(f"t must be nonnegative, got {t}")
    act, rows, cob = _setup(basis, p, t)
    k = len(act.values)
    if k == 0 or t == 0:
        return H1Group(p, t)
    Z = _cocycles(rows, k, p, t)
    factors, gens = _quotient(Z, [Z.coords(cob)])
    reps = tuple(Z.vector(w) for w in gens)
    return H1Group(p, t, tuple(factors), reps)


def is_cocycle(basis: SubgroupBasis, p: int, t: int, x) -> bool:
    act, rows, _ = _setup(basis, p, t)
    pm = p**t
    return all(sum(r * v for r, v in zip(row, x)) % pm == 0 for row in rows)


def induced_map_surjective(basis: SubgroupBasis, p: int, j: int, t: int) -> tuple[bool, tuple[int, ...]]:
    """Is H^1(G, mu_{p^j}) -> H^1(G, mu_{p^t}) onto?  Also returns the
    invariant factors of the cokernel."""
    if j > t:
        raise InputError(f"need j <= t, got j={j}, t={t}")
    if j < 0:
        raise InputError(f"j must be nonnegative, got {j}")
    act, rows, cob = _setup(basis, p, t)
    k = len(act.values)
    if j == t or k == 0:
        return True, ()
    Zt = _cocycles(rows, k, p, t)
    rels = [Zt.coords(cob)]
    if j > 0:
        Zj = _cocycles(rows, k, p, j)
        for i, di in enumerate(Zj.d):
            # generator of Z^1(mu_{p^j}) pushed into Z/p^t
            scale = p ** (t - di)
            z = [Zj.V[r][i] * scale % Zt.pm for r in range(k)]
            rels.append(Zt.coords(z))
    factors, _ = _quotient(Zt, rels)
    return not factors, tuple(factors)


@dataclass(frozen=True)
class H1Full:
    n: int
    components: tuple[H1Group, ...]

    @property
    def order(self) -> int:
        return prod(c.order for c in self.components)

    @property
    def exponent(self) -> int:
        return lcm(*(c.exponent for c in self.components))


def h1_full(spec: AbelianFieldSpec, n: int, inv: FieldInvariants | None = None,
            threads: int = 1) -> H1Full:
    """H^1(G_n, mu_n), split prime by prime."""
    inv = inv or invariants(spec)
    basis = subgroup_basis(galois_group_n(spec, n, inv))
    parts = list(factorize(n))
    if threads > 1 and len(parts) > 1:
        with ThreadPoolExecutor(threads) as pool:
            comps = list(pool.map(lambda pe: h1(basis, *pe), parts))
    else:
        comps = [h1(basis, p, e) for p, e in parts]
    return H1Full(n, tuple(comps))

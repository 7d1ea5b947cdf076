"""Small exact integer matrix routines: row echelon (Hermite) form, lattice
membership, kernels modulo a diagonal, and Smith form with column transforms.

Matrices are lists of rows of Python ints.  Sizes here are tiny (a handful
of unit-group components), so clarity wins over speed.
"""

from __future__ import annotations

from typing import List, Sequence

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def hermite_rows(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Row-style Hermite normal form; returns the nonzero rows only.

    Pivots are positive and entries above each pivot are reduced into
    ``[0, pivot)``.
    """
    a = [list(r) for r in rows]
    out: Matrix = []
    col = 0
    while a and col < ncols:
        nz = [r for r in a if r[col]]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for j in range(col, ncols):
                    r[j] -= q * piv[j]
            nz = [piv] + [r for r in nz[1:] if r[col]]
        piv = nz[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        a = [r for r in a if r is not nz[0] and any(r)]
        out.append(piv)
        col += 1
    for i, row in enumerate(out):
        c = next(j for j, x in enumerate(row) if x)
        for k in range(i):
            q = out[k][c] // row[c]
            if q:
                out[k] = [x - q * y for x, y in zip(out[k], row)]
    return out


def reduce_by_hermite(h: Matrix, v: Sequence[int]) -> list[int]:
    """Remainder of v modulo the lattice spanned by the Hermite rows h."""
    v = list(v)
    for row in h:
        c = next(j for j, x in enumerate(row) if x)
        q = v[c] // row[c]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return v


def kernel_mod(rows: Sequence[Sequence[int]], moduli: Sequence[int]) -> Matrix:
    """Basis of {y in Z^g : sum_i y_i rows[i] = 0 modulo ``moduli`` columnwise}.

    Uses the augmented matrix [rows | I ; diag(moduli) | 0]: after echelon
    reduction the rows whose left block vanished span the kernel.
    """
    g = len(rows)
    c = len(moduli)
    aug = [list(rows[i]) + [int(i == j) for j in range(g)] for i in range(g)]
    aug += [[m if j == i else 0 for j in range(c)] + [0] * g for i, m in enumerate(moduli)]
    h = hermite_rows(aug, c + g)
    return [r[c:] for r in h if not any(r[:c])]


def smith(rows: Sequence[Sequence[int]], ncols: int):
    """Smith normal form over Z with column transforms.

    Returns ``(diag, V, Vinv)`` where ``diag`` has length ``ncols`` (zeros
    past the rank), the nonzero entries form a divisibility chain and
    ``U A V = diag`` for some unimodular ``U``.
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = ncols
    V = identity(n)
    Vi = identity(n)

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_col(src, dst, q):
        # col_dst += q * col_src
        for r in a:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]
        Vi[src] = [x - q * y for x, y in zip(Vi[src], Vi[dst])]

    diag = [0] * n
    for k in range(min(m, n)):
        while True:
            cand = [(abs(a[i][j]), i, j) for i in range(k, m) for j in range(k, n) if a[i][j]]
            if not cand:
                return diag, V, Vi
            _, i, j = min(cand)
            a[k], a[i] = a[i], a[k]
            if j != k:
                swap_cols(k, j)
            p = a[k][k]
            done = True
            for i in range(k + 1, m):
                q = a[i][k] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[k])]
                if a[i][k]:
                    done = False
            for j in range(k + 1, n):
                q = a[k][j] // p
                if q:
                    add_col(k, j, -q)
                if a[k][j]:
                    done = False
            if not done:
                continue
            bad = next(
                (i for i in range(k + 1, m) for j in range(k + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[k] = [x + y for x, y in zip(a[k], a[bad])]
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
        diag[k] = a[k][k]
    return diag, V, Vi

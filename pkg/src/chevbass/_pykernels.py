"""Pure-Python implementations of the hot kernels.

These are the reference versions; ``_kernels.pyx`` mirrors them with C
integer arithmetic and must return identical results.
"""

from __future__ import annotations

from math import isqrt


def bsgs(g: int, y: int, n: int, order: int) -> int:
    """Least d in [0, order) with g**d = y (mod n), or -1."""
    m = isqrt(order - 1) + 1 if order > 1 else 1
    table = {}
    cur = 1 % n
    for j in range(m):
        table.setdefault(cur, j)
        cur = cur * g % n
    step = pow(g, -m, n) if n > 1 else 0
    gamma = y % n
    for i in range(m + 1):
        j = table.get(gamma)
        if j is not None:
            d = i * m + j
            if d < order:
                return d
        gamma = gamma * step % n
    return -1


def _val(x: int, p: int, t: int) -> int:
    if x == 0:
        return t
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def local_smith(rows, ncols: int, p: int, t: int):
    """Smith form over the local ring Z/p^t.

    Returns ``(vals, V, Vinv)``: ``vals[i]`` is the p-valuation of the i-th
    diagonal entry (``t`` for a zero entry, including columns past the
    rank), and ``V`` is an invertible ncols x ncols matrix with ``U A V``
    diagonal for some invertible ``U``.
    """
    pm = p**t
    a = [[x % pm for x in row] for row in rows]
    r = len(a)
    c = ncols
    V = [[int(i == j) for j in range(c)] for i in range(c)]
    Vi = [[int(i == j) for j in range(c)] for i in range(c)]
    vals = [t] * c
    for k in range(min(r, c)):
        best, bi, bj = t, -1, -1
        for i in range(k, r):
            row = a[i]
            for j in range(k, c):
                if row[j]:
                    v = _val(row[j], p, t)
                    if v < best:
                        best, bi, bj = v, i, j
                        if v == 0:
                            break
            if best == 0:
                break
        if bi < 0:
            break
        a[k], a[bi] = a[bi], a[k]
        if bj != k:
            for row in a:
                row[k], row[bj] = row[bj], row[k]
            for row in V:
                row[k], row[bj] = row[bj], row[k]
            Vi[k], Vi[bj] = Vi[bj], Vi[k]
        pv = p**best
        u = a[k][k] // pv
        uinv = pow(u, -1, pm)
        pivrow = a[k]
        for j in range(k, c):
            pivrow[j] = pivrow[j] * uinv % pm
        for i in range(k + 1, r):
            row = a[i]
            if row[k]:
                f = row[k] // pv
                for j in range(k, c):
                    row[j] = (row[j] - f * pivrow[j]) % pm
        for j in range(k + 1, c):
            if pivrow[j]:
                f = pivrow[j] // pv
                pivrow[j] = 0
                for row in V:
                    row[j] = (row[j] - f * row[k]) % pm
                vk, vj = Vi[k], Vi[j]
                for l in range(c):
                    vk[l] = (vk[l] + f * vj[l]) % pm
        vals[k] = best
    return vals, V, Vi

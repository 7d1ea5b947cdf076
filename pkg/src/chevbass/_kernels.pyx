# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""C-integer versions of the kernels in ``_pykernels``.

Valid for moduli below 2**31 so that products of two residues fit in a
signed 64-bit integer; the selector in ``kernels`` enforces that.
"""

from libc.stdlib cimport malloc, free, qsort

ctypedef long long i64


cdef i64 _mod(i64 x, i64 m) nogil:
    x %= m
    if x < 0:
        x += m
    return x


cdef i64 _inv(i64 a, i64 m) nogil:
    cdef i64 g0 = m, g1 = _mod(a, m), x0 = 0, x1 = 1, q, tmp
    while g1:
        q = g0 // g1
        tmp = g0 - q * g1; g0 = g1; g1 = tmp
        tmp = x0 - q * x1; x0 = x1; x1 = tmp
    return _mod(x0, m)


cdef i64 _powmod(i64 b, i64 e, i64 m) nogil:
    cdef i64 r = 1 % m
    b = _mod(b, m)
    while e > 0:
        if e & 1:
            r = r * b % m
        b = b * b % m
        e >>= 1
    return r


cdef int _cmp_pair(const void *x, const void *y) noexcept nogil:
    cdef const i64 *a = <const i64 *> x
    cdef const i64 *b = <const i64 *> y
    if a[0] < b[0]:
        return -1
    if a[0] > b[0]:
        return 1
    if a[1] < b[1]:
        return -1
    if a[1] > b[1]:
        return 1
    return 0


def bsgs(i64 g, i64 y, i64 n, i64 order):
    cdef i64 m = 1, j, i, cur, step, gamma, d, lo, hi, mid
    cdef i64 *table
    while m * m < order:
        m += 1
    table = <i64 *> malloc(2 * m * sizeof(i64))
    if table == NULL:
        raise MemoryError()
    try:
        cur = 1 % n
        g = _mod(g, n)
        for j in range(m):
            table[2 * j] = cur
            table[2 * j + 1] = j
            cur = cur * g % n
        qsort(table, m, 2 * sizeof(i64), _cmp_pair)
        step = _inv(_powmod(g, m, n), n) if n > 1 else 0
        gamma = _mod(y, n)
        for i in range(m + 1):
            lo = 0
            hi = m
            while lo < hi:
                mid = (lo + hi) // 2
                if table[2 * mid] < gamma:
                    lo = mid + 1
                else:
                    hi = mid
            if lo < m and table[2 * lo] == gamma:
                d = i * m + table[2 * lo + 1]
                if d < order:
                    return d
            gamma = gamma * step % n
        return -1
    finally:
        free(table)


cdef int _val(i64 x, i64 p, int t) nogil:
    cdef int v = 0
    if x == 0:
        return t
    while x % p == 0:
        x //= p
        v += 1
    return v


def local_smith(rows, int ncols, i64 p, int t):
    cdef i64 pm = 1
    cdef int r = len(rows), c = ncols, k, i, j, l, bi, bj, best, v
    cdef i64 pv, u, uinv, f, tmp
    cdef i64 *a
    cdef i64 *V
    cdef i64 *Vi
    for k in range(t):
        pm *= p
    a = <i64 *> malloc((r * c + 1) * sizeof(i64))
    V = <i64 *> malloc((c * c + 1) * sizeof(i64))
    Vi = <i64 *> malloc((c * c + 1) * sizeof(i64))
    if a == NULL or V == NULL or Vi == NULL:
        free(a); free(V); free(Vi)
        raise MemoryError()
    vals = [t] * c
    try:
        for i in range(r):
            row = rows[i]
            for j in range(c):
                a[i * c + j] = _mod(<i64> (row[j] % pm), pm)
        for i in range(c):
            for j in range(c):
                V[i * c + j] = 1 if i == j else 0
                Vi[i * c + j] = 1 if i == j else 0
        for k in range(min(r, c)):
            best = t
            bi = -1
            bj = -1
            for i in range(k, r):
                for j in range(k, c):
                    if a[i * c + j]:
                        v = _val(a[i * c + j], p, t)
                        if v < best:
                            best = v; bi = i; bj = j
                            if v == 0:
                                break
                if best == 0:
                    break
            if bi < 0:
                break
            if bi != k:
                for j in range(c):
                    tmp = a[k * c + j]; a[k * c + j] = a[bi * c + j]; a[bi * c + j] = tmp
            if bj != k:
                for i in range(r):
                    tmp = a[i * c + k]; a[i * c + k] = a[i * c + bj]; a[i * c + bj] = tmp
                for i in range(c):
                    tmp = V[i * c + k]; V[i * c + k] = V[i * c + bj]; V[i * c + bj] = tmp
                for l in range(c):
                    tmp = Vi[k * c + l]; Vi[k * c + l] = Vi[bj * c + l]; Vi[bj * c + l] = tmp
            pv = 1
            for l in range(best):
                pv *= p
            u = a[k * c + k] // pv
            uinv = _inv(u, pm)
            for j in range(k, c):
                a[k * c + j] = a[k * c + j] * uinv % pm
            for i in range(k + 1, r):
                if a[i * c + k]:
                    f = a[i * c + k] // pv
                    for j in range(k, c):
                        a[i * c + j] = _mod(a[i * c + j] - f * a[k * c + j], pm)
            for j in range(k + 1, c):
                if a[k * c + j]:
                    f = a[k * c + j] // pv
                    a[k * c + j] = 0
                    for i in range(c):
                        V[i * c + j] = _mod(V[i * c + j] - f * V[i * c + k], pm)
                    for l in range(c):
                        Vi[k * c + l] = (Vi[k * c + l] + f * Vi[j * c + l]) % pm
            vals[k] = best
        Vout = [[V[i * c + j] for j in range(c)] for i in range(c)]
        Viout = [[Vi[i * c + j] for j in range(c)] for i in range(c)]
    finally:
        free(a); free(V); free(Vi)
    return vals, Vout, Viout

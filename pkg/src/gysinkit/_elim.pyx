# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fraction-free Gauss-Jordan elimination (see ``_elim_py``).

Runs on C ``long long`` rows with overflow checks; on any overflow the
same algorithm is rerun on Python integers.  Both paths return exactly
what ``_elim_py.rref_int`` returns.
"""

from math import gcd

from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    static inline int gk_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int gk_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    bint gk_mul_ovf(long long a, long long b, long long *r) nogil
    bint gk_sub_ovf(long long a, long long b, long long *r) nogil

# entries beyond this magnitude go straight to the object path
cdef long long LIMIT = 1LL << 62


cdef inline long long _abs(long long x) nogil:
    return -x if x < 0 else x


cdef inline long long _cgcd(long long a, long long b) nogil:
    a = _abs(a)
    b = _abs(b)
    while b:
        a, b = b, a % b
    return a


cdef void _cprimitive(long long *row, Py_ssize_t m) nogil:
    cdef long long g = 0
    cdef Py_ssize_t k
    for k in range(m):
        if row[k]:
            g = _cgcd(g, row[k])
            if g == 1:
                return
    if g > 1:
        for k in range(m):
            row[k] = row[k] // g


cdef int _crref(long long **rows, Py_ssize_t n, Py_ssize_t m,
                Py_ssize_t *pivots, Py_ssize_t *npiv) nogil:
    """Returns 1 on overflow, 0 otherwise."""
    cdef Py_ssize_t r = 0, c, i, k, best
    cdef long long v, a, best_abs, p, f, g, fa, fb, t1, t2
    cdef long long *prow
    cdef long long *row
    npiv[0] = 0
    for c in range(m):
        if r == n:
            break
        best = -1
        best_abs = 0
        for i in range(r, n):
            v = rows[i][c]
            if v:
                a = _abs(v)
                if best < 0 or a < best_abs:
                    best = i
                    best_abs = a
                    if a == 1:
                        break
        if best < 0:
            continue
        prow = rows[best]
        rows[best] = rows[r]
        rows[r] = prow
        if prow[c] < 0:
            for k in range(m):
                prow[k] = -prow[k]
        _cprimitive(prow, m)
        p = prow[c]
        for i in range(n):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if not f:
                continue
            g = _cgcd(p, f)
            fa = p // g
            fb = f // g
            for k in range(m):
                if gk_mul_ovf(fa, row[k], &t1) or gk_mul_ovf(fb, prow[k], &t2) \
                        or gk_sub_ovf(t1, t2, &row[k]) or row[k] >= LIMIT or row[k] <= -LIMIT:
                    return 1
            _cprimitive(row, m)
        pivots[npiv[0]] = c
        npiv[0] += 1
        r += 1
    return 0


cdef list _primitive(list row):
    cdef Py_ssize_t k, m = len(row)
    g = 0
    for k in range(m):
        x = row[k]
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def _rref_object(list work, Py_ssize_t ncols):
    cdef Py_ssize_t n = len(work)
    cdef list pivots = []
    cdef Py_ssize_t r = 0, c, i, k, best
    cdef list prow, row, new
    for c in range(ncols):
        if r == n:
            break
        best = -1
        best_abs = 0
        for i in range(r, n):
            v = (<list>work[i])[c]
            if v:
                a = v if v > 0 else -v
                if best < 0 or a < best_abs:
                    best = i
                    best_abs = a
                    if a == 1:
                        break
        if best < 0:
            continue
        prow = work[best]
        work[best] = work[r]
        if prow[c] < 0:
            prow = [-x for x in prow]
        prow = _primitive(prow)
        work[r] = prow
        p = prow[c]
        for i in range(n):
            if i == r:
                continue
            row = work[i]
            f = row[c]
            if not f:
                continue
            g = gcd(p, f)
            a = p // g
            b = f // g
            new = [None] * ncols
            for k in range(ncols):
                new[k] = a * row[k] - b * prow[k]
            work[i] = _primitive(new)
        pivots.append(c)
        r += 1
    return work[:r], pivots


def rref_int(rows, Py_ssize_t ncols):
    cdef list work = [list(raw) for raw in rows if any(raw)]
    cdef Py_ssize_t n = len(work), i, k
    cdef long long *block
    cdef long long **ptrs
    cdef Py_ssize_t *pivots
    cdef Py_ssize_t npiv = 0
    cdef int overflow
    if n == 0 or ncols == 0:
        return _rref_object(work, ncols)
    for row in work:
        for x in row:
            if x >= LIMIT or x <= -LIMIT:
                return _rref_object(work, ncols)
    block = <long long *> malloc(n * ncols * sizeof(long long))
    ptrs = <long long **> malloc(n * sizeof(long long *))
    pivots = <Py_ssize_t *> malloc(ncols * sizeof(Py_ssize_t))
    if block == NULL or ptrs == NULL or pivots == NULL:
        free(block)
        free(ptrs)
        free(pivots)
        raise MemoryError()
    try:
        for i in range(n):
            ptrs[i] = block + i * ncols
            row = work[i]
            for k in range(ncols):
                ptrs[i][k] = row[k]
        with nogil:
            overflow = _crref(ptrs, n, ncols, pivots, &npiv)
        if overflow:
            return _rref_object(work, ncols)
        return ([[ptrs[i][k] for k in range(ncols)] for i in range(npiv)],
                [pivots[i] for i in range(npiv)])
    finally:
        free(block)
        free(ptrs)
        free(pivots)

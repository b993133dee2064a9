"""Pure-Python fraction-free Gauss-Jordan elimination over the integers.

Reference implementation of the hot kernel; ``_elim.pyx`` mirrors it line
for line and must return identical results.
"""

from math import gcd


def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def rref_int(rows, ncols):
    """Reduce integer rows to fraction-free reduced echelon form.

    Returns ``(reduced, pivots)``: ``reduced[i]`` is a primitive integer row
    whose leading entry sits in column ``pivots[i]``, is positive, and is the
    only nonzero entry of that column among the reduced rows.  Zero rows are
    dropped.  The pivot row for each column is the remaining row with the
    smallest nonzero magnitude there, which keeps entries small.
    """
    work = [list(r) for r in rows if any(r)]
    n = len(work)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == n:
            break
        best = -1
        best_abs = 0
        for i in range(r, n):
            v = work[i][c]
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
            work[i] = _primitive([a * x - b * y for x, y in zip(row, prow)])
        pivots.append(c)
        r += 1
    return work[:r], pivots

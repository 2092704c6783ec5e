# cython: language_level=3
"""Compiled determinant kernels.

Mirrors ``hankelforge._core_py`` exactly: same signatures, same results,
same instrumentation.  Entries are arbitrary-precision Python ints; the
win over the pure version is loop and indexing overhead, which dominates
for matrices with small entries (parity matrices, random test matrices).
"""

from hankelforge.exact import InexactDivisionError


cdef inline long long _abs_bits(object x):
    if x < 0:
        return (-x).bit_length()
    return x.bit_length()


cdef long long _input_bits(list rows):
    cdef long long b = 0, eb
    cdef Py_ssize_t i, j
    for i in range(len(rows)):
        r = rows[i]
        for j in range(len(r)):
            eb = _abs_bits(r[j])
            if eb > b:
                b = eb
    return b


def bareiss_det(rows):
    """Fraction-free elimination.  Returns ``(det, steps, max_bits)``."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    cdef long long steps = 0, max_bits, tb
    cdef int sign = 1
    cdef list m = [list(r) for r in rows]
    cdef list ri, rk
    max_bits = _input_bits(m)
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0, steps, max_bits
        rk = m[k]
        piv = rk[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n):
                t = ri[j] * piv - mik * rk[j]
                q, rem = divmod(t, prev)
                if rem:
                    raise InexactDivisionError("bareiss interior division left a remainder")
                tb = _abs_bits(t)
                if tb > max_bits:
                    max_bits = tb
                ri[j] = q
                steps += 1
            ri[k] = 0
        prev = piv
    det = m[n - 1][n - 1]
    if sign < 0:
        det = -det
    return det, steps, max_bits


def bareiss_leading_minors(rows):
    """All leading principal minors via one fraction-free sweep, no pivoting.

    Returns ``(minors, steps, max_bits, completed)``.
    """
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    cdef long long steps = 0, max_bits, tb
    cdef list m = [list(r) for r in rows]
    cdef list ri, rk, minors
    max_bits = _input_bits(m)
    minors = [m[0][0]]
    prev = 1
    for k in range(n - 1):
        piv = m[k][k]
        if piv == 0:
            return minors, steps, max_bits, False
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n):
                t = ri[j] * piv - mik * rk[j]
                q, rem = divmod(t, prev)
                if rem:
                    raise InexactDivisionError("bareiss interior division left a remainder")
                tb = _abs_bits(t)
                if tb > max_bits:
                    max_bits = tb
                ri[j] = q
                steps += 1
            ri[k] = 0
        prev = piv
        minors.append(m[k + 1][k + 1])
    return minors, steps, max_bits, True


def dodgson_det(rows):
    """Condensation by 2x2 minors.  Returns ``(det, steps, max_bits, ok)``."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, m
    cdef long long steps = 0, max_bits, tb
    cdef list prev, cur, nxt, hi, lo, pr, out
    max_bits = _input_bits([list(r) for r in rows])
    if n == 1:
        return rows[0][0], 0, max_bits, True
    prev = [[1] * (n + 1) for _ in range(n + 1)]
    cur = [list(r) for r in rows]
    while len(cur) > 1:
        m = len(cur)
        nxt = []
        for i in range(m - 1):
            hi = cur[i]
            lo = cur[i + 1]
            pr = prev[i + 1]
            out = []
            for j in range(m - 1):
                t = hi[j] * lo[j + 1] - hi[j + 1] * lo[j]
                tb = _abs_bits(t)
                if tb > max_bits:
                    max_bits = tb
                d = pr[j + 1]
                if d == 0:
                    return 0, steps, max_bits, False
                if d == 1:
                    q = t
                elif d == -1:
                    q = -t
                else:
                    q, rem = divmod(t, d)
                    if rem:
                        raise InexactDivisionError("condensation division left a remainder")
                out.append(q)
                steps += 1
            nxt.append(out)
        prev, cur = cur, nxt
    return cur[0][0], steps, max_bits, True

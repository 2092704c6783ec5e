"""Pure-Python determinant kernels.

The compiled extension ``hankelforge._core`` implements the same functions
with identical signatures, results and instrumentation; ``_backend`` picks
whichever is importable.  Matrices are row-major lists of Python ints and
are never mutated (kernels work on copies).

Instrumentation conventions shared by both backends:

* ``steps``    counts interior entry updates (Bareiss), 2x2 condensation
  minors (Dodgson).
* ``max_bits`` is the largest absolute bit-length seen among inputs and
  every intermediate product before division.
"""
from __future__ import annotations

from .exact import InexactDivisionError


def _input_bits(rows) -> int:
    b = 0
    for r in rows:
        for e in r:
            eb = e.bit_length() if e >= 0 else (-e).bit_length()
            if eb > b:
                b = eb
    return b


def bareiss_det(rows):
    """Fraction-free elimination.  Returns ``(det, steps, max_bits)``.

    Interior divisions are exact by construction; a remainder raises
    :class:`InexactDivisionError`.
    """
    n = len(rows)
    m = [list(r) for r in rows]
    max_bits = _input_bits(m)
    steps = 0
    sign = 1
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
        piv = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            mik = ri[k]
            for j in range(k + 1, n):
                t = ri[j] * piv - mik * rk[j]
                q, rem = divmod(t, prev)
                if rem:
                    raise InexactDivisionError("bareiss interior division left a remainder")
                tb = t.bit_length() if t >= 0 else (-t).bit_length()
                if tb > max_bits:
                    max_bits = tb
                ri[j] = q
                steps += 1
            ri[k] = 0
        prev = piv
    return sign * m[n - 1][n - 1], steps, max_bits


def bareiss_leading_minors(rows):
    """All leading principal minors via one fraction-free sweep, no pivoting.

    Returns ``(minors, steps, max_bits, completed)``.  The sweep stops at a
    zero pivot (``completed`` False); minors collected so far remain exact.
    """
    n = len(rows)
    m = [list(r) for r in rows]
    max_bits = _input_bits(m)
    steps = 0
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
                tb = t.bit_length() if t >= 0 else (-t).bit_length()
                if tb > max_bits:
                    max_bits = tb
                ri[j] = q
                steps += 1
            ri[k] = 0
        prev = piv
        minors.append(m[k + 1][k + 1])
    return minors, steps, max_bits, True


def dodgson_det(rows):
    """Condensation by 2x2 minors.  Returns ``(det, steps, max_bits, ok)``.

    ``ok`` is False when a zero interior pivot blocks a condensation stage;
    the caller is expected to fall back to Bareiss on the original matrix.
    """
    n = len(rows)
    max_bits = _input_bits(rows)
    if n == 1:
        return rows[0][0], 0, max_bits, True
    steps = 0
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
                tb = t.bit_length() if t >= 0 else (-t).bit_length()
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

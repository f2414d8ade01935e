# cython: language_level=3
"""Compiled twin of apobern._kernels._pure.

Same contracts as the pure module; the arithmetic stays on Python big
ints (coefficients overflow machine words routinely), the win is C-level
loop and list handling around it.
"""

from math import gcd

__all__ = ["conv_int", "conv_frac", "recip_frac", "prim_gcd_int"]


cdef inline tuple _add_frac(na, da, nb, db):
    if na == 0:
        return nb, db
    if nb == 0:
        return na, da
    g = gcd(da, db)
    if g == 1:
        return na * db + nb * da, da * db
    s = da // g
    t = na * (db // g) + nb * s
    g2 = gcd(t, g)
    if g2 == 1:
        return t, s * db
    return t // g2, s * (db // g2)


cdef inline tuple _mul_frac(na, da, nb, db):
    if na == 0 or nb == 0:
        return 0, 1
    g1 = gcd(na, db)
    g2 = gcd(nb, da)
    return (na // g1) * (nb // g2), (da // g2) * (db // g1)


def conv_int(list a, list b):
    """Full convolution of two integer coefficient lists."""
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai:
            for j in range(lb):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return out


def conv_frac(list anum, list aden, list bnum, list bden, Py_ssize_t out_len):
    """Rational convolution c_n = sum_i a_i * b_{n-i}, truncated to out_len."""
    cdef Py_ssize_t la = len(anum), lb = len(bnum), n, i, lo, hi
    cdef list cnum = [0] * out_len
    cdef list cden = [1] * out_len
    for n in range(out_len):
        sn, sd = 0, 1
        lo = n - lb + 1
        if lo < 0:
            lo = 0
        hi = n if n < la - 1 else la - 1
        for i in range(lo, hi + 1):
            pn, pd = _mul_frac(anum[i], aden[i], bnum[n - i], bden[n - i])
            sn, sd = _add_frac(sn, sd, pn, pd)
        cnum[n] = sn
        cden[n] = sd
    return cnum, cden


def recip_frac(list anum, list aden, Py_ssize_t out_len):
    """Multiplicative inverse of a rational series, truncated to out_len."""
    cdef Py_ssize_t la = len(anum), n, i, hi
    if la == 0 or anum[0] == 0:
        raise ZeroDivisionError("series has no multiplicative inverse: zero constant term")
    r0n, r0d = aden[0], anum[0]
    if r0d < 0:
        r0n, r0d = -r0n, -r0d
    cdef list bnum = [0] * out_len
    cdef list bden = [1] * out_len
    bnum[0], bden[0] = r0n, r0d
    for n in range(1, out_len):
        sn, sd = 0, 1
        hi = n if n < la - 1 else la - 1
        for i in range(1, hi + 1):
            pn, pd = _mul_frac(anum[i], aden[i], bnum[n - i], bden[n - i])
            sn, sd = _add_frac(sn, sd, pn, pd)
        tn, td = _mul_frac(sn, sd, -r0n, r0d)
        bnum[n] = tn
        bden[n] = td
    return bnum, bden


cdef _int_content(list a):
    c = 0
    for x in a:
        c = gcd(c, x)
        if c == 1:
            return 1
    return c


cdef list _primitive(object a):
    cdef list out = list(a)
    while out and out[-1] == 0:
        out.pop()
    if not out:
        return out
    c = _int_content(out)
    if out[-1] < 0:
        c = -c
    if c != 1:
        out = [x // c for x in out]
    return out


cdef list _pseudo_rem(list f, list g):
    cdef list r = list(f)
    cdef Py_ssize_t dg = len(g) - 1, shift, i
    lg = g[dg]
    while r and len(r) - 1 >= dg:
        shift = len(r) - 1 - dg
        fl = r[len(r) - 1]
        if lg != 1:
            r = [c * lg for c in r]
        for i in range(dg + 1):
            r[shift + i] = r[shift + i] - fl * g[i]
        while r and r[-1] == 0:
            r.pop()
    return r


def prim_gcd_int(a, b):
    """Gcd in Z[x] via the primitive Euclidean remainder sequence."""
    cdef list f = _primitive(a)
    cdef list g = _primitive(b)
    cdef list r
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _primitive(_pseudo_rem(f, g))
        f, g = g, r
    return f

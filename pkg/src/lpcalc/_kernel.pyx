# cython: language_level=3, boundscheck=False, wraparound=False
"""Coordinate kernels for the coefficient field, compiled backend.

Twin of `_kernel_py`; same data layout and semantics, with the loops and
temporaries handled in C.  Numerators stay Python ints (arbitrary
precision), so results are bit-identical to the pure backend.
"""

from math import gcd

BACKEND = "cython"


def normalized(nums, den):
    """Canonical form: positive denominator, content 1."""
    cdef Py_ssize_t i, n = len(nums)
    cdef bint nonzero = False
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for i in range(n):
        v = nums[i]
        if v:
            nonzero = True
            g = gcd(g, v)
            if g == 1:
                return tuple(nums), den
    if not nonzero:
        return tuple(nums), 1
    return tuple(v // g for v in nums), den // g


def vec_add(anums, aden, bnums, bden):
    """Sum of two coordinate vectors."""
    cdef Py_ssize_t i, n = len(anums)
    cdef list out = [0] * n
    if aden == bden:
        for i in range(n):
            out[i] = anums[i] + bnums[i]
        return normalized(out, aden)
    g = gcd(aden, bden)
    fa = bden // g
    fb = aden // g
    for i in range(n):
        out[i] = anums[i] * fa + bnums[i] * fb
    return normalized(out, aden * fa)


def vec_scale(nums, den, pnum, pden):
    """Multiply a coordinate vector by the rational pnum/pden."""
    cdef Py_ssize_t i, n = len(nums)
    if pnum == 0:
        return (0,) * n, 1
    cdef list out = [0] * n
    for i in range(n):
        out[i] = nums[i] * pnum
    return normalized(out, den * pden)


cdef void _mul_reduced(tuple a, tuple b, list out, Py_ssize_t m, tuple red,
                       object factor):
    """out += factor * (a * b mod Phi_N), for length-m integer polys."""
    cdef Py_ssize_t i, j, e, k
    if m == 1:
        out[0] = out[0] + factor * a[0] * b[0]
        return
    cdef list conv = [0] * (2 * m - 1)
    for i in range(m):
        ai = a[i]
        if ai:
            for j in range(m):
                bj = b[j]
                if bj:
                    conv[i + j] = conv[i + j] + ai * bj
    for e in range(m):
        ce = conv[e]
        if ce:
            out[e] = out[e] + factor * ce
    for e in range(m, 2 * m - 1):
        ce = conv[e]
        if ce:
            row = red[e - m]
            cf = factor * ce
            for k in range(m):
                rk = row[k]
                if rk:
                    out[k] = out[k] + cf * rk


def scalar_mul(anums, aden, bnums, bden, m, q, red):
    """Product in Q(zeta_N)(c): (a0 + c a1)(b0 + c b1) with c*c = q."""
    cdef Py_ssize_t mm = m
    cdef tuple a = tuple(anums), b = tuple(bnums), rr = tuple(red)
    cdef tuple a0 = a[:mm], a1 = a[mm:], b0 = b[:mm], b1 = b[mm:]
    cdef list zpart = [0] * mm
    cdef list cpart = [0] * mm
    _mul_reduced(a0, b0, zpart, mm, rr, 1)
    _mul_reduced(a1, b1, zpart, mm, rr, q)
    _mul_reduced(a0, b1, cpart, mm, rr, 1)
    _mul_reduced(a1, b0, cpart, mm, rr, 1)
    return normalized(zpart + cpart, aden * bden)

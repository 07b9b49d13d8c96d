"""Coordinate kernels for the coefficient field, pure-Python backend.

A field element a0 + c*a1 (a0, a1 in Q(zeta_N)) is stored as 2*m integer
numerators over one positive denominator, m = phi(N):

    nums = (a0_0, ..., a0_{m-1}, a1_0, ..., a1_{m-1}),   den > 0

with gcd(nums..., den) = 1.  `red` is the reduction table for the N-th
cyclotomic polynomial: red[e - m] gives z^e on the power basis, for
m <= e <= 2m - 2.  All arithmetic is exact.
"""

from math import gcd

BACKEND = "python"


def normalized(nums, den):
    """Canonical form: positive denominator, content 1."""
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for v in nums:
        if v:
            g = gcd(g, v)
            if g == 1:
                return tuple(nums), den
    if g == den and all(v == 0 for v in nums):
        return tuple(nums), 1
    return tuple(v // g for v in nums), den // g


def vec_add(anums, aden, bnums, bden):
    """Sum of two coordinate vectors."""
    if aden == bden:
        return normalized([x + y for x, y in zip(anums, bnums)], aden)
    g = gcd(aden, bden)
    fa = bden // g
    fb = aden // g
    return normalized(
        [x * fa + y * fb for x, y in zip(anums, bnums)], aden * fa
    )


def vec_scale(nums, den, pnum, pden):
    """Multiply a coordinate vector by the rational pnum/pden."""
    if pnum == 0:
        return (0,) * len(nums), 1
    return normalized([v * pnum for v in nums], den * pden)


def _mul_reduced(a, b, out, m, red, factor):
    """out += factor * (a * b mod Phi_N), for length-m integer polys."""
    if m == 1:
        out[0] += factor * a[0] * b[0]
        return
    conv = [0] * (2 * m - 1)
    for i in range(m):
        ai = a[i]
        if ai:
            for j in range(m):
                bj = b[j]
                if bj:
                    conv[i + j] += ai * bj
    for e in range(m):
        out[e] += factor * conv[e]
    for e in range(m, 2 * m - 1):
        ce = conv[e]
        if ce:
            row = red[e - m]
            cf = factor * ce
            for k in range(m):
                rk = row[k]
                if rk:
                    out[k] += cf * rk


def scalar_mul(anums, aden, bnums, bden, m, q, red):
    """Product in Q(zeta_N)(c): (a0 + c a1)(b0 + c b1) with c*c = q."""
    a0 = anums[:m]
    a1 = anums[m:]
    b0 = bnums[:m]
    b1 = bnums[m:]
    zpart = [0] * m
    cpart = [0] * m
    _mul_reduced(a0, b0, zpart, m, red, 1)
    _mul_reduced(a1, b1, zpart, m, red, q)
    _mul_reduced(a0, b1, cpart, m, red, 1)
    _mul_reduced(a1, b0, cpart, m, red, 1)
    return normalized(zpart + cpart, aden * bden)

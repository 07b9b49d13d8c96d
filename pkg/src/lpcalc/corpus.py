"""Deterministic sample parameters for demos and tests.

Parameters are direct sums of special blocks: an m-dimensional block has
Frobenius u * diag(1, q, ..., q^(m-1)), a single monodromy string, and an
optional finite character acting as a root-of-unity scalar.  Everything is
generated in a fixed order; an optional seeded generator extends the pool
reproducibly.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .linalg import Mat
from .params import ParamData, conjugate
from .rootdata import LGroupSpec, split_lgroup
from .scalars import FieldSpec, Scalar


def sp_block(spec: FieldSpec, m: int, q: int, unit: Scalar):
    """(Frobenius block, monodromy block) of a length-m special block."""
    entries = [unit * spec.rational(Fraction(q) ** j) for j in range(m)]
    phi = Mat.diagonal(spec, entries)
    n_rows = [[spec.one() if j == i + 1 else spec.zero() for j in range(m)]
              for i in range(m)]
    return phi, Mat(spec, n_rows)


def block_param(
    spec: FieldSpec,
    lg: LGroupSpec,
    blocks,
    q: int | None = None,
) -> ParamData:
    """Direct sum of (m, unit, finite_char) blocks; finite_char may be None
    for no inertia contribution on that block."""
    q = spec.q if q is None else q
    phis, ns, chars = [], [], []
    has_inertia = any(chi is not None for _, _, chi in blocks)
    for m, unit, chi in blocks:
        phi, nb = sp_block(spec, m, q, unit)
        phis.append(phi)
        ns.append(nb)
        if has_inertia:
            value = spec.one() if chi is None else chi
            chars.append(Mat.diagonal(spec, [value] * m))
    inertia = ()
    if has_inertia:
        gen = Mat.block_diag(spec, chars)
        inertia = (gen,)
    return ParamData(
        lg,
        spec,
        Mat.block_diag(spec, phis),
        inertia,
        Mat.block_diag(spec, ns),
        q,
    )


def _partitions(n: int, max_part: int | None = None):
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _units(spec: FieldSpec):
    out = [spec.one(), spec.rational(2), spec.rational(Fraction(1, 2)),
           spec.rational(3)]
    if spec.N > 2:
        out.append(spec.zeta())
    return out


def _finite_chars(spec: FieldSpec):
    """Nontrivial root-of-unity scalars available in the field."""
    out = [spec.rational(-1)]
    if spec.N > 2:
        out.append(spec.zeta())
    return out


def standard_corpus(group: str, spec: FieldSpec, size: int = 16,
                    seed: int | None = None) -> list[ParamData]:
    """Valid parameters on GL(n): all block shapes crossed with a rotating
    choice of units and finite characters, in a fixed order."""
    lg = split_lgroup(group)
    n = lg.datum.rank
    units = _units(spec)
    chars = [None] + _finite_chars(spec)
    out = []
    i = 0
    shapes = list(_partitions(n))
    while len(out) < size and i < 8 * size:
        shape = shapes[i % len(shapes)]
        blocks = []
        for j, m in enumerate(shape):
            unit = units[(i + j) % len(units)]
            chi = chars[(i + i // len(shapes) + j) % len(chars)]
            blocks.append((m, unit, chi))
        p = block_param(spec, lg, blocks)
        if p not in out:
            out.append(p)
        i += 1
    if seed is not None:
        rng = random.Random(seed)
        while len(out) < size + 4:
            shape = rng.choice(shapes)
            blocks = [
                (m, rng.choice(units), rng.choice(chars)) for m in shape
            ]
            p = block_param(spec, lg, blocks)
            if p not in out:
                out.append(p)
    return out


def inertia_corpus(group: str, spec: FieldSpec, size: int) -> list[ParamData]:
    """Frobenius-semisimple parameters with nontrivial finite inertia."""
    out = [
        p
        for p in standard_corpus(group, spec, size=4 * size)
        if p.inertia
    ]
    return out[:size]


def det_one_gl2_corpus(spec: FieldSpec, size: int = 10) -> list[ParamData]:
    """Determinant-one GL(2) parameters (images of PGL_2 parameters)."""
    lg = split_lgroup("GL(2)")
    c = spec.c()
    out = []
    # the Steinberg block normalized to determinant one
    phi = Mat.diagonal(spec, [c ** -1, c])
    n01 = Mat.elementary(spec, 2, 0, 1)
    out.append(ParamData(lg, spec, phi, (), n01))
    units = [spec.rational(2), spec.rational(3), spec.rational(5),
             spec.rational(Fraction(2, 3)), spec.rational(7),
             spec.rational(Fraction(5, 2)), spec.rational(11)]
    if spec.N > 2:
        units.append(spec.zeta())
    chars = [None] + _finite_chars(spec)
    i = 0
    while len(out) < size:
        u = units[i % len(units)]
        chi = chars[(i // len(units)) % len(chars)]
        phi = Mat.diagonal(spec, [u, u ** -1])
        inertia = ()
        if chi is not None:
            inertia = (Mat.diagonal(spec, [chi, chi ** -1]),)
        p = ParamData(lg, spec, phi, inertia, Mat.zeros(spec, 2))
        if p not in out:
            out.append(p)
        i += 1
    return out[:size]


def inequivalent_gl3_pairs(spec: FieldSpec, size: int = 10):
    """Pairs of GL(3) parameters with certified different structures."""
    lg = split_lgroup("GL(3)")
    one = spec.one()
    two = spec.rational(2)
    three = spec.rational(3)
    five = spec.rational(5)
    mk = lambda blocks: block_param(spec, lg, blocks)
    zeta = spec.zeta() if spec.N > 2 else spec.rational(-1)
    pairs = [
        (mk([(3, one, None)]), mk([(2, one, None), (1, one, None)])),
        (mk([(3, one, None)]), mk([(1, one, None), (1, two, None), (1, three, None)])),
        (mk([(2, one, None), (1, one, None)]), mk([(1, one, None), (1, two, None), (1, five, None)])),
        (mk([(2, one, None), (1, five, None)]), mk([(2, two, None), (1, five, None)])),
        (mk([(1, one, None), (1, two, None), (1, three, None)]),
         mk([(1, one, None), (1, three, None), (1, five, None)])),
        (mk([(2, one, zeta), (1, one, one)]), mk([(2, one, one), (1, one, zeta)])),
        (mk([(3, one, None)]), mk([(3, two, None)])),
        (mk([(2, three, None), (1, one, None)]), mk([(2, one, None), (1, three, None)])),
        (mk([(1, one, zeta), (1, two, zeta), (1, three, one)]),
         mk([(1, one, one), (1, two, zeta), (1, three, zeta)])),
        (mk([(2, two, None), (1, two, None)]), mk([(1, two, None), (1, five, None), (1, one, None)])),
    ]
    return pairs[:size]


def sample_conjugators(spec: FieldSpec, n: int) -> list[Mat]:
    """A few integer invertible matrices for conjugation tests."""
    out = []
    ident = Mat.identity(spec, n)
    upper = Mat(
        spec,
        [[1 if i == j else (1 if j == i + 1 else 0) for j in range(n)] for i in range(n)],
    )
    lower = upper.transpose()
    out.append(upper)
    out.append(lower)
    out.append(upper * lower)
    mixed = Mat(
        spec,
        [[1 if i == j else (2 if (i + j) % n == 1 and i < j else 0) for j in range(n)]
         for i in range(n)],
    )
    if mixed.is_invertible():
        out.append(mixed)
    return out


def conjugated_copy(p: ParamData, index: int = 0) -> tuple[ParamData, Mat]:
    g = sample_conjugators(p.field, p.dim)[index % 3]
    return conjugate(p, g), g

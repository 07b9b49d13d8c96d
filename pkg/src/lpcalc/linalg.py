"""Exact matrices and univariate polynomials over the coefficient field.

Matrices are immutable tuples of tuples of Scalar.  Everything here is
plain Gaussian elimination / Euclid over a field; sizes stay small (the
largest spaces in the calculus are tensor squares of GL_3, dimension 9,
and intertwiner systems on up to 81 unknowns).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import FieldSpec, Scalar


class Mat:
    """Immutable matrix over a FieldSpec's field."""

    __slots__ = ("spec", "rows")

    def __init__(self, spec: FieldSpec, rows):
        self.spec = spec
        self.rows = tuple(tuple(self._entry(v) for v in row) for row in rows)
        if self.rows:
            width = len(self.rows[0])
            if any(len(r) != width for r in self.rows):
                raise ValueError("ragged rows")

    def _entry(self, v) -> Scalar:
        if isinstance(v, Scalar):
            if v.spec != self.spec:
                raise ValueError("entry from a different field spec")
            return v
        return self.spec.rational(v)

    # -- shape / access --------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.rows for v in row)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(spec: FieldSpec, n: int) -> Mat:
        one, zero = spec.one(), spec.zero()
        return Mat(spec, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(spec: FieldSpec, nrows: int, ncols: int | None = None) -> Mat:
        ncols = nrows if ncols is None else ncols
        zero = spec.zero()
        return Mat(spec, [[zero] * ncols for _ in range(nrows)])

    @staticmethod
    def diagonal(spec: FieldSpec, entries) -> Mat:
        entries = list(entries)
        n = len(entries)
        zero = spec.zero()
        return Mat(
            spec,
            [[entries[i] if i == j else zero for j in range(n)] for i in range(n)],
        )

    @staticmethod
    def elementary(spec: FieldSpec, n: int, i: int, j: int, value=1) -> Mat:
        rows = [[spec.zero()] * n for _ in range(n)]
        rows[i][j] = spec.rational(value) if not isinstance(value, Scalar) else value
        return Mat(spec, rows)

    @staticmethod
    def block_diag(spec: FieldSpec, blocks) -> Mat:
        blocks = list(blocks)
        n = sum(b.nrows for b in blocks)
        rows = [[spec.zero()] * n for _ in range(n)]
        at = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    rows[at + i][at + j] = b[i, j]
            at += b.nrows
        return Mat(spec, rows)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Mat) -> Mat:
        return Mat(
            self.spec,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: Mat) -> Mat:
        return Mat(
            self.spec,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __neg__(self) -> Mat:
        return Mat(self.spec, [[-a for a in row] for row in self.rows])

    def scale(self, x) -> Mat:
        x = self._entry(x) if not isinstance(x, (int, Fraction)) else x
        return Mat(self.spec, [[a * x for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.ncols != other.nrows:
                raise ValueError(
                    f"shape mismatch: {self.nrows}x{self.ncols} * "
                    f"{other.nrows}x{other.ncols}"
                )
            cols = other.transpose().rows
            return Mat(
                self.spec,
                [[_dot(row, col) for col in cols] for row in self.rows],
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> Mat:
        base = self if k >= 0 else self.inverse()
        n = abs(k)
        out = Mat.identity(self.spec, self.nrows)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def transpose(self) -> Mat:
        return Mat(self.spec, list(zip(*self.rows))) if self.rows else self

    def apply(self, v):
        """Matrix times column vector (tuple of Scalar)."""
        return tuple(_dot(row, v) for row in self.rows)

    def trace(self) -> Scalar:
        return sum((self.rows[i][i] for i in range(self.nrows)), self.spec.zero())

    def kron(self, other: Mat) -> Mat:
        rows = []
        for ra in self.rows:
            for rb in other.rows:
                rows.append([a * b for a in ra for b in rb])
        return Mat(self.spec, rows)

    def map_entries(self, fn) -> Mat:
        return Mat(self.spec, [[fn(a) for a in row] for row in self.rows])

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.spec == other.spec
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.spec, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.rows)
        return f"Mat[{body}]"

    # -- elimination-based ops ---------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (rows, pivot column list)."""
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for col in range(self.ncols):
            piv = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = rows[r][col] ** -1
            rows[r] = [v * inv for v in rows[r]]
            for i in range(len(rows)):
                if i != r and not rows[i][col].is_zero():
                    f = rows[i][col]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(col)
            r += 1
            if r == len(rows):
                break
        return rows, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self):
        """Basis of the right kernel, as column vectors (tuples of Scalar)."""
        rows, pivots = self.rref()
        spec = self.spec
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for f in free:
            v = [spec.zero()] * self.ncols
            v[f] = spec.one()
            for r, p in enumerate(pivots):
                v[p] = -rows[r][f]
            basis.append(tuple(v))
        return basis

    def det(self) -> Scalar:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        rows = [list(r) for r in self.rows]
        n = self.nrows
        out = self.spec.one()
        for col in range(n):
            piv = next((i for i in range(col, n) if not rows[i][col].is_zero()), None)
            if piv is None:
                return self.spec.zero()
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                out = -out
            out = out * rows[col][col]
            inv = rows[col][col] ** -1
            for i in range(col + 1, n):
                if not rows[i][col].is_zero():
                    f = rows[i][col] * inv
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
        return out

    def is_invertible(self) -> bool:
        return self.is_square() and not self.det().is_zero()

    def inverse(self) -> Mat:
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        spec = self.spec
        ident = Mat.identity(spec, n)
        aug = Mat(spec, [list(self.rows[i]) + list(ident.rows[i]) for i in range(n)])
        rows, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return Mat(spec, [row[n:] for row in rows])

    def solve(self, rhs):
        """One solution x of self * x = rhs (tuple), or None."""
        spec = self.spec
        aug = Mat(spec, [list(row) + [rhs[i]] for i, row in enumerate(self.rows)])
        rows, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [spec.zero()] * self.ncols
        for r, p in enumerate(pivots):
            x[p] = rows[r][self.ncols]
        return tuple(x)


def _dot(u, v) -> Scalar:
    it = iter(zip(u, v))
    a, b = next(it)
    out = a * b
    for a, b in it:
        out = out + a * b
    return out


def span_rref(vectors, spec: FieldSpec):
    """Row-reduce a list of vectors; returns an echelon basis of their span."""
    if not vectors:
        return []
    rows, _ = Mat(spec, vectors).rref()
    return [tuple(r) for r in rows if any(not v.is_zero() for v in r)]


def in_span(vector, echelon_basis, spec: FieldSpec) -> bool:
    before = len(echelon_basis)
    after = len(span_rref(list(echelon_basis) + [vector], spec))
    return after == before


# -- nilpotent exp / log --------------------------------------------------


def is_nilpotent(m: Mat) -> bool:
    power = m
    for _ in range(m.nrows):
        if power.is_zero():
            return True
        power = power * m
    return power.is_zero()


def exp_nilpotent(m: Mat) -> Mat:
    """exp of a nilpotent matrix: the series terminates."""
    n = m.nrows
    out = Mat.identity(m.spec, n)
    term = Mat.identity(m.spec, n)
    for k in range(1, n + 1):
        term = term * m
        if term.is_zero():
            break
        out = out + term.scale(Fraction(1, _factorial(k)))
    else:
        if not (term * m).is_zero():
            raise ValueError("matrix is not nilpotent")
    return out


def log_unipotent(u: Mat) -> Mat:
    """log of a unipotent matrix (u - 1 nilpotent); exp(log u) = u."""
    n = u.nrows
    x = u - Mat.identity(u.spec, n)
    if not is_nilpotent(x):
        raise ValueError("matrix is not unipotent")
    out = Mat.zeros(u.spec, n)
    term = Mat.identity(u.spec, n)
    for k in range(1, n + 1):
        term = term * x
        if term.is_zero():
            break
        out = out + term.scale(Fraction((-1) ** (k + 1), k))
    return out


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


# -- polynomials over the field (coefficient lists, constant term first) --


def poly_trim(p):
    while p and p[-1].is_zero():
        p = p[:-1]
    return list(p)


def poly_deg(p) -> int:
    return len(poly_trim(p)) - 1


def poly_add(p, r, spec):
    n = max(len(p), len(r))
    z = spec.zero()
    return poly_trim([(p[i] if i < len(p) else z) + (r[i] if i < len(r) else z)
                      for i in range(n)])


def poly_scale(p, x):
    return poly_trim([v * x for v in p])


def poly_mul(p, r, spec):
    if not p or not r:
        return []
    out = [spec.zero()] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(r):
            out[i + j] = out[i + j] + a * b
    return poly_trim(out)

def poly_divmod(p, d, spec):
    d = poly_trim(d)
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    rem = poly_trim(p)
    quo = [spec.zero()] * max(len(rem) - len(d) + 1, 0)
    inv_lead = d[-1] ** -1
    while len(rem) >= len(d):
        f = rem[-1] * inv_lead
        shift = len(rem) - len(d)
        quo[shift] = f
        rem = poly_trim(
            [rem[i] - (d[i - shift] * f if 0 <= i - shift < len(d) else spec.zero())
             for i in range(len(rem) - 1)]
        )
    return poly_trim(quo), rem


def poly_gcd(p, r, spec):
    """Monic gcd by Euclid."""
    a, b = poly_trim(p), poly_trim(r)
    while b:
        a, b = b, poly_divmod(a, b, spec)[1]
    if not a:
        return []
    return poly_scale(a, a[-1] ** -1)


def poly_bezout(p, r, spec):
    """(u, v) with u*p + v*r = gcd(p, r), gcd monic."""
    a, b = poly_trim(p), poly_trim(r)
    ua, va = [spec.one()], []
    ub, vb = [], [spec.one()]
    while b:
        q, rem = poly_divmod(a, b, spec)
        a, b = b, rem
        ua, ub = ub, poly_add(ua, poly_scale(poly_mul(q, ub, spec), spec.rational(-1)), spec)
        va, vb = vb, poly_add(va, poly_scale(poly_mul(q, vb, spec), spec.rational(-1)), spec)
    if not a:
        return [], []
    inv = a[-1] ** -1
    return poly_scale(ua, inv), poly_scale(va, inv)


def poly_derivative(p, spec):
    return poly_trim([p[i] * i for i in range(1, len(p))])


def poly_eval_matrix(p, m: Mat) -> Mat:
    out = Mat.zeros(m.spec, m.nrows)
    power = Mat.identity(m.spec, m.nrows)
    for i, coef in enumerate(p):
        if i:
            power = power * m
        if not coef.is_zero():
            out = out + power.scale(coef)
    return out


def minimal_polynomial(m: Mat):
    """Monic minimal polynomial of a square matrix, by Krylov on powers."""
    if not m.is_square():
        raise ValueError("minimal polynomial of a non-square matrix")
    spec = m.spec
    n = m.nrows
    flat_dim = n * n
    power = Mat.identity(spec, n)
    flats = []
    echelon = []  # rows of (flat | combination coords)
    for k in range(n + 1):
        flat = [power[i, j] for i in range(n) for j in range(n)]
        coords = [spec.one() if i == k else spec.zero() for i in range(n + 1)]
        row = flat + coords
        # eliminate against current echelon
        for erow in echelon:
            lead = next(i for i in range(flat_dim) if not erow[i].is_zero())
            if not row[lead].is_zero():
                f = row[lead] * (erow[lead] ** -1)
                row = [a - f * b for a, b in zip(row, erow)]
        if all(row[i].is_zero() for i in range(flat_dim)):
            # dependence found: row[flat_dim:] holds the coefficients
            coeffs = row[flat_dim : flat_dim + k + 1]
            inv = coeffs[k] ** -1
            return poly_trim([c * inv for c in coeffs])
        echelon.append(row)
        flats.append(flat)
        power = power * m
    raise AssertionError("minimal polynomial must exist by degree n")


def squarefree_part(p, spec):
    """p / gcd(p, p'), monic: the radical of a nonzero polynomial."""
    g = poly_gcd(p, poly_derivative(p, spec), spec)
    quo, rem = poly_divmod(p, g, spec)
    assert not rem
    return poly_scale(quo, quo[-1] ** -1)


def is_semisimple_matrix(m: Mat) -> bool:
    """Squarefree minimal polynomial test."""
    p = minimal_polynomial(m)
    g = poly_gcd(p, poly_derivative(p, m.spec), m.spec)
    return poly_deg(g) == 0


def semisimple_part(m: Mat) -> Mat:
    """The semisimple factor of the multiplicative Jordan decomposition.

    Newton iteration on the squarefree part of the minimal polynomial;
    stays inside the commutative algebra K[m], no factorization needed.
    """
    spec = m.spec
    p = minimal_polynomial(m)
    g = squarefree_part(p, spec)
    gm = poly_eval_matrix(g, m)
    if gm.is_zero():
        return m
    _, v = poly_bezout(g, poly_derivative(g, spec), spec)
    s = m
    for _ in range(m.nrows.bit_length() + 2):
        gs = poly_eval_matrix(g, s)
        if gs.is_zero():
            return s
        s = s - poly_eval_matrix(v, s) * gs
    raise AssertionError("semisimple-part iteration failed to terminate")

"""Exact arithmetic in the coefficient field K = Q(zeta_N)(c), c**2 = q.

K stands in for an algebraically closed coefficient field at desk scale:
large enough to hold the roots of unity and half-integral powers of q that
parameters and their twists need, small enough for exact canonical
arithmetic.  Elements are stored on the basis {z^i, c*z^i : 0 <= i < m},
m = phi(N), as integer numerators over one denominator.

When q is a perfect square, c is folded to the rational sqrt(q) and the
spec is flagged `c_rational`; the automorphism c -> -c is then unavailable.
When sqrt(q) lies in Q(zeta_N) without being rational (conductor test),
construction is rejected: c**2 - q would be reducible and K not a field.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from ._backend import kernel


class FieldError(ValueError):
    """Invalid field specification."""


class ScalarSyntaxError(ValueError):
    """Parse failure; `pos` is the 0-based offset in the input text."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first."""
    from sympy import Poly, cyclotomic_poly
    from sympy.abc import x

    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(n, x), x).all_coeffs()))


def _squarefree_decomposition(q: int) -> tuple[int, int]:
    """Write q = s*s*d with d squarefree; returns (s, d)."""
    from sympy import factorint

    s, d = 1, 1
    for p, e in factorint(q).items():
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d


class FieldSpec:
    """The coefficient field Q(zeta_N)[c]/(c**2 - q).

    Carries the reduction data shared by all its scalars: the cyclotomic
    polynomial, power tables for z, and the kernel reduction rows.
    """

    __slots__ = (
        "N",
        "q",
        "degree",
        "c_rational",
        "c_root",
        "_red",
        "_zpow",
        "_hash",
    )

    def __init__(self, N: int, q: int):
        if not isinstance(N, int) or N < 1:
            raise FieldError(f"cyclotomic order must be a positive integer, got {N!r}")
        if not isinstance(q, int) or q < 2:
            raise FieldError(f"residue cardinality must be an integer >= 2, got {q!r}")
        self.N = N
        self.q = q

        cyclo = _cyclotomic_coeffs(N)
        m = len(cyclo) - 1
        self.degree = m

        s, d = _squarefree_decomposition(q)
        if d == 1:
            self.c_rational = True
            self.c_root = s
        else:
            conductor = d if d % 4 == 1 else 4 * d
            if N % conductor == 0:
                raise FieldError(
                    f"sqrt({q}) already lies in Q(zeta_{N}) "
                    f"(conductor {conductor} divides {N}); c**2 - q is reducible"
                )
            self.c_rational = False
            self.c_root = 0

        # z^j on the power basis for 0 <= j < N, by synthetic division.
        zpow = []
        v = [0] * m
        v[0] = 1
        for _ in range(N):
            zpow.append(tuple(v))
            top = v[m - 1]
            v = [0] + v[:-1]
            if top:
                for k in range(m):
                    v[k] -= top * cyclo[k]
        self._zpow = tuple(zpow)
        # Reduction rows for exponents m .. 2m-2 (z^N = 1 folds them back).
        self._red = tuple(self._zpow[e % N] for e in range(m, 2 * m - 1))
        self._hash = hash((N, q))

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.N == other.N and self.q == other.q

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FieldSpec(N={self.N}, q={self.q})"

    # -- element constructors ------------------------------------------

    def _make(self, nums, den) -> Scalar:
        return Scalar(self, *kernel.normalized(list(nums), den))

    def scalar(self, coords) -> Scalar:
        """Element from 2*m rational coordinates on {z^i, c*z^i}."""
        m = self.degree
        coords = [Fraction(v) for v in coords]
        if len(coords) != 2 * m:
            raise ValueError(f"expected {2 * m} coordinates, got {len(coords)}")
        if self.c_rational:
            # Fold the c-slots: c is the rational c_root here.
            coords = [
                coords[i] + self.c_root * coords[m + i] for i in range(m)
            ] + [Fraction(0)] * m
        den = 1
        for v in coords:
            den = den * v.denominator // gcd(den, v.denominator)
        nums = [int(v * den) for v in coords]
        return self._make(nums, den)

    def rational(self, value) -> Scalar:
        f = Fraction(value)
        nums = [0] * (2 * self.degree)
        nums[0] = f.numerator
        return self._make(nums, f.denominator)

    def zero(self) -> Scalar:
        return self.rational(0)

    def one(self) -> Scalar:
        return self.rational(1)

    def zeta(self, k: int = 1) -> Scalar:
        """z^k, exponent reduced mod N."""
        nums = list(self._zpow[k % self.N]) + [0] * self.degree
        return self._make(nums, 1)

    def c(self) -> Scalar:
        """A fixed square root of q: the generator c (rational if flagged)."""
        if self.c_rational:
            return self.rational(self.c_root)
        nums = [0] * (2 * self.degree)
        nums[self.degree] = 1
        return self._make(nums, 1)

    def c_power(self, k: int) -> Scalar:
        """c^k for any integer k, using c**2 = q."""
        half = self.c() if k % 2 else self.one()
        return self.rational(Fraction(self.q) ** (k // 2)) * half


class Scalar:
    """Immutable element of a FieldSpec's field; hashable, exact."""

    __slots__ = ("spec", "nums", "den")

    def __init__(self, spec: FieldSpec, nums: tuple, den: int):
        self.spec = spec
        self.nums = nums
        self.den = den

    # -- views ----------------------------------------------------------

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.nums)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.nums)

    def is_rational(self) -> bool:
        return all(v == 0 for v in self.nums[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.spec != self.spec:
                raise ValueError("scalars from different field specs")
            return other
        if isinstance(other, (int, Fraction)):
            return self.spec.rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.spec, *kernel.vec_add(self.nums, self.den, o.nums, o.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.spec, tuple(-v for v in self.nums), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return Scalar(
                self.spec,
                *kernel.vec_scale(self.nums, self.den, f.numerator, f.denominator),
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        sp = self.spec
        return Scalar(
            sp,
            *kernel.scalar_mul(
                self.nums, self.den, o.nums, o.den, sp.degree, sp.q, sp._red
            ),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * invert(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * invert(self)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else invert(self)
        n = abs(exponent)
        out = self.spec.one()
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.spec.rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.den == other.den
            and self.nums == other.nums
        )

    def __hash__(self):
        return hash((self.spec, self.nums, self.den))

    def __str__(self):
        return render_scalar(self)

    def __repr__(self):
        return f"<{render_scalar(self)}>"

    def conj_c(self) -> Scalar:
        return conjugate_c(self)


def conjugate_c(x: Scalar) -> Scalar:
    """The field automorphism fixing Q(zeta_N) and sending c to -c."""
    if x.spec.c_rational:
        raise FieldError(
            "c -> -c is unavailable: sqrt(q) is rational for this field spec"
        )
    m = x.spec.degree
    return Scalar(x.spec, x.nums[:m] + tuple(-v for v in x.nums[m:]), x.den)


def invert(x: Scalar) -> Scalar:
    """Multiplicative inverse; solves y*x = 1 on the basis."""
    if x.is_zero():
        raise ZeroDivisionError("inverse of zero scalar")
    if x.is_rational():
        f = Fraction(x.nums[0], x.den)
        return x.spec.rational(1 / f)
    spec = x.spec
    m = spec.degree
    dim = m if spec.c_rational else 2 * m
    # Columns: x * basis_j in coordinates (c-slots are identically zero
    # for c_rational specs, where the field is just Q(zeta_N)).
    cols = []
    for j in range(dim):
        nums = [0] * (2 * m)
        nums[j] = 1
        prod = x * Scalar(spec, tuple(nums), 1)
        cols.append([Fraction(v, prod.den) for v in prod.nums[:dim]])
    aug = [[cols[j][i] for j in range(dim)] + [Fraction(1 if i == 0 else 0)]
           for i in range(dim)]
    sol = _solve_square(aug, dim)
    if sol is None:
        raise ZeroDivisionError(f"{x} is not invertible")
    coords = sol + [Fraction(0)] * (2 * m - dim)
    return spec.scalar(coords)


def _solve_square(aug, n):
    """Gaussian elimination on an n x (n+1) Fraction matrix; None if singular."""
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


# -- parsing -------------------------------------------------------------
#
# expr     := term (("+"|"-") term)*
# term     := factor ("*" factor)*
# factor   := rational | "z" ["^" int] | "c" | "(" expr ")" | "-" factor
# rational := int ["/" posint]
# Whitespace is insignificant.


class _Parser:
    def __init__(self, text: str, spec: FieldSpec):
        self.text = text
        self.spec = spec
        self.pos = 0

    def error(self, message: str):
        raise ScalarSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            self.error(f"expected {ch!r}")

    def integer(self, signed: bool = False) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def expr(self) -> Scalar:
        value = self.term()
        while True:
            if self.take("+"):
                value = value + self.term()
            elif self.take("-"):
                value = value - self.term()
            else:
                return value

    def term(self) -> Scalar:
        value = self.factor()
        while self.take("*"):
            value = value * self.factor()
        return value

    def factor(self) -> Scalar:
        ch = self.peek()
        if ch == "-":
            self.pos += 1
            return -self.factor()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.expect(")")
            return value
        if ch == "z":
            self.pos += 1
            k = 1
            if self.take("^"):
                k = self.integer(signed=True)
            return self.spec.zeta(k)
        if ch == "c":
            self.pos += 1
            return self.spec.c()
        if ch.isdigit():
            num = self.integer()
            if self.take("/"):
                at = self.pos
                den = self.integer()
                if den == 0:
                    self.pos = at
                    self.error("division by zero")
                return self.spec.rational(Fraction(num, den))
            return self.spec.rational(num)
        self.error("expected a rational, 'z', 'c', '(' or '-'")


def parse_scalar(text: str, spec: FieldSpec) -> Scalar:
    """Parse a field element; raises ScalarSyntaxError with a position."""
    p = _Parser(text, spec)
    value = p.expr()
    p.skip_ws()
    if p.pos != len(text):
        p.error("trailing input")
    return value


def render_scalar(x: Scalar) -> str:
    """Canonical rendering: basis terms in order, parseable back."""
    m = x.spec.degree
    coords = x.coords
    parts = []
    for i, coef in enumerate(coords):
        if coef == 0:
            continue
        if i < m:
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
        else:
            j = i - m
            mono = "c" if j == 0 else ("c*z" if j == 1 else f"c*z^{j}")
        mag = abs(coef)
        num = str(mag) if mag.denominator != 1 else str(mag.numerator)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{num}*{mono}"
        else:
            body = num
        parts.append(("-" if coef < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out

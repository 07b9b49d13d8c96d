"""Functorial representation expressions of the dual group and their exact
isotypic decomposition by highest weight.

Expression trees are built from Std, duals, direct sums, tensor products,
Sym^k / Alt^k, determinant powers, and twists by characters of the Weil
model (an unramified value at Frobenius, or a character of the finite
inertia part).  Evaluation is on the canonical monomial basis of the tree,
so the diagonal torus acts diagonally and weights are pure bookkeeping.

Decomposition is supported for GL_n and torus duals: highest-weight vectors
are the joint kernel of the simple raising operators inside each weight
space, and each isotypic piece is the closure of its highest-weight vectors
under the lowering operators.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .linalg import Mat, span_rref
from .rootdata import BasedRootDatum, dual, two_rho
from .scalars import FieldSpec, Scalar


class RepError(ValueError):
    pass


class RepExpr:
    """Base class; nodes are frozen dataclasses and hashable."""

    def __matmul__(self, other):
        return Tensor(self, other)

    def __add__(self, other):
        return Sum(self, other)


@dataclass(frozen=True)
class Std(RepExpr):
    pass


@dataclass(frozen=True)
class Dual(RepExpr):
    arg: RepExpr


@dataclass(frozen=True)
class Sum(RepExpr):
    left: RepExpr
    right: RepExpr


@dataclass(frozen=True)
class Tensor(RepExpr):
    left: RepExpr
    right: RepExpr


@dataclass(frozen=True)
class Sym(RepExpr):
    k: int
    arg: RepExpr


@dataclass(frozen=True)
class Alt(RepExpr):
    k: int
    arg: RepExpr


@dataclass(frozen=True)
class DetPow(RepExpr):
    k: int


@dataclass(frozen=True)
class UnramTwist(RepExpr):
    """Twist by the unramified character sending Frobenius to chi_sigma."""

    arg: RepExpr
    chi_sigma: Scalar


@dataclass(frozen=True)
class FiniteTwist(RepExpr):
    """Twist by a character of the finite inertia part, one value per
    inertia generator."""

    arg: RepExpr
    chi: tuple[Scalar, ...]


STD = Std()


def dim(r: RepExpr, n: int) -> int:
    if isinstance(r, Std):
        return n
    if isinstance(r, DetPow):
        return 1
    if isinstance(r, Dual):
        return dim(r.arg, n)
    if isinstance(r, Sum):
        return dim(r.left, n) + dim(r.right, n)
    if isinstance(r, Tensor):
        return dim(r.left, n) * dim(r.right, n)
    if isinstance(r, Sym):
        d = dim(r.arg, n)
        return len(list(combinations_with_replacement(range(d), r.k)))
    if isinstance(r, Alt):
        d = dim(r.arg, n)
        if r.k > d:
            raise RepError(f"Alt^{r.k} of a {d}-dimensional space")
        return len(list(combinations(range(d), r.k)))
    if isinstance(r, (UnramTwist, FiniteTwist)):
        return dim(r.arg, n)
    raise RepError(f"unknown expression node {r!r}")


def _sym_basis(d: int, k: int):
    return list(combinations_with_replacement(range(d), k))


def _alt_basis(d: int, k: int):
    return list(combinations(range(d), k))


def _sym_matrix(m: Mat, k: int) -> Mat:
    spec = m.spec
    d = m.nrows
    basis = _sym_basis(d, k)
    index = {b: i for i, b in enumerate(basis)}
    cols = []
    for J in basis:
        # expand prod_t (m e_{j_t}) in the symmetric algebra
        terms = {(): spec.one()}
        for j in J:
            nxt: dict = {}
            for mono, coef in terms.items():
                for i in range(d):
                    mij = m[i, j]
                    if mij.is_zero():
                        continue
                    key = tuple(sorted(mono + (i,)))
                    if key in nxt:
                        nxt[key] = nxt[key] + coef * mij
                    else:
                        nxt[key] = coef * mij
            terms = nxt
        col = [spec.zero()] * len(basis)
        for mono, coef in terms.items():
            col[index[mono]] = coef
        cols.append(col)
    return Mat(spec, list(zip(*cols)))


def _alt_matrix(m: Mat, k: int) -> Mat:
    spec = m.spec
    d = m.nrows
    basis = _alt_basis(d, k)
    rows = []
    for I in basis:
        row = []
        for J in basis:
            sub = Mat(spec, [[m[i, j] for j in J] for i in I])
            row.append(sub.det() if k else spec.one())
        rows.append(row)
    return Mat(spec, rows)


def _sym_lie(x: Mat, k: int) -> Mat:
    spec = x.spec
    d = x.nrows
    basis = _sym_basis(d, k)
    index = {b: i for i, b in enumerate(basis)}
    cols = []
    for J in basis:
        col = [spec.zero()] * len(basis)
        for t, j in enumerate(J):
            for i in range(d):
                xij = x[i, j]
                if xij.is_zero():
                    continue
                key = tuple(sorted(J[:t] + (i,) + J[t + 1 :]))
                col[index[key]] = col[index[key]] + xij
        cols.append(col)
    return Mat(spec, list(zip(*cols)))


def _alt_lie(x: Mat, k: int) -> Mat:
    spec = x.spec
    d = x.nrows
    basis = _alt_basis(d, k)
    index = {b: i for i, b in enumerate(basis)}
    cols = []
    for J in basis:
        col = [spec.zero()] * len(basis)
        for t, j in enumerate(J):
            for i in range(d):
                xij = x[i, j]
                if xij.is_zero():
                    continue
                if i == j:
                    col[index[J]] = col[index[J]] + xij
                    continue
                if i in J:
                    continue
                rest = J[:t] + J[t + 1 :]
                merged = tuple(sorted(rest + (i,)))
                pos = merged.index(i)
                sign = (-1) ** (pos - t) if pos >= t else (-1) ** (t - pos)
                entry = xij if sign == 1 else -xij
                col[index[merged]] = col[index[merged]] + entry
        cols.append(col)
    return Mat(spec, list(zip(*cols)))


def evaluate(r: RepExpr, g: Mat) -> Mat:
    """The matrix of r(g) on the canonical monomial basis (group part
    only; Weil-character twists contribute nothing on the dual group)."""
    if not g.is_square():
        raise RepError("evaluation needs a square matrix")
    if isinstance(r, Std):
        return g
    if isinstance(r, DetPow):
        d = g.det()
        if r.k < 0 and d.is_zero():
            raise RepError("negative determinant power of a singular matrix")
        return Mat(g.spec, [[d ** r.k]])
    if isinstance(r, Dual):
        return evaluate(r.arg, g).inverse().transpose()
    if isinstance(r, Sum):
        return Mat.block_diag(
            g.spec, [evaluate(r.left, g), evaluate(r.right, g)]
        )
    if isinstance(r, Tensor):
        return evaluate(r.left, g).kron(evaluate(r.right, g))
    if isinstance(r, Sym):
        return _sym_matrix(evaluate(r.arg, g), r.k)
    if isinstance(r, Alt):
        arg = evaluate(r.arg, g)
        if r.k > arg.nrows:
            raise RepError(f"Alt^{r.k} of a {arg.nrows}-dimensional space")
        return _alt_matrix(arg, r.k)
    if isinstance(r, (UnramTwist, FiniteTwist)):
        return evaluate(r.arg, g)
    raise RepError(f"unknown expression node {r!r}")


def weil_character(r: RepExpr, frob_power: int, word: tuple[int, ...],
                   spec: FieldSpec) -> Scalar:
    """Product of the twist characters of r at the Weil element with the
    given Frobenius power and inertia word (tame part acts trivially)."""
    if isinstance(r, (Std, DetPow)):
        return spec.one()
    if isinstance(r, (Sum, Tensor)):
        raise RepError(
            "twist characters of composite nodes act per factor; "
            "use evaluate_weil for full values"
        )
    if isinstance(r, UnramTwist):
        return weil_character(r.arg, frob_power, word, spec) * (
            r.chi_sigma ** frob_power
        )
    if isinstance(r, FiniteTwist):
        out = weil_character(r.arg, frob_power, word, spec)
        for letter in word:
            value = r.chi[abs(letter) - 1]
            out = out * (value if letter > 0 else value ** -1)
        return out
    if isinstance(r, Dual):
        return weil_character(r.arg, frob_power, word, spec) ** -1
    raise RepError(f"unknown expression node {r!r}")


def evaluate_weil(r: RepExpr, g: Mat, frob_power: int,
                  word: tuple[int, ...]) -> Mat:
    """r evaluated at a Weil element whose dual-group part is g: the group
    evaluation with each twist character applied along the tree."""
    spec = g.spec
    if isinstance(r, (Std, DetPow)):
        return evaluate(r, g)
    if isinstance(r, Dual):
        return evaluate_weil(r.arg, g, frob_power, word).inverse().transpose()
    if isinstance(r, Sum):
        return Mat.block_diag(
            spec,
            [
                evaluate_weil(r.left, g, frob_power, word),
                evaluate_weil(r.right, g, frob_power, word),
            ],
        )
    if isinstance(r, Tensor):
        return evaluate_weil(r.left, g, frob_power, word).kron(
            evaluate_weil(r.right, g, frob_power, word)
        )
    if isinstance(r, Sym):
        return _sym_matrix(evaluate_weil(r.arg, g, frob_power, word), r.k)
    if isinstance(r, Alt):
        return _alt_matrix(evaluate_weil(r.arg, g, frob_power, word), r.k)
    if isinstance(r, UnramTwist):
        inner = evaluate_weil(r.arg, g, frob_power, word)
        return inner.scale(r.chi_sigma ** frob_power)
    if isinstance(r, FiniteTwist):
        inner = evaluate_weil(r.arg, g, frob_power, word)
        factor = spec.one()
        for letter in word:
            value = r.chi[abs(letter) - 1]
            factor = factor * (value if letter > 0 else value ** -1)
        return inner.scale(factor)
    raise RepError(f"unknown expression node {r!r}")


def lie_action(r: RepExpr, x: Mat) -> Mat:
    """The derived representation of gl_n on the expression's basis."""
    spec = x.spec
    if isinstance(r, Std):
        return x
    if isinstance(r, DetPow):
        return Mat(spec, [[x.trace() * spec.rational(r.k)]])
    if isinstance(r, Dual):
        return -lie_action(r.arg, x).transpose()
    if isinstance(r, Sum):
        return Mat.block_diag(spec, [lie_action(r.left, x), lie_action(r.right, x)])
    if isinstance(r, Tensor):
        a = lie_action(r.left, x)
        b = lie_action(r.right, x)
        ia = Mat.identity(spec, a.nrows)
        ib = Mat.identity(spec, b.nrows)
        return a.kron(ib) + ia.kron(b)
    if isinstance(r, Sym):
        return _sym_lie(lie_action(r.arg, x), r.k)
    if isinstance(r, Alt):
        return _alt_lie(lie_action(r.arg, x), r.k)
    if isinstance(r, (UnramTwist, FiniteTwist)):
        return lie_action(r.arg, x)
    raise RepError(f"unknown expression node {r!r}")


def weights(r: RepExpr, n: int) -> list[tuple[int, ...]]:
    """Weights of the diagonal torus on the canonical basis, basis-aligned."""
    if isinstance(r, Std):
        out = []
        for i in range(n):
            w = [0] * n
            w[i] = 1
            out.append(tuple(w))
        return out
    if isinstance(r, DetPow):
        return [(r.k,) * n]
    if isinstance(r, Dual):
        return [tuple(-v for v in w) for w in weights(r.arg, n)]
    if isinstance(r, Sum):
        return weights(r.left, n) + weights(r.right, n)
    if isinstance(r, Tensor):
        right = weights(r.right, n)
        return [
            tuple(a + b for a, b in zip(wl, wr))
            for wl in weights(r.left, n)
            for wr in right
        ]
    if isinstance(r, Sym):
        inner = weights(r.arg, n)
        return [
            tuple(sum(inner[j][i] for j in J) for i in range(n))
            for J in _sym_basis(len(inner), r.k)
        ]
    if isinstance(r, Alt):
        inner = weights(r.arg, n)
        return [
            tuple(sum(inner[j][i] for j in J) for i in range(n))
            for J in _alt_basis(len(inner), r.k)
        ]
    if isinstance(r, (UnramTwist, FiniteTwist)):
        return weights(r.arg, n)
    raise RepError(f"unknown expression node {r!r}")


# -- isotypic decomposition ---------------------------------------------------


@dataclass(frozen=True)
class IsotypicPiece:
    highest_weight: tuple[int, ...]
    basis: tuple[tuple[Scalar, ...], ...]
    multiplicity: int

    @property
    def dimension(self) -> int:
        return len(self.basis)


_DECOMP_CACHE: dict = {}


def _supported_datum(datum: BasedRootDatum) -> str:
    name = datum.name or ""
    if name.startswith("GL("):
        return "gl"
    if name.startswith("Torus("):
        return "torus"
    raise RepError(
        f"isotypic decomposition supports GL_n and torus duals, not {name!r}"
    )


def isotypic_decomposition(
    r: RepExpr, datum: BasedRootDatum, spec: FieldSpec
) -> tuple[IsotypicPiece, ...]:
    """Split the expression's space into its highest-weight isotypic parts."""
    key = (r, datum, spec)
    if key in _DECOMP_CACHE:
        return _DECOMP_CACHE[key]
    kind = _supported_datum(datum)
    n = datum.rank
    wts = weights(r, n)
    total = dim(r, n)
    assert len(wts) == total

    by_weight: dict[tuple[int, ...], list[int]] = {}
    for i, w in enumerate(wts):
        by_weight.setdefault(w, []).append(i)

    pieces = []
    if kind == "torus":
        for w in sorted(by_weight, reverse=True):
            idxs = by_weight[w]
            basis = []
            for i in idxs:
                v = [spec.zero()] * total
                v[i] = spec.one()
                basis.append(tuple(v))
            pieces.append(IsotypicPiece(w, tuple(basis), len(idxs)))
    else:
        raising = [
            lie_action(r, Mat.elementary(spec, n, i, i + 1))
            for i in range(n - 1)
        ]
        lowering = [
            lie_action(r, Mat.elementary(spec, n, i + 1, i))
            for i in range(n - 1)
        ]
        for w in sorted(by_weight, reverse=True):
            idxs = by_weight[w]
            # joint kernel of the raising operators inside this weight space
            rows = []
            for op in raising:
                for out_i in range(total):
                    rows.append([op[out_i, j] for j in idxs])
            hw_coeffs = (
                Mat(spec, rows).nullspace()
                if rows
                else [
                    tuple(
                        spec.one() if a == b else spec.zero()
                        for b in range(len(idxs))
                    )
                    for a in range(len(idxs))
                ]
            )
            if not hw_coeffs:
                continue
            if any(w[i] < w[i + 1] for i in range(n - 1)):
                raise AssertionError(
                    f"highest-weight vector with non-dominant weight {w}"
                )
            hw_vectors = []
            for coeffs in hw_coeffs:
                v = [spec.zero()] * total
                for c, j in zip(coeffs, idxs):
                    v[j] = c
                hw_vectors.append(tuple(v))
            span = span_rref(hw_vectors, spec)
            while True:
                grown = list(span)
                for op in lowering:
                    for v in span:
                        grown.append(tuple(op.apply(v)))
                grown = span_rref(grown, spec)
                if len(grown) == len(span):
                    break
                span = grown
            pieces.append(IsotypicPiece(w, tuple(span), len(hw_vectors)))

    if sum(p.dimension for p in pieces) != total:
        raise AssertionError("isotypic pieces do not fill the space")
    all_vecs = [v for p in pieces for v in p.basis]
    if len(span_rref(all_vecs, spec)) != total:
        raise AssertionError("isotypic pieces are not independent")
    out = tuple(pieces)
    _DECOMP_CACHE[key] = out
    return out


def piece_d_degree(piece: IsotypicPiece, datum: BasedRootDatum) -> int:
    """<2*rho_G, mu> of the piece's highest weight, read as a cocharacter
    class of the group whose dual the datum is."""
    rho2 = two_rho(dual(datum))
    return sum(a * b for a, b in zip(rho2, piece.highest_weight))


# -- the CLI mini-grammar -----------------------------------------------------
#
# rep  := term (("⊕" | "+") term)*
# term := atom (("⊗" | "*") atom)*
# atom := "Std" | "det^" int | "Sym^" int "(" rep ")" | "Alt^" int "(" rep ")"
#         | "Dual(" rep ")" | "(" rep ")"


class _RepParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise RepError(f"{message} (at position {self.pos})")

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def take(self, token: str) -> bool:
        self.skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start:self.pos].lstrip("+-"):
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def rep(self) -> RepExpr:
        value = self.term()
        while self.take("⊕") or self.take("+"):
            value = Sum(value, self.term())
        return value

    def term(self) -> RepExpr:
        value = self.atom()
        while self.take("⊗") or self.take("*"):
            value = Tensor(value, self.atom())
        return value

    def atom(self) -> RepExpr:
        if self.take("Std"):
            return STD
        if self.take("det^"):
            return DetPow(self.integer())
        if self.take("Sym^"):
            k = self.integer()
            if not self.take("("):
                self.error("expected '('")
            inner = self.rep()
            if not self.take(")"):
                self.error("expected ')'")
            return Sym(k, inner)
        if self.take("Alt^"):
            k = self.integer()
            if not self.take("("):
                self.error("expected '('")
            inner = self.rep()
            if not self.take(")"):
                self.error("expected ')'")
            return Alt(k, inner)
        if self.take("Dual("):
            inner = self.rep()
            if not self.take(")"):
                self.error("expected ')'")
            return Dual(inner)
        if self.take("("):
            inner = self.rep()
            if not self.take(")"):
                self.error("expected ')'")
            return inner
        self.error("expected a representation atom")


def parse_rep(text: str) -> RepExpr:
    p = _RepParser(text)
    value = p.rep()
    p.skip()
    if p.pos != len(text):
        p.error("trailing input")
    return value


def render_rep(r: RepExpr) -> str:
    if isinstance(r, Std):
        return "Std"
    if isinstance(r, DetPow):
        return f"det^{r.k}"
    if isinstance(r, Dual):
        return f"Dual({render_rep(r.arg)})"
    if isinstance(r, Sum):
        return f"{render_rep(r.left)} ⊕ {render_rep(r.right)}"
    if isinstance(r, Tensor):
        left = render_rep(r.left)
        right = render_rep(r.right)
        if isinstance(r.left, Sum):
            left = f"({left})"
        if isinstance(r.right, Sum):
            right = f"({right})"
        return f"{left} ⊗ {right}"
    if isinstance(r, Sym):
        return f"Sym^{r.k}({render_rep(r.arg)})"
    if isinstance(r, Alt):
        return f"Alt^{r.k}({render_rep(r.arg)})"
    if isinstance(r, UnramTwist):
        return f"UnramTwist({render_rep(r.arg)}, {r.chi_sigma})"
    if isinstance(r, FiniteTwist):
        values = ", ".join(str(v) for v in r.chi)
        return f"FiniteTwist({render_rep(r.arg)}, [{values}])"
    raise RepError(f"unknown expression node {r!r}")

"""Matrix-level parameters: Weil-Deligne pairs, their homomorphism
evaluations, SL2-type data, conversions between the three formats,
equivalence and centralizers, Frobenius semisimplification, and the
change-of-choices conjugators (Frobenius lift rebasing, tame rescaling).

One data record serves both the Weil-Deligne and the l-adic formats; the
two evaluation semantics (`eval_wd`, `eval_ladic`) differ only in how the
tame coordinate feeds the monodromy exponential.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .linalg import (
    Mat,
    exp_nilpotent,
    is_nilpotent,
    is_semisimple_matrix,
    log_unipotent,
    minimal_polynomial,
    semisimple_part,
)
from .rootdata import LGroupSpec
from .scalars import FieldSpec, Scalar
from .weil import INERTIA_BOUND, WeilElement, WeilGroup


class ParamError(ValueError):
    pass


@dataclass(frozen=True)
class ParamData:
    """Frobenius matrix, finite inertia images, nilpotent monodromy.

    `q` is the effective residue cardinality (field.q unless the
    parameter was restricted along an unramified extension).
    """

    lgroup: LGroupSpec
    field: FieldSpec
    frobenius: Mat
    inertia: tuple[Mat, ...]
    monodromy: Mat
    q: int | None = None
    inertia_bound: int = INERTIA_BOUND

    def __post_init__(self):
        if self.q is None:
            object.__setattr__(self, "q", self.field.q)

    @property
    def dim(self) -> int:
        return self.frobenius.nrows

    def weil_group(self) -> WeilGroup:
        cached = getattr(self, "_wg", None)
        if cached is None:
            cached = WeilGroup(
                self.field, self.q, self.frobenius, self.inertia, self.inertia_bound
            )
            object.__setattr__(self, "_wg", cached)
        return cached

    def q_scalar(self, k: int = 1) -> Scalar:
        return self.field.rational(Fraction(self.q) ** k)


@dataclass(frozen=True)
class SL2Param:
    """An sl2 triple (e, h, f) with a commuting smooth part (frob0, inertia)."""

    lgroup: LGroupSpec
    field: FieldSpec
    e: Mat
    h: Mat
    f: Mat
    frob0: Mat
    inertia: tuple[Mat, ...]
    q: int | None = None
    inertia_bound: int = INERTIA_BOUND

    def __post_init__(self):
        if self.q is None:
            object.__setattr__(self, "q", self.field.q)

    @property
    def dim(self) -> int:
        return self.e.nrows


@dataclass
class CheckReport:
    checks: list[tuple[str, bool, str]]

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)

    def failures(self):
        return [(name, detail) for name, passed, detail in self.checks if not passed]

    def as_dict(self):
        return {
            "ok": self.ok,
            "checks": [
                {"name": name, "ok": passed, "detail": detail}
                for name, passed, detail in self.checks
            ],
        }


def _realization_dim(lg: LGroupSpec) -> int:
    return lg.datum.rank


def _is_sl_dual(lg: LGroupSpec) -> bool:
    return bool(lg.datum.name and lg.datum.name.startswith("SL("))


def _is_supported_dual(lg: LGroupSpec) -> bool:
    name = lg.datum.name or ""
    return name.startswith(("GL(", "SL(", "Torus("))


def validate(p: ParamData) -> CheckReport:
    """All structural invariants, reported check by check."""
    checks = []
    n = _realization_dim(p.lgroup)
    shapes = (
        p.frobenius.is_square()
        and p.frobenius.nrows == n
        and p.monodromy.nrows == n
        and p.monodromy.is_square()
        and all(g.is_square() and g.nrows == n for g in p.inertia)
    )
    checks.append(("shapes", shapes, f"all matrices {n}x{n}"))
    if not shapes:
        return CheckReport(checks)

    checks.append(("frobenius_invertible", p.frobenius.is_invertible(), ""))

    wg = p.weil_group()
    checks.append(
        (
            "inertia_finite",
            wg.closure_complete,
            f"closure size {len(wg.words)} (bound {p.inertia_bound})",
        )
    )
    if wg.closure_complete:
        checks.append(
            ("frobenius_normalizes_inertia", wg.frobenius_normalizes(), "")
        )

    checks.append(("monodromy_nilpotent", is_nilpotent(p.monodromy), ""))

    qinv = p.field.rational(Fraction(1, p.q))
    ad_ok = p.frobenius * p.monodromy == p.monodromy.scale(qinv) * p.frobenius
    checks.append(("ad_frobenius", ad_ok, "Phi N Phi^-1 = q^-1 N"))

    inert_ok = all(g * p.monodromy == p.monodromy * g for g in p.inertia)
    checks.append(("ad_inertia", inert_ok, "inertia commutes with N"))

    if _is_sl_dual(p.lgroup):
        dets = [p.frobenius.det()] + [g.det() for g in p.inertia]
        checks.append(
            ("det_one", all(d == p.field.one() for d in dets), "values in SL")
        )
    return CheckReport(checks)


def require_valid(p: ParamData) -> None:
    report = validate(p)
    if not report.ok:
        raise ParamError(f"invalid parameter: {report.failures()}")


# -- evaluation ---------------------------------------------------------------


def eval_smooth(p: ParamData, w: WeilElement) -> Mat:
    return p.weil_group().smooth_matrix(w)


def eval_wd(p: ParamData, a: Scalar, w: WeilElement) -> Mat:
    """exp(a N) * rho(word) * Phi^m: Weil-Deligne-type evaluation."""
    return exp_nilpotent(p.monodromy.scale(a)) * eval_smooth(p, w)


def eval_ladic(p: ParamData, w: WeilElement) -> Mat:
    """exp(s N) * rho(word) * Phi^m for w = t^s * word * sigma^m."""
    s = p.field.rational(w.tame)
    return exp_nilpotent(p.monodromy.scale(s)) * eval_smooth(p, w)


def frobenius_semisimple(p: ParamData) -> bool:
    return is_semisimple_matrix(p.frobenius)


def frobenius_semisimplification(p: ParamData) -> ParamData:
    """Replace Phi by its semisimple factor; a valid parameter again.

    The semisimple factor is a polynomial in Phi, so it scales N by the
    same q^-1 on the N-eigenline and permutes the finite inertia image
    exactly as Phi does.
    """
    phi_ss = semisimple_part(p.frobenius)
    out = ParamData(
        p.lgroup, p.field, phi_ss, p.inertia, p.monodromy, p.q, p.inertia_bound
    )
    require_valid(out)
    return out


def rebase_frobenius(p: ParamData, s) -> tuple[ParamData, Mat]:
    """Re-express along the Frobenius lift sigma' = sigma * t^s.

    Returns the rebased parameter (Phi' = Phi exp(sN)) and the explicit
    conjugator exp((s/(q-1)) N), verified to intertwine the two exactly.
    """
    s = Fraction(s)
    spec = p.field
    n_scaled = p.monodromy.scale(spec.rational(s))
    phi_new = p.frobenius * exp_nilpotent(n_scaled)
    out = ParamData(
        p.lgroup, p.field, phi_new, p.inertia, p.monodromy, p.q, p.inertia_bound
    )
    g = exp_nilpotent(p.monodromy.scale(spec.rational(s / (p.q - 1))))
    gi = g.inverse()
    ok = (
        g * p.frobenius * gi == phi_new
        and all(g * r * gi == r for r in p.inertia)
        and g * p.monodromy * gi == p.monodromy
    )
    if not ok:
        raise AssertionError("rebase conjugator failed to verify")
    return out, g


# -- intertwiner machinery -----------------------------------------------------


def _vec_index(n: int, i: int, j: int) -> int:
    return i * n + j


def _intertwiner_rows(spec: FieldSpec, pairs, scale_pairs=()):
    """Rows of the linear system {X A = B X} ∪ {X A = x * B X}.

    pairs: iterable of (A, B) for X A - B X = 0.
    scale_pairs: iterable of (A, B, x) for X A - x * B X = 0.
    Unknown X is n x n, vectorized row-major.
    """
    rows = []
    all_pairs = [(a, b, None) for a, b in pairs] + [
        (a, b, x) for a, b, x in scale_pairs
    ]
    n = all_pairs[0][0].nrows
    zero = spec.zero()
    for a, b, x in all_pairs:
        for i in range(n):
            for j in range(n):
                row = [zero] * (n * n)
                # (X A)_{ij} = sum_k X_{ik} A_{kj}
                for k in range(n):
                    row[_vec_index(n, i, k)] = row[_vec_index(n, i, k)] + a[k, j]
                # -(x B X)_{ij} = -x sum_k B_{ik} X_{kj}
                for k in range(n):
                    coef = b[i, k] if x is None else b[i, k] * x
                    row[_vec_index(n, k, j)] = row[_vec_index(n, k, j)] - coef
                rows.append(row)
    return Mat(spec, rows)


def _unvec(spec: FieldSpec, v, n: int) -> Mat:
    return Mat(spec, [[v[_vec_index(n, i, j)] for j in range(n)] for i in range(n)])


def intertwiner_basis(p: ParamData, p2: ParamData) -> list[Mat]:
    """Basis of {X : X Phi = Phi' X, X rho_i = rho'_i X, X N = N' X}."""
    pairs = [(p.frobenius, p2.frobenius), (p.monodromy, p2.monodromy)]
    pairs += list(zip(p.inertia, p2.inertia))
    system = _intertwiner_rows(p.field, pairs)
    n = p.dim
    return [_unvec(p.field, v, n) for v in system.nullspace()]


def centralizer_basis(p: ParamData) -> list[Mat]:
    """Basis of the Lie centralizer of the parameter's image in gl_n."""
    return intertwiner_basis(p, p)


def _search_invertible(spec: FieldSpec, basis: list[Mat], n: int,
                       grid_budget: int = 20_000):
    """Deterministic search for an invertible point of a matrix space.

    Returns (matrix, certified_none): the matrix if found; otherwise
    certified_none says whether vanishing of the determinant on the whole
    space was certified (grid evaluation of a polynomial of degree <= n
    in each variable).
    """
    d = len(basis)
    if d == 0:
        return None, True
    for b in basis:
        if b.is_invertible():
            return b, False
    acc = basis[0]
    for b in basis[1:]:
        acc = acc + b
        if acc.is_invertible():
            return acc, False
    for k in range(2, n * d + 3):
        cand = basis[0]
        f = 1
        for b in basis[1:]:
            f *= k
            cand = cand + b.scale(f)
        if cand.is_invertible():
            return cand, False
    if (n + 1) ** d <= grid_budget:
        for coeffs in product(range(n + 1), repeat=d):
            cand = None
            for c, b in zip(coeffs, basis):
                if c:
                    term = b if c == 1 else b.scale(c)
                    cand = term if cand is None else cand + term
            if cand is not None and cand.is_invertible():
                return cand, False
        return None, True
    return None, False


def _nth_root_scalar(x: Scalar, n: int):
    """Search an n-th root of x in K among zeta^a * r * c^j; None if absent."""
    spec = x.spec
    candidates_r = []
    for j in (0, 1):
        denom = spec.c_power(j * n)
        y = x / denom
        if y.is_rational():
            f = y.as_fraction()
            if f > 0:
                num = _iroot(f.numerator, n)
                den = _iroot(f.denominator, n)
                if num is not None and den is not None:
                    candidates_r.append((Fraction(num, den), j))
            if f < 0 and n % 2 == 1:
                num = _iroot(-f.numerator, n)
                den = _iroot(f.denominator, n)
                if num is not None and den is not None:
                    candidates_r.append((Fraction(-num, den), j))
    for r, j in candidates_r:
        base = spec.rational(r) * spec.c_power(j)
        for a in range(spec.N):
            cand = spec.zeta(a) * base
            if cand ** n == x:
                return cand
    return None


def _iroot(v: int, n: int):
    if v < 0:
        return None
    r = round(v ** (1.0 / n))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**n == v:
            return cand
    return None


@dataclass
class EquivResult:
    status: str  # "equivalent" | "none" | "inconclusive" | "gl_only"
    conjugator: Mat | None = None
    note: str = ""

    def found(self) -> bool:
        return self.status in ("equivalent", "gl_only")


def equiv(p: ParamData, p2: ParamData, grid_budget: int = 20_000) -> EquivResult:
    """Conjugacy of parameters in the matrix realization of the dual group.

    Searches the linear intertwiner space for an invertible point; "none"
    is returned only when certified (zero space, or determinant vanishing
    on a spanning grid).  For SL duals a GL conjugator is corrected to
    determinant one by a central scalar when an n-th root exists in K;
    otherwise the verdict is "gl_only".
    """
    if p.dim != p2.dim or p.field != p2.field or p.lgroup != p2.lgroup:
        raise ParamError("parameters live in different ambient data")
    if len(p.inertia) != len(p2.inertia):
        return EquivResult("none", note="different inertia generator counts")
    basis = intertwiner_basis(p, p2)
    g, certified = _search_invertible(p.field, basis, p.dim, grid_budget)
    if g is None:
        if certified:
            return EquivResult("none", note=f"intertwiner space dim {len(basis)}")
        return EquivResult(
            "inconclusive",
            note=f"intertwiner space dim {len(basis)}: invertibility search exhausted",
        )
    _verify_conjugator(p, p2, g)
    if _is_sl_dual(p.lgroup):
        det = g.det()
        if det != p.field.one():
            lam = _nth_root_scalar(det ** -1, p.dim)
            if lam is None:
                return EquivResult(
                    "gl_only",
                    conjugator=g,
                    note="GL-equivalent; no det-1 correction found in K",
                )
            g = g.scale(lam)
            _verify_conjugator(p, p2, g)
    return EquivResult("equivalent", conjugator=g)


def _verify_conjugator(p: ParamData, p2: ParamData, g: Mat) -> None:
    gi = g.inverse()
    ok = (
        g * p.frobenius * gi == p2.frobenius
        and g * p.monodromy * gi == p2.monodromy
        and all(g * a * gi == b for a, b in zip(p.inertia, p2.inertia))
    )
    if not ok:
        raise AssertionError("conjugator failed to verify")


def conjugate(p: ParamData, g: Mat) -> ParamData:
    gi = g.inverse()
    return ParamData(
        p.lgroup,
        p.field,
        g * p.frobenius * gi,
        tuple(g * r * gi for r in p.inertia),
        g * p.monodromy * gi,
        p.q,
        p.inertia_bound,
    )


def rescale_tame(p: ParamData, a) -> tuple[ParamData, Mat | None]:
    """Replace N by a*N; search a conjugator fixing the smooth part.

    Solves the linear system g Phi = Phi g, g rho_i = rho_i g,
    g N = a N g and looks for an invertible point; None when the search
    budget is exhausted without one.
    """
    a_scalar = a if isinstance(a, Scalar) else p.field.rational(a)
    if a_scalar.is_zero():
        raise ParamError("tame rescaling must be by a nonzero scalar")
    out = ParamData(
        p.lgroup,
        p.field,
        p.frobenius,
        p.inertia,
        p.monodromy.scale(a_scalar),
        p.q,
        p.inertia_bound,
    )
    if p.monodromy.is_zero() or a_scalar == p.field.one():
        return out, Mat.identity(p.field, p.dim)
    pairs = [(p.frobenius, p.frobenius)] + [(r, r) for r in p.inertia]
    scale_pairs = [(p.monodromy, p.monodromy, a_scalar)]
    system = _intertwiner_rows(p.field, pairs, scale_pairs)
    basis = [_unvec(p.field, v, p.dim) for v in system.nullspace()]
    g, _ = _search_invertible(p.field, basis, p.dim)
    if g is None:
        return out, None
    gi = g.inverse()
    ok = (
        g * p.frobenius * gi == p.frobenius
        and all(g * r * gi == r for r in p.inertia)
        and g * p.monodromy * gi == out.monodromy
    )
    if not ok:
        raise AssertionError("tame-rescaling conjugator failed to verify")
    return out, g


def restrict_unramified(p: ParamData, f: int) -> ParamData:
    """Restriction along the unramified extension of degree f: Phi -> Phi^f,
    q -> q^f, inertia and N unchanged."""
    if not isinstance(f, int) or f < 1:
        raise ParamError("unramified degree must be a positive integer")
    out = ParamData(
        p.lgroup,
        p.field,
        p.frobenius ** f,
        p.inertia,
        p.monodromy,
        p.q ** f,
        p.inertia_bound,
    )
    require_valid(out)
    return out


# -- SL2-type conversions -------------------------------------------------------


def validate_sl2(sp: SL2Param) -> CheckReport:
    checks = []
    spec = sp.field
    n = sp.dim
    two = spec.rational(2)
    com = lambda x, y: x * y - y * x
    checks.append(("HE", com(sp.h, sp.e) == sp.e.scale(two), "[H,E] = 2E"))
    checks.append(("HF", com(sp.h, sp.f) == sp.f.scale(-two), "[H,F] = -2F"))
    checks.append(("EF", com(sp.e, sp.f) == sp.h, "[E,F] = H"))
    checks.append(("E_nilpotent", is_nilpotent(sp.e), ""))
    checks.append(("F_nilpotent", is_nilpotent(sp.f), ""))
    try:
        _h_eigenvalues(sp.h)
        checks.append(("H_integral", True, "integer-diagonalizable"))
    except ParamError as exc:
        checks.append(("H_integral", False, str(exc)))
    checks.append(("frob0_invertible", sp.frob0.is_invertible(), ""))
    commuting = all(
        com(m, x).is_zero()
        for m in (sp.frob0, *sp.inertia)
        for x in (sp.e, sp.h, sp.f)
    )
    checks.append(("smooth_commutes", commuting, "Frob0 and inertia centralize the triple"))
    wg = WeilGroup(spec, sp.q, sp.frob0, sp.inertia, sp.inertia_bound)
    checks.append(("inertia_finite", wg.closure_complete, f"size {len(wg.words)}"))
    if wg.closure_complete:
        checks.append(("frob0_normalizes", wg.frobenius_normalizes(), ""))
    return CheckReport(checks)


def _h_eigenvalues(h: Mat) -> list[int]:
    """Eigenvalues of an integer-diagonalizable H, by minimal polynomial."""
    from .linalg import poly_divmod, poly_trim

    spec = h.spec
    p = minimal_polynomial(h)
    n = h.nrows
    eigs = []
    rem = p
    for k in range(-n, n + 1):
        value = sum(
            (coef * spec.rational(Fraction(k) ** i) for i, coef in enumerate(rem)),
            spec.zero(),
        )
        if value.is_zero():
            quo, r = poly_divmod(rem, [spec.rational(-k), spec.one()], spec)
            if poly_trim(r):
                raise ParamError("H has a repeated or non-integer eigenvalue")
            eigs.append(k)
            rem = quo
    if len(poly_trim(rem)) != 1:
        raise ParamError("H is not diagonalizable with integer eigenvalues")
    return sorted(eigs)


def _h_projectors(h: Mat) -> dict[int, Mat]:
    """Lagrange eigenprojections of an integer-diagonalizable H."""
    spec = h.spec
    eigs = _h_eigenvalues(h)
    ident = Mat.identity(spec, h.nrows)
    projs = {}
    for k in eigs:
        proj = ident
        for j in eigs:
            if j != k:
                factor = (h - ident.scale(spec.rational(j))).scale(
                    spec.rational(Fraction(1, k - j))
                )
                proj = proj * factor
        projs[k] = proj
    return projs


def _weight_scaling(h: Mat, c: Scalar, exponent_sign: int = -1) -> Mat:
    """The image of diag(c^sign, c^-sign): c^(sign*k) on the H = k eigenspace."""
    spec = h.spec
    out = Mat.zeros(spec, h.nrows)
    for k, proj in _h_projectors(h).items():
        out = out + proj.scale(_c_int_power(c, exponent_sign * k))
    return out


def _c_int_power(c: Scalar, k: int) -> Scalar:
    return c ** k


def sl2_to_wd(sp: SL2Param, c: Scalar) -> ParamData:
    """Collapse an SL2-type parameter to a Weil-Deligne pair:
    Phi = (image of diag(c^-1, c)) * Frob0, N = E."""
    report = validate_sl2(sp)
    if not report.ok:
        raise ParamError(f"invalid SL2 parameter: {report.failures()}")
    if c * c != sp.field.rational(sp.q):
        raise ParamError("need c**2 = q for the half-weight twist")
    m = _weight_scaling(sp.h, c, exponent_sign=-1)
    out = ParamData(
        sp.lgroup,
        sp.field,
        m * sp.frob0,
        sp.inertia,
        sp.e,
        sp.q,
        sp.inertia_bound,
    )
    require_valid(out)
    return out


def _graded_commutant_basis(p: ParamData, k: int) -> list[Mat]:
    """Basis of L_k = {X : X rho_i = rho_i X, Ad(Phi) X = q^-k X}."""
    spec = p.field
    pairs = [(r, r) for r in p.inertia]
    # Ad(Phi) X = q^-k X  <=>  X Phi = q^k Phi X
    scale_pairs = [(p.frobenius, p.frobenius, spec.rational(Fraction(p.q) ** k))]
    if pairs:
        system = _intertwiner_rows(spec, pairs, scale_pairs)
    else:
        system = _intertwiner_rows(spec, [], scale_pairs)
    return [_unvec(spec, v, p.dim) for v in system.nullspace()]


def _solve_in_span(spec: FieldSpec, basis: list[Mat], target: Mat):
    """Coefficients expressing target in the span of basis, or None."""
    if not basis:
        return None if not target.is_zero() else []
    n = basis[0].nrows
    cols = [[b[i, j] for i in range(n) for j in range(n)] for b in basis]
    rhs = [target[i, j] for i in range(n) for j in range(n)]
    system = Mat(spec, [[cols[b][k] for b in range(len(basis))] for k in range(n * n)])
    return system.solve(rhs)


def wd_to_sl2(p: ParamData, c: Scalar) -> SL2Param:
    """Complete N to an sl2 triple commuting with the smooth part and split
    off the half-weight twist (inverse of `sl2_to_wd` up to equivalence).

    Implemented for GL_n and torus duals: the triple is found inside the
    graded commutant L_k = {X : [X, rho] = 0, Ad(Phi)X = q^-k X} by the
    Jacobson-Morozov linear steps.
    """
    require_valid(p)
    if not _is_supported_dual(p.lgroup):
        raise ParamError(
            f"unsupported dual group {p.lgroup.datum.name!r}: GL_n or torus only"
        )
    if not frobenius_semisimple(p):
        raise ParamError("Frobenius must be semisimple to split off the sl2 part")
    if c * c != p.field.rational(p.q):
        raise ParamError("need c**2 = q for the half-weight twist")
    spec = p.field
    n = p.dim
    zero = Mat.zeros(spec, n)
    if p.monodromy.is_zero():
        return SL2Param(
            p.lgroup, spec, zero, zero, zero, p.frobenius, p.inertia, p.q,
            p.inertia_bound,
        )

    e = p.monodromy
    com = lambda x, y: x * y - y * x
    minus_basis = _graded_commutant_basis(p, -1)
    if not minus_basis:
        raise ParamError("empty graded commutant: cannot complete the triple")
    # h = [e, y] with [h, e] = 2e, y in L_{-1}  (linear in y)
    images = [com(com(e, y), e) for y in minus_basis]
    coeffs = _solve_in_span(spec, images, e.scale(spec.rational(2)))
    if coeffs is None:
        raise ParamError("Jacobson-Morozov step has no solution in the commutant")
    y = zero
    for cf, b in zip(coeffs, minus_basis):
        if not cf.is_zero():
            y = y + b.scale(cf)
    h = com(e, y)
    f0 = y
    # correct f0 by w in ker(ad e) ∩ L_{-1}: (ad h + 2) w = [h, f0] + 2 f0
    kernel_basis = _solve_kernel_combos(spec, minus_basis, e)
    rhs = com(h, f0) + f0.scale(spec.rational(2))
    images = [com(h, w) + w.scale(spec.rational(2)) for w in kernel_basis]
    wcoeffs = _solve_in_span(spec, images, rhs)
    if wcoeffs is None:
        raise ParamError("sl2 correction step has no solution")
    w = zero
    for cf, b in zip(wcoeffs, kernel_basis):
        if not cf.is_zero():
            w = w + b.scale(cf)
    f = f0 - w
    two = spec.rational(2)
    if not (
        com(h, e) == e.scale(two)
        and com(h, f) == f.scale(-two)
        and com(e, f) == h
    ):
        raise AssertionError("constructed triple fails the sl2 relations")
    m = _weight_scaling(h, c, exponent_sign=-1)
    frob0 = m.inverse() * p.frobenius
    out = SL2Param(
        p.lgroup, spec, e, h, f, frob0, p.inertia, p.q, p.inertia_bound
    )
    report = validate_sl2(out)
    if not report.ok:
        raise AssertionError(f"recovered SL2 parameter invalid: {report.failures()}")
    return out


def _solve_kernel_combos(spec: FieldSpec, basis: list[Mat], e: Mat) -> list[Mat]:
    """Basis of {w in span(basis) : [e, w] = 0}."""
    if not basis:
        return []
    n = e.nrows
    images = [e * b - b * e for b in basis]
    rows = [
        [images[b][i, j] for b in range(len(basis))]
        for i in range(n)
        for j in range(n)
    ]
    system = Mat(spec, rows)
    out = []
    for v in system.nullspace():
        w = Mat.zeros(spec, n)
        for cf, b in zip(v, basis):
            if not cf.is_zero():
                w = w + b.scale(cf)
        out.append(w)
    return out


def conj_c_param(p: ParamData) -> ParamData:
    """Apply the coefficient automorphism c -> -c entrywise."""
    from .scalars import conjugate_c

    return ParamData(
        p.lgroup,
        p.field,
        p.frobenius.map_entries(conjugate_c),
        tuple(g.map_entries(conjugate_c) for g in p.inertia),
        p.monodromy.map_entries(conjugate_c),
        p.q,
        p.inertia_bound,
    )

"""Twist constructions and identity checkers.

Covers the half-norm twist on GL_2, the embedding of a parameter into the
C-group realization, the central-sign unramified twist, the Tannakian
block twist (c raised to the pairing degree of each isotypic piece), the
extension of a representation to the C-group, and the checkers tying them
together: the c -> -c identity, the extension-vs-twist identity, parity of
the central-fibre exponents, the quadratic-character recovery on GL_n, and
the PGL_2 obstruction report.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cgroup import CGroupElement, z_matrix
from .linalg import Mat, exp_nilpotent, log_unipotent
from .params import ParamData, equiv, require_valid
from .repcalc import (
    IsotypicPiece,
    RepExpr,
    evaluate,
    evaluate_weil,
    isotypic_decomposition,
    piece_d_degree,
)
from .scalars import FieldSpec, Scalar
from .weil import WeilElement, frobenius_lift, inertia_letter, tame_power


class TwistError(ValueError):
    pass


# -- C-parameters ---------------------------------------------------------------


@dataclass(frozen=True)
class CParam:
    """A parameter into the C-group realization: an l-adic base with a
    z-component on generators (z(inertia) = z(tame) = 1)."""

    base: ParamData
    z_sigma: Scalar

    def generators(self):
        """(label, dual-group matrix, z-value, Weil element) per generator."""
        p = self.base
        one = p.field.one()
        out = [("sigma", p.frobenius, self.z_sigma, frobenius_lift(1))]
        for i, g in enumerate(p.inertia):
            out.append((f"inertia{i}", g, one, inertia_letter(i)))
        out.append(("tame", exp_nilpotent(p.monodromy), one, tame_power(1)))
        return out


def to_cparam(p: ParamData, c: Scalar) -> CParam:
    """phi_c: z is c^d_F on generators; t_gm is then q^d_F as required."""
    if c * c != p.q_scalar():
        raise TwistError("need c**2 = q to embed into the C-group")
    return CParam(p, c)


def cparam_condition_holds(cp: CParam) -> bool:
    """z(w)^2 = q^d_F(w) on all generators."""
    p = cp.base
    if cp.z_sigma * cp.z_sigma != p.q_scalar():
        return False
    return True


def cparam_equal(a: CParam, b: CParam) -> bool:
    """Equality of C-parameters as quotient classes, generator by
    generator under (g, z) ~ (g * z_central, -z)."""
    pa, pb = a.base, b.base
    if pa.lgroup != pb.lgroup or pa.field != pb.field or pa.dim != pb.dim:
        return False
    if len(pa.inertia) != len(pb.inertia):
        return False
    zm = z_matrix(pa.lgroup, pa.field)
    gens_a = a.generators()
    gens_b = b.generators()
    for (_, ga, za, _), (_, gb, zb, _) in zip(gens_a, gens_b):
        if _pair_canonical(ga, za, zm) != _pair_canonical(gb, zb, zm):
            return False
    return True


def _pair_canonical(g: Mat, z: Scalar, zm: Mat):
    if (-z).coords < z.coords:
        return (g * zm, -z)
    return (g, z)


def conjugate_cparam(cp: CParam, g: Mat) -> CParam:
    from .params import conjugate

    return CParam(conjugate(cp.base, g), cp.z_sigma)


# -- elementary twists -----------------------------------------------------------


def half_twist(p: ParamData, c: Scalar) -> ParamData:
    """The |w|^(1/2)-twist on GL_2: Frobenius scaled by c^-1."""
    if (p.lgroup.datum.name or "") != "GL(2)":
        raise TwistError("the half-norm twist is defined on GL(2) only")
    if c * c != p.q_scalar():
        raise TwistError("need c**2 = q for the half-norm twist")
    out = ParamData(
        p.lgroup,
        p.field,
        p.frobenius.scale(c ** -1),
        p.inertia,
        p.monodromy,
        p.q,
        p.inertia_bound,
    )
    return out


def omega_z_twist(p: ParamData) -> ParamData:
    """Twist by the unramified character sending w to z_central^d_F(w)."""
    zm = z_matrix(p.lgroup, p.field)
    return ParamData(
        p.lgroup,
        p.field,
        zm * p.frobenius,
        p.inertia,
        p.monodromy,
        p.q,
        p.inertia_bound,
    )


# -- the Tannakian twist -----------------------------------------------------------


@dataclass(frozen=True)
class TannakianValue:
    """Values of the twisted representation on the Weil generators."""

    rep: RepExpr
    sigma: Mat
    inertia: tuple[Mat, ...]
    tame: Mat

    def __eq__(self, other):
        return (
            isinstance(other, TannakianValue)
            and self.rep == other.rep
            and self.sigma == other.sigma
            and self.inertia == other.inertia
            and self.tame == other.tame
        )

    __hash__ = None


def _pieces(p_or_lg, r: RepExpr, spec: FieldSpec):
    lg = p_or_lg.lgroup if isinstance(p_or_lg, ParamData) else p_or_lg
    return isotypic_decomposition(r, lg.datum, spec)


def piece_scaling_matrix(
    pieces, datum, spec: FieldSpec, factor_for_degree
) -> Mat:
    """Block-scalar operator acting on each isotypic piece by the scalar
    factor_for_degree(d_degree of the piece)."""
    columns = [v for piece in pieces for v in piece.basis]
    total = len(columns)
    basis_mat = Mat(spec, list(zip(*columns)))
    scalars = []
    for piece in pieces:
        value = factor_for_degree(piece_d_degree(piece, datum))
        scalars.extend([value] * piece.dimension)
    diag = Mat.diagonal(spec, scalars)
    return basis_mat * diag * basis_mat.inverse()


def tannakian_twist(p: ParamData, r: RepExpr, c: Scalar) -> TannakianValue:
    """The twisted representation: r of the parameter's generator images,
    with each isotypic piece scaled by c^(d * d_F) at Frobenius."""
    if c * c != p.q_scalar():
        raise TwistError("need c**2 = q for the Tannakian twist")
    spec = p.field
    datum = p.lgroup.datum
    pieces = _pieces(p, r, spec)
    twist = piece_scaling_matrix(pieces, datum, spec, lambda d: c ** d)
    sigma_value = twist * evaluate_weil(r, p.frobenius, 1, ())
    inertia_values = tuple(
        evaluate_weil(r, g, 0, (i + 1,)) for i, g in enumerate(p.inertia)
    )
    tame_value = evaluate_weil(r, exp_nilpotent(p.monodromy), 0, ())
    return TannakianValue(r, sigma_value, inertia_values, tame_value)


def tannakian_conjugated(tv: TannakianValue, g: Mat) -> TannakianValue:
    """The value-wise conjugate by r(g)."""
    rg = evaluate(tv.rep, g)
    rgi = rg.inverse()
    conj = lambda m: rg * m * rgi
    return TannakianValue(
        tv.rep, conj(tv.sigma), tuple(conj(m) for m in tv.inertia), conj(tv.tame)
    )


# -- extension of a representation to the C-group ------------------------------------


def check_piece_parity(r: RepExpr, lg, spec: FieldSpec) -> bool:
    """r(z_central) acts on each isotypic piece by (-1)^(pairing degree).

    This is the parity that makes the C-group extension well defined."""
    zm = z_matrix(lg, spec)
    pieces = _pieces(lg, r, spec)
    value = evaluate(r, zm)
    for piece in pieces:
        sign = spec.rational((-1) ** piece_d_degree(piece, lg.datum))
        for v in piece.basis:
            if value.apply(v) != tuple(x * sign for x in v):
                return False
    return True


def extend_rep(
    r: RepExpr, elem: CGroupElement, lg, spec: FieldSpec
) -> Mat:
    """Value at [(g, z, w)] of the extension of r to the C-group: the
    central fibre acts on each isotypic piece by z^(pairing degree)."""
    if not check_piece_parity(r, lg, spec):
        raise AssertionError(
            "piece parity failed: the C-group extension would be ill defined"
        )
    pieces = _pieces(lg, r, spec)
    zblock = piece_scaling_matrix(pieces, lg.datum, spec, lambda d: elem.z ** d)
    return evaluate_weil(r, elem.g, elem.w.frob, elem.w.inertia) * zblock


# -- identity checkers ---------------------------------------------------------------


def check_cgroup_twist_compat(p: ParamData, r: RepExpr, c: Scalar) -> bool:
    """Extension composed with the C-group embedding equals the Tannakian
    twist, exactly, on every generator."""
    cp = to_cparam(p, c)
    tv = tannakian_twist(p, r, c)
    spec = p.field
    lg = p.lgroup
    expected = {"sigma": tv.sigma, "tame": tv.tame}
    expected.update({f"inertia{i}": m for i, m in enumerate(tv.inertia)})
    for label, g, z, w in cp.generators():
        elem = CGroupElement(g, z, w)
        if extend_rep(r, elem, lg, spec) != expected[label]:
            return False
    return True


def check_minus_c(p: ParamData, r: RepExpr, c: Scalar) -> bool:
    """Replacing c by -c equals twisting the parameter by the central-sign
    unramified character, exactly, on every generator."""
    if p.field.c_rational:
        raise TwistError(
            "c -> -c has no content when sqrt(q) is rational; "
            "use a field spec with irrational c"
        )
    left = tannakian_twist(p, r, -c)
    right = tannakian_twist(omega_z_twist(p), r, c)
    return left == right


def check_tannakian_functor_equiv(
    p: ParamData, p2: ParamData, reps, c: Scalar
) -> tuple[bool, Mat | None]:
    """Functor-level equivalence over a representation corpus: one g,
    found from the Std values, must conjugate every value."""
    from .repcalc import STD

    tv1_std = tannakian_twist(p, STD, c)
    tv2_std = tannakian_twist(p2, STD, c)
    std_param_1 = ParamData(
        p.lgroup, p.field, tv1_std.sigma, tv1_std.inertia,
        log_unipotent(tv1_std.tame), p.q,
    )
    std_param_2 = ParamData(
        p2.lgroup, p2.field, tv2_std.sigma, tv2_std.inertia,
        log_unipotent(tv2_std.tame), p2.q,
    )
    res = equiv(std_param_1, std_param_2)
    if not res.found():
        return False, None
    g = res.conjugator
    for r in reps:
        if tannakian_conjugated(tannakian_twist(p, r, c), g) != tannakian_twist(
            p2, r, c
        ):
            return False, g
    return True, g


@dataclass
class ChiVerdict:
    equal: bool
    chi: dict[str, Scalar]
    note: str = ""


def chi_recovery(a: CParam, b: CParam, r: RepExpr) -> ChiVerdict:
    """On GL_n: two C-parameters with equal extended values and equal
    squared-z character differ by a quadratic character chi, absorbed by
    the central identification; recovers chi and concludes equality."""
    pa, pb = a.base, b.base
    lg = pa.lgroup
    name = lg.datum.name or ""
    if not name.startswith("GL("):
        raise TwistError("chi recovery implemented for GL(n) duals")
    n = pa.dim
    spec = pa.field
    zm = z_matrix(lg, spec)

    # preconditions: extended values and t_gm agree generator-wise
    for (la, ga, za, wa), (_, gb, zb, wb) in zip(a.generators(), b.generators()):
        va = extend_rep(r, CGroupElement(ga, za, wa), lg, spec)
        vb = extend_rep(r, CGroupElement(gb, zb, wb), lg, spec)
        if va != vb:
            raise TwistError(f"extended values differ at {la}")
        if za * za != zb * zb:
            raise TwistError(f"squared-z character differs at {la}")

    chi = {}
    for (label, ga, za, wa), (_, gb, zb, wb) in zip(a.generators(), b.generators()):
        found = None
        for candidate in (za / zb, -(za / zb)):
            twisted_g = gb.scale(candidate ** (1 - n))
            twisted_z = zb * candidate
            if _pair_canonical(ga, za, zm) == _pair_canonical(twisted_g, twisted_z, zm):
                found = candidate
                break
        if found is None:
            raise TwistError(f"no consistent chi at generator {label}")
        if found * found != spec.one():
            raise TwistError(f"chi({label})^2 != 1: preconditions violated")
        chi[label] = found
    return ChiVerdict(
        equal=True,
        chi=chi,
        note="equal as quotient classes; chi is absorbed by the central "
        "identification since z_central = (-1)^(n-1)",
    )


def pgl2_obstruction_report(p: ParamData) -> dict:
    """For a determinant-one GL_2 parameter, the half-norm twist forces
    det = |w| at Frobenius, so the twist cannot preserve PGL_2-parameters."""
    require_valid(p)
    spec = p.field
    if (p.lgroup.datum.name or "") != "GL(2)":
        raise TwistError("the obstruction report needs a GL(2) parameter")
    if p.frobenius.det() != spec.one() or any(
        g.det() != spec.one() for g in p.inertia
    ):
        raise TwistError("need determinant one (image of a PGL_2 parameter)")
    c = spec.c()
    twisted = half_twist(p, c)
    det_sigma = twisted.frobenius.det()
    q_inv = spec.rational(1) / p.q_scalar()
    return {
        "det_at_sigma": str(det_sigma),
        "equals_inverse_q": det_sigma == q_inv,
        "conclusion": (
            "the twisted parameter has det = |w| at Frobenius, hence is not "
            "trivial on the determinant and cannot come from a PGL(2) parameter"
        ),
    }

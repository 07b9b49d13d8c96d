"""The C-group realization: pairs (g, z) modulo the central identification
(g, z) ~ (g * z_central, -z), fibred over the Weil model.

The central element z_central is the order <= 2 element of the dual torus
given by the sign vector of 2*rho of the original group; for GL_n and its
SL_n dual it is the scalar matrix (-1)^(n-1).  The squared-z character
t_gm and the embedding i_c of the plain L-group live here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Mat
from .rootdata import LGroupSpec, z_signs_for_dual
from .scalars import FieldSpec, Scalar
from .weil import WeilElement, WeilGroup


class CGroupError(ValueError):
    pass


def z_matrix(lg: LGroupSpec, spec: FieldSpec) -> Mat:
    """The central sign element in the matrix realization of the dual."""
    signs = z_signs_for_dual(lg)
    return Mat.diagonal(spec, [spec.rational(s) for s in signs])


@dataclass
class CGroupAmbient:
    """Shared context: the dual-group realization and a bound Weil model."""

    lgroup: LGroupSpec
    spec: FieldSpec
    weil: WeilGroup

    def __post_init__(self):
        self.z_mat = z_matrix(self.lgroup, self.spec)

    def element(self, g: Mat, z: Scalar, w: WeilElement) -> CGroupElement:
        if z.is_zero():
            raise CGroupError("z-coordinate must be nonzero")
        return _canonicalize(CGroupElement(g, z, w), self.z_mat)


@dataclass(frozen=True)
class CGroupElement:
    """Canonical representative of [(g, z, w)]."""

    g: Mat
    z: Scalar
    w: WeilElement


def _canonicalize(a: CGroupElement, z_mat: Mat) -> CGroupElement:
    flipped = (-a.z).coords
    if flipped < a.z.coords:
        return CGroupElement(a.g * z_mat, -a.z, a.w)
    return a


def canonicalize(a: CGroupElement, ambient: CGroupAmbient) -> CGroupElement:
    return _canonicalize(a, ambient.z_mat)


def orbit_equal(a: CGroupElement, b: CGroupElement, ambient: CGroupAmbient) -> bool:
    """Brute-force two-representative comparison (the canonical-form test
    must agree with this)."""
    if a.w != b.w:
        return False
    if a.g == b.g and a.z == b.z:
        return True
    return a.g * ambient.z_mat == b.g and -a.z == b.z


def multiply(a: CGroupElement, b: CGroupElement,
             ambient: CGroupAmbient) -> CGroupElement:
    """Product in the split realization: componentwise on (g, z) with the
    Weil-model product on the fibre coordinate."""
    if a.g.spec != ambient.spec or b.g.spec != ambient.spec:
        raise CGroupError("elements from a different field spec")
    if a.g.nrows != b.g.nrows:
        raise CGroupError("elements from different ambient groups")
    return ambient.element(a.g * b.g, a.z * b.z, ambient.weil.mul(a.w, b.w))


def t_gm(a: CGroupElement) -> Scalar:
    """The squared-z character; well defined on the quotient."""
    return a.z * a.z


def i_c(g: Mat, w: WeilElement, c: Scalar, ambient: CGroupAmbient) -> CGroupElement:
    """Embedding of the plain L-group: (g, w) -> [(g, c^d_F(w), w)]."""
    q = ambient.spec.rational(ambient.weil.q)
    if c * c != q:
        raise CGroupError("need c**2 = q for the embedding")
    return ambient.element(g, c ** w.frob, w)

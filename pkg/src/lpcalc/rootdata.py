"""Based root data, duality, small-rank Weyl orbits, and the invariants
attached to them: 2*rho, the cocharacter delta = 2*rho of the dual torus,
the central sign element z = delta(-1), and the degree <2*rho, mu> of a
cocharacter class.

Lattices are coordinatized in Z^rank.  Quotient lattices (the character
lattice of SL_n, the cocharacter lattice of PGL_n) are carried as coset
representatives modulo Z*(1,...,1), normalized to last coordinate 0; the
flags `char_quotient` / `cochar_quotient` record which side is a quotient.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

ORBIT_BOUND = 100_000
WEYL_BOUND = 1_000_000


class RootDatumError(ValueError):
    pass


def dot(x, y) -> int:
    return sum(a * b for a, b in zip(x, y))


@dataclass(frozen=True)
class BasedRootDatum:
    rank: int
    roots: tuple[tuple[int, ...], ...]
    coroots: tuple[tuple[int, ...], ...]
    simple: tuple[int, ...]
    char_quotient: bool = False
    cochar_quotient: bool = False
    name: str | None = None

    def simple_roots(self):
        return tuple(self.roots[i] for i in self.simple)

    def simple_coroots(self):
        return tuple(self.coroots[i] for i in self.simple)

    def normalize_char(self, v):
        if not self.char_quotient:
            return tuple(v)
        t = v[-1]
        return tuple(a - t for a in v)

    def normalize_cochar(self, v):
        if not self.cochar_quotient:
            return tuple(v)
        t = v[-1]
        return tuple(a - t for a in v)


def build(descriptor) -> BasedRootDatum:
    """Standard data from descriptors: GL(n), SL(n), PGL(n), Torus(r),
    their JSON forms, or an explicit datum dict."""
    if isinstance(descriptor, BasedRootDatum):
        return descriptor
    if isinstance(descriptor, str):
        m = re.fullmatch(r"\s*(GL|SL|PGL|Torus)\s*\(\s*(\d+)\s*\)\s*", descriptor)
        if not m:
            raise RootDatumError(f"unsupported group descriptor {descriptor!r}")
        descriptor = {"type": m.group(1), "n": int(m.group(2))}
    if not isinstance(descriptor, dict):
        raise RootDatumError(f"unsupported group descriptor {descriptor!r}")
    if "roots" in descriptor:
        return _explicit(descriptor)
    kind = descriptor.get("type")
    n = descriptor.get("n", descriptor.get("r"))
    if not isinstance(n, int) or n < 1:
        raise RootDatumError(f"bad rank in descriptor {descriptor!r}")
    if kind == "GL":
        return _gl(n)
    if kind == "SL":
        return _sl(n)
    if kind == "PGL":
        return _pgl(n)
    if kind == "Torus":
        return _torus(n)
    raise RootDatumError(f"unsupported group descriptor {descriptor!r}")


def _type_a_vectors(n: int):
    vecs = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [0] * n
                v[i], v[j] = 1, -1
                vecs.append(tuple(v))
    simple = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        simple.append(vecs.index(tuple(v)))
    return tuple(vecs), tuple(simple)


def _gl(n: int) -> BasedRootDatum:
    vecs, simple = _type_a_vectors(n)
    return BasedRootDatum(n, vecs, vecs, simple, name=f"GL({n})")


def _sl(n: int) -> BasedRootDatum:
    vecs, simple = _type_a_vectors(n)
    roots = tuple(_normalize_last(v) for v in vecs)
    return BasedRootDatum(
        n, roots, vecs, simple, char_quotient=True, name=f"SL({n})"
    )


def _pgl(n: int) -> BasedRootDatum:
    vecs, simple = _type_a_vectors(n)
    coroots = tuple(_normalize_last(v) for v in vecs)
    return BasedRootDatum(
        n, vecs, coroots, simple, cochar_quotient=True, name=f"PGL({n})"
    )


def _torus(r: int) -> BasedRootDatum:
    return BasedRootDatum(r, (), (), (), name=f"Torus({r})")


def _normalize_last(v):
    t = v[-1]
    return tuple(a - t for a in v)


def _explicit(d: dict) -> BasedRootDatum:
    datum = BasedRootDatum(
        rank=int(d["rank"]),
        roots=tuple(tuple(int(x) for x in v) for v in d["roots"]),
        coroots=tuple(tuple(int(x) for x in v) for v in d["coroots"]),
        simple=tuple(int(i) for i in d["simple"]),
        char_quotient=bool(d.get("char_quotient", False)),
        cochar_quotient=bool(d.get("cochar_quotient", False)),
        name=d.get("name"),
    )
    validate(datum)
    return datum


def validate(d: BasedRootDatum) -> None:
    """Root-datum axioms at the level this calculus relies on."""
    if len(d.roots) != len(d.coroots):
        raise RootDatumError("roots and coroots must match up")
    for a, av in zip(d.roots, d.coroots):
        if dot(a, av) != 2:
            raise RootDatumError(f"<{a}, {av}> != 2")
    root_set = set(d.roots)
    for a, av in zip(d.roots, d.coroots):
        for b in d.roots:
            refl = d.normalize_char(tuple(x - dot(b, av) * y for x, y in zip(b, a)))
            if refl not in root_set:
                raise RootDatumError(f"root set not closed under reflection s_{a}")
    for i in d.simple:
        if not 0 <= i < len(d.roots):
            raise RootDatumError("simple index out of range")
    # every root must be a one-signed integer combination of the base
    for a in d.roots:
        _expand_in_base(d, a)


def dual(d: BasedRootDatum) -> BasedRootDatum:
    name = None
    if d.name:
        m = re.fullmatch(r"(GL|SL|PGL|Torus)\((\d+)\)", d.name)
        if m:
            swap = {"GL": "GL", "SL": "PGL", "PGL": "SL", "Torus": "Torus"}
            name = f"{swap[m.group(1)]}({m.group(2)})"
    return BasedRootDatum(
        rank=d.rank,
        roots=d.coroots,
        coroots=d.roots,
        simple=d.simple,
        char_quotient=d.cochar_quotient,
        cochar_quotient=d.char_quotient,
        name=name,
    )


def _expand_in_base(d: BasedRootDatum, root):
    """Coefficients of a root on the simple base (Fractions), or error."""
    base = d.simple_roots()
    if not base:
        raise RootDatumError("root present but base empty")
    cols = list(base)
    n = d.rank
    aug = [[Fraction(cols[j][i]) for j in range(len(cols))] + [Fraction(root[i])]
           for i in range(n)]
    # Gaussian elimination on an overdetermined system
    pivots = []
    r = 0
    for c in range(len(cols)):
        piv = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    coeffs = [Fraction(0)] * len(cols)
    for row_idx, c in enumerate(pivots):
        coeffs[c] = aug[row_idx][-1]
    residual = [
        Fraction(root[i]) - sum(coeffs[j] * cols[j][i] for j in range(len(cols)))
        for i in range(n)
    ]
    if d.char_quotient:
        # residual may be a multiple of (1,...,1)
        t = residual[0]
        if any(v != t for v in residual):
            raise RootDatumError(f"{root} is not in the span of the base")
    elif any(v != 0 for v in residual):
        raise RootDatumError(f"{root} is not in the span of the base")
    signs = {v > 0 for v in coeffs if v != 0}
    if len(signs) != 1:
        raise RootDatumError(f"{root} has mixed signs on the base")
    return coeffs


def positive_roots(d: BasedRootDatum):
    out = []
    for a in d.roots:
        coeffs = _expand_in_base(d, a)
        if any(v > 0 for v in coeffs):
            out.append(a)
    return tuple(out)


def two_rho(d: BasedRootDatum) -> tuple[int, ...]:
    """Sum of the positive roots, as a character-lattice vector."""
    out = [0] * d.rank
    for a in positive_roots(d):
        for i, v in enumerate(a):
            out[i] += v
    return d.normalize_char(tuple(out))


def two_rho_coroots(d: BasedRootDatum) -> tuple[int, ...]:
    """Sum of the positive coroots (i.e. 2*rho of the dual datum)."""
    return two_rho(dual(d))


def delta_and_z(d: BasedRootDatum):
    """(delta, z): 2*rho read as a cocharacter of the dual torus, and the
    sign vector of the order <= 2 element delta(-1)."""
    delta = two_rho(d)
    z = tuple(1 if v % 2 == 0 else -1 for v in delta)
    # z is central in the dual group: every coroot pairs evenly with delta.
    for av in d.coroots:
        assert dot(delta, av) % 2 == 0, "central sign element failed centrality"
    return delta, z


def mu_hat_value(d: BasedRootDatum, mu) -> int:
    """The character mu^ of the dual torus evaluated at z: the product of
    z's sign coordinates raised to mu's coordinates."""
    _, z = delta_and_z(d)
    out = 1
    for s, e in zip(z, mu):
        if s == -1 and e % 2:
            out = -out
    return out


# -- Weyl combinatorics ----------------------------------------------------


def reflect_cochar(d: BasedRootDatum, i: int, v):
    """Simple reflection s_i on the cocharacter side."""
    a = d.roots[d.simple[i]]
    av = d.coroots[d.simple[i]]
    k = dot(a, v)
    return d.normalize_cochar(tuple(x - k * y for x, y in zip(v, av)))


def reflect_char(d: BasedRootDatum, i: int, x):
    a = d.roots[d.simple[i]]
    av = d.coroots[d.simple[i]]
    k = dot(x, av)
    return d.normalize_char(tuple(u - k * y for u, y in zip(x, a)))


def weyl_orbit(d: BasedRootDatum, mu, bound: int = ORBIT_BOUND):
    """Full orbit of a cocharacter under simple reflections."""
    start = d.normalize_cochar(tuple(mu))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(len(d.simple)):
                w = reflect_cochar(d, i, v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
                    if len(seen) > bound:
                        raise RootDatumError(f"Weyl orbit exceeds bound {bound}")
        frontier = nxt
    return frozenset(seen)


def is_dominant_cochar(d: BasedRootDatum, v) -> bool:
    return all(dot(a, v) >= 0 for a in d.simple_roots())


def dominant_rep(d: BasedRootDatum, mu):
    """The dominant representative of a cocharacter's Weyl orbit."""
    v = d.normalize_cochar(tuple(mu))
    for _ in range(ORBIT_BOUND):
        for i in range(len(d.simple)):
            k = dot(d.roots[d.simple[i]], v)
            if k < 0:
                v = reflect_cochar(d, i, v)
                break
        else:
            return v
    raise AssertionError("dominance descent failed to terminate")


@dataclass(frozen=True)
class CocharClass:
    """A Weyl orbit of cocharacters, held by its dominant representative."""

    datum: BasedRootDatum
    representative: tuple[int, ...]

    @staticmethod
    def of(d: BasedRootDatum, mu) -> CocharClass:
        return CocharClass(d, dominant_rep(d, mu))


def d_degree(d: BasedRootDatum, mu) -> int:
    """<2*rho, mu> against the dominant representative; Weyl-invariant."""
    if isinstance(mu, CocharClass):
        rep = mu.representative
    else:
        rep = dominant_rep(d, mu)
    return dot(two_rho(d), rep)


def weyl_group_order(d: BasedRootDatum, bound: int = WEYL_BOUND) -> int:
    """Order of the Weyl group, by closure of simple reflection matrices."""
    if not d.simple:
        return 1
    n = d.rank

    def refl_matrix(i):
        a = d.roots[d.simple[i]]
        av = d.coroots[d.simple[i]]
        return tuple(
            tuple((1 if r == c else 0) - av[r] * a[c] for c in range(n))
            for r in range(n)
        )

    def mul(x, y):
        return tuple(
            tuple(sum(x[r][k] * y[k][c] for k in range(n)) for c in range(n))
            for r in range(n)
        )

    gens = [refl_matrix(i) for i in range(len(d.simple))]
    ident = tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = mul(g, h)
                if gh not in seen:
                    seen.add(gh)
                    nxt.append(gh)
                    if len(seen) > bound:
                        raise RootDatumError(f"Weyl group exceeds bound {bound}")
        frontier = nxt
    return len(seen)


# -- L-group shells ----------------------------------------------------------


@dataclass(frozen=True)
class LGroupSpec:
    """Dual-group datum plus the finite Galois quotient acting on it.

    `datum` is the based root datum of the dual group.  Split groups have
    galois_order 1 and trivial action; a nontrivial action is given as a
    coordinate permutation preserving the datum and its base.
    """

    datum: BasedRootDatum
    galois_order: int = 1
    galois_action: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.galois_action is not None:
            perm = self.galois_action
            d = self.datum
            if sorted(perm) != list(range(d.rank)):
                raise RootDatumError("galois_action must be a coordinate permutation")
            apply = lambda v: tuple(v[perm[i]] for i in range(d.rank))
            root_set = set(d.roots)
            base = set(d.simple_roots())
            for a in d.roots:
                if d.normalize_char(apply(a)) not in root_set:
                    raise RootDatumError("galois_action does not preserve roots")
            for a in base:
                if d.normalize_char(apply(a)) not in base:
                    raise RootDatumError("galois_action does not preserve the base")

    def apply_galois_cochar(self, v):
        if self.galois_action is None:
            return tuple(v)
        perm = self.galois_action
        return self.datum.normalize_cochar(tuple(v[perm[i]] for i in range(len(v))))


def split_lgroup(dual_name: str | dict | BasedRootDatum) -> LGroupSpec:
    """L-group of a split group, given the DUAL group's descriptor."""
    return LGroupSpec(build(dual_name))


def group_of_dual(lg: LGroupSpec) -> BasedRootDatum:
    """The original group's datum (dual of the carried dual datum)."""
    return dual(lg.datum)


def z_signs_for_dual(lg: LGroupSpec) -> tuple[int, ...]:
    """Sign vector of the central element z in the dual torus, computed
    from the original group's 2*rho."""
    _, z = delta_and_z(group_of_dual(lg))
    return z

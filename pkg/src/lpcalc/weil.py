"""Finite model of the Weil group.

Elements are normal forms t^s * u * sigma^m: a tame exponent s (rational),
a word u in the finite inertia generators, and a power m of the fixed
geometric Frobenius lift sigma.  Conventions:

    d_F(t^s * u * sigma^m) = m,     |w| = q^(-d_F(w)),
    sigma t sigma^(-1) = t^(1/q)    (geometric normalization),
    t'(t) = 1, inertia and t commute.

The inertia coordinate is group-theoretic only relative to a parameter:
sigma conjugates the finite image by the Frobenius matrix.  WeilGroup
binds the model to one parameter's matrices and enumerates the finite
image so that conjugated words stay words.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Mat
from .scalars import FieldSpec

INERTIA_BOUND = 10_000


class WeilModelError(ValueError):
    pass


@dataclass(frozen=True)
class WeilElement:
    """t^tame * (inertia word) * sigma^frob.

    Word letters are 1-indexed: letter k > 0 is generator k-1, letter
    -k is its inverse.
    """

    frob: int = 0
    inertia: tuple[int, ...] = ()
    tame: Fraction = field(default_factory=lambda: Fraction(0))

    def __post_init__(self):
        object.__setattr__(self, "tame", Fraction(self.tame))

    @property
    def d_F(self) -> int:
        return self.frob


def frobenius_lift(m: int = 1) -> WeilElement:
    return WeilElement(frob=m)


def inertia_letter(i: int) -> WeilElement:
    """The i-th inertia generator (0-indexed) as a Weil element."""
    return WeilElement(inertia=(i + 1,))


def tame_power(s) -> WeilElement:
    return WeilElement(tame=Fraction(s))


class WeilGroup:
    """The model bound to one parameter's Frobenius and inertia matrices."""

    def __init__(
        self,
        spec: FieldSpec,
        q: int,
        frobenius: Mat,
        inertia_gens: tuple[Mat, ...],
        bound: int = INERTIA_BOUND,
    ):
        self.spec = spec
        self.q = q
        self.frobenius = frobenius
        self.frobenius_inv = frobenius.inverse()
        self.gens = tuple(inertia_gens)
        self.bound = bound
        self.closure_complete = True
        n = frobenius.nrows
        ident = Mat.identity(spec, n)
        words: dict[Mat, tuple[int, ...]] = {ident: ()}
        frontier = [ident]
        while frontier and self.closure_complete:
            nxt = []
            for m in frontier:
                for i, g in enumerate(self.gens):
                    mg = m * g
                    if mg not in words:
                        words[mg] = words[m] + (i + 1,)
                        nxt.append(mg)
                        if len(words) > bound:
                            self.closure_complete = False
                            break
                if not self.closure_complete:
                    break
            frontier = nxt
        self.words = words
        self._gen_invs: dict[int, Mat] = {}

    # -- inertia image -----------------------------------------------------

    def elements(self):
        return self.words.keys()

    def contains(self, m: Mat) -> bool:
        return m in self.words

    def canonical_word(self, m: Mat) -> tuple[int, ...]:
        try:
            return self.words[m]
        except KeyError:
            raise WeilModelError("matrix is not in the finite inertia image")

    def _gen_inverse(self, i: int) -> Mat:
        if i not in self._gen_invs:
            self._gen_invs[i] = self.gens[i].inverse()
        return self._gen_invs[i]

    def rho(self, word: tuple[int, ...]) -> Mat:
        """Product of generator matrices along a word."""
        out = Mat.identity(self.spec, self.frobenius.nrows)
        for letter in word:
            if letter > 0:
                out = out * self.gens[letter - 1]
            elif letter < 0:
                out = out * self._gen_inverse(-letter - 1)
            else:
                raise WeilModelError("word letters are nonzero 1-indexed integers")
        return out

    def frobenius_normalizes(self) -> bool:
        f, fi = self.frobenius, self.frobenius_inv
        return all(f * g * fi in self.words for g in self.gens)

    # -- group law -----------------------------------------------------------

    def norm(self, w: WeilElement) -> Fraction:
        return Fraction(self.q) ** (-w.frob)

    def smooth_matrix(self, w: WeilElement) -> Mat:
        """rho(word) * Phi^m: the smooth part of the evaluated element."""
        return self.rho(w.inertia) * (self.frobenius ** w.frob)

    def _frob_conj(self, u: Mat, m: int) -> Mat:
        return (self.frobenius ** m) * u * (self.frobenius ** (-m))

    def mul(self, w1: WeilElement, w2: WeilElement) -> WeilElement:
        """(t^s u sigma^m)(t^s' u' sigma^m')."""
        u1 = self.rho(w1.inertia)
        u2 = self.rho(w2.inertia)
        u = u1 * self._frob_conj(u2, w1.frob)
        return WeilElement(
            frob=w1.frob + w2.frob,
            inertia=self.canonical_word(u),
            tame=w1.tame + w2.tame * Fraction(self.q) ** (-w1.frob),
        )

    def inv(self, w: WeilElement) -> WeilElement:
        u = self.rho(w.inertia)
        ui = self._frob_conj(u.inverse(), -w.frob)
        return WeilElement(
            frob=-w.frob,
            inertia=self.canonical_word(ui),
            tame=-w.tame * Fraction(self.q) ** w.frob,
        )

    def identity(self) -> WeilElement:
        return WeilElement()

"""Code quantities read off from ideals of the Laurent ring Z_2[x, y, 1/x, 1/y].

The anyon sectors of a generalized toric code with stabilizer pair (f, g) are
counted by the quotient ring R/<f, g>; on a twisted torus the extra relations
y^alpha = 1 and x^beta y^gamma = 1 are added.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gf2poly
from .groebner import (
    LEX_XY,
    LEX_YX,
    Budget,
    DEFAULT_BUDGET,
    GroebnerBasis,
    MonomialOrder,
    MultiPoly,
    NotZeroDimensionalError,
    buchberger,
    from_laurent,
    ideal_equal,
    ideal_member,
    intersect_principal,
    laurent_ideal_basis,
    normal_form,
    principal_basis,
    to_laurent,
)
from .poly2 import LaurentPoly


@dataclass(frozen=True)
class TwistedTorus:
    """Lattice quotient by a1 = (0, alpha) and a2 = (beta, gamma); gamma is kept in [0, alpha)."""

    alpha: int
    beta: int
    gamma: int = 0

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 1:
            raise ValueError(f"alpha and beta must be positive, got {self.alpha}, {self.beta}")
        object.__setattr__(self, "gamma", self.gamma % self.alpha)

    @classmethod
    def from_vectors(cls, a1: tuple[int, int], a2: tuple[int, int]) -> TwistedTorus:
        if a1[0] != 0:
            raise ValueError(f"a1 must have the form (0, alpha), got {a1}")
        return cls(abs(a1[1]), a2[0], a2[1]) if a2[0] > 0 else cls(abs(a1[1]), -a2[0], -a2[1])

    @property
    def cells(self) -> int:
        return self.alpha * self.beta

    @property
    def n(self) -> int:
        return 2 * self.alpha * self.beta

    @property
    def a1(self) -> tuple[int, int]:
        return (0, self.alpha)

    @property
    def a2(self) -> tuple[int, int]:
        return (self.beta, self.gamma)

    def relations(self) -> tuple[LaurentPoly, LaurentPoly]:
        """y^alpha + 1 and x^beta y^gamma + 1."""
        one = LaurentPoly.one()
        return (LaurentPoly.monomial(0, self.alpha) + one, LaurentPoly.monomial(self.beta, self.gamma) + one)

    def __str__(self) -> str:
        return f"a1=(0,{self.alpha}) a2=({self.beta},{self.gamma})"


@dataclass(frozen=True)
class StandardMonomialBasis:
    monomials: tuple[tuple[int, int], ...]

    @property
    def count(self) -> int:
        return len(self.monomials)


@dataclass(frozen=True)
class UnivariateFactorization:
    var: str
    factors: tuple[tuple[LaurentPoly, int], ...]

    def product(self) -> LaurentPoly:
        out = LaurentPoly.one()
        for p, m in self.factors:
            for _ in range(m):
                out = out * p
        return out


def check_to_condition(f: LaurentPoly, g: LaurentPoly, budget: Budget = DEFAULT_BUDGET) -> bool:
    """<f> cap <g> == <f g>, i.e. f and g share no non-monomial factor."""
    inter = intersect_principal(f, g, LEX_XY, budget)
    return ideal_equal(inter, principal_basis(f * g, LEX_XY))


def _xy_index(gb: GroebnerBasis) -> tuple[int, int]:
    if set(gb.variables) != {"x", "y"}:
        raise ValueError(f"expected a basis over x, y; got {gb.variables}")
    return gb.variables.index("x"), gb.variables.index("y")


def standard_monomials(gb: GroebnerBasis) -> StandardMonomialBasis:
    """Monomials under the staircase of the leading terms, as (i, j) exponents."""
    ix, iy = _xy_index(gb)
    lts = [(e[ix], e[iy]) for e in gb.leading]
    if any(lt == (0, 0) for lt in lts):
        return StandardMonomialBasis(())
    ax = min((a for a, b in lts if b == 0), default=None)
    by = min((b for a, b in lts if a == 0), default=None)
    if ax is None or by is None:
        raise NotZeroDimensionalError("staircase is infinite: the ideal is not zero-dimensional")
    out = []
    for a in range(ax):
        for b in range(by):
            if not any(a >= la and b >= lb for la, lb in lts):
                out.append((a, b))
    return StandardMonomialBasis(tuple(sorted(out, key=lambda e: (e[0], e[1]))))


def k_max(f: LaurentPoly, g: LaurentPoly, order: MonomialOrder = LEX_XY) -> int:
    """Twice the dimension of R/<f, g>."""
    return 2 * standard_monomials(laurent_ideal_basis(f, g, order=order)).count


def torus_basis(f: LaurentPoly, g: LaurentPoly, torus: TwistedTorus, budget: Budget = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced lex(x > y) basis of <f, g, y^alpha - 1, x^beta y^gamma - 1>.

    Both x and y are units modulo the torus relations, so the polynomial
    ideal generated by shifted f, g and {y^alpha + 1, x^beta + y^(alpha-gamma)}
    already equals its Laurent extension; the latter pair is itself a Groebner
    basis, which is used to pre-reduce f and g.
    """
    var = ("x", "y")
    a, b, c = torus.alpha, torus.beta, torus.gamma
    t1 = MultiPoly(var, frozenset([(0, a), (0, 0)]))
    t2 = MultiPoly(var, frozenset([(b, 0), (0, (a - c) % a)]))
    fr = normal_form(from_laurent(f), [t1, t2], LEX_XY, budget)
    gr = normal_form(from_laurent(g), [t1, t2], LEX_XY, budget)
    return buchberger([t1, t2, fr, gr], LEX_XY, budget)


def k_on_torus(f: LaurentPoly, g: LaurentPoly, torus: TwistedTorus, method: str = "groebner") -> int:
    """Logical dimension 2 * dim R/<f, g, y^alpha - 1, x^beta y^gamma - 1>.

    ``method`` is "groebner" (direct basis of the torus ideal) or "quotient"
    (linear algebra inside R/<f, g>, which needs a zero-dimensional ideal but
    handles huge tori cheaply).
    """
    if method == "groebner":
        return 2 * standard_monomials(torus_basis(f, g, torus)).count
    if method == "quotient":
        return 2 * QuotientAlgebra.of(f, g).torus_quotient_dim(torus)
    raise ValueError(f"unknown method {method!r}")


def univariate_generator(f: LaurentPoly, g: LaurentPoly, var: str = "y", budget: Budget = DEFAULT_BUDGET) -> LaurentPoly:
    """Generator of <f, g> cap Z_2[var^(+-1)], from a lex basis eliminating the other variable."""
    if var not in ("x", "y"):
        raise ValueError(f"var must be 'x' or 'y', got {var!r}")
    order = LEX_XY if var == "y" else LEX_YX
    other = "x" if var == "y" else "y"
    gb = laurent_ideal_basis(f, g, order=order, budget=budget)
    for p in gb.gens:
        if not p.uses(other):
            return to_laurent(p)
    raise NotZeroDimensionalError(f"no univariate element in {var}: f and g are not coprime")


def _univariate_int(h: LaurentPoly | int, var: str) -> int:
    if isinstance(h, int):
        return h
    a, shift = gf2poly.from_laurent(h, var)
    if shift < 0:
        raise ValueError("negative exponents in a univariate polynomial")
    return a << shift


def factor_univariate(h: LaurentPoly, var: str = "y") -> UnivariateFactorization:
    """Irreducible factorization over GF(2); the result multiplies back to ``h``."""
    a = _univariate_int(h, var)
    if not a:
        raise ValueError("cannot factor the zero polynomial")
    facs = tuple((gf2poly.to_laurent(p, var), m) for p, m in gf2poly.factor(a)) if a > 1 else ()
    return UnivariateFactorization(var, facs)


def minimal_period(h: LaurentPoly | int, var: str = "y") -> int:
    """Smallest L with h | var^L - 1."""
    a = _univariate_int(h, var)
    if not a:
        raise ValueError("zero polynomial has no period")
    if not a & 1:
        raise ValueError(f"{var} divides h, so no period exists")
    return gf2poly.order(a)


def minimal_untwisted_torus(f: LaurentPoly, g: LaurentPoly) -> tuple[int, int]:
    """(L_x, L_y) for the smallest untwisted torus keeping every anyon."""
    return (
        minimal_period(univariate_generator(f, g, "x"), "x"),
        minimal_period(univariate_generator(f, g, "y"), "y"),
    )


def achieves_full_k(f: LaurentPoly, g: LaurentPoly, torus: TwistedTorus, gb: GroebnerBasis | None = None) -> bool:
    """Whether both torus relations already lie in <f, g>."""
    gb = gb or laurent_ideal_basis(f, g)
    return all(ideal_member(r, gb) for r in torus.relations())


def minimal_full_k_twisted(f: LaurentPoly, g: LaurentPoly, max_beta: int | None = None) -> TwistedTorus | None:
    """Smallest-area twisted torus with alpha = L_y on which the full k survives.

    Scans beta over divisors of L_x (x^L_x = 1 always holds) and, for each,
    solves for gamma inside the quotient algebra.  Returns None if nothing
    smaller than L_x * L_y is found.
    """
    qa = QuotientAlgebra.of(f, g)
    lx, ly = minimal_untwisted_torus(f, g)
    best = None
    divisors = sorted(d for d in range(1, lx + 1) if lx % d == 0)
    for beta in divisors:
        if max_beta is not None and beta > max_beta:
            break
        if beta == lx:
            break
        gamma = qa.solve_twist(beta, ly)
        if gamma is not None:
            best = TwistedTorus(ly, beta, gamma)
            break
    return best


class QuotientAlgebra:
    """Finite-dimensional algebra A = R/<f, g> with multiplication matrices for x and y.

    Elements are GF(2) vectors over the standard monomials.  Column ``c`` of
    ``mx`` is the normal form of x * (c-th standard monomial).
    """

    def __init__(self, gb: GroebnerBasis):
        self.gb = gb
        self.basis = standard_monomials(gb).monomials
        self.dim = len(self.basis)
        self.index = {m: i for i, m in enumerate(self.basis)}
        ix, iy = _xy_index(gb)
        self._ix, self._iy = ix, iy
        self.mx = self._mult_matrix((1, 0))
        self.my = self._mult_matrix((0, 1))

    @classmethod
    def of(cls, f: LaurentPoly, g: LaurentPoly, order: MonomialOrder = LEX_XY) -> QuotientAlgebra:
        return cls(laurent_ideal_basis(f, g, order=order))

    def _vector(self, p: MultiPoly) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.uint8)
        for e in p.support:
            v[self.index[(e[self._ix], e[self._iy])]] ^= 1
        return v

    def _mult_matrix(self, step: tuple[int, int]) -> np.ndarray:
        m = np.zeros((self.dim, self.dim), dtype=np.uint8)
        gens = list(self.gb.gens)
        for c, (i, j) in enumerate(self.basis):
            e = [0, 0]
            e[self._ix], e[self._iy] = i + step[0], j + step[1]
            mono = MultiPoly(self.gb.variables, frozenset([tuple(e)]))
            m[:, c] = self._vector(normal_form(mono, gens, self.gb.order))
        return m

    def power(self, which: str, e: int) -> np.ndarray:
        """Matrix of multiplication by x^e or y^e (e may be negative)."""
        base = self.mx if which == "x" else self.my
        if e < 0:
            base = gf2_inverse(base)
            e = -e
        return gf2_matpow(base, e)

    def element(self, p: LaurentPoly) -> np.ndarray:
        """Multiplication matrix of a Laurent polynomial."""
        out = np.zeros((self.dim, self.dim), dtype=np.uint8)
        for i, j in p.support:
            out ^= gf2_matmul(self.power("x", i), self.power("y", j))
        return out

    def torus_quotient_dim(self, torus: TwistedTorus) -> int:
        """dim A / (y^alpha - 1, x^beta y^gamma - 1)."""
        eye = np.eye(self.dim, dtype=np.uint8)
        u = self.power("y", torus.alpha) ^ eye
        v = gf2_matmul(self.power("x", torus.beta), self.power("y", torus.gamma)) ^ eye
        from .gf2linalg import rank

        return self.dim - rank(np.concatenate([u, v], axis=1))

    def solve_twist(self, beta: int, alpha: int) -> int | None:
        """Smallest gamma in [0, alpha) with x^beta y^gamma = 1 in A, if any."""
        target = gf2_inverse(self.power("x", beta))
        ypow = np.eye(self.dim, dtype=np.uint8)
        # baby-step giant-step on the cyclic group generated by y
        m = int(np.ceil(np.sqrt(alpha)))
        table = {}
        for j in range(m):
            table.setdefault(ypow.tobytes(), j)
            ypow = gf2_matmul(ypow, self.my)
        giant = gf2_inverse(ypow)
        cur = target
        for i in range(m + 1):
            j = table.get(cur.tobytes())
            if j is not None and i * m + j < alpha:
                return i * m + j
            cur = gf2_matmul(cur, giant)
        return None


def gf2_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return ((a.astype(np.int64) @ b.astype(np.int64)) & 1).astype(np.uint8)


def gf2_matpow(m: np.ndarray, e: int) -> np.ndarray:
    out = np.eye(m.shape[0], dtype=np.uint8)
    while e:
        if e & 1:
            out = gf2_matmul(out, m)
        e >>= 1
        if e:
            m = gf2_matmul(m, m)
    return out


def gf2_inverse(m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    aug = np.concatenate([m.copy() & 1, np.eye(n, dtype=np.uint8)], axis=1)
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r, col]), None)
        if piv is None:
            raise ValueError("matrix is singular over GF(2)")
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        rows = np.nonzero(aug[:, col])[0]
        for r in rows:
            if r != col:
                aug[r] ^= aug[col]
    return aug[:, n:].copy()

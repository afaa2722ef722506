"""Width-one twisted tori and the equivalent one-dimensional bicycle codes.

With beta = 1 the relation x y^gamma = 1 lets x be replaced by y^-gamma, so
(f, g) become univariate polynomials on a cycle of length l = alpha, and
k = 2 deg gcd(f, g, y^l - 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2poly
from .algebra import TwistedTorus
from .lattice import CssCode
from .poly2 import LaurentPoly


class DegenerateReduction(ValueError):
    """f or g vanished after substituting x -> y^-gamma."""


@dataclass(frozen=True)
class GbCode1D:
    f: LaurentPoly
    g: LaurentPoly
    l: int

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("cycle length must be positive")
        for name in ("f", "g"):
            p = getattr(self, name)
            if any(i for i, _ in p.support):
                raise ValueError(f"{name} must be a polynomial in y only")
            object.__setattr__(self, name, LaurentPoly.from_terms((0, j % self.l) for _, j in p.support))
            if not getattr(self, name):
                raise DegenerateReduction(f"{name} is zero on a cycle of length {self.l}")

    @property
    def n(self) -> int:
        return 2 * self.l

    def as_css_code(self) -> CssCode:
        return CssCode(self.f, self.g, TwistedTorus(self.l, 1, 0))


def reduce_to_1d(f: LaurentPoly, g: LaurentPoly, torus: TwistedTorus) -> GbCode1D:
    if torus.beta != 1:
        raise ValueError(f"reduction needs beta = 1, got beta = {torus.beta}")
    l, gamma = torus.alpha, torus.gamma

    def sub(p: LaurentPoly) -> LaurentPoly:
        return LaurentPoly.from_terms((0, (j - i * gamma) % l) for i, j in p.support)

    fy, gy = sub(f), sub(g)
    if not fy or not gy:
        raise DegenerateReduction("a polynomial collapses to zero under x -> y^-gamma")
    return GbCode1D(fy, gy, l)


def gcd_univariate(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Euclidean gcd of two polynomials in y (non-negative exponents)."""
    a, sa = gf2poly.from_laurent(p, "y")
    b, sb = gf2poly.from_laurent(q, "y")
    if sa < 0 or sb < 0:
        raise ValueError("negative exponents")
    a <<= sa
    b <<= sb
    if not a and not b:
        raise ValueError("gcd of two zero polynomials")
    return gf2poly.to_laurent(gf2poly.gcd(a, b), "y")


def k_1d(code: GbCode1D) -> int:
    # exponents are already reduced into [0, l)
    a = sum(1 << j for _, j in code.f.support)
    b = sum(1 << j for _, j in code.g.support)
    h = gf2poly.gcd(gf2poly.gcd(a, b), gf2poly.x_pow_minus_one(code.l))
    return 2 * gf2poly.deg(h)

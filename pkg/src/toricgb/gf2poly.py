"""Univariate polynomials over GF(2) stored as Python ints (bit i = coefficient of y^i).

Factoring is delegated to sympy's finite-field routines; everything that runs
in inner loops (multiplication, remainders, modular powers) is plain bit
arithmetic.
"""

from __future__ import annotations

from functools import reduce
from math import lcm

from sympy import factorint
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from .poly2 import LaurentPoly


def deg(a: int) -> int:
    return a.bit_length() - 1


def mul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def divmod2(a: int, b: int) -> tuple[int, int]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db = deg(b)
    q = 0
    while a and deg(a) >= db:
        s = deg(a) - db
        q |= 1 << s
        a ^= b << s
    return q, a


def mod(a: int, b: int) -> int:
    return divmod2(a, b)[1]


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def mulmod(a: int, b: int, m: int) -> int:
    return mod(mul(a, b), m)


def powmod(a: int, e: int, m: int) -> int:
    """a^e mod m by square-and-multiply."""
    result = mod(1, m)
    a = mod(a, m)
    while e:
        if e & 1:
            result = mulmod(result, a, m)
        e >>= 1
        if e:
            a = mulmod(a, a, m)
    return result


def x_pow_minus_one(n: int) -> int:
    """The polynomial y^n - 1 (= y^n + 1 over GF(2))."""
    return (1 << n) | 1


def to_coeffs(a: int) -> list[int]:
    """Coefficient list, highest degree first (sympy's dense convention)."""
    return [(a >> i) & 1 for i in range(deg(a), -1, -1)]


def from_coeffs(c) -> int:
    out = 0
    for v in c:
        out = (out << 1) | (int(v) & 1)
    return out


def factor(a: int) -> list[tuple[int, int]]:
    """Irreducible factors with multiplicities, sorted by (degree, value)."""
    if a <= 0:
        raise ValueError("cannot factor the zero polynomial")
    _, facs = gf_factor(to_coeffs(a), 2, ZZ)
    out = [(from_coeffs(p), m) for p, m in facs]
    return sorted(out, key=lambda t: (deg(t[0]), t[0]))


def is_irreducible(a: int) -> bool:
    f = factor(a)
    return len(f) == 1 and f[0][1] == 1 and deg(a) >= 1


def order_irreducible(p: int) -> int:
    """Multiplicative order of y modulo an irreducible p with p(0) = 1."""
    if not p & 1:
        raise ValueError("y is not invertible modulo a polynomial divisible by y")
    d = deg(p)
    if d == 0:
        return 1
    n = (1 << d) - 1
    order = n
    for q, e in factorint(n).items():
        for _ in range(e):
            if powmod(0b10, order // q, p) == 1:
                order //= q
            else:
                break
    return order


def order(a: int) -> int:
    """Smallest L >= 1 with a | y^L - 1; requires a(0) = 1.

    For a = prod p_i^m_i the answer is lcm(ord(p_i) * 2^ceil(log2 m_i)).
    """
    if a <= 0 or not a & 1:
        raise ValueError("order is defined only for polynomials with nonzero constant term")
    if a == 1:
        return 1
    parts = []
    for p, m in factor(a):
        parts.append(order_irreducible(p) * (1 << (m - 1).bit_length()))
    return reduce(lcm, parts, 1)


def from_laurent(p: LaurentPoly, var: str = "y") -> tuple[int, int]:
    """Univariate Laurent polynomial -> (int polynomial, shift) with p = y^shift * poly."""
    if not p:
        return 0, 0
    idx = 1 if var == "y" else 0
    other = 1 - idx
    if any(e[other] for e in p.support):
        raise ValueError(f"polynomial is not univariate in {var}")
    lo = min(e[idx] for e in p.support)
    out = 0
    for e in p.support:
        out |= 1 << (e[idx] - lo)
    return out, lo


def to_laurent(a: int, var: str = "y", shift: int = 0) -> LaurentPoly:
    terms = []
    i = 0
    while a:
        if a & 1:
            terms.append((0, i + shift) if var == "y" else (i + shift, 0))
        a >>= 1
        i += 1
    return LaurentPoly(frozenset(terms))

"""Bivariate Laurent polynomials over GF(2).

A polynomial is stored as the set of exponent pairs ``(i, j)`` of its
monomials ``x^i y^j``; every coefficient is 1, so addition is the symmetric
difference of supports and multiplication is a convolution with parity
cancellation.

Text grammar (whitespace-insensitive)::

    poly   := term ('+' term)* | '0'
    term   := '1' | factor ('*'? factor)*
    factor := ('x' | 'y') ('^' signed_int)?
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

Exponent = tuple[int, int]

MAX_EXPONENT = 2**31 - 1


class PolyParseError(ValueError):
    """Malformed polynomial text; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownVariableError(PolyParseError):
    pass


def _check(e: Exponent) -> Exponent:
    i, j = e
    if abs(i) > MAX_EXPONENT or abs(j) > MAX_EXPONENT:
        raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT} in magnitude")
    return (int(i), int(j))


@dataclass(frozen=True)
class LaurentPoly:
    support: frozenset[Exponent] = frozenset()

    def __post_init__(self):
        for e in self.support:
            _check(e)

    @classmethod
    def from_terms(cls, terms: Iterable[Exponent]) -> LaurentPoly:
        """Sum of monomials; repeated exponents cancel pairwise."""
        counts = Counter(terms)
        return cls(frozenset(e for e, c in counts.items() if c % 2))

    @classmethod
    def monomial(cls, i: int, j: int = 0) -> LaurentPoly:
        return cls(frozenset([(i, j)]))

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls.monomial(0, 0)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        return add(self, other)

    __sub__ = __add__

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        return mul(self, other)

    def __bool__(self) -> bool:
        return bool(self.support)

    def __len__(self) -> int:
        return len(self.support)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(sorted(self.support, key=_render_key))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({render(self)!r})"

    def is_zero(self) -> bool:
        return not self.support

    def max_abs_exponent(self) -> int:
        return max((max(abs(i), abs(j)) for i, j in self.support), default=0)

    def shifted(self, di: int, dj: int) -> LaurentPoly:
        return LaurentPoly(frozenset((i + di, j + dj) for i, j in self.support))

    def substitute_swap(self) -> LaurentPoly:
        """The polynomial with x and y exchanged."""
        return LaurentPoly(frozenset((j, i) for i, j in self.support))


def _render_key(e: Exponent) -> tuple[bool, int, int]:
    return (e != (0, 0), e[1], e[0])


# --- parsing -------------------------------------------------------------


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise PolyParseError("expected integer exponent", start)
        return int(self.text[start : self.pos])


def _factor(lex: _Lexer) -> Exponent:
    at = lex.pos
    ch = lex.take()
    if ch not in ("x", "y"):
        if ch.isalpha():
            raise UnknownVariableError(f"unknown variable {ch!r}", at)
        raise PolyParseError(f"expected 'x' or 'y', got {ch or 'end of input'!r}", at)
    e = 1
    if lex.peek() == "^":
        lex.take()
        e = lex.integer()
    return (e, 0) if ch == "x" else (0, e)


def _term(lex: _Lexer) -> Exponent:
    lex.skip()
    if lex.peek() == "1":
        at = lex.pos
        lex.take()
        if lex.peek().isdigit():
            raise PolyParseError("only the constant 1 is allowed", at)
        return (0, 0)
    i, j = _factor(lex)
    while True:
        nxt = lex.peek()
        if nxt == "*":
            lex.take()
        elif nxt not in ("x", "y") and not (nxt.isalpha()):
            break
        di, dj = _factor(lex)
        i, j = i + di, j + dj
    return (i, j)


def parse(text: str) -> LaurentPoly:
    """Parse polynomial text such as ``"1 + x + x^-1*y^3"``."""
    lex = _Lexer(text)
    if lex.peek() == "0":
        lex.take()
        if lex.peek():
            raise PolyParseError("trailing input after '0'", lex.pos)
        return LaurentPoly()
    terms = [_term(lex)]
    while lex.peek() == "+":
        lex.take()
        terms.append(_term(lex))
    if lex.peek():
        raise PolyParseError(f"unexpected {lex.peek()!r}", lex.pos)
    return LaurentPoly.from_terms(_check(t) for t in terms)


def _render_monomial(i: int, j: int) -> str:
    if i == 0 and j == 0:
        return "1"
    parts = []
    for var, e in (("x", i), ("y", j)):
        if e == 1:
            parts.append(var)
        elif e:
            parts.append(f"{var}^{e}")
    return "*".join(parts)


def render(p: LaurentPoly) -> str:
    """Canonical text: constant first, then terms by (j, i) ascending; ``"0"`` for zero."""
    if not p.support:
        return "0"
    return " + ".join(_render_monomial(i, j) for i, j in sorted(p.support, key=_render_key))


# --- ring operations -------------------------------------------------------


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return LaurentPoly(p.support ^ q.support)


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    acc: set[Exponent] = set()
    for a, b in p.support:
        for c, d in q.support:
            e = (a + c, b + d)
            if e in acc:
                acc.remove(e)
            else:
                acc.add(e)
    return LaurentPoly(frozenset(acc))


def antipode(p: LaurentPoly) -> LaurentPoly:
    """Map every monomial x^i y^j to x^-i y^-j."""
    return LaurentPoly(frozenset((-i, -j) for i, j in p.support))


def shift_to_nonneg(p: LaurentPoly) -> tuple[LaurentPoly, Exponent]:
    """Multiply by the smallest monomial that makes all exponents non-negative.

    Returns the shifted polynomial and the exponent of the multiplier.
    """
    if not p.support:
        raise ValueError("cannot shift the zero polynomial")
    mi = min(i for i, _ in p.support)
    mj = min(j for _, j in p.support)
    return p.shifted(-mi, -mj), (-mi, -mj)

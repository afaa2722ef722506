"""Buchberger's algorithm over GF(2) in a handful of variables.

Monomials are packed into Python integers, one bit field per variable in
priority order (plus a leading total-degree field for graded orders), so that
integer comparison *is* the monomial order.  Each field carries a guard bit,
which turns the divisibility test into one subtraction and a mask.

Laurent ideals of Z_2[x, y, 1/x, 1/y] are handled by clearing denominators
with monomial shifts and, when the shifted ideal has extra components on the
coordinate axes, by saturating with an auxiliary inverse variable.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .poly2 import LaurentPoly, shift_to_nonneg

VARIABLES = ("x", "y", "xb", "yb", "t")

_BITS = 24
_STRIDE = _BITS + 1
_FIELD = (1 << _BITS) - 1


class GroebnerBudgetExceeded(RuntimeError):
    """Raised when a computation exceeds its pair or support-size budget."""


class NotZeroDimensionalError(ValueError):
    """The quotient ring is infinite dimensional."""


@dataclass(frozen=True)
class Budget:
    max_pairs: int = 10**6
    max_support: int = 10**5


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class MonomialOrder:
    """Lex or graded-lex order; ``priority`` lists variables from largest to smallest."""

    kind: str
    priority: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in ("lex", "grlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if len(set(self.priority)) != len(self.priority):
            raise ValueError("repeated variable in priority list")
        for v in self.priority:
            if v not in VARIABLES:
                raise ValueError(f"unknown variable {v!r}")

    @property
    def variables(self) -> tuple[str, ...]:
        return self.priority

    def key(self, exps: Sequence[int]) -> tuple[int, ...]:
        """Sort key for an exponent vector given in priority order."""
        if self.kind == "grlex":
            return (sum(exps), *exps)
        return tuple(exps)

    def with_eliminated(self, *names: str) -> MonomialOrder:
        """Lex order with ``names`` placed above the current variables."""
        return MonomialOrder("lex", tuple(names) + tuple(v for v in self.priority if v not in names))


LEX_XY = MonomialOrder("lex", ("x", "y"))  # x > y, eliminates x
LEX_YX = MonomialOrder("lex", ("y", "x"))  # y > x, eliminates y
GRLEX_XY = MonomialOrder("grlex", ("x", "y"))


@dataclass(frozen=True)
class MultiPoly:
    """Polynomial with non-negative exponents; vectors are ordered like ``variables``."""

    variables: tuple[str, ...]
    support: frozenset[tuple[int, ...]] = frozenset()

    def __post_init__(self):
        for e in self.support:
            if len(e) != len(self.variables) or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e} for variables {self.variables}")

    def __bool__(self) -> bool:
        return bool(self.support)

    def __len__(self) -> int:
        return len(self.support)

    def __add__(self, other: MultiPoly) -> MultiPoly:
        _same_vars(self, other)
        return MultiPoly(self.variables, self.support ^ other.support)

    def __mul__(self, other: MultiPoly) -> MultiPoly:
        _same_vars(self, other)
        acc: set[tuple[int, ...]] = set()
        for a in self.support:
            for b in other.support:
                acc ^= {tuple(u + v for u, v in zip(a, b))}
        return MultiPoly(self.variables, frozenset(acc))

    def __str__(self) -> str:
        if not self.support:
            return "0"
        terms = []
        for e in sorted(self.support, reverse=True):
            parts = [v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k]
            terms.append("*".join(parts) or "1")
        return " + ".join(terms)

    def uses(self, var: str) -> bool:
        i = self.variables.index(var)
        return any(e[i] for e in self.support)

    def drop(self, *names: str) -> MultiPoly:
        """Restrict to the remaining variables; the dropped ones must not occur."""
        keep = [i for i, v in enumerate(self.variables) if v not in names]
        for e in self.support:
            if any(e[i] for i, v in enumerate(self.variables) if v in names):
                raise ValueError(f"polynomial still involves {names}")
        return MultiPoly(tuple(self.variables[i] for i in keep), frozenset(tuple(e[i] for i in keep) for e in self.support))

    def extend(self, variables: tuple[str, ...]) -> MultiPoly:
        idx = [self.variables.index(v) if v in self.variables else None for v in variables]
        return MultiPoly(
            variables,
            frozenset(tuple(0 if i is None else e[i] for i in idx) for e in self.support),
        )

    @classmethod
    def monomial(cls, variables: tuple[str, ...], **exps: int) -> MultiPoly:
        return cls(variables, frozenset([tuple(exps.get(v, 0) for v in variables)]))

    @classmethod
    def one(cls, variables: tuple[str, ...]) -> MultiPoly:
        return cls(variables, frozenset([(0,) * len(variables)]))


def _same_vars(p: MultiPoly, q: MultiPoly):
    if p.variables != q.variables:
        raise ValueError(f"variable mismatch: {p.variables} vs {q.variables}")


def from_laurent(p: LaurentPoly, variables: tuple[str, ...] = ("x", "y")) -> MultiPoly:
    """Shift ``p`` to non-negative exponents and embed it over ``variables``."""
    if not p:
        return MultiPoly(variables)
    q, _ = shift_to_nonneg(p)
    ix, iy = variables.index("x"), variables.index("y")
    out = set()
    for i, j in q.support:
        e = [0] * len(variables)
        e[ix], e[iy] = i, j
        out.add(tuple(e))
    return MultiPoly(variables, frozenset(out))


def to_laurent(p: MultiPoly) -> LaurentPoly:
    ix, iy = p.variables.index("x"), p.variables.index("y")
    for e in p.support:
        if any(k for i, k in enumerate(e) if i not in (ix, iy)):
            raise ValueError("polynomial involves auxiliary variables")
    return LaurentPoly(frozenset((e[ix], e[iy]) for e in p.support))


# --- packed monomial arithmetic ---------------------------------------------


class _Packer:
    """Packs exponent vectors so that integer order equals the monomial order."""

    def __init__(self, variables: tuple[str, ...], order: MonomialOrder):
        if set(variables) != set(order.priority):
            raise ValueError(f"order {order.priority} does not match variables {variables}")
        self.variables = variables
        self.order = order
        self.perm = [variables.index(v) for v in order.priority]
        self.nfields = len(variables) + (1 if order.kind == "grlex" else 0)
        self.guard = sum(1 << (_STRIDE * i + _BITS) for i in range(self.nfields))

    def pack(self, e: Sequence[int]) -> int:
        fields = [e[i] for i in self.perm]
        if self.order.kind == "grlex":
            fields = [sum(fields)] + fields
        out = 0
        for v in fields:
            if v > _FIELD:
                raise OverflowError(f"exponent {v} too large for packed monomials")
            out = (out << _STRIDE) | v
        return out

    def unpack(self, m: int) -> tuple[int, ...]:
        fields = []
        for _ in range(self.nfields):
            fields.append(m & _FIELD)
            m >>= _STRIDE
        fields.reverse()
        if self.order.kind == "grlex":
            fields = fields[1:]
        e = [0] * len(self.variables)
        for pos, i in enumerate(self.perm):
            e[i] = fields[pos]
        return tuple(e)

    def divides(self, a: int, b: int) -> bool:
        return ((b | self.guard) - a) & self.guard == self.guard

    def lcm(self, a: int, b: int) -> int:
        out = 0
        for s in range(self.nfields - 1, -1, -1):
            sh = _STRIDE * s
            out = (out << _STRIDE) | max((a >> sh) & _FIELD, (b >> sh) & _FIELD)
        if self.order.kind == "grlex":
            # total degree field must be recomputed from the variable fields
            e = self.unpack(out)
            return self.pack(e)
        return out

    def coprime(self, a: int, b: int) -> bool:
        start = 1 if self.order.kind == "grlex" else 0
        for s in range(start, self.nfields):
            sh = _STRIDE * (self.nfields - 1 - s)
            if (a >> sh) & _FIELD and (b >> sh) & _FIELD:
                return False
        return True

    def to_set(self, p: MultiPoly) -> frozenset[int]:
        return frozenset(self.pack(e) for e in p.support)

    def to_poly(self, s: Iterable[int]) -> MultiPoly:
        return MultiPoly(self.variables, frozenset(self.unpack(m) for m in s))


def _reduce(p: Iterable[int], basis: list[tuple[int, frozenset[int]]], pk: _Packer, budget: Budget) -> set[int]:
    """Complete reduction of ``p`` modulo ``basis`` (list of (leading term, support))."""
    work = set(p)
    heap = [-m for m in work]
    heapq.heapify(heap)
    rem: set[int] = set()
    guard = pk.guard
    while heap:
        m = -heapq.heappop(heap)
        if m not in work:
            continue
        mg = m | guard
        for lt, g in basis:
            if (mg - lt) & guard == guard:
                q = m - lt
                for t in g:
                    u = t + q
                    if u in work:
                        work.remove(u)
                    else:
                        work.add(u)
                        heapq.heappush(heap, -u)
                if len(work) > budget.max_support:
                    raise GroebnerBudgetExceeded(f"intermediate support exceeded {budget.max_support}")
                break
        else:
            work.remove(m)
            rem.add(m)
    return rem


def _spoly(p: frozenset[int], lp: int, q: frozenset[int], lq: int, pk: _Packer) -> set[int]:
    l = pk.lcm(lp, lq)
    a, b = l - lp, l - lq
    out = {t + a for t in p}
    out.symmetric_difference_update(t + b for t in q)
    return out


def _groebner(polys: list[frozenset[int]], pk: _Packer, budget: Budget) -> list[frozenset[int]]:
    """Reduced Groebner basis via Buchberger with Gebauer-Moeller pair criteria."""
    f: list[frozenset[int]] = []
    lts: list[int] = []
    seen = set()
    for p in polys:
        if p and p not in seen:
            seen.add(p)
            f.append(p)
    f.sort(key=max)
    lts = [max(p) for p in f]

    def update(G: set[int], B: set[tuple[int, int]], ih: int):
        mh = lts[ih]
        C = set(G)
        D: set[tuple[int, int]] = set()
        while C:
            ig = C.pop()
            mg = lts[ig]
            lhg = pk.lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                return pk.divides(pk.lcm(mh, lts[ip]), lhg)

            if pk.coprime(mh, mg) or (
                not any(lcm_divides(ipx) for ipx in C) and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.add((ih, ig))
        E = {(a, b) for a, b in D if not pk.coprime(mh, lts[b])}
        B_new = set()
        for ig1, ig2 in B:
            l12 = pk.lcm(lts[ig1], lts[ig2])
            if not pk.divides(mh, l12) or pk.lcm(lts[ig1], mh) == l12 or pk.lcm(lts[ig2], mh) == l12:
                B_new.add((ig1, ig2))
        B_new |= E
        G_new = {ig for ig in G if not pk.divides(mh, lts[ig])}
        G_new.add(ih)
        return G_new, B_new

    G: set[int] = set()
    B: set[tuple[int, int]] = set()
    for i in range(len(f)):
        G, B = update(G, B, i)

    reductions = 0
    while B:
        pair = min(B, key=lambda pr: (pk.lcm(lts[pr[0]], lts[pr[1]]), pr))
        B.remove(pair)
        i, j = pair
        reductions += 1
        if reductions > budget.max_pairs:
            raise GroebnerBudgetExceeded(f"more than {budget.max_pairs} pair reductions")
        s = _spoly(f[i], lts[i], f[j], lts[j], pk)
        basis = sorted(((lts[g], f[g]) for g in G), reverse=True)
        h = _reduce(s, basis, pk, budget)
        if h:
            if h == {0}:
                return [frozenset([0])]
            f.append(frozenset(h))
            lts.append(max(h))
            G, B = update(G, B, len(f) - 1)

    return _interreduce([f[i] for i in G], pk, budget)


def _interreduce(polys: list[frozenset[int]], pk: _Packer, budget: Budget) -> list[frozenset[int]]:
    """Minimal, fully reduced basis from a Groebner basis."""
    polys = sorted(polys, key=max)
    minimal: list[frozenset[int]] = []
    for p in polys:
        lp = max(p)
        if not any(pk.divides(max(q), lp) for q in minimal):
            minimal = [q for q in minimal if not pk.divides(lp, max(q))]
            minimal.append(p)
    out = []
    for i, p in enumerate(minimal):
        others = sorted(((max(q), q) for j, q in enumerate(minimal) if j != i), reverse=True)
        out.append(frozenset(_reduce(p, others, pk, budget)))
    return sorted(out, key=max, reverse=True)


# --- public API --------------------------------------------------------------


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    variables: tuple[str, ...]
    gens: tuple[MultiPoly, ...]
    leading: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    def __post_init__(self):
        pk = _Packer(self.variables, self.order)
        lts = tuple(pk.unpack(max(pk.to_set(g))) for g in self.gens)
        object.__setattr__(self, "leading", lts)

    @property
    def packer(self) -> _Packer:
        return _Packer(self.variables, self.order)

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0] == MultiPoly.one(self.variables)

    def reduced(self) -> GroebnerBasis:
        pk = self.packer
        red = _interreduce([pk.to_set(g) for g in self.gens], pk, DEFAULT_BUDGET)
        return GroebnerBasis(self.order, self.variables, tuple(pk.to_poly(g) for g in red))

    def gen_set(self) -> frozenset[MultiPoly]:
        return frozenset(self.gens)

    def __str__(self) -> str:
        return "{" + ", ".join(str(g) for g in self.gens) + "}"


def _basis_from_sets(sets: list[frozenset[int]], pk: _Packer) -> GroebnerBasis:
    return GroebnerBasis(pk.order, pk.variables, tuple(pk.to_poly(s) for s in sets))


def s_polynomial(p: MultiPoly, q: MultiPoly, order: MonomialOrder) -> MultiPoly:
    """lcm/LT(p) * p + lcm/LT(q) * q over GF(2)."""
    if not p or not q:
        raise ValueError("S-polynomial of a zero polynomial")
    _same_vars(p, q)
    pk = _Packer(p.variables, order)
    ps, qs = pk.to_set(p), pk.to_set(q)
    return pk.to_poly(_spoly(ps, max(ps), qs, max(qs), pk))


def normal_form(
    p: MultiPoly, basis: Sequence[MultiPoly], order: MonomialOrder, budget: Budget = DEFAULT_BUDGET
) -> MultiPoly:
    """Remainder of ``p`` after complete reduction by ``basis``."""
    pk = _Packer(p.variables, order)
    b = []
    for g in basis:
        if not g:
            raise ValueError("zero polynomial in reduction basis")
        _same_vars(p, g)
        s = pk.to_set(g)
        b.append((max(s), s))
    b.sort(reverse=True)
    return pk.to_poly(_reduce(pk.to_set(p), b, pk, budget))


def buchberger(gens: Sequence[MultiPoly], order: MonomialOrder, budget: Budget = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = [g for g in gens]
    if not gens or not any(gens):
        raise ValueError("need at least one nonzero generator")
    variables = gens[0].variables
    for g in gens:
        _same_vars(gens[0], g)
    pk = _Packer(variables, order)
    return _basis_from_sets(_groebner([pk.to_set(g) for g in gens if g], pk, budget), pk)


def _monomial_content(p: MultiPoly) -> tuple[int, ...]:
    return tuple(min(e[i] for e in p.support) for i in range(len(p.variables)))


def _strip(p: MultiPoly) -> MultiPoly:
    c = _monomial_content(p)
    if not any(c):
        return p
    return MultiPoly(p.variables, frozenset(tuple(a - b for a, b in zip(e, c)) for e in p.support))


def _lt_ideal_equal(a: Sequence[tuple[int, ...]], b: Sequence[tuple[int, ...]]) -> bool:
    def covered(m, gens):
        return any(all(x <= y for x, y in zip(g, m)) for g in gens)

    return all(covered(m, a) for m in b) and all(covered(m, b) for m in a)


def saturate_xy(gens: Sequence[MultiPoly], order: MonomialOrder, budget: Budget = DEFAULT_BUDGET) -> GroebnerBasis:
    """Reduced basis of (I : (xy)^inf) for I = <gens> in Z_2[x, y].

    Computed by eliminating ``t`` from I + <1 + t*x*y>.
    """
    variables = ("x", "y")
    ext = ("t", "x", "y")
    elim = MonomialOrder("lex", ("t",) + (order.priority if order.kind == "lex" else ("x", "y")))
    rel = MultiPoly(ext, frozenset([(1, 1, 1), (0, 0, 0)]))
    gb = buchberger([g.extend(ext) for g in gens] + [rel], elim, budget)
    kept = [g.drop("t") for g in gb.gens if not g.uses("t")]
    if order.kind == "lex":
        return GroebnerBasis(order, variables, tuple(kept)).reduced()
    return buchberger(kept, order, budget)


def laurent_ideal_basis(
    f: LaurentPoly,
    g: LaurentPoly,
    extra: Sequence[LaurentPoly] = (),
    order: MonomialOrder = LEX_XY,
    budget: Budget = DEFAULT_BUDGET,
) -> GroebnerBasis:
    """Groebner basis of the contraction of the Laurent ideal <f, g, extra...>.

    Generators are shifted to non-negative exponents (monomials are units).
    If x and y are already units modulo the shifted ideal, its reduced basis
    is returned.  Otherwise the ideal is saturated by xy; when stripping the
    monomial content from the elements of the shifted basis already yields a
    basis of the saturation, that (minimal, possibly not tail-reduced) basis is
    returned, else the reduced basis of the saturation.
    """
    if not f or not g:
        raise ValueError("f and g must be nonzero")
    gens = [from_laurent(p) for p in (f, g, *extra) if p]
    plain = buchberger(gens, order, budget)
    if plain.is_unit():
        return plain
    xy = MultiPoly.monomial(("x", "y"), x=1, y=1)
    if buchberger(list(plain.gens) + [xy], order, budget).is_unit():
        return plain
    sat = saturate_xy(plain.gens, order, budget)
    if sat.is_unit():
        return sat
    stripped = [_strip(p) for p in plain.gens]
    pk = _Packer(("x", "y"), order)
    lts = [pk.unpack(max(pk.to_set(p))) for p in stripped]
    minimal = []
    for p, lt in sorted(zip(stripped, lts), key=lambda t: pk.pack(t[1])):
        if not any(all(a <= b for a, b in zip(m, lt)) for _, m in minimal):
            minimal.append((p, lt))
    if _lt_ideal_equal([m for _, m in minimal], sat.leading):
        return GroebnerBasis(order, ("x", "y"), tuple(p for p, _ in sorted(minimal, key=lambda t: pk.pack(t[1]), reverse=True)))
    return sat


def _monomial_nf(e: tuple[int, ...], gb: GroebnerBasis, pk: _Packer, basis, budget: Budget) -> set[int]:
    """Normal form of one monomial, using square-and-multiply for large exponents."""
    if max(e) <= 64:
        return _reduce({pk.pack(e)}, basis, pk, budget)
    result = _reduce({pk.pack((0,) * len(e))}, basis, pk, budget)
    for i, k in enumerate(e):
        unit = [0] * len(e)
        unit[i] = 1
        base = _reduce({pk.pack(unit)}, basis, pk, budget)
        while k:
            if k & 1:
                result = _reduce(_setmul(result, base), basis, pk, budget)
            k >>= 1
            if k:
                base = _reduce(_setmul(base, base), basis, pk, budget)
    return result


def _setmul(a: set[int], b: set[int]) -> set[int]:
    out: set[int] = set()
    for s in a:
        for t in b:
            u = s + t
            if u in out:
                out.remove(u)
            else:
                out.add(u)
    return out


def ideal_member(p: LaurentPoly, gb: GroebnerBasis, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Membership of a Laurent polynomial in the (saturated) ideal described by ``gb``."""
    if not p:
        return True
    mp = from_laurent(p, gb.variables)
    pk = gb.packer
    basis = sorted(((max(s), s) for s in (pk.to_set(g) for g in gb.gens)), reverse=True)
    acc: set[int] = set()
    for e in mp.support:
        acc ^= _monomial_nf(e, gb, pk, basis, budget)
    return not _reduce(acc, basis, pk, budget)


def ideal_equal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    if a.order != b.order or a.variables != b.variables:
        raise ValueError("bases use different orders or variables")
    return a.reduced().gen_set() == b.reduced().gen_set()


def principal_basis(p: LaurentPoly, order: MonomialOrder = LEX_XY) -> GroebnerBasis:
    return GroebnerBasis(order, ("x", "y"), (from_laurent(p),))


def intersect_principal(
    f: LaurentPoly, g: LaurentPoly, order: MonomialOrder = LEX_XY, budget: Budget = DEFAULT_BUDGET
) -> GroebnerBasis:
    """Basis of <f> cap <g>: eliminate t from <t f, (1 + t) g>."""
    if not f or not g:
        raise ValueError("f and g must be nonzero")
    ext = ("t", "x", "y")
    fp, gp = from_laurent(f, ext), from_laurent(g, ext)
    t = MultiPoly.monomial(ext, t=1)
    one_t = t + MultiPoly.one(ext)
    gb = buchberger([t * fp, one_t * gp], order.with_eliminated("t"), budget)
    kept = [p.drop("t") for p in gb.gens if not p.uses("t")]
    return GroebnerBasis(order, ("x", "y"), tuple(kept)).reduced()

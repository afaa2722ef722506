import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from toricgb.groebner import (
    GRLEX_XY,
    LEX_XY,
    LEX_YX,
    Budget,
    GroebnerBudgetExceeded,
    MonomialOrder,
    MultiPoly,
    buchberger,
    from_laurent,
    ideal_equal,
    ideal_member,
    intersect_principal,
    laurent_ideal_basis,
    normal_form,
    s_polynomial,
    saturate_xy,
)
from toricgb.poly2 import mul, parse

XY = ("x", "y")
orders = st.sampled_from([LEX_XY, LEX_YX, GRLEX_XY])


def multipolys(max_deg=4, max_terms=5, nonzero=True):
    exps = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg))
    polys = st.lists(exps, min_size=1, max_size=max_terms).map(lambda es: MultiPoly(XY, frozenset(_xor(es))))
    return polys.filter(bool) if nonzero else polys


def _xor(es):
    out = set()
    for e in es:
        out ^= {e}
    return out


def P(text, variables=XY):
    return from_laurent(parse(text), variables)


def gens_of(text_list):
    return frozenset(P(t) for t in text_list)


def test_worked_example_a():
    # f = 1 + x + x^-1 y^3, g = 1 + y + x^3 y^-1 under x > y
    gb = laurent_ideal_basis(parse("1 + x + x^-1*y^3"), parse("1 + y + x^3*y^-1"), order=LEX_XY)
    assert gb.gen_set() == gens_of(["1 + y + y^3 + y^5 + y^6", "x + x*y + x*y^2 + y^3 + y^6", "x + x^2 + y^3"])


def test_worked_example_b():
    gb = laurent_ideal_basis(parse("1 + x + x^-1*y^-3"), parse("1 + y + x^3*y^-1"), order=LEX_XY)
    assert gb.gen_set() == gens_of(
        [
            "1 + y + y^3 + y^4 + y^6 + y^10 + y^11",
            "x + y + x*y + y^2 + x*y^2 + y^5 + y^10",
            "x + x^2 + y^4 + y^5 + y^7 + y^10",
        ]
    )


def test_plain_basis_keeps_monomial_factor():
    # without the Laurent treatment the ideal of the shifted generators is not saturated
    f = P("x + x^2 + y^3")
    g = P("x + x^3 + x*y^2")
    plain = buchberger([f, g], LEX_XY)
    assert any(min(e[0] for e in p.support) > 0 or min(e[1] for e in p.support) > 0 for p in plain.gens)
    sat = saturate_xy([f, g], LEX_XY)
    assert not ideal_equal(plain, sat)


def test_unit_ideal():
    gb = laurent_ideal_basis(parse("1 + x"), parse("x"))
    assert gb.is_unit()


def test_budget_exceeded():
    with pytest.raises(GroebnerBudgetExceeded):
        laurent_ideal_basis(parse("1 + x + x^-1*y^-4"), parse("1 + y + x^4*y^-1"), budget=Budget(max_pairs=3))


def test_rejects_zero():
    with pytest.raises(ValueError):
        laurent_ideal_basis(parse("0"), parse("1 + x"))
    with pytest.raises(ValueError):
        buchberger([MultiPoly(XY)], LEX_XY)


def test_order_validation():
    with pytest.raises(ValueError):
        MonomialOrder("revlex", XY)
    with pytest.raises(ValueError):
        MonomialOrder("lex", ("x", "x"))


def test_intersection():
    f, g = parse("1 + x"), parse("1 + x + y")
    gb = intersect_principal(f, g)
    assert ideal_member(mul(f, g), gb)
    assert not ideal_member(f, gb)


def _is_groebner(gb):
    for p, q in itertools.combinations(gb.gens, 2):
        if normal_form(s_polynomial(p, q, gb.order), gb.gens, gb.order):
            return False
    return True


@given(st.lists(multipolys(), min_size=1, max_size=3), orders)
def test_s_polynomials_reduce_to_zero(gens, order):
    gb = buchberger(gens, order)
    assert _is_groebner(gb)
    for g in gens:
        assert not normal_form(g, gb.gens, order)


@given(st.lists(multipolys(), min_size=1, max_size=3), multipolys(max_deg=6, max_terms=8), orders)
def test_normal_form_idempotent(gens, p, order):
    gb = buchberger(gens, order)
    r = normal_form(p, gb.gens, order)
    assert normal_form(r, gb.gens, order) == r
    assert not normal_form(p + r, gb.gens, order)
    lts = gb.leading
    for e in r.support:
        assert not any(all(a <= b for a, b in zip(lt, e)) for lt in lts)


@given(st.lists(multipolys(), min_size=1, max_size=3), orders)
def test_basis_is_reduced(gens, order):
    gb = buchberger(gens, order)
    lts = gb.leading
    for i, g in enumerate(gb.gens):
        for e in g.support:
            for j, lt in enumerate(lts):
                if i != j:
                    assert not all(a <= b for a, b in zip(lt, e))


@settings(max_examples=200)
@given(st.lists(multipolys(), min_size=1, max_size=3), st.sampled_from([LEX_XY, GRLEX_XY]))
def test_matches_sympy(gens, order):
    x, y = sympy.symbols("x y")
    exprs = [sum((x**a * y**b for a, b in g.support), sympy.Integer(0)) for g in gens]
    ref = sympy.groebner(exprs, x, y, modulus=2, order=order.kind)
    mine = buchberger(gens, order)
    ref_polys = set()
    for r in ref.exprs:
        terms = sympy.Poly(r, x, y, modulus=2).terms()
        ref_polys.add(MultiPoly(XY, frozenset(m for m, c in terms if int(c) % 2)))
    assert mine.gen_set() == ref_polys


@given(multipolys(max_deg=3, max_terms=4), multipolys(max_deg=3, max_terms=4))
def test_saturation_contains_ideal(f, g):
    sat = saturate_xy([f, g], LEX_XY)
    for p in (f, g):
        assert not normal_form(p, sat.gens, LEX_XY)


def test_extra_torus_relations_leave_ideal_unchanged():
    f, g = parse("1 + x + x^-1*y^-3"), parse("1 + y + x^3*y^-1")
    extra = [parse("y^762 + 1"), parse("x^6*y^360 + 1")]
    assert ideal_equal(laurent_ideal_basis(f, g), laurent_ideal_basis(f, g, extra=extra))


def test_membership_and_normal_forms():
    gb = laurent_ideal_basis(parse("1 + x + x^-1*y^3"), parse("1 + y + x^3*y^-1"))
    assert ideal_member(parse("1 + y^12"), gb)
    assert not ideal_member(parse("1 + y^11"), gb)
    assert ideal_member(parse("0"), gb)
    assert normal_form(MultiPoly.monomial(XY, y=6), gb.gens, LEX_XY) == P("1 + y + y^3 + y^5")
    assert normal_form(MultiPoly.monomial(XY, x=2), [P("1 + x"), P("1 + y")], LEX_XY) == MultiPoly.one(XY)
    assert not normal_form(MultiPoly(XY), gb.gens, LEX_XY)


def test_monomial_multiple_is_same_laurent_ideal():
    from toricgb.groebner import principal_basis

    p = parse("1 + x + y^2")
    assert ideal_equal(laurent_ideal_basis(p, p), laurent_ideal_basis(p, mul(p, parse("x^3*y^-2"))))
    assert not ideal_equal(principal_basis(parse("1 + x")), principal_basis(parse("1 + x^2")))

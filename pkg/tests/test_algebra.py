import pytest
from hypothesis import assume, given

from conftest import tori, trinomials
from toricgb.algebra import (
    QuotientAlgebra,
    TwistedTorus,
    achieves_full_k,
    check_to_condition,
    factor_univariate,
    k_max,
    k_on_torus,
    minimal_full_k_twisted,
    minimal_period,
    minimal_untwisted_torus,
    standard_monomials,
    univariate_generator,
)
from toricgb.groebner import NotZeroDimensionalError, laurent_ideal_basis
from toricgb.lattice import CssCode, k_from_ranks
from toricgb.poly2 import parse

EXAMPLES = {
    # name: (f, g, dim R/<f,g>)
    "toric": ("1 + x", "1 + y", 1),
    "color": ("1 + x + x*y", "1 + y + x*y", 2),
    "ex3": ("1 + x + x^-1*y^3", "1 + y + x^3*y^-1", 8),
    "ex4": ("1 + x + x^-1*y^-3", "1 + y + x^3*y^-1", 13),
    "ex5": ("1 + x + x^-1*y^-4", "1 + y + x^4*y^-1", 20),
}


@pytest.mark.parametrize("name", sorted(EXAMPLES))
def test_quotient_dimension(name):
    f, g, dim = EXAMPLES[name]
    gb = laurent_ideal_basis(parse(f), parse(g))
    assert standard_monomials(gb).count == dim
    assert k_max(parse(f), parse(g)) == 2 * dim


def test_standard_monomials_ex3():
    gb = laurent_ideal_basis(parse("1 + x + x^-1*y^3"), parse("1 + y + x^3*y^-1"))
    assert set(standard_monomials(gb).monomials) == {(0, j) for j in range(6)} | {(1, 0), (1, 1)}


@pytest.mark.parametrize(
    "f,g,ly,lx",
    [
        ("1 + x + x^-1*y^3", "1 + y + x^3*y^-1", 12, 12),
        ("1 + x + x^-1*y^-3", "1 + y + x^3*y^-1", 762, 762),
    ],
)
def test_periods(f, g, ly, lx):
    assert minimal_untwisted_torus(parse(f), parse(g)) == (lx, ly)


def test_large_periods():
    f, g = parse("1 + x + x^-1*y^-4"), parse("1 + y + x^4*y^-1")
    assert univariate_generator(f, g, "y") == parse("1 + y^17 + y^20")
    assert univariate_generator(f, g, "x") == parse("1 + x + x^2 + x^18 + x^20")
    assert minimal_period(parse("1 + y^17 + y^20")) == 1048575
    assert minimal_period(parse("1 + x + x^2 + x^18 + x^20"), "x") == 69905


def test_univariate_in_x():
    f, g = parse("1 + x + x^-1*y^-3"), parse("1 + y + x^3*y^-1")
    h = univariate_generator(f, g, "x")
    assert minimal_period(h, "x") == 762
    fac = factor_univariate(h, "x")
    assert fac.product() == h


def test_twisted_full_k():
    f, g = parse("1 + x + x^-1*y^-3"), parse("1 + y + x^3*y^-1")
    assert achieves_full_k(f, g, TwistedTorus(762, 6, 360))
    assert not achieves_full_k(f, g, TwistedTorus(762, 5, 360))
    tw = minimal_full_k_twisted(f, g)
    assert (tw.a1, tw.a2) == ((0, 762), (6, 360))
    assert k_on_torus(f, g, tw) == 26


def test_to_condition():
    assert check_to_condition(parse("1 + x"), parse("1 + y"))
    assert not check_to_condition(parse("1 + x"), parse("1 + x"))
    assert not check_to_condition(parse("1 + x + x*y + y"), parse("1 + x^2"))  # common factor 1 + x


def test_not_zero_dimensional():
    gb = laurent_ideal_basis(parse("1 + x"), parse("1 + x^3"))
    with pytest.raises(NotZeroDimensionalError):
        standard_monomials(gb)


def test_period_errors():
    with pytest.raises(ValueError):
        minimal_period(parse("y + y^2"))
    with pytest.raises(ValueError):
        minimal_period(parse("0"))


def test_torus_normalizes_gamma():
    assert TwistedTorus(6, 2, 8) == TwistedTorus(6, 2, 2)
    with pytest.raises(ValueError):
        TwistedTorus(0, 1, 0)


@given(trinomials(), trinomials(), tori())
def test_k_methods_agree(f, g, torus):
    k = k_on_torus(f, g, torus)
    assert k == k_from_ranks(CssCode(f, g, torus))
    assert k % 2 == 0 and 0 <= k <= torus.n


@given(trinomials(2), trinomials(2), tori(max_alpha=12, max_beta=6))
def test_k_bounded_by_k_max(f, g, torus):
    assume(check_to_condition(f, g))
    km = k_max(f, g)
    k = k_on_torus(f, g, torus)
    assert k <= km
    assert (k == km) == achieves_full_k(f, g, torus)
    assert k_on_torus(f, g, torus, method="quotient") == k


@given(trinomials(2), trinomials(2))
def test_quotient_algebra_commutes(f, g):
    assume(check_to_condition(f, g))
    qa = QuotientAlgebra.of(f, g)
    assert ((qa.mx.astype(int) @ qa.my) % 2 == (qa.my.astype(int) @ qa.mx) % 2).all()
    assert not qa.element(f).any() and not qa.element(g).any()


@given(trinomials(), trinomials(), tori())
def test_k_invariant_under_antipode(f, g, torus):
    from toricgb.poly2 import antipode

    assert k_on_torus(antipode(f), antipode(g), torus) == k_on_torus(f, g, torus)


@given(trinomials(2), trinomials(2))
def test_quotient_dimension_order_invariant(f, g):
    from toricgb.groebner import LEX_YX

    assume(check_to_condition(f, g))
    assert k_max(f, g) == k_max(f, g, order=LEX_YX)

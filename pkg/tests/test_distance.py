import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricgb.algebra import TwistedTorus
from toricgb.distance import (
    DistancePolicy,
    NoLogicalSpace,
    brute_force_distance,
    css_distance,
    distance_exact,
    distance_upper_ris,
    exact_side,
    is_logical,
)
from toricgb.lattice import CssCode
from toricgb.poly2 import parse
from toricgb.search import enumerate_tori, torus_candidates


def _small_codes(max_n=40):
    out = []
    for n in range(6, max_n + 1, 2):
        for t in enumerate_tori(n):
            for c in torus_candidates(t):
                out.append((c.f, c.g, t))
    return out


SMALL = _small_codes()
small_codes = st.sampled_from(SMALL)


def _code(f, g, a1, a2):
    return CssCode(parse(f), parse(g), TwistedTorus.from_vectors(a1, a2))


def test_known_distances():
    code = _code("1 + x + y", "1 + y + x^-1*y", (0, 3), (3, 0))
    res = distance_exact(code)
    assert (res.d, res.exact) == (4, True)
    assert is_logical(code.hz, code.hx, res.witness) or is_logical(code.hx, code.hz, res.witness)


def test_toric_code_distance():
    code = CssCode(parse("1 + x"), parse("1 + y"), TwistedTorus(5, 5, 0))
    assert distance_exact(code).d == 5
    assert brute_force_distance(code.hx, code.hz) == 5


def test_cap_reports_lower_bound():
    code = _code("1 + x + x^-1*y^3", "1 + y + x^3*y^-1", (0, 12), (3, 3))
    res = distance_exact(code, cap=5)
    assert not res.exact and res.lower_bound == 6 and res.d >= 8


def test_no_logical_space():
    code = CssCode(parse("1 + x + y"), parse("1 + y + x*y"), TwistedTorus(3, 3, 0))
    with pytest.raises(NoLogicalSpace):
        distance_exact(code)
    with pytest.raises(NoLogicalSpace):
        distance_upper_ris(code, 10)


def test_policy_validation():
    with pytest.raises(ValueError):
        DistancePolicy(kind="bz")
    with pytest.raises(ValueError):
        DistancePolicy(cap=0)


@settings(max_examples=300)
@given(small_codes)
def test_exact_matches_brute_force(fgt):
    code = CssCode(*fgt)
    try:
        ref = brute_force_distance(code.hx, code.hz)
    except ValueError:
        return
    ref_z = brute_force_distance(code.hz, code.hx)
    assert ref == ref_z
    res = distance_exact(code, cap=30, seed_trials=1)
    assert res.exact and res.d == ref
    # unrestricted seeds (no translation symmetry used) agree too
    w, wit, _, _ = exact_side(code.hz, code.hx, code.n + 1)
    assert w == ref and is_logical(code.hz, code.hx, wit)


@given(small_codes, st.integers(0, 2**31 - 1), st.integers(1, 20))
def test_ris_deterministic_and_sound(fgt, seed, trials):
    code = CssCode(*fgt)
    a = distance_upper_ris(code, trials, seed)
    b = distance_upper_ris(code, trials, seed)
    assert a.d == b.d and (a.witness == b.witness).all()
    assert is_logical(code.hz, code.hx, a.witness) or is_logical(code.hx, code.hz, a.witness)
    assert a.witness.sum() == a.d


@settings(max_examples=100)
@given(small_codes)
def test_ris_upper_bounds_exact(fgt):
    code = CssCode(*fgt)
    assert distance_upper_ris(code, 50).d >= distance_exact(code).d


def test_css_distance_dispatch():
    code = _code("1 + x + y", "1 + y + x^-1*y", (0, 3), (3, 0))
    assert css_distance(code, DistancePolicy("ris", trials=200)).d == 4
    assert not css_distance(code, DistancePolicy("ris", trials=200)).exact


@settings(max_examples=100)
@given(small_codes, st.integers(0, 2**31 - 1))
def test_ris_monotone_in_trials(fgt, seed):
    # trial t uses a stream derived from (seed, t), so more trials only add candidates
    code = CssCode(*fgt)
    ds = [distance_upper_ris(code, t, seed).d for t in (1, 5, 25)]
    assert ds[0] >= ds[1] >= ds[2]


@settings(max_examples=100)
@given(small_codes)
def test_xy_symmetric_pairs_have_equal_sides(fgt):
    from toricgb.poly2 import LaurentPoly

    f, _, t = fgt
    g = LaurentPoly.from_terms((j, i) for i, j in f.support)
    code = CssCode(f, g, t)
    try:
        dx = distance_exact(code, sides="X", cap=40)
    except NoLogicalSpace:
        return
    dz = distance_exact(code, sides="Z", cap=40)
    assert dx.d == dz.d


def test_bb_144_exact():
    code = _code("1 + x + x^-1*y^3", "1 + y + x^3*y^-1", (0, 12), (6, 0))
    res = css_distance(code, DistancePolicy("exact", cap=12))
    assert (res.d, res.exact) == (12, True)

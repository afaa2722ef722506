import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from toricgb import gf2linalg, gf2poly

polys = st.integers(0, (1 << 40) - 1)
nonzero = st.integers(1, (1 << 40) - 1)


def test_known_orders():
    assert gf2poly.order(0b111) == 3
    assert gf2poly.order(0b1011) == 7
    assert gf2poly.order(0b11) == 1
    assert gf2poly.order(0b101) == 2  # (1+x)^2
    assert gf2poly.order((1 << 20) | (1 << 17) | 1) == 1048575


def test_factor_product():
    h = (1 << 6) | (1 << 5) | (1 << 3) | 0b11
    out = 1
    for p, m in gf2poly.factor(h):
        assert gf2poly.is_irreducible(p)
        for _ in range(m):
            out = gf2poly.mul(out, p)
    assert out == h


def test_order_rejects_multiple_of_x():
    with pytest.raises(ValueError):
        gf2poly.order(0b110)


@given(polys, nonzero)
def test_divmod(a, b):
    q, r = gf2poly.divmod2(a, b)
    assert gf2poly.mul(q, b) ^ r == a
    assert r == 0 or gf2poly.deg(r) < gf2poly.deg(b)


@given(nonzero, nonzero, nonzero)
def test_gcd_divisibility_laws(a, b, c):
    g = gf2poly.gcd(a, b)
    assert gf2poly.mod(a, g) == 0 and gf2poly.mod(b, g) == 0
    assert gf2poly.gcd(gf2poly.mul(a, c), gf2poly.mul(b, c)) == gf2poly.mul(g, c)
    assert gf2poly.gcd(a, b) == gf2poly.gcd(b, a)
    assert gf2poly.gcd(a, gf2poly.mul(a, c)) == a


@settings(max_examples=120)
@given(st.integers(1, 120))
def test_order_divides_period(n):
    # x^n - 1 divides x^m - 1 exactly when n | m
    assert gf2poly.order(gf2poly.x_pow_minus_one(n)) == n


matrices = hnp.arrays(np.uint8, st.tuples(st.integers(1, 20), st.integers(1, 90)), elements=st.integers(0, 1))


@given(matrices)
def test_rank_nullspace(m):
    r = gf2linalg.rank(m)
    ns = gf2linalg.nullspace(m)
    assert ns.shape[0] == m.shape[1] - r
    if ns.shape[0]:
        assert not gf2linalg.matmul(m, ns.T).any()
        assert gf2linalg.rank(ns) == ns.shape[0]


@given(matrices)
def test_pack_roundtrip(m):
    assert (gf2linalg.unpack(gf2linalg.pack(m), m.shape[1]) == m).all()


def test_rank_matches_reference():
    rng = np.random.default_rng(7)
    for _ in range(50):
        m = rng.integers(0, 2, size=(rng.integers(1, 30), rng.integers(1, 80)), dtype=np.uint8)
        ref = _rank_reference(m)
        assert gf2linalg.rank(m) == ref


def _rank_reference(m):
    a = m.copy().astype(np.uint8)
    r = 0
    for c in range(a.shape[1]):
        piv = [i for i in range(r, a.shape[0]) if a[i, c]]
        if not piv:
            continue
        a[[r, piv[0]]] = a[[piv[0], r]]
        for i in range(a.shape[0]):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
    return r

import csv
import io
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricgb.algebra import TwistedTorus, k_on_torus
from toricgb.distance import distance_exact
from toricgb.lattice import CssCode
from toricgb.search import (
    CSV_COLUMNS,
    CodeRecord,
    SearchSpace,
    code_polys,
    enumerate_tori,
    is_degenerate,
    orbit_representative,
    rank_key,
    run_search,
    search_n,
    select_optimal,
    swapped_torus,
    symmetry_orbit,
    torus_candidates,
    torus_k_table,
    write_csv,
)

TABLE_SMALL = {12: (4, 2), 14: (6, 2), 18: (4, 4), 24: (4, 4), 28: (6, 4), 30: (4, 6)}


def _rec(**kw):
    base = dict(f="1 + x + x*y", g="1 + y + x*y", alpha=6, beta=1, gamma=5, n=12, k=4, d=2, d_exact=True, merit=Fraction(4, 3), locality=1)
    base.update(kw)
    return CodeRecord(**base)


def test_enumerate_tori():
    tori = enumerate_tori(12)
    assert all(t.n == 12 for t in tori)
    assert len({(t.alpha, t.beta, t.gamma) for t in tori}) == len(tori) == 1 + 2 + 3 + 6
    with pytest.raises(ValueError):
        enumerate_tori(7)


def test_swapped_torus_is_involution():
    for n in (12, 18, 24, 30):
        for t in enumerate_tori(n):
            sw = swapped_torus(t)
            assert sw.n == t.n
            assert swapped_torus(sw) == t


def test_k_table_matches_groebner():
    t = TwistedTorus(4, 2, 1)
    table = torus_k_table(t)
    for r1 in range(t.cells):
        for r2 in range(t.cells):
            ab, cd = divmod(r1, t.alpha), divmod(r2, t.alpha)
            if is_degenerate(t, ab, cd):
                continue
            f, g = code_polys(t, ab, cd)
            assert table[r1, r2] == k_on_torus(f, g, t)


small_pairs = st.sampled_from([(t, divmod(r1, t.alpha), divmod(r2, t.alpha)) for n in range(8, 31, 2) for t in enumerate_tori(n) for r1 in range(t.cells) for r2 in range(0, t.cells, 3)])


@settings(max_examples=300)
@given(small_pairs)
def test_orbit_preserves_parameters(tp):
    # dedup soundness: every symmetric image has the same k and d
    t, ab, cd = tp
    if is_degenerate(t, ab, cd):
        return
    f, g = code_polys(t, ab, cd)
    k = k_on_torus(f, g, t)
    d = distance_exact(CssCode(f, g, t)).d if k else None
    for key in symmetry_orbit(t, ab, cd):
        t2 = TwistedTorus(key.alpha, key.beta, key.gamma)
        f2, g2 = code_polys(t2, key.ab, key.cd)
        assert k_on_torus(f2, g2, t2) == k
        if k:
            assert distance_exact(CssCode(f2, g2, t2)).d == d
    rep = orbit_representative(t, ab, cd)
    assert rep in symmetry_orbit(t, ab, cd)


@pytest.mark.parametrize("n", [12, 18, 24])
def test_dedup_keeps_optimum(n):
    a, _ = search_n(n, SearchSpace((n,), dedup=True, prune=False))
    b, _ = search_n(n, SearchSpace((n,), dedup=False, prune=False))
    best = lambda recs: (recs[0].merit, recs[0].k, recs[0].d)
    assert best(a) == best(b)
    assert len(a) < len(b)


def test_pruning_keeps_optimum():
    a, sa = search_n(24, SearchSpace((24,), prune=True))
    b, sb = search_n(24, SearchSpace((24,), prune=False))
    assert (a[0].k, a[0].d, a[0].merit) == (b[0].k, b[0].d, b[0].merit)
    assert sa["distance_evaluations"] <= sb["distance_evaluations"]


def test_run_search_small_table(tmp_path):
    buf = io.StringIO()
    summary = run_search(SearchSpace(tuple(range(12, 31, 2))), out=buf)
    got = {n: (r.k, r.d) for n, r in summary.optima.items()}
    assert got == TABLE_SMALL
    assert all(r.d_exact for r in summary.optima.values())
    lines = buf.getvalue().splitlines()
    assert len(lines) == summary.records
    assert CodeRecord.from_json(lines[0]).n == 12


def test_search_deterministic_across_workers():
    s = SearchSpace((18, 24))
    a = run_search(s, workers=1)
    b = run_search(s, workers=2)
    assert a.optima == b.optima


def test_d_order():
    s = run_search(SearchSpace((24,), order="d"))
    assert s.optima[24].d == 4


def test_record_roundtrip_and_validation():
    r = _rec()
    assert CodeRecord.from_json(r.to_json()) == r
    with pytest.raises(ValueError):
        _rec(merit=Fraction(2))


def test_select_optimal_ties():
    a = _rec(locality=2)
    b = _rec(locality=1, g="1 + y^-1 + y")
    c = _rec(k=2, merit=Fraction(2, 3))
    assert select_optimal([a, b, c]) == [b]
    assert select_optimal([a, c], n=14) == []
    assert rank_key(a) < rank_key(c)


def test_csv_header():
    buf = io.StringIO()
    write_csv([_rec()], buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert rows[0] == CSV_COLUMNS
    assert rows[1][0] == "[[12,4,2]]" and rows[1][5] == "1.33"


def test_torus_candidates_have_k():
    for c in torus_candidates(TwistedTorus(6, 1, 5)):
        assert c.k == k_on_torus(c.f, c.g, c.torus) > 0

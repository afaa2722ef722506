"""Search over generalized toric codes f = 1 + x + x^a y^b, g = 1 + y + x^c y^d.

For each even n every twisted torus a1 = (0, m), a2 = (l, q) with n = 2 l m and
0 <= q < m is scanned; (a, b) and (c, d) run over the cells of the torus.
k for a whole torus is computed in one numba kernel (rank of H_X), symmetric
duplicates are dropped, and distances are evaluated best-first by an upper
bound on the merit k d^2 / n so that most candidates never need an exact
distance.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, TextIO

import numba as nb
import numpy as np

from .algebra import TwistedTorus
from .distance import DistancePolicy, _cosets, exact_side, ris_side, torus_roots
from .gf2linalg import _eliminate
from .lattice import CssCode, reduce_point
from .poly2 import LaurentPoly, parse, render

log = logging.getLogger(__name__)

DEFAULT_SEED = 0xC0DE


def enumerate_tori(n: int) -> list[TwistedTorus]:
    """All (alpha=m, beta=l, gamma=q) with n = 2 l m and 0 <= q < m."""
    if n < 2 or n % 2:
        raise ValueError(f"n must be a positive even integer, got {n}")
    half = n // 2
    out = []
    for m in range(1, half + 1):
        if half % m == 0:
            for q in range(m):
                out.append(TwistedTorus(m, half // m, q))
    return out


def nearest_representative(torus: TwistedTorus, p: tuple[int, int]) -> tuple[int, int]:
    """Lattice translate of p with the smallest Chebyshev norm (ties: L1 norm, then value)."""
    i0, j0 = reduce_point(torus, p)
    a, b, c = torus.alpha, torus.beta, torus.gamma
    reach = max(a, b) // b + 2
    best = None
    for t in range(-reach, reach + 1):
        i = i0 + t * b
        jt = (j0 + t * c) % a
        for j in (jt, jt - a):
            key = (max(abs(i), abs(j)), abs(i) + abs(j), -i, -j)
            if best is None or key < best[0]:
                best = (key, (i, j))
    return best[1]


def code_polys(torus: TwistedTorus, ab: tuple[int, int], cd: tuple[int, int]) -> tuple[LaurentPoly, LaurentPoly]:
    a, b = nearest_representative(torus, ab)
    c, d = nearest_representative(torus, cd)
    f = LaurentPoly.from_terms([(0, 0), (1, 0), (a, b)])
    g = LaurentPoly.from_terms([(0, 0), (0, 1), (c, d)])
    return f, g


def locality(torus: TwistedTorus, ab: tuple[int, int], cd: tuple[int, int]) -> int:
    a, b = nearest_representative(torus, ab)
    c, d = nearest_representative(torus, cd)
    return max(1, abs(a), abs(b), abs(c), abs(d))


def is_degenerate(torus: TwistedTorus, ab: tuple[int, int], cd: tuple[int, int]) -> bool:
    """True if f or g has fewer than three distinct terms on the torus."""
    fz = {reduce_point(torus, e) for e in [(0, 0), (1, 0), ab]}
    gz = {reduce_point(torus, e) for e in [(0, 0), (0, 1), cd]}
    return len(fz) < 3 or len(gz) < 3


def enumerate_codes(torus: TwistedTorus) -> Iterator[tuple[LaurentPoly, LaurentPoly]]:
    """Non-degenerate (f, g) pairs with exponents over the cells of the torus."""
    cells = [(i, j) for i in range(torus.beta) for j in range(torus.alpha)]
    for ab in cells:
        for cd in cells:
            if not is_degenerate(torus, ab, cd):
                yield code_polys(torus, ab, cd)


# --- k for a whole torus ------------------------------------------------------


@nb.njit(cache=True)
def _cell(alpha, beta, gamma, i, j):
    ii = i % beta
    q = (i - ii) // beta
    return ii * alpha + (j - q * gamma) % alpha


@nb.njit(cache=True)
def _torus_k_table(alpha, beta, gamma):
    """k for every (a,b), (c,d) cell pair; -1 marks degenerate pairs."""
    cells = alpha * beta
    add = np.empty((cells, cells), dtype=np.int64)
    for c in range(cells):
        ci, cj = c // alpha, c % alpha
        for r in range(cells):
            ri, rj = r // alpha, r % alpha
            add[c, r] = _cell(alpha, beta, gamma, ci + ri, cj + rj)
    xcell = _cell(alpha, beta, gamma, 1, 0)
    ycell = _cell(alpha, beta, gamma, 0, 1)
    nw = (2 * cells + 63) // 64
    out = np.full((cells, cells), -1, dtype=np.int64)
    order = np.arange(2 * cells)
    mat = np.zeros((cells, nw), dtype=np.uint64)
    for ra in range(cells):
        if ra == 0 or ra == xcell or xcell == 0:
            continue
        for rc in range(cells):
            if rc == 0 or rc == ycell or ycell == 0:
                continue
            mat[:, :] = 0
            for c in range(cells):
                for t in range(3):
                    col = add[c, 0] if t == 0 else (add[c, xcell] if t == 1 else add[c, ra])
                    mat[c, col >> 6] ^= np.uint64(1) << np.uint64(col & 63)
                    col2 = cells + (add[c, 0] if t == 0 else (add[c, ycell] if t == 1 else add[c, rc]))
                    mat[c, col2 >> 6] ^= np.uint64(1) << np.uint64(col2 & 63)
            r = _eliminate(mat, 2 * cells, order).shape[0]
            out[ra, rc] = 2 * (cells - r)
    return out


def torus_k_table(torus: TwistedTorus) -> np.ndarray:
    return _torus_k_table(torus.alpha, torus.beta, torus.gamma)


# --- symmetry reduction ---------------------------------------------------------


def swapped_torus(torus: TwistedTorus) -> TwistedTorus:
    """Hermite form of the lattice with x and y exchanged."""
    a, b, c = torus.alpha, torus.beta, torus.gamma
    # swapped lattice is spanned by (a, 0) and (c, b)
    g0, s, t = _ext_gcd(a, c)
    beta2 = g0
    alpha2 = a * b // beta2
    gamma2 = (t * b) % alpha2
    return TwistedTorus(alpha2, beta2, gamma2)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return a, 1, 0
    g0, s, t = _ext_gcd(b, a % b)
    return g0, t, s - (a // b) * t


@dataclass(frozen=True, order=True)
class CandidateKey:
    alpha: int
    beta: int
    gamma: int
    ab: tuple[int, int]
    cd: tuple[int, int]


def _canon(torus: TwistedTorus, ab, cd) -> CandidateKey:
    return CandidateKey(torus.alpha, torus.beta, torus.gamma, reduce_point(torus, ab), reduce_point(torus, cd))


def symmetry_orbit(torus: TwistedTorus, ab: tuple[int, int], cd: tuple[int, int]) -> list[CandidateKey]:
    """Images under inversion and x<->y exchange (with f and g exchanged)."""
    a, b = ab
    c, d = cd
    out = [_canon(torus, ab, cd), _canon(torus, (1 - a, -b), (-c, 1 - d))]
    sw = swapped_torus(torus)
    for (a2, b2), (c2, d2) in [((a, b), (c, d)), ((1 - a, -b), (-c, 1 - d))]:
        out.append(_canon(sw, (d2, c2), (b2, a2)))
    return out


def orbit_representative(torus: TwistedTorus, ab, cd) -> CandidateKey:
    def rank_key(k: CandidateKey):
        t = TwistedTorus(k.alpha, k.beta, k.gamma)
        return (locality(t, k.ab, k.cd), k)

    return min(symmetry_orbit(torus, ab, cd), key=rank_key)


# --- records --------------------------------------------------------------------


@dataclass(frozen=True)
class CodeRecord:
    f: str
    g: str
    alpha: int
    beta: int
    gamma: int
    n: int
    k: int
    d: int
    d_exact: bool
    merit: Fraction
    locality: int

    def __post_init__(self):
        if self.merit != Fraction(self.k * self.d * self.d, self.n):
            raise ValueError("merit inconsistent with n, k, d")

    @property
    def torus(self) -> TwistedTorus:
        return TwistedTorus(self.alpha, self.beta, self.gamma)

    def code(self) -> CssCode:
        return CssCode(parse(self.f), parse(self.g), self.torus)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "k": self.k,
                "d": self.d,
                "d_exact": self.d_exact,
                "f": self.f,
                "g": self.g,
                "a1": [0, self.alpha],
                "a2": [self.beta, self.gamma],
                "merit": str(self.merit),
                "locality": self.locality,
            }
        )

    @classmethod
    def from_json(cls, line: str) -> CodeRecord:
        obj = json.loads(line)
        return cls(
            f=obj["f"],
            g=obj["g"],
            alpha=obj["a1"][1],
            beta=obj["a2"][0],
            gamma=obj["a2"][1],
            n=obj["n"],
            k=obj["k"],
            d=obj["d"],
            d_exact=obj["d_exact"],
            merit=Fraction(obj["merit"]),
            locality=obj["locality"],
        )

    def tiebreak(self) -> tuple:
        return (self.f, self.g, self.alpha, self.beta, self.gamma)


ORDERS = ("merit", "d")


def rank_key(rec: CodeRecord, order: str = "merit") -> tuple:
    """Sort key, smallest is best."""
    if order == "merit":
        head = (-rec.merit, -rec.d, -rec.k)
    elif order == "d":
        head = (-rec.d, -rec.k)
    else:
        raise ValueError(f"unknown order {order!r}")
    return head + (rec.locality,) + rec.tiebreak()


def select_optimal(records: Iterable[CodeRecord], n: int | None = None, order: str = "merit") -> list[CodeRecord]:
    """Records tied for the best (merit or d, then k), reduced to the most local one."""
    recs = list(records)
    if n is not None:
        recs = [r for r in recs if r.n == n]
    if not recs:
        return []
    best = min(recs, key=lambda r: rank_key(r, order))
    return [best]


# --- evaluation -----------------------------------------------------------------


@dataclass(frozen=True)
class SearchSpace:
    n_values: tuple[int, ...]
    policy: DistancePolicy = DistancePolicy()
    order: str = "merit"
    dedup: bool = True
    prune: bool = True
    filter_trials: int = 30
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        for n in self.n_values:
            if n < 2 or n % 2:
                raise ValueError(f"n values must be even and >= 2, got {n}")
        if self.order not in ORDERS:
            raise ValueError(f"order must be one of {ORDERS}")


@dataclass
class Candidate:
    key: CandidateKey
    k: int
    locality: int
    f: LaurentPoly
    g: LaurentPoly
    upper_d: int = 0

    @property
    def torus(self) -> TwistedTorus:
        return TwistedTorus(self.key.alpha, self.key.beta, self.key.gamma)


def torus_candidates(torus: TwistedTorus, dedup: bool = True) -> list[Candidate]:
    """Non-degenerate pairs with k > 0 on one torus (orbit representatives only if ``dedup``)."""
    table = torus_k_table(torus)
    out = []
    ra, rc = np.nonzero(table > 0)
    for r1, r2 in zip(ra.tolist(), rc.tolist()):
        ab = divmod(r1, torus.alpha)
        cd = divmod(r2, torus.alpha)
        key = _canon(torus, ab, cd)
        if dedup and orbit_representative(torus, ab, cd) != key:
            continue
        f, g = code_polys(torus, ab, cd)
        out.append(Candidate(key, int(table[r1, r2]), locality(torus, ab, cd), f, g))
    return out


def _record(c: Candidate, d: int, exact: bool) -> CodeRecord:
    t = c.torus
    return CodeRecord(render(c.f), render(c.g), t.alpha, t.beta, t.gamma, t.n, c.k, d, exact, Fraction(c.k * d * d, t.n), c.locality)


def evaluate(f: LaurentPoly, g: LaurentPoly, torus: TwistedTorus, policy: DistancePolicy = DistancePolicy(), seed: int = DEFAULT_SEED):
    """Full record for one code, or (None, reason) when it is skipped."""
    try:
        code = CssCode(f, g, torus)
    except ValueError as exc:
        return None, str(exc)
    fz = {reduce_point(torus, e) for e in f.support}
    gz = {reduce_point(torus, e) for e in g.support}
    if len(fz) < 3 or len(gz) < 3:
        return None, "degenerate polynomial on this torus"
    from .lattice import k_from_ranks

    k = k_from_ranks(code)
    if k == 0:
        return None, "k = 0"
    hx, hz = code.checks
    d, exact = _distance(hx, hz, code, policy, seed)
    loc = max(max(abs(i), abs(j)) for i, j in (f.support | g.support))
    return CodeRecord(render(f), render(g), torus.alpha, torus.beta, torus.gamma, torus.n, k, d, exact, Fraction(k * d * d, torus.n), loc), None


def _distance(hx, hz, code: CssCode, policy: DistancePolicy, seed: int, upper: int | None = None, logicals=None):
    """X-side distance; the Z side is permutation equivalent for this family."""
    if logicals is None:
        logicals = _cosets(hz, hx)
    if upper is None:
        trials = policy.trials if policy.kind == "ris" else policy.ris_seed_trials
        upper, _ = ris_side(hx, hz, trials, seed, logicals)
    if policy.kind == "ris":
        return upper, False
    roots, forbid = torus_roots(code)
    limit = min(upper, policy.cap + 1)
    w, _, _, aborted = exact_side(hx, hz, limit, roots, forbid, policy.max_nodes, logicals)
    if w is not None:
        return w, not aborted
    if upper <= policy.cap:
        return upper, not aborted
    # heavier than the cap: the filter bound is weak, so spend the full RIS budget
    ub, _ = ris_side(hx, hz, policy.trials, seed, logicals)
    return min(ub, upper), False


def _upper_bound(c: Candidate, trials: int, seed: int) -> int:
    code = CssCode(c.f, c.g, c.torus)
    hx, hz = code.checks
    ub, _ = ris_side(hx, hz, trials, seed)
    return ub


def _scan_torus(args) -> list[Candidate]:
    torus, dedup, filter_trials, seed = args
    cands = torus_candidates(torus, dedup)
    for c in cands:
        c.upper_d = _upper_bound(c, filter_trials, seed)
    return cands


def search_n(n: int, space: SearchSpace, workers: int = 1) -> tuple[list[CodeRecord], dict]:
    """All evaluated records for one n plus statistics."""
    tori = enumerate_tori(n)
    jobs = [(t, space.dedup, space.filter_trials, space.seed) for t in tori]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_scan_torus, jobs, chunksize=4))
    else:
        parts = [_scan_torus(j) for j in jobs]
    cands = [c for part in parts for c in part]
    stats = {"n": n, "tori": len(tori), "candidates": len(cands), "distance_evaluations": 0}

    def upper_merit(c: Candidate) -> Fraction:
        return Fraction(c.k * c.upper_d * c.upper_d, n)

    def sort_key(c: Candidate):
        if space.order == "merit":
            return (-upper_merit(c), -c.upper_d, -c.k, c.locality, c.key)
        return (-c.upper_d, -c.k, c.locality, c.key)

    cands.sort(key=sort_key)
    records: list[CodeRecord] = []
    best: CodeRecord | None = None
    for c in cands:
        if space.prune and best is not None and best.d_exact:
            if space.order == "merit" and upper_merit(c) < best.merit:
                break
            if space.order == "d" and (c.upper_d, c.k) < (best.d, best.k):
                break
        code = CssCode(c.f, c.g, c.torus)
        hx, hz = code.checks
        d, exact = _distance(hx, hz, code, space.policy, space.seed, upper=c.upper_d)
        stats["distance_evaluations"] += 1
        rec = _record(c, d, exact)
        records.append(rec)
        if best is None or rank_key(rec, space.order) < rank_key(best, space.order):
            best = rec
    records.sort(key=lambda r: rank_key(r, space.order))
    return records, stats


@dataclass
class SearchSummary:
    optima: dict[int, CodeRecord] = field(default_factory=dict)
    stats: list[dict] = field(default_factory=list)
    records: int = 0


def run_search(space: SearchSpace, workers: int = 1, out: TextIO | None = None) -> SearchSummary:
    """Search every n in ``space``; records stream to ``out`` as JSON lines."""
    summary = SearchSummary()
    for n in sorted(set(space.n_values)):
        recs, stats = search_n(n, space, workers)
        log.info("n=%d: %d candidates, %d distance evaluations", n, stats["candidates"], stats["distance_evaluations"])
        summary.stats.append(stats)
        summary.records += len(recs)
        if out is not None:
            for r in recs:
                out.write(r.to_json() + "\n")
            out.flush()
        opt = select_optimal(recs, n, space.order)
        if opt:
            summary.optima[n] = opt[0]
    return summary


CSV_COLUMNS = ["[[n,k,d]]", "f(x,y)", "g(x,y)", "a1", "a2", "kd^2/n", "d_exact", "locality"]


def write_csv(records: Iterable[CodeRecord], out: TextIO):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow(
            [
                f"[[{r.n},{r.k},{r.d}]]",
                r.f,
                r.g,
                f"(0,{r.alpha})",
                f"({r.beta},{r.gamma})",
                f"{float(r.merit):.2f}",
                "yes" if r.d_exact else "no",
                r.locality,
            ]
        )


def format_table(records: Iterable[CodeRecord]) -> str:
    buf = io.StringIO()
    rows = [[f"[[{r.n},{r.k},{r.d}]]", r.f, r.g, f"(0,{r.alpha})", f"({r.beta},{r.gamma})", f"{float(r.merit):.2f}"] for r in records]
    head = ["[[n,k,d]]", "f", "g", "a1", "a2", "kd^2/n"]
    widths = [max(len(str(x)) for x in col) for col in zip(head, *rows)] if rows else [len(h) for h in head]
    for row in [head] + rows:
        buf.write("  ".join(str(x).ljust(w) for x, w in zip(row, widths)).rstrip() + "\n")
    return buf.getvalue()

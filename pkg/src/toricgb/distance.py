"""CSS code distance: random-information-set upper bounds and an exact search.

X-type logicals are vectors e with H_Z e = 0 that are not in the row space of
H_X; they are recognised by an odd overlap with some Z-type logical coset
representative.  The Z side is the same with the matrices exchanged.

Exact search.  A minimum-weight logical is connected through shared checks
(a disconnected one splits into two syndrome-free pieces, one of which is a
lighter logical), and on a torus every logical has a translate touching cell 0.
So it suffices to grow supports from the qubit(s) at cell 0: pick an unsatisfied
check, branch on which of its free qubits is the first one added, and prune with
|T| + ceil(#unsatisfied / max column weight) >= incumbent.  A syndrome-free
support that is a stabilizer is pruned too, since any logical containing it
would contain a lighter one.  The incumbent starts at a random-information-set
bound, so a completed search certifies the distance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numba as nb
import numpy as np

from .gf2linalg import _eliminate, nullspace, pack, popcount64, rank, rref
from .lattice import CssCode


class NoLogicalSpace(ValueError):
    """The code encodes no logical qubits."""


@dataclass(frozen=True)
class DistanceResult:
    d: int
    exact: bool
    side: str
    witness: np.ndarray = field(repr=False, compare=False)
    trials: int = 0
    seed: int = 0
    lower_bound: int = 0


@dataclass(frozen=True)
class DistancePolicy:
    kind: str = "exact"  # "exact" or "ris"
    cap: int = 14
    trials: int = 10**5
    ris_seed_trials: int = 200  # RIS trials used to seed the exact search
    max_nodes: int = 10**9

    def __post_init__(self):
        if self.kind not in ("exact", "ris"):
            raise ValueError(f"unknown distance policy {self.kind!r}")
        if self.cap < 1 or self.trials < 1:
            raise ValueError("cap and trials must be positive")


def logical_cosets(hx: np.ndarray, hz: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Coset representatives of ker(H_Z)/row(H_X) and ker(H_X)/row(H_Z)."""
    if hx.shape[1] != hz.shape[1]:
        raise ValueError("H_X and H_Z have different column counts")
    return _cosets(hx, hz), _cosets(hz, hx)


def _cosets(h_same: np.ndarray, h_other: np.ndarray) -> np.ndarray:
    n = h_same.shape[1]
    ker = nullspace(h_other)
    base, _ = rref(h_same)
    r0 = base.shape[0]
    stack = np.concatenate([base, ker], axis=0)
    # pivots are taken over the stabilizer rows first, so kernel rows that
    # survive elimination are exactly the logical representatives
    p = pack(stack)
    out = []
    cur = pack(base) if r0 else np.zeros((0, p.shape[1]), dtype=np.uint64)
    rk = r0
    for t in range(ker.shape[0]):
        trial = np.concatenate([cur, p[r0 + t : r0 + t + 1]], axis=0)
        red = trial.copy()
        nr = _eliminate(red, n, np.arange(n)).shape[0]
        if nr > rk:
            out.append(ker[t])
            cur = red[:nr]
            rk = nr
    if not out:
        return np.zeros((0, n), dtype=np.uint8)
    return np.array(out, dtype=np.uint8)


def _logical_masks(logicals: np.ndarray, n: int) -> np.ndarray:
    """(n, words) uint64: bit j of row q says whether logical j touches qubit q."""
    k = logicals.shape[0]
    words = max(1, (k + 63) // 64)
    masks = np.zeros((n, words), dtype=np.uint64)
    for j in range(k):
        for q in np.nonzero(logicals[j])[0]:
            masks[q, j // 64] |= np.uint64(1) << np.uint64(j % 64)
    return masks


@nb.njit(cache=True)
def _ris_kernel(gen, n, lpack, trials, seed, best0):
    """Minimum-weight nontrivial row over ``trials`` randomly pivoted RREFs of ``gen``."""
    best = best0
    witness = np.zeros(gen.shape[1], dtype=np.uint64)
    nl = lpack.shape[0]
    nw = gen.shape[1]
    for t in range(trials):
        np.random.seed((seed * 1000003 + t) & 0x7FFFFFFF)
        order = np.random.permutation(n)
        a = gen.copy()
        r = _eliminate(a, n, order).shape[0]
        for i in range(r):
            w = 0
            for k in range(nw):
                w += popcount64(a[i, k])
            if w >= best:
                continue
            odd = False
            for j in range(nl):
                par = 0
                for k in range(nw):
                    par += popcount64(a[i, k] & lpack[j, k])
                if par & 1:
                    odd = True
                    break
            if odd:
                best = w
                for k in range(nw):
                    witness[k] = a[i, k]
    return best, witness


def _side_matrices(code_or_pair, side: str):
    if isinstance(code_or_pair, CssCode):
        hx, hz = code_or_pair.checks
    else:
        hx, hz = code_or_pair
    return (hx, hz) if side == "X" else (hz, hx)


def _unpack_vec(words: np.ndarray, n: int) -> np.ndarray:
    bits = np.unpackbits(np.ascontiguousarray(words.astype("<u8")).view(np.uint8), bitorder="little")
    return bits[:n].astype(np.uint8)


def ris_side(h_same: np.ndarray, h_other: np.ndarray, trials: int, seed: int, other_logicals=None):
    """RIS bound for logicals in ker(h_other) outside row(h_same)."""
    n = h_same.shape[1]
    gen = nullspace(h_other)
    if other_logicals is None:
        other_logicals = _cosets(h_other, h_same)
    if other_logicals.shape[0] == 0:
        raise NoLogicalSpace("no logical space")
    best, wit = _ris_kernel(pack(gen), n, pack(other_logicals), int(trials), int(seed) & 0x7FFFFFFF, n + 1)
    return int(best), _unpack_vec(wit, n)


def distance_upper_ris(code: CssCode, trials: int, seed: int = 0xC0DE, sides: str = "XZ") -> DistanceResult:
    """Upper bound on d from random information sets (deterministic for fixed seed)."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    results = []
    for side in sides:
        same, other = _side_matrices(code, side)
        d, w = ris_side(same, other, trials, seed)
        results.append((d, side, w))
    d, side, w = min(results, key=lambda t: t[0])
    if len(sides) == 2 and results[0][0] == results[1][0]:
        side = "both"
    return DistanceResult(d, False, side, w, trials, seed, 1)


def _adjacency(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    m, n = h.shape
    rows = [np.nonzero(h[r])[0] for r in range(m)]
    cols = [np.nonzero(h[:, c])[0] for c in range(n)]
    rw = max((len(r) for r in rows), default=0)
    cw = max((len(c) for c in cols), default=0)
    chk_q = -np.ones((m, max(rw, 1)), dtype=np.int64)
    q_chk = -np.ones((n, max(cw, 1)), dtype=np.int64)
    for r, s in enumerate(rows):
        chk_q[r, : len(s)] = s
    for c, s in enumerate(cols):
        q_chk[c, : len(s)] = s
    return chk_q, q_chk


@nb.njit(cache=True)
def _toggle(q, in_t, synd, q_chk, lmask, lpar):
    in_t[q] ^= 1
    delta = 0
    for t in range(q_chk.shape[1]):
        c = q_chk[q, t]
        if c < 0:
            break
        synd[c] ^= 1
        delta += 1 if synd[c] else -1
    for w in range(lmask.shape[1]):
        lpar[w] ^= lmask[q, w]
    return delta


@nb.njit(cache=True)
def _cluster_search(chk_q, q_chk, lmask, roots, forbid0, best, max_nodes):
    n = q_chk.shape[0]
    m = chk_q.shape[0]
    rw = chk_q.shape[1]
    cw = 0
    for q in range(n):
        c = 0
        for t in range(q_chk.shape[1]):
            if q_chk[q, t] >= 0:
                c += 1
        cw = max(cw, c)
    cw = max(cw, 1)
    witness = np.zeros(n, dtype=np.uint8)
    found = False
    nodes = 0
    synd = np.zeros(m, dtype=np.uint8)
    in_t = np.zeros(n, dtype=np.uint8)
    forb = np.zeros(n, dtype=np.int32)
    lpar = np.zeros(lmask.shape[1], dtype=np.uint64)
    cand = np.empty((n + 1, rw), dtype=np.int64)
    ncand = np.zeros(n + 1, dtype=np.int64)
    idx = np.zeros(n + 1, dtype=np.int64)
    for r in range(roots.shape[0]):
        for q in range(n):
            forb[q] = forbid0[r, q]
        root = roots[r]
        if forb[root]:
            continue
        unsat = _toggle(root, in_t, synd, q_chk, lmask, lpar)
        size = 1
        depth = 0
        push = True
        while True:
            if push:
                push = False
                nodes += 1
                if unsat == 0:
                    nontrivial = False
                    for w in range(lpar.shape[0]):
                        if lpar[w] != 0:
                            nontrivial = True
                    if nontrivial and size < best:
                        best = size
                        found = True
                        for q in range(n):
                            witness[q] = in_t[q]
                elif size + (unsat + cw - 1) // cw < best:
                    # branch on the unsatisfied check with fewest free qubits
                    bestc = -1
                    bestcount = rw + 1
                    for c in range(m):
                        if synd[c]:
                            cnt = 0
                            for t in range(rw):
                                q = chk_q[c, t]
                                if q < 0:
                                    break
                                if in_t[q] == 0 and forb[q] == 0:
                                    cnt += 1
                            if cnt < bestcount:
                                bestcount = cnt
                                bestc = c
                                if cnt <= 1:
                                    break
                    if bestcount > 0:
                        k = 0
                        for t in range(rw):
                            q = chk_q[bestc, t]
                            if q < 0:
                                break
                            if in_t[q] == 0 and forb[q] == 0:
                                cand[depth, k] = q
                                k += 1
                        ncand[depth] = k
                        idx[depth] = 0
                        depth += 1
                if nodes > max_nodes:
                    return best, witness, found, nodes, True
            if depth == 0:
                break
            f = depth - 1
            i = idx[f]
            if i > 0:
                q = cand[f, i - 1]
                unsat += _toggle(q, in_t, synd, q_chk, lmask, lpar)
                size -= 1
                forb[q] += 1
            if i == ncand[f]:
                for j in range(ncand[f]):
                    forb[cand[f, j]] -= 1
                depth -= 1
                continue
            q = cand[f, i]
            idx[f] = i + 1
            unsat += _toggle(q, in_t, synd, q_chk, lmask, lpar)
            size += 1
            push = True
        _toggle(root, in_t, synd, q_chk, lmask, lpar)
    return best, witness, found, nodes, False


def exact_side(
    h_same: np.ndarray,
    h_other: np.ndarray,
    upper: int,
    roots: np.ndarray | None = None,
    forbid: np.ndarray | None = None,
    max_nodes: int = 10**9,
    other_logicals: np.ndarray | None = None,
):
    """Smallest nontrivial logical of weight < ``upper`` on one side, or None.

    ``roots``/``forbid`` restrict the seeds of the search; the default seeds
    at every qubit in turn (valid for any code).  Returns (weight or None,
    witness, nodes, aborted).
    """
    n = h_same.shape[1]
    if other_logicals is None:
        other_logicals = _cosets(h_other, h_same)
    if other_logicals.shape[0] == 0:
        raise NoLogicalSpace("no logical space")
    chk_q, q_chk = _adjacency(h_other)
    lmask = _logical_masks(other_logicals, n)
    if roots is None:
        roots = np.arange(n, dtype=np.int64)
        forbid = np.tril(np.ones((n, n), dtype=np.int32), -1)
    best, wit, found, nodes, aborted = _cluster_search(
        chk_q, q_chk, lmask, np.asarray(roots, dtype=np.int64), np.asarray(forbid, dtype=np.int32), int(upper), int(max_nodes)
    )
    return (int(best) if found else None), wit.copy(), int(nodes), bool(aborted)


def torus_roots(code: CssCode) -> tuple[np.ndarray, np.ndarray]:
    """Seeds for translation-invariant codes: the two qubits of cell 0.

    Any logical touching sublattice 1 has a translate through qubit 0, so the
    second seed may ignore sublattice 1 altogether.
    """
    cells = code.torus.cells
    roots = np.array([0, cells], dtype=np.int64)
    forbid = np.zeros((2, 2 * cells), dtype=np.int32)
    forbid[1, :cells] = 1
    return roots, forbid


def distance_exact(
    code: CssCode,
    cap: int = 14,
    seed: int = 0xC0DE,
    seed_trials: int = 200,
    sides: str = "XZ",
    max_nodes: int = 10**9,
) -> DistanceResult:
    """Exact minimum weight of a nontrivial logical, certified up to ``cap``.

    If every logical is heavier than ``cap`` the result has exact=False, d set
    to the best upper bound and lower_bound = cap + 1.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    roots, forbid = torus_roots(code)
    per_side = []
    for side in sides:
        same, other = _side_matrices(code, side)
        other_log = _cosets(other, same)
        if other_log.shape[0] == 0:
            raise NoLogicalSpace("no logical space")
        ub, wit = ris_side(same, other, seed_trials, seed, other_log)
        limit = min(ub, cap + 1)
        w, wit2, _, aborted = exact_side(same, other, limit, roots, forbid, max_nodes, other_log)
        if w is not None:
            ub, wit = w, wit2
        if aborted:
            lb = 1
        elif w is not None or ub <= cap:
            lb = ub
        else:
            lb = cap + 1
        per_side.append((ub, lb, side, wit))
    d, _, side, wit = min(per_side, key=lambda t: t[0])
    lb = min(p[1] for p in per_side)
    exact = lb == d
    if len(per_side) == 2 and per_side[0][0] == per_side[1][0]:
        side = "both"
    return DistanceResult(d, exact, side, wit, seed_trials, seed, lb)


def css_distance(code: CssCode, policy: DistancePolicy = DistancePolicy(), seed: int = 0xC0DE) -> DistanceResult:
    if policy.kind == "ris":
        return distance_upper_ris(code, policy.trials, seed)
    return distance_exact(code, policy.cap, seed, policy.ris_seed_trials, max_nodes=policy.max_nodes)


def is_logical(h_same: np.ndarray, h_other: np.ndarray, v: np.ndarray) -> bool:
    """v in ker(h_other) and v outside row(h_same)."""
    v = np.asarray(v, dtype=np.uint8)
    if ((h_other.astype(np.int64) @ v) & 1).any():
        return False
    return rank(np.vstack([h_same, v[None, :]])) > rank(h_same)


@nb.njit(cache=True)
def _gray_kernel(ker, lpack, n):
    dim, words = ker.shape
    best = n + 1
    v = np.zeros(words, dtype=np.uint64)
    for i in range(1, 1 << dim):
        # Gray code: flip the generator at the lowest set bit of i
        b = 0
        while not (i >> b) & 1:
            b += 1
        w = 0
        for k in range(words):
            v[k] ^= ker[b, k]
            w += popcount64(v[k])
        if w >= best:
            continue
        for j in range(lpack.shape[0]):
            par = 0
            for k in range(words):
                par += popcount64(v[k] & lpack[j, k])
            if par & 1:
                best = w
                break
    return best


def brute_force_distance(h_same: np.ndarray, h_other: np.ndarray) -> int:
    """Minimum nontrivial weight by enumerating every vector of ker(h_other) (small codes only)."""
    ker = nullspace(h_other)
    other_log = _cosets(h_other, h_same)
    if other_log.shape[0] == 0:
        raise NoLogicalSpace("no logical space")
    if ker.shape[0] > 30:
        raise ValueError("kernel too large for brute force")
    return int(_gray_kernel(pack(ker), pack(other_log), h_same.shape[1]))

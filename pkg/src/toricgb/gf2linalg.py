"""Dense GF(2) linear algebra on bit-packed rows (numba kernels).

Matrices enter and leave as 0/1 ``uint8`` arrays; internally each row is an
array of ``uint64`` words with column ``c`` at bit ``c % 64`` of word ``c // 64``.
"""

from __future__ import annotations

import numba as nb
import numpy as np


def pack(m: np.ndarray) -> np.ndarray:
    """(r, c) 0/1 array -> (r, ceil(c/64)) uint64 array."""
    m = np.asarray(m, dtype=np.uint8) & 1
    r, c = m.shape
    w = max(1, (c + 63) // 64)
    padded = np.zeros((r, w * 64), dtype=np.uint8)
    padded[:, :c] = m
    bits = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(bits).view("<u8").astype(np.uint64)


def unpack(p: np.ndarray, cols: int) -> np.ndarray:
    r, w = p.shape
    raw = np.ascontiguousarray(p.astype("<u8")).view(np.uint8).reshape(r, w * 8)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :cols].copy()


@nb.njit(cache=True)
def popcount64(v):
    v = v - ((v >> np.uint64(1)) & np.uint64(0x5555555555555555))
    v = (v & np.uint64(0x3333333333333333)) + ((v >> np.uint64(2)) & np.uint64(0x3333333333333333))
    v = (v + (v >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return int((v * np.uint64(0x0101010101010101)) >> np.uint64(56))


@nb.njit(cache=True)
def row_weight(row):
    s = 0
    for w in range(row.shape[0]):
        s += popcount64(row[w])
    return s


@nb.njit(cache=True)
def _eliminate(a, cols, col_order):
    """In-place full row reduction; pivots are taken in ``col_order``.

    Returns the pivot column of each of the first ``rank`` rows.
    """
    rows = a.shape[0]
    nw = a.shape[1]
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for t in range(col_order.shape[0]):
        if r == rows:
            break
        c = col_order[t]
        word = c >> 6
        bit = np.uint64(1) << np.uint64(c & 63)
        piv = -1
        for i in range(r, rows):
            if a[i, word] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for w in range(nw):
                tmp = a[r, w]
                a[r, w] = a[piv, w]
                a[piv, w] = tmp
        for i in range(rows):
            if i != r and (a[i, word] & bit):
                for w in range(nw):
                    a[i, w] ^= a[r, w]
        pivots[r] = c
        r += 1
    return pivots[:r]


@nb.njit(cache=True)
def _rank_packed(a, cols):
    b = a.copy()
    return _eliminate(b, cols, np.arange(cols)).shape[0]


def rank(m: np.ndarray) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return int(_rank_packed(pack(m), m.shape[1]))


def rref(m: np.ndarray, col_order: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon form (rank rows only) and pivot columns."""
    m = np.asarray(m)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return np.zeros((0, cols), dtype=np.uint8), np.zeros(0, dtype=np.int64)
    order = np.arange(cols) if col_order is None else np.asarray(col_order, dtype=np.int64)
    p = pack(m)
    piv = _eliminate(p, cols, order)
    return unpack(p[: piv.shape[0]], cols), piv


def nullspace(m: np.ndarray) -> np.ndarray:
    """Basis of {v : m v = 0} as rows of a 0/1 array."""
    m = np.asarray(m, dtype=np.uint8)
    cols = m.shape[1]
    red, piv = rref(m)
    free = [c for c in range(cols) if c not in set(piv.tolist())]
    out = np.zeros((len(free), cols), dtype=np.uint8)
    for t, c in enumerate(free):
        out[t, c] = 1
        for r, pc in enumerate(piv):
            if red[r, c]:
                out[t, pc] = 1
    return out


def rowspace_contains(m: np.ndarray, v: np.ndarray) -> bool:
    return rank(np.vstack([m, v[None, :]])) == rank(m)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return ((np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) & 1).astype(np.uint8)

"""Parity-check matrices of generalized toric codes on a twisted torus.

Cells are the cosets of Z^2 modulo a1 = (0, alpha), a2 = (beta, gamma).  The
canonical representative of (i, j) has 0 <= i' < beta and 0 <= j' < alpha, and
its index is i' * alpha + j'.  Each cell carries two qubits: column c
(sublattice 1) and column alpha*beta + c (sublattice 2).

X check at cell c: f shifted by c on sublattice 1, g shifted by c on sublattice 2.
Z check at cell c: antipode(g) on sublattice 1, antipode(f) on sublattice 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import TextIO

import numpy as np

from .algebra import TwistedTorus
from .gf2linalg import matmul, rank
from .poly2 import LaurentPoly


def reduce_point(torus: TwistedTorus, p: tuple[int, int]) -> tuple[int, int]:
    i, j = p
    ii = i % torus.beta
    q = (i - ii) // torus.beta
    return ii, (j - q * torus.gamma) % torus.alpha


def _reduce_arrays(torus: TwistedTorus, i: np.ndarray, j: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    ii = np.mod(i, torus.beta)
    q = (i - ii) // torus.beta
    return ii, np.mod(j - q * torus.gamma, torus.alpha)


def cell_index(torus: TwistedTorus, p: tuple[int, int]) -> int:
    i, j = reduce_point(torus, p)
    return i * torus.alpha + j


def cell_point(torus: TwistedTorus, c: int) -> tuple[int, int]:
    return divmod(c, torus.alpha)


def reduce_poly(torus: TwistedTorus, p: LaurentPoly) -> LaurentPoly:
    """Polynomial whose terms are canonical cell representatives (with GF(2) cancellation)."""
    return LaurentPoly.from_terms(reduce_point(torus, e) for e in p.support)


@dataclass(frozen=True)
class CssCode:
    f: LaurentPoly
    g: LaurentPoly
    torus: TwistedTorus

    def __post_init__(self):
        if not self.f or not self.g:
            raise ValueError("f and g must be nonzero")

    @property
    def n(self) -> int:
        return self.torus.n

    @cached_property
    def checks(self) -> tuple[np.ndarray, np.ndarray]:
        return build_parity_checks(self)

    @property
    def hx(self) -> np.ndarray:
        return self.checks[0]

    @property
    def hz(self) -> np.ndarray:
        return self.checks[1]

    def __str__(self) -> str:
        return f"f={self.f} g={self.g} {self.torus}"


def _block(torus: TwistedTorus, p: LaurentPoly, sign: int) -> np.ndarray:
    cells = torus.cells
    ci, cj = np.divmod(np.arange(cells), torus.alpha)
    out = np.zeros((cells, cells), dtype=np.uint8)
    rows = np.arange(cells)
    for di, dj in p.support:
        ti, tj = _reduce_arrays(torus, ci + sign * di, cj + sign * dj)
        out[rows, ti * torus.alpha + tj] ^= 1
    return out


def build_parity_checks(code: CssCode) -> tuple[np.ndarray, np.ndarray]:
    """(H_X, H_Z), each alpha*beta rows by 2*alpha*beta columns."""
    t = code.torus
    hx = np.concatenate([_block(t, code.f, 1), _block(t, code.g, 1)], axis=1)
    hz = np.concatenate([_block(t, code.g, -1), _block(t, code.f, -1)], axis=1)
    return hx, hz


def verify_commutation(hx: np.ndarray, hz: np.ndarray) -> bool:
    if hx.shape[1] != hz.shape[1]:
        raise ValueError(f"column mismatch: {hx.shape[1]} vs {hz.shape[1]}")
    if hx.shape[0] == 0 or hz.shape[0] == 0:
        return True
    return not matmul(hx, hz.T).any()


def rank_gf2(m: np.ndarray) -> int:
    return rank(m)


def k_from_ranks(code: CssCode) -> int:
    hx, hz = code.checks
    return code.n - rank(hx) - rank(hz)


PAULI_KINDS = ("X1", "X2", "Z1", "Z2")


def syndrome_of_pauli(code: CssCode, which: str, at: tuple[int, int] = (0, 0)) -> tuple[LaurentPoly, LaurentPoly]:
    """(X-check syndrome, Z-check syndrome) of a single Pauli, as polynomials over cells.

    ``which`` is one of X1, X2, Z1, Z2 (Pauli type and sublattice).
    """
    if which not in PAULI_KINDS:
        raise ValueError(f"which must be one of {PAULI_KINDS}")
    hx, hz = code.checks
    col = cell_index(code.torus, at) + (code.torus.cells if which[1] == "2" else 0)
    zero = LaurentPoly()
    h = hz if which[0] == "X" else hx
    cells = np.nonzero(h[:, col])[0]
    s = LaurentPoly(frozenset(cell_point(code.torus, int(c)) for c in cells))
    return (zero, s) if which[0] == "X" else (s, zero)


def write_alist(m: np.ndarray, out: TextIO):
    """MacKay's alist format (1-based indices, zero padded)."""
    rows, cols = m.shape
    col_sets = [np.nonzero(m[:, c])[0] + 1 for c in range(cols)]
    row_sets = [np.nonzero(m[r])[0] + 1 for r in range(rows)]
    mc = max((len(s) for s in col_sets), default=0)
    mr = max((len(s) for s in row_sets), default=0)
    out.write(f"{cols} {rows}\n{mc} {mr}\n")
    out.write(" ".join(str(len(s)) for s in col_sets) + "\n")
    out.write(" ".join(str(len(s)) for s in row_sets) + "\n")
    for s, width in [(s, mc) for s in col_sets] + [(s, mr) for s in row_sets]:
        vals = list(s) + [0] * (width - len(s))
        out.write(" ".join(str(v) for v in vals) + "\n")


def write_dense(m: np.ndarray, out: TextIO):
    for row in m:
        out.write("".join("1" if v else "0" for v in row) + "\n")


def read_dense(text: str) -> np.ndarray:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    return np.array([[int(ch) for ch in ln] for ln in lines], dtype=np.uint8)

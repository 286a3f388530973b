"""Exact linear algebra over F_p: dense numpy elimination and sparse echelon bases.

Dense matrices are int64 numpy arrays with entries reduced into [0, p).  For
p < 2**31.5 a single multiply-accumulate step stays below 2**63, so row
elimination can be vectorized without overflow.  The sparse side keeps an
echelon basis keyed by pivot index (minimal index in each row), which is the
workhorse behind every truncated relation-span computation: pivot counts per
degree are exactly the graded dimensions of the span of initial forms.
"""

from __future__ import annotations

import numpy as np

from .core import PreconditionError

_INT64_SAFE_P = 3037000499  # floor(sqrt(2**63 - 1)); products of two residues fit in int64


def _as_matrix(rows, p: int) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return a % p


def row_reduce(a: np.ndarray, p: int, reduced: bool = False) -> tuple[int, list[int]]:
    """In-place Gaussian elimination mod p.  Returns (rank, pivot columns)."""
    if p > _INT64_SAFE_P:
        raise PreconditionError(f"prime {p} too large for int64 elimination")
    m, n = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = np.nonzero(a[r + 1 :, c])[0]
        if below.size:
            idx = below + r + 1
            a[idx] = (a[idx] - np.outer(a[idx, c], a[r])) % p
        if reduced and r:
            above = np.nonzero(a[:r, c])[0]
            if above.size:
                a[above] = (a[above] - np.outer(a[above, c], a[r])) % p
        pivots.append(c)
        r += 1
    return r, pivots


def rank_mod_p(rows, p: int) -> int:
    a = _as_matrix(rows, p)
    if a.size == 0:
        return 0
    rank, _ = row_reduce(a, p)
    return rank


def rank_and_basis(rows, p: int) -> tuple[int, np.ndarray, list[int]]:
    """Row-echelon basis of the row span: (rank, reduced rows, pivot cols)."""
    a = _as_matrix(rows, p)
    if a.size == 0:
        return 0, a.reshape(0, a.shape[1] if a.ndim == 2 else 0), []
    rank, pivots = row_reduce(a, p, reduced=True)
    return rank, a[:rank], pivots


def kernel_dim(rows, p: int) -> int:
    a = _as_matrix(rows, p)
    if a.size == 0:
        return a.shape[1] if a.ndim == 2 else 0
    rank, _ = row_reduce(a, p)
    return a.shape[1] - rank


def inv_mod_p(mat, p: int) -> np.ndarray:
    """Inverse of a square matrix mod p; raises on singular input."""
    a = _as_matrix(mat, p)
    n = a.shape[0]
    if a.shape[0] != a.shape[1]:
        raise PreconditionError("matrix inverse needs a square matrix")
    aug = np.hstack([a, np.eye(n, dtype=np.int64)])
    rank, pivots = row_reduce(aug, p, reduced=True)
    if rank < n or pivots != list(range(n)):
        raise PreconditionError("matrix is singular mod p")
    return aug[:, n:]


class RowSpan:
    """Frozen row space supporting membership tests via the reduced basis."""

    def __init__(self, rows, p: int):
        self.p = p
        self.rank, self.basis, self.pivots = rank_and_basis(rows, p)

    def contains(self, vec) -> bool:
        v = np.asarray(vec, dtype=np.int64) % self.p
        for k, c in enumerate(self.pivots):
            if v[c]:
                v = (v - v[c] * self.basis[k]) % self.p
        return not v.any()


class SparseEchelon:
    """Echelon basis of a growing span of sparse vectors.

    Rows are stored as tail dictionaries {index: coeff} with an implicit
    leading 1 at the pivot index; the pivot of every row is the minimal index
    in its support, so pivot indices of the final basis enumerate the span of
    initial components degree by degree.
    """

    __slots__ = ("p", "rows")

    def __init__(self, p: int):
        self.p = p
        self.rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def insert(self, vec: dict[int, int]) -> int | None:
        """Reduce vec against the basis and adjoin it.  Returns the new pivot
        index, or None when vec lies in the current span."""
        p = self.p
        rows = self.rows
        work = {k: v % p for k, v in vec.items() if v % p}
        while work:
            piv = min(work)
            tail = rows.get(piv)
            if tail is None:
                c = work.pop(piv)
                if c != 1:
                    cinv = pow(c, p - 2, p)
                    work = {k: (v * cinv) % p for k, v in work.items()}
                rows[piv] = work
                return piv
            c = work.pop(piv)
            for k, v in tail.items():
                nv = (work.get(k, 0) - c * v) % p
                if nv:
                    work[k] = nv
                else:
                    work.pop(k, None)
        return None

    def reduce(self, vec: dict[int, int]) -> dict[int, int]:
        """Normal form of vec modulo the span: no pivot index in the support."""
        p = self.p
        rows = self.rows
        work = {k: v % p for k, v in vec.items() if v % p}
        out: dict[int, int] = {}
        while work:
            piv = min(work)
            tail = rows.get(piv)
            if tail is None:
                out[piv] = work.pop(piv)
                continue
            c = work.pop(piv)
            for k, v in tail.items():
                nv = (work.get(k, 0) - c * v) % p
                if nv:
                    work[k] = nv
                else:
                    work.pop(k, None)
        return out

    def pivot_indices(self):
        return self.rows.keys()

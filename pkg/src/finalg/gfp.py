"""Dense exact linear algebra over the prime field GF(p).

Matrices are numpy integer arrays with entries reduced mod p.  The
characteristic is passed explicitly to every operation; nothing here keeps
global state, and all routines are deterministic (leftmost pivot, topmost
row).
"""

from __future__ import annotations

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"characteristic must be a prime, got {p!r}")
    return p


def inv_mod(a: int, p: int) -> int:
    """Multiplicative inverse of a nonzero residue."""
    return pow(int(a) % p, -1, p)


def as_matrix(rows, p: int, width: int | None = None) -> np.ndarray:
    """Coerce a row list to a 2-d int64 array reduced mod p."""
    if isinstance(rows, np.ndarray):
        mat = rows.astype(np.int64, copy=True)
    else:
        rows = list(rows)
        if not rows:
            return np.zeros((0, 0 if width is None else width), dtype=np.int64)
        mat = np.array(rows, dtype=np.int64)
    if mat.ndim == 1:
        mat = mat.reshape(1, -1)
    return np.mod(mat, p)


def rref(mat, p: int):
    """Reduced row echelon form.

    Returns (R, pivots) where R has unit pivots with zeros above and below,
    and pivots lists the pivot column of each nonzero row in order.  Pivot
    choice: leftmost column, topmost available row.
    """
    R = as_matrix(mat, p)
    nrows, ncols = R.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        rows = np.nonzero(R[r:, c])[0]
        if rows.size == 0:
            continue
        lead = r + int(rows[0])
        if lead != r:
            R[[r, lead]] = R[[lead, r]]
        R[r] = (R[r] * inv_mod(R[r, c], p)) % p
        others = np.nonzero(R[:, c])[0]
        others = others[others != r]
        if others.size:
            R[others] = (R[others] - np.outer(R[others, c], R[r])) % p
        pivots.append(c)
        r += 1
    return R[: len(pivots)], pivots


def rank(mat, p: int) -> int:
    return len(rref(mat, p)[1])


def solve_membership(span, v, p: int):
    """Express v as a combination of the rows of span, or return None.

    The returned coefficient vector c satisfies c @ span == v mod p and is
    the deterministic solution with all free coefficients set to zero.
    """
    A = as_matrix(span, p)
    b = np.mod(np.asarray(v, dtype=np.int64).ravel(), p)
    if A.shape[0] == 0:
        return np.zeros(0, dtype=np.int64) if not b.any() else None
    if A.shape[1] != b.shape[0]:
        raise ValueError("span width and vector length differ")
    # solve span^T c = v by row reduction of the augmented system
    aug = np.concatenate([A.T, b.reshape(-1, 1)], axis=1)
    R, pivots = rref(aug, p)
    ncoef = A.shape[0]
    if ncoef in pivots:
        return None  # pivot in the augmented column: inconsistent
    c = np.zeros(ncoef, dtype=np.int64)
    for row, col in enumerate(pivots):
        c[col] = R[row, ncoef]
    return c


def nullspace(mat, p: int) -> np.ndarray:
    """Basis of the right kernel {x : mat @ x = 0}, one vector per row.

    Deterministic: one basis vector per free column of the rref, with a 1
    in that column.
    """
    A = as_matrix(mat, p)
    ncols = A.shape[1]
    R, pivots = rref(A, p)
    free = [c for c in range(ncols) if c not in pivots]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for row, c in enumerate(pivots):
            out[k, c] = (-R[row, f]) % p
    return out


class RowSpace:
    """Incrementally maintained row space in reduced echelon form.

    add() reduces the incoming vector against the current basis and, when a
    new pivot appears, re-eliminates that column above.  Deterministic and
    cheap to query; used for spans of ideal components.
    """

    def __init__(self, width: int, p: int):
        self.width = width
        self.p = p
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vec: np.ndarray) -> np.ndarray:
        p = self.p
        v = np.mod(np.asarray(vec, dtype=np.int64).ravel(), p)
        for row, c in zip(self.rows, self.pivots):
            coeff = v[c]
            if coeff:
                v = (v - coeff * row) % p
        return v

    def residual(self, vec) -> np.ndarray:
        return self._reduce(vec)

    def contains(self, vec) -> bool:
        return not self._reduce(vec).any()

    def add(self, vec) -> bool:
        """Insert a vector; True if it enlarged the space."""
        v = self._reduce(vec)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = (v * inv_mod(v[c], self.p)) % self.p
        # eliminate the new pivot column from existing rows
        for i, row in enumerate(self.rows):
            coeff = row[c]
            if coeff:
                self.rows[i] = (row - coeff * v) % self.p
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < c:
            pos += 1
        self.rows.insert(pos, v)
        self.pivots.insert(pos, c)
        return True

    def add_all(self, vectors) -> None:
        for v in vectors:
            self.add(v)

    def matrix(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, self.width), dtype=np.int64)
        return np.array(self.rows, dtype=np.int64)

    def copy(self) -> "RowSpace":
        dup = RowSpace(self.width, self.p)
        dup.rows = [row.copy() for row in self.rows]
        dup.pivots = list(self.pivots)
        return dup

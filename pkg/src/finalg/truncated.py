"""Degree-truncated models of finitely presented graded algebras.

Because relations are homogeneous, the degree-n component of the relation
ideal is spanned by cofactor multiples of the relations, so each graded
component A_n with n <= bound is computed exactly by linear algebra: list
the monomials of degree n, row reduce the relation consequences, and keep
the non-pivot monomials as the component basis.  With columns in decreasing
term order those are precisely the standard monomials.

Everything an instance exposes (bases, normal forms, multiplication
tables, ideal-power filtrations) is exact for degrees within the bound;
degrees beyond it raise BoundExceededError.  Instances are immutable after
construction apart from internal caches, so sharing one across threads for
reads is safe.
"""

from __future__ import annotations

import numpy as np

from .errors import BoundExceededError, ResourceLimitError
from .gfp import RowSpace, rref
from .present import (COMMUTATIVE, Presentation, mono_degree, mono_mul,
                      term_mul_poly)

DEFAULT_MONOMIAL_CEILING = 200_000


def truncation_bound(P: Presentation) -> int:
    """Smallest safe working degree: max of 1, generator degrees, and the
    top monomial degree appearing in any relation."""
    w = max(1, P.max_generator_degree())
    for r in P.relations:
        for m in r:
            w = max(w, mono_degree(m, P.gens, P.mode))
    return w


def default_bound(P: Presentation) -> int:
    """Default construction bound: twice the safe degree, at least 10."""
    return max(2 * truncation_bound(P), 10)


class TruncatedAlgebra:
    """Exact graded components of a presented algebra up to a bound."""

    def __init__(self, presentation: Presentation, bound: int | None = None,
                 monomial_ceiling: int = DEFAULT_MONOMIAL_CEILING):
        if bound is None:
            bound = default_bound(presentation)
        if bound < 1:
            raise ValueError("bound must be at least 1")
        self.presentation = presentation
        self.bound = bound
        self.p = presentation.p
        self.mode = presentation.mode
        self.gens = presentation.gens
        self.monomial_ceiling = monomial_ceiling
        self._monos: list[list] = []
        self._basis: list[list] = []
        self._basis_index: list[dict] = []
        self._nf: list[dict] = []
        self._tables: dict = {}
        self._decomposables: dict = {}
        self._filtration: list[int] | None = None
        self._build()

    # ------------------------------------------------------------- build

    def _relation_rows(self, n: int, monos: list, index: dict) -> np.ndarray:
        P = self.presentation
        rows = []
        for rel in P.relations:
            r = P.poly_degree(rel)
            if r is None or r > n:
                continue
            if self.mode == COMMUTATIVE:
                for cof in P.monomials_of_degree(n - r):
                    poly = term_mul_poly(1, cof, rel, self.gens, self.mode, self.p)
                    if poly:
                        rows.append(self._poly_row(poly, index, len(monos)))
            else:
                for a in range(n - r + 1):
                    b = n - r - a
                    for u in P.monomials_of_degree(a):
                        left = term_mul_poly(1, u, rel, self.gens, self.mode, self.p)
                        if not left:
                            continue
                        for v in P.monomials_of_degree(b):
                            poly = {}
                            for mm, cc in left.items():
                                sg, mono = mono_mul(mm, v, self.gens, self.mode, self.p)
                                if sg:
                                    poly[mono] = (poly.get(mono, 0) + sg * cc) % self.p
                            row = self._poly_row(poly, index, len(monos))
                            if row.any():
                                rows.append(row)
        if not rows:
            return np.zeros((0, len(monos)), dtype=np.int64)
        return np.array(rows, dtype=np.int64)

    @staticmethod
    def _poly_row(poly: dict, index: dict, width: int) -> np.ndarray:
        row = np.zeros(width, dtype=np.int64)
        for m, c in poly.items():
            row[index[m]] = c
        return row

    def _build(self):
        P = self.presentation
        for n in range(self.bound + 1):
            monos = P.monomials_of_degree(n)
            if len(monos) > self.monomial_ceiling:
                raise ResourceLimitError(
                    f"degree {n} has {len(monos)} monomials, ceiling is "
                    f"{self.monomial_ceiling}; lower the bound or raise the ceiling")
            index = {m: j for j, m in enumerate(monos)}
            R, pivots = rref(self._relation_rows(n, monos, index), self.p)
            pivot_set = set(pivots)
            basis = [m for j, m in enumerate(monos) if j not in pivot_set]
            bindex = {m: i for i, m in enumerate(basis)}
            nf = {}
            for m in basis:
                vec = np.zeros(len(basis), dtype=np.int64)
                vec[bindex[m]] = 1
                nf[m] = vec
            for rno, col in enumerate(pivots):
                vec = np.zeros(len(basis), dtype=np.int64)
                for j, m in enumerate(monos):
                    if j in pivot_set or j == col:
                        continue
                    if R[rno, j]:
                        vec[bindex[m]] = (-R[rno, j]) % self.p
                nf[monos[col]] = vec
            self._monos.append(monos)
            self._basis.append(basis)
            self._basis_index.append(bindex)
            self._nf.append(nf)

    # --------------------------------------------------------- accessors

    def _check(self, n: int):
        if not 0 <= n <= self.bound:
            raise BoundExceededError(
                f"degree {n} outside the truncation bound {self.bound}")

    def dim(self, n: int) -> int:
        self._check(n)
        return len(self._basis[n])

    def basis(self, n: int) -> list:
        """Standard-monomial basis of the degree-n component."""
        self._check(n)
        return list(self._basis[n])

    def dims(self) -> list:
        return [len(self._basis[n]) for n in range(self.bound + 1)]

    def nf_row(self, mono) -> np.ndarray:
        n = mono_degree(mono, self.gens, self.mode)
        self._check(n)
        return self._nf[n][mono]

    def reduce_poly(self, f: dict) -> dict:
        """Map a polynomial to coordinate vectors, one per occupied degree."""
        comps: dict[int, np.ndarray] = {}
        for m, c in f.items():
            n = mono_degree(m, self.gens, self.mode)
            self._check(n)
            vec = comps.setdefault(n, np.zeros(len(self._basis[n]), dtype=np.int64))
            vec += c * self._nf[n][m]
        return {n: np.mod(v, self.p) for n, v in comps.items()}

    def is_zero(self, f: dict) -> bool:
        """Exact word-problem test for elements presented in degrees <= bound."""
        return all(not v.any() for v in self.reduce_poly(f).values())

    def element(self, f: dict):
        """Homogeneous polynomial -> (degree, coordinate vector)."""
        comps = {n: v for n, v in self.reduce_poly(f).items() if v.any()}
        if not comps:
            return None
        if len(comps) > 1:
            raise ValueError("element is not homogeneous")
        return next(iter(comps.items()))

    def poly_of_vec(self, n: int, vec) -> dict:
        self._check(n)
        out = {}
        for m, c in zip(self._basis[n], np.mod(np.asarray(vec, dtype=np.int64), self.p)):
            if c:
                out[m] = int(c)
        return out

    # ----------------------------------------------------- multiplication

    def table(self, a: int, b: int) -> np.ndarray:
        """Structure constants basis(a) x basis(b) -> A_{a+b}, cached."""
        self._check(a)
        self._check(b)
        self._check(a + b)
        key = (a, b)
        T = self._tables.get(key)
        if T is None:
            da, db, dc = self.dim(a), self.dim(b), self.dim(a + b)
            T = np.zeros((da, db, dc), dtype=np.int64)
            for i, u in enumerate(self._basis[a]):
                for j, v in enumerate(self._basis[b]):
                    sign, m = mono_mul(u, v, self.gens, self.mode, self.p)
                    if sign:
                        T[i, j] = (sign * self._nf[a + b][m]) % self.p
            self._tables[key] = T
        return T

    def multiply_vec(self, a: int, va, b: int, vb) -> np.ndarray:
        """Product of coordinate vectors, landing in degree a+b."""
        T = self.table(a, b)
        da, db, dc = T.shape
        if dc == 0 or da == 0 or db == 0:
            return np.zeros(dc, dtype=np.int64)
        va = np.asarray(va, dtype=np.int64)
        vb = np.asarray(vb, dtype=np.int64)
        tmp = (va @ T.reshape(da, db * dc)).reshape(db, dc)
        return (vb @ tmp) % self.p

    def evaluate(self, poly: dict, src: Presentation, images: list):
        """Evaluate a homogeneous polynomial over `src` at images in this
        algebra; images[i] = (degree, vector).  Returns (degree, vector) or
        None for an empty polynomial."""
        out_deg = None
        out_vec = None
        powers = [dict() for _ in images]
        for m, c in poly.items():
            if src.mode == COMMUTATIVE:
                factors = [(i, e) for i, e in enumerate(m) if e]
            else:
                factors = [(i, 1) for i in m]
            cur = None
            for i, e in factors:
                img = self._image_power(images, powers, i, e)
                cur = img if cur is None else (
                    cur[0] + img[0], self.multiply_vec(cur[0], cur[1], img[0], img[1]))
            if cur is None:  # constant monomial
                cur = (0, np.array([1], dtype=np.int64))
            if out_deg is None:
                out_deg = cur[0]
                out_vec = np.zeros(self.dim(out_deg), dtype=np.int64)
            elif cur[0] != out_deg:
                raise ValueError("evaluation of an inhomogeneous polynomial")
            out_vec = (out_vec + c * cur[1]) % self.p
        if out_deg is None:
            return None
        return out_deg, out_vec

    def _image_power(self, images, powers, i: int, e: int):
        cache = powers[i]
        got = cache.get(e)
        if got is not None:
            return got
        if e == 1:
            val = images[i]
        else:
            lo = self._image_power(images, powers, i, e - 1)
            hi = images[i]
            val = (lo[0] + hi[0], self.multiply_vec(lo[0], lo[1], hi[0], hi[1]))
        cache[e] = val
        return val

    # ------------------------------------------------- generation test

    def decomposables(self, n: int) -> RowSpace:
        """Row space of products of positive-degree elements in degree n."""
        self._check(n)
        got = self._decomposables.get(n)
        if got is None:
            got = RowSpace(self.dim(n), self.p)
            for a in range(1, n):
                b = n - a
                T = self.table(a, b)
                da, db, dc = T.shape
                if dc and da and db:
                    got.add_all(T.reshape(da * db, dc))
            self._decomposables[n] = got
        return got

    def generates(self, images: list) -> bool:
        """Do the images, with all decomposables, span every component up
        to the top generator degree?  That is exactly generation, since the
        quotient by decomposables is where indecomposables live."""
        for n in sorted(set(self.gens.degrees)):
            span = self.decomposables(n).copy()
            for deg, vec in images:
                if deg == n:
                    span.add(vec)
            if span.dim != self.dim(n):
                return False
        return True

    # ------------------------------------------------------- filtration

    def power_filtration_dims(self) -> list:
        """dim of I^c in degrees <= bound, for c = 1..bound.

        I is the augmentation ideal (everything of positive degree); powers
        are computed componentwise through the multiplication tables.
        """
        if self._filtration is not None:
            return list(self._filtration)
        D = self.bound
        spans: list[dict] = [{}]  # spans[c][n] for c >= 1
        level = {}
        for n in range(1, D + 1):
            rs = RowSpace(self.dim(n), self.p)
            rs.add_all(np.eye(self.dim(n), dtype=np.int64))
            level[n] = rs
        spans.append(level)
        dims = [sum(rs.dim for rs in level.values())]
        for c in range(2, D + 1):
            prev = spans[c - 1]
            level = {}
            total = 0
            for n in range(c, D + 1):
                rs = RowSpace(self.dim(n), self.p)
                for a in range(1, n):
                    b = n - a
                    src = prev.get(b)
                    if src is None or src.dim == 0 or self.dim(n) == 0:
                        continue
                    T = self.table(a, b)
                    for i in range(self.dim(a)):
                        block = (src.matrix() @ T[i]) % self.p
                        rs.add_all(block)
                level[n] = rs
                total += rs.dim
            spans.append(level)
            dims.append(total)
        self._filtration = dims
        return list(dims)


def build(P: Presentation, bound: int | None = None,
          monomial_ceiling: int = DEFAULT_MONOMIAL_CEILING) -> TruncatedAlgebra:
    """Construct the truncated model (bound defaults to max(2w, 10))."""
    return TruncatedAlgebra(P, bound, monomial_ceiling)


def component_basis(T: TruncatedAlgebra, n: int) -> list:
    """Monomial basis of the degree-n component."""
    return T.basis(n)

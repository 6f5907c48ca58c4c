"""Buchberger's algorithm for graded-commutative algebras over GF(p).

Commutative mode only.  The ambient ring is the free graded-commutative
algebra: a polynomial ring at p = 2, and poly(even generators) tensor
exterior(odd generators) at odd p.  Monomials are exponent vectors with
exterior exponents at most 1; products carry the transposition sign and
die on an exterior square.

The exterior squares are implicit ideal members.  They never appear as
basis elements (no monomial is divisible by one), but they do contribute
S-pairs: for every basis element g and exterior variable x dividing its
leading monomial, x*g has a vanishing leading term and must reduce to
zero, so it joins the pair queue.  This is the standard completion rule
for square-zero quotients.

Homogeneous input lets pairs be processed in increasing lcm degree, which
makes a degree cap sound: when the run stops at a cap, leading monomials
of degree <= cap are final and everything degree-bounded (dimensions,
normal forms) is exact there.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

import numpy as np

from .errors import MismatchError, ResourceLimitError
from .gfp import inv_mod, nullspace
from .hilbert import TruncatedSeries, quotient_series
from .present import (COMMUTATIVE, Presentation, elimination_key,
                      exterior_mask, mono_degree, mono_divides, mono_key,
                      mono_mul, monomials_of_degree, poly_add, poly_canon,
                      poly_degree, poly_scale, term_mul_poly)

DEFAULT_PAIR_CEILING = 100_000

DEGREVLEX = "degrevlex"


def _order_key(order, gens):
    if order == DEGREVLEX:
        return lambda m: mono_key(m, gens, COMMUTATIVE)
    kind, front = order
    if kind != "eliminate":
        raise ValueError(f"unknown term order {order!r}")
    return elimination_key(front, gens)


def _lead(poly: dict, key):
    """Largest monomial and its coefficient."""
    m = max(poly, key=key)
    return m, poly[m]


def normal_form(f: dict, basis, P: Presentation, order=DEGREVLEX) -> dict:
    """Fully reduce f modulo a list of monic polynomials.

    Standard division: peel the largest remaining term, subtract the first
    (in basis order) matching multiple, park irreducible terms.
    """
    if P.mode != COMMUTATIVE:
        raise MismatchError("Groebner reduction needs commutative mode")
    key = _order_key(order, P.gens)
    leads = [_lead(g, key)[0] for g in basis]
    gens, p = P.gens, P.p
    work = poly_canon(dict(f), gens, P.mode, p)
    out: dict = {}
    while work:
        w, c = _lead(work, key)
        hit = None
        for gi, lm in enumerate(leads):
            if mono_divides(lm, w):
                hit = gi
                break
        if hit is None:
            out[w] = c
            del work[w]
            continue
        q = tuple(a - b for a, b in zip(w, leads[hit]))
        sign, _ = mono_mul(q, leads[hit], gens, COMMUTATIVE, p)
        step = term_mul_poly((-c * sign) % p, q, basis[hit], gens, COMMUTATIVE, p)
        work = poly_add(work, step, gens, COMMUTATIVE, p)
    return poly_canon(out, gens, COMMUTATIVE, p)


@dataclass
class GroebnerBasis:
    """A monic, interreduced basis with its order and truncation status."""

    presentation: Presentation
    polys: tuple
    order: object = DEGREVLEX
    truncated_at: int | None = None
    _leads: tuple = field(default=None, repr=False, compare=False)

    @property
    def complete(self) -> bool:
        return self.truncated_at is None

    def key(self):
        return _order_key(self.order, self.presentation.gens)

    def leads(self) -> tuple:
        if self._leads is None:
            key = self.key()
            self._leads = tuple(_lead(g, key)[0] for g in self.polys)
        return self._leads

    def normal_form(self, f: dict) -> dict:
        return normal_form(f, list(self.polys), self.presentation, self.order)

    def reduces_to_zero(self, f: dict) -> bool:
        return not self.normal_form(f)


def buchberger(P: Presentation, extra=(), order=DEGREVLEX,
               degree_cap: int | None = None,
               pair_ceiling: int = DEFAULT_PAIR_CEILING) -> GroebnerBasis:
    """Groebner basis of the relation ideal plus optional extra members."""
    if P.mode != COMMUTATIVE:
        raise MismatchError("Groebner bases need commutative mode")
    gens, p = P.gens, P.p
    key = _order_key(order, gens)
    ext = exterior_mask(gens, p, P.mode)

    basis: list[dict] = []
    leads: list[tuple] = []
    pairs: list[tuple] = []  # (degree, kind, i, j) with kind 0=spair, 1=square
    truncated_at = None

    def push_with_pairs(g: dict):
        g = poly_canon(g, gens, COMMUTATIVE, p)
        lm, lc = _lead(g, key)
        if lc != 1:
            g = poly_scale(g, inv_mod(lc, p), gens, COMMUTATIVE, p)
        k = len(basis)
        basis.append(g)
        leads.append(lm)
        for i in range(k):
            w = tuple(max(a, b) for a, b in zip(leads[i], lm))
            heapq.heappush(pairs, (mono_degree(w, gens, COMMUTATIVE), 0, i, k))
        for v, e in enumerate(ext):
            if e and lm[v] == 1:
                heapq.heappush(
                    pairs,
                    (mono_degree(lm, gens, COMMUTATIVE) + gens.degrees[v], 1, k, v))

    for g in list(P.relations) + [poly_canon(dict(g), gens, COMMUTATIVE, p)
                                  for g in extra]:
        if not g:
            continue
        h = normal_form(g, basis, P, order)
        if h:
            push_with_pairs(h)

    processed = 0
    while pairs:
        deg, kind, i, j = heapq.heappop(pairs)
        if degree_cap is not None and deg > degree_cap:
            truncated_at = degree_cap
            break
        processed += 1
        if processed > pair_ceiling:
            raise ResourceLimitError(
                f"Groebner pair ceiling {pair_ceiling} exceeded")
        if kind == 1:
            # implicit exterior square: reduce x_j * g_i
            step = tuple(1 if v == j else 0 for v in range(len(gens)))
            spoly = term_mul_poly(1, step, basis[i], gens, COMMUTATIVE, p)
        else:
            u, v = leads[i], leads[j]
            w = tuple(max(a, b) for a, b in zip(u, v))
            coprime = all(min(a, b) == 0 for a, b in zip(u, v))
            sign_free = not any(
                e and (u[k_] or v[k_]) for k_, e in enumerate(ext))
            if coprime and sign_free:
                continue  # product criterion, classical proof applies
            qi = tuple(a - b for a, b in zip(w, u))
            qj = tuple(a - b for a, b in zip(w, v))
            si, _ = mono_mul(qi, u, gens, COMMUTATIVE, p)
            sj, _ = mono_mul(qj, v, gens, COMMUTATIVE, p)
            A = term_mul_poly(si % p, qi, basis[i], gens, COMMUTATIVE, p)
            B = term_mul_poly(sj % p, qj, basis[j], gens, COMMUTATIVE, p)
            spoly = poly_add(A, poly_scale(B, -1, gens, COMMUTATIVE, p),
                             gens, COMMUTATIVE, p)
        if not spoly:
            continue
        h = normal_form(spoly, basis, P, order)
        if h:
            push_with_pairs(h)

    # interreduce: minimal leading monomials, reduced tails, sorted
    order_idx = sorted(range(len(basis)), key=lambda k_: key(leads[k_]))
    kept: list[dict] = []
    kept_leads: list[tuple] = []
    for k_ in order_idx:
        if any(mono_divides(lm, leads[k_]) for lm in kept_leads):
            continue
        kept.append(basis[k_])
        kept_leads.append(leads[k_])
    final = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1:]
        final.append(normal_form(g, others, P, order) if others else g)
    final = [g for g in final if g]
    final.sort(key=lambda g: key(_lead(g, key)[0]))
    return GroebnerBasis(P, tuple(final), order, truncated_at)


def groebner_basis(P: Presentation, extra=(), degree_cap=None,
                   pair_ceiling=DEFAULT_PAIR_CEILING) -> GroebnerBasis:
    return buchberger(P, extra, DEGREVLEX, degree_cap, pair_ceiling)


def standard_monomials(G: GroebnerBasis, n: int) -> list:
    """Degree-n monomials not divisible by any leading monomial.

    These are a basis of the degree-n quotient component; exact for every
    n below a truncation cap, and for all n when the basis is complete.
    """
    if G.truncated_at is not None and n > G.truncated_at:
        raise ResourceLimitError(
            f"basis truncated at degree {G.truncated_at}, degree {n} requested")
    P = G.presentation
    leads = G.leads()
    return [m for m in monomials_of_degree(P.gens, n, P.mode, P.p)
            if not any(mono_divides(lm, m) for lm in leads)]


def series_of_quotient(G: GroebnerBasis):
    """Hilbert series of the quotient by the ideal.

    Complete basis: exact rational series from the leading-monomial ideal.
    Truncated basis: the dimension prefix up to the cap.
    """
    P = G.presentation
    ext = exterior_mask(P.gens, P.p, P.mode)
    series = quotient_series(G.leads(), P.gens.degrees, ext)
    if G.complete:
        return series
    cap = G.truncated_at
    from .hilbert import dims_from_series
    return TruncatedSeries(tuple(dims_from_series(series, cap)), cap)


def eliminate(P: Presentation, keep, extra=(), degree_cap=None,
              pair_ceiling=DEFAULT_PAIR_CEILING):
    """Members of the ideal involving only the kept generators.

    Computed with a block order whose front block is the complement of
    `keep`; basis elements none of whose monomials touch the front block
    generate the intersection with the subalgebra on the kept generators
    (up to the cap when one is given).
    """
    keep = frozenset(keep)
    front = tuple(i for i in range(len(P.gens)) if i not in keep)
    G = buchberger(P, extra, ("eliminate", front), degree_cap, pair_ceiling)
    out = []
    for g in G.polys:
        if all(all(m[i] == 0 for i in front) for m in g):
            out.append(g)
    return out, G


@dataclass
class IdealHandle:
    """A homogeneous ideal of the presented quotient algebra.

    `gens` are polynomials in the ambient free algebra; the ideal they cut
    out in A = free/relations is what the handle names.  `dims` and `cap`
    are filled in for annihilators (degreewise dimensions up to the cap).
    """

    presentation: Presentation
    gens: tuple
    dims: tuple | None = None
    cap: int | None = None

    def combined_basis(self, degree_cap=None) -> GroebnerBasis:
        """Basis of relations + handle generators (quotient by the ideal)."""
        return groebner_basis(self.presentation, self.gens, degree_cap)


def annihilator(G: GroebnerBasis, ideal_gens, max_degree: int) -> IdealHandle:
    """Degreewise annihilator of the ideal generated by `ideal_gens`.

    For each degree n <= max_degree the component Ann_n is the kernel of
    x -> (x*f_1, ..., x*f_k) on standard-monomial coordinates, computed
    through normal forms.  Exact per degree; homogeneous elements kill the
    whole ideal once they kill its generators, by graded commutativity.
    """
    P = G.presentation
    gens, p = P.gens, P.p
    fs = [poly_canon(dict(f), gens, P.mode, p) for f in ideal_gens]
    fs = [f for f in fs if f]
    fdegs = [poly_degree(f, gens, P.mode) for f in fs]
    if G.truncated_at is not None:
        top = max_degree + max(fdegs, default=0)
        if top > G.truncated_at:
            raise ResourceLimitError(
                f"annihilator to degree {max_degree} needs normal forms to "
                f"degree {top}, basis truncated at {G.truncated_at}")
    dims = []
    ann_gens = []
    for n in range(max_degree + 1):
        sm = standard_monomials(G, n)
        if not sm:
            dims.append(0)
            continue
        if not fs:
            dims.append(len(sm))
            for m in sm:
                ann_gens.append({m: 1})
            continue
        blocks = []
        for f, e in zip(fs, fdegs):
            target = standard_monomials(G, n + e)
            tindex = {m: i for i, m in enumerate(target)}
            M = np.zeros((len(sm), len(target)), dtype=np.int64)
            for r, s in enumerate(sm):
                prod = G.normal_form(term_mul_poly(1, s, f, gens, P.mode, p))
                for m, c in prod.items():
                    M[r, tindex[m]] = c
            blocks.append(M)
        stacked = np.concatenate(blocks, axis=1) if blocks else None
        kern = nullspace(stacked.T, p)
        dims.append(kern.shape[0])
        for row in kern:
            poly = {m: int(c) for m, c in zip(sm, row) if c}
            ann_gens.append(poly_canon(poly, gens, P.mode, p))
    return IdealHandle(P, tuple(ann_gens), tuple(dims), max_degree)

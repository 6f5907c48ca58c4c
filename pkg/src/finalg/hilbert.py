"""Hilbert series of graded algebras as exact integer rational functions.

A series is stored as a pair of integer polynomials in t (coefficient
tuples, index = power).  Canonical form is gcd-reduced with coprime integer
contents and a positive denominator constant term.  Degreewise dimensions
come from the recurrence

    P^(0) = P,   dim A_n = P^(n)(0),   P^(n+1) = (P^(n) - dim A_n) / t,

evaluated with exact rational arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import BoundExceededError, ParseError

IntPoly = tuple  # tuple[int, ...], coefficient of t^k at index k


# ---------------------------------------------------------------- int polys

def _trim(coeffs) -> IntPoly:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(int(c) for c in cs) if cs else (0,)


def poly_add(a, b) -> IntPoly:
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)
                  for k in range(n)])


def poly_sub(a, b) -> IntPoly:
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0)
                  for k in range(n)])


def poly_mul(a, b) -> IntPoly:
    if a == (0,) or b == (0,):
        return (0,)
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim(out)


def poly_scale(a, c: int) -> IntPoly:
    return _trim([c * x for x in a])


def _content(a) -> int:
    from math import gcd
    g = 0
    for c in a:
        g = gcd(g, abs(c))
    return g or 1


def _poly_gcd(a, b) -> IntPoly:
    """Primitive gcd of two integer polynomials, positive leading coefficient."""
    A = [Fraction(c) for c in a]
    B = [Fraction(c) for c in b]

    def trimf(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    A, B = trimf(A), trimf(B)
    while B:
        # A mod B by long division over Q
        R = A[:]
        while len(R) >= len(B) and trimf(R):
            q = R[-1] / B[-1]
            shift = len(R) - len(B)
            for i, c in enumerate(B):
                R[shift + i] -= q * c
            R = trimf(R)
            if not R:
                break
        A, B = B, R
    if not A:
        return (0,)
    # clear denominators, make primitive, positive lead
    from math import gcd, lcm
    den = 1
    for c in A:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in A]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def _poly_div_exact(a, b) -> IntPoly:
    """Quotient a / b when the division is exact."""
    if a == (0,):
        return (0,)
    A = [Fraction(c) for c in a]
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    for k in range(len(out) - 1, -1, -1):
        q = A[k + len(b) - 1] / b[-1]
        out[k] = q
        if q:
            for i, c in enumerate(b):
                A[k + i] -= q * c
    if any(A) or any(c.denominator != 1 for c in out):
        raise ArithmeticError("inexact polynomial division")
    return _trim([int(c) for c in out])


# ------------------------------------------------------------- series text

_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+)\s*\*?\s*)?(?P<t>t)?\s*(?:\^\s*(?P<exp>\d+))?\s*")


def parse_int_poly(text: str, line: int | None = None) -> IntPoly:
    """Parse an integer polynomial in t, e.g. "1-2t+t^2"."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial", line)
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"bad series polynomial near {s[pos:]!r}", line)
        sign, coeff, tvar, exp = m.group("sign", "coeff", "t", "exp")
        if coeff is None and tvar is None:
            raise ParseError(f"bad series polynomial near {s[pos:]!r}", line)
        if sign is None and not first:
            raise ParseError(f"missing sign near {s[pos:]!r}", line)
        if exp is not None and tvar is None:
            raise ParseError(f"exponent without t near {s[pos:]!r}", line)
        c = int(coeff) if coeff is not None else 1
        if sign == "-":
            c = -c
        k = 0 if tvar is None else (int(exp) if exp is not None else 1)
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
        first = False
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return _trim(out)


def format_int_poly(coeffs) -> str:
    coeffs = _trim(coeffs)
    if coeffs == (0,):
        return "0"
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = "t" if mag == 1 else f"{mag}t"
        else:
            body = f"t^{k}" if mag == 1 else f"{mag}t^{k}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return "".join(parts)


# ----------------------------------------------------------------- series

@dataclass(frozen=True)
class RationalSeries:
    """Exact rational generating function num(t)/den(t), den(0) != 0."""

    num: IntPoly
    den: IntPoly

    def __post_init__(self):
        object.__setattr__(self, "num", _trim(self.num))
        object.__setattr__(self, "den", _trim(self.den))
        if self.den == (0,) or self.den[0] == 0:
            raise ValueError("series denominator needs a nonzero constant term")

    def canonical(self) -> "RationalSeries":
        num, den = self.num, self.den
        if num == (0,):
            return RationalSeries((0,), (1,))
        g = _poly_gcd(num, den)
        if len(g) > 1:
            num = _poly_div_exact(num, g)
            den = _poly_div_exact(den, g)
        from math import gcd
        c = gcd(_content(num), _content(den))
        if c > 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        if den[0] < 0:
            num = tuple(-x for x in num)
            den = tuple(-x for x in den)
        return RationalSeries(num, den)

    def __str__(self):
        return f"{format_int_poly(self.num)} / {format_int_poly(self.den)}"


@dataclass(frozen=True)
class TruncatedSeries:
    """Power-series prefix: coefficients for degrees 0..bound."""

    coeffs: tuple
    bound: int

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        if len(cs) != self.bound + 1:
            raise ValueError("coefficient count does not match bound")
        object.__setattr__(self, "coeffs", cs)

    def __str__(self):
        return format_int_poly(self.coeffs) + f" + O(t^{self.bound + 1})"


def parse_series(text: str, line: int | None = None) -> RationalSeries:
    """Parse "num / den" with integer polynomial halves."""
    if text.count("/") != 1:
        raise ParseError("series must be written as num / den", line)
    num_s, den_s = text.split("/")
    return RationalSeries(parse_int_poly(num_s, line), parse_int_poly(den_s, line))


def dims_from_series(series: RationalSeries, max_degree: int) -> list[int]:
    """Degreewise dimensions dim A_0 .. dim A_max via the shift recurrence."""
    den = [Fraction(c) for c in series.den]
    num = [Fraction(c) for c in series.num]
    dims = []
    for _ in range(max_degree + 1):
        c = (num[0] if num else Fraction(0)) / den[0]
        dims.append(int(c) if c.denominator == 1 else c)
        # (P - c)/t: subtract c*den from num, then shift one slot down
        work = num + [Fraction(0)] * (len(den) - len(num))
        for i, d in enumerate(den):
            work[i] -= c * d
        num = work[1:]
    return dims


def expand(series, max_degree: int) -> list[int]:
    """Coefficients 0..max_degree of a rational or truncated series."""
    if isinstance(series, RationalSeries):
        return dims_from_series(series, max_degree)
    if isinstance(series, TruncatedSeries):
        if max_degree > series.bound:
            raise BoundExceededError(
                f"series truncated at {series.bound}, degree {max_degree} requested")
        return list(series.coeffs[: max_degree + 1])
    raise TypeError(f"not a series: {series!r}")


def equal(P: RationalSeries, Q: RationalSeries) -> bool:
    """Exact equality by cross-multiplication, no canonicalization needed."""
    return poly_mul(P.num, Q.den) == poly_mul(Q.num, P.den)


def equal_truncated(P, Q, max_degree: int) -> bool:
    return expand(P, max_degree) == expand(Q, max_degree)


def count_nonzero_vectors(dim: int, p: int) -> int:
    """Number of nonzero coordinate vectors in GF(p)^dim."""
    return p ** dim - 1


# ----------------------------------------------- monomial ideal numerators

def _minimalize(gens):
    """Drop monomial generators divisible by another generator."""
    out = []
    for u in sorted(set(gens), key=lambda m: (sum(m), m)):
        if any(all(v[i] <= u[i] for i in range(len(u))) for v in out):
            continue
        out.append(u)
    return out


def monomial_ideal_numerator(gens, weights) -> IntPoly:
    """Numerator of the Hilbert series of k[x]/M over prod(1 - t^w_i).

    gens: exponent vectors of monomial ideal generators; weights: variable
    degrees.  Pivot recursion: split on a variable occurring in at least two
    minimal generators,

        N(M) = N(M + <x_j>) + t^{w_j} * N(M : x_j).
    """
    gens = _minimalize([tuple(g) for g in gens])
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return (0,)  # 1 in the ideal, quotient is zero

    def wdeg(u):
        return sum(e * w for e, w in zip(u, weights))

    if len(gens) == 1:
        return poly_sub((1,), (0,) * wdeg(gens[0]) + (1,))
    # coprime generators split the quotient into a tensor product
    counts = [0] * len(weights)
    for u in gens:
        for i, e in enumerate(u):
            if e:
                counts[i] += 1
    best = max(range(len(weights)), key=lambda i: counts[i])
    if counts[best] <= 1:
        out = (1,)
        for u in gens:
            out = poly_mul(out, poly_sub((1,), (0,) * wdeg(u) + (1,)))
        return out
    j = best
    plus = [u for u in gens if u[j] == 0]
    plus.append(tuple(1 if i == j else 0 for i in range(len(weights))))
    colon = [tuple(e - 1 if i == j and e > 0 else e for i, e in enumerate(u))
             for u in gens]
    n_plus = monomial_ideal_numerator(plus, weights)
    n_colon = monomial_ideal_numerator(colon, weights)
    return poly_add(n_plus, poly_mul((0,) * weights[j] + (1,), n_colon))


def quotient_series(lead_exponents, weights, exterior_mask) -> RationalSeries:
    """Series of a graded quotient from leading monomials.

    exterior_mask flags variables with an implicit square-zero; their squares
    join the monomial ideal and the denominator keeps the plain 1 - t^w
    factor for every variable, so an exterior line contributes
    (1 - t^2w)/(1 - t^w) = 1 + t^w.
    """
    m = len(weights)
    gens = [tuple(g) for g in lead_exponents]
    for i, ext in enumerate(exterior_mask):
        if ext:
            gens.append(tuple(2 if k == i else 0 for k in range(m)))
    num = monomial_ideal_numerator(gens, weights)
    den = (1,)
    for w in weights:
        den = poly_mul(den, poly_sub((1,), (0,) * w + (1,)))
    return RationalSeries(num, den).canonical()

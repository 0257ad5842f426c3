"""Exact real algebraic numbers.

Two representations cover everything downstream:

* ``Quadratic``: a + b*sqrt(D) with rational a, b and square-free D.  All
  arithmetic and comparisons are exact.  Canonical form: b == 0 forces D == 0,
  and b != 0 forces D >= 2 square-free, so structural equality is semantic
  equality.
* ``IsolatedRoot``: the unique real root of a square-free integer polynomial
  inside a rational interval with a sign change.  Construction verifies the
  Sturm count is exactly one.

Comparisons across the two kinds (and across different D) are decided
exactly: structural/gcd-based equality testing first, then interval
refinement, which terminates because distinct algebraic numbers separate.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from . import intpoly
from .intpoly import Poly
from .numtheory import quad_sign, squarefree_part

DEFAULT_WIDTH = Fraction(1, 2**64)


def _sqrt_interval(D: int, width: Fraction) -> tuple[Fraction, Fraction]:
    """Rational enclosure of sqrt(D) of the requested width."""
    if D == 0:
        return Fraction(0), Fraction(0)
    k = 1
    while Fraction(1, 1 << k) >= width:
        k += 1
    scale = 1 << k
    s = math.isqrt(D * scale * scale)
    lo = Fraction(s, scale)
    hi = Fraction(s + 1, scale)
    if lo * lo == D:
        hi = lo
    return lo, hi


class Quadratic:
    """Exact element a + b*sqrt(D) of a real quadratic field (or Q)."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a, b=0, D: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        if D < 0:
            raise ValueError("D must be nonnegative")
        if b != 0 and D > 1:
            dec = squarefree_part(D)
            D = dec.x
            b = b * dec.y
        if D <= 1 or b == 0:
            # sqrt(0) = 0, sqrt(1) = 1: fold into the rational part
            a = a + b * D
            b = Fraction(0)
            D = 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "D", D)

    def __setattr__(self, *args):
        raise AttributeError("Quadratic is immutable")

    # -- predicates ------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def sign(self) -> int:
        return quad_sign(self.a, self.b, self.D)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Quadratic | None":
        if isinstance(other, Quadratic):
            if other.D == self.D or other.is_rational or self.is_rational:
                return other
            return None
        if isinstance(other, (int, Fraction)):
            return Quadratic(other)
        return None

    def _common_D(self, other: "Quadratic") -> int:
        return self.D if self.D else other.D

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quadratic(self.a + o.a, self.b + o.b, self._common_D(o))

    __radd__ = __add__

    def __neg__(self):
        return Quadratic(-self.a, -self.b, self.D)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        D = self._common_D(o)
        return Quadratic(self.a * o.a + self.b * o.b * D, self.a * o.b + self.b * o.a, D)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.a * o.a - o.b * o.b * (o.D if o.D else self.D)
        if norm == 0:
            raise ZeroDivisionError
        inv = Quadratic(o.a / norm, -o.b / norm, o.D)
        return self * inv

    def __rtruediv__(self, other):
        return Quadratic(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return Quadratic(1) / self ** (-n)
        out = Quadratic(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "Quadratic":
        return Quadratic(self.a, -self.b, self.D)

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.a == other
        if isinstance(other, Quadratic):
            return self.a == other.a and self.b == other.b and self.D == other.D
        if isinstance(other, IsolatedRoot):
            return alg_cmp(self, other) == 0
        return NotImplemented

    def __hash__(self):
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def _cmp_same_field(self, other: "Quadratic") -> int:
        d = self - other
        return quad_sign(d.a, d.b, d.D)

    def __lt__(self, other):
        return alg_cmp(self, other) < 0

    def __le__(self, other):
        return alg_cmp(self, other) <= 0

    def __gt__(self, other):
        return alg_cmp(self, other) > 0

    def __ge__(self, other):
        return alg_cmp(self, other) >= 0

    # -- misc ------------------------------------------------------------

    def interval(self, width: Fraction = DEFAULT_WIDTH) -> tuple[Fraction, Fraction]:
        if self.b == 0:
            return self.a, self.a
        if self.b > 0:
            w = width / (2 * self.b)
            slo, shi = _sqrt_interval(self.D, w)
            return self.a + self.b * slo, self.a + self.b * shi
        w = width / (-2 * self.b)
        slo, shi = _sqrt_interval(self.D, w)
        return self.a + self.b * shi, self.a + self.b * slo

    def min_poly(self) -> Poly:
        """Primitive integer minimal polynomial."""
        if self.is_rational:
            return intpoly.primitive((-self.a, Fraction(1)))
        tr = 2 * self.a
        nm = self.a * self.a - self.b * self.b * self.D
        return intpoly.primitive((nm, -tr, Fraction(1)))

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.D)

    def __repr__(self):
        if self.is_rational:
            return f"Quadratic({self.a})"
        return f"Quadratic({self.a} + {self.b}*sqrt({self.D}))"

    def __str__(self):
        if self.is_rational:
            return str(self.a)
        return f"{self.a}{'+' if self.b > 0 else '-'}{abs(self.b)}√{self.D}"


class IsolatedRoot:
    """Unique real root of a square-free integer polynomial in (lo, hi)."""

    __slots__ = ("poly", "_lo", "_hi")

    def __init__(self, poly: Poly, lo: Fraction, hi: Fraction):
        poly = intpoly.primitive(poly)
        lo, hi = Fraction(lo), Fraction(hi)
        if intpoly.degree(poly) < 1:
            raise ValueError("constant polynomial has no roots")
        sf = intpoly.squarefree_part(poly)
        if sf != poly:
            raise ValueError("polynomial must be square-free")
        if not lo < hi:
            raise ValueError("empty isolating interval")
        if intpoly.poly_eval(poly, lo) == 0 or intpoly.poly_eval(poly, hi) == 0:
            raise ValueError("isolating interval endpoints must not be roots")
        chain = intpoly.sturm_chain(poly)
        if intpoly.count_real_roots(chain, lo, hi) != 1:
            raise ValueError("interval must isolate exactly one root")
        if intpoly._rational_root_in(poly, lo, hi) is not None:
            raise ValueError("the isolated root is rational; represent it exactly")
        self.poly = poly
        self._lo = lo
        self._hi = hi

    def interval(self, width: Fraction = DEFAULT_WIDTH) -> tuple[Fraction, Fraction]:
        # refinement only tightens; redundant concurrent work is harmless
        if self._hi - self._lo > width:
            lo, hi = intpoly.refine_interval(self.poly, self._lo, self._hi, width)
            if lo == hi:
                raise AssertionError("square-free isolation hit an exact rational root")
            self._lo, self._hi = lo, hi
        return self._lo, self._hi

    def min_poly(self) -> Poly:
        return self.poly

    def sign(self) -> int:
        lo, hi = self._lo, self._hi
        while lo < 0 < hi:
            lo, hi = self.interval((hi - lo) / 4)
        if hi < 0:
            return -1
        if lo > 0:
            return 1
        return 0 if lo == hi == 0 else (1 if hi > 0 else -1)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Quadratic, IsolatedRoot)):
            return alg_cmp(self, other) == 0
        return NotImplemented

    def __hash__(self):
        # hash by minimal data: polynomial plus a coarse locator
        lo, hi = self.interval(Fraction(1, 4))
        return hash((self.poly, math.floor(lo * 4)))

    def __lt__(self, other):
        return alg_cmp(self, other) < 0

    def __le__(self, other):
        return alg_cmp(self, other) <= 0

    def __gt__(self, other):
        return alg_cmp(self, other) > 0

    def __ge__(self, other):
        return alg_cmp(self, other) >= 0

    def __float__(self):
        lo, hi = self.interval(Fraction(1, 2**56))
        return float((lo + hi) / 2)

    def __repr__(self):
        return f"IsolatedRoot({list(self.poly)}, ~{float(self):.6f})"


AlgebraicReal = Union[Quadratic, IsolatedRoot]


def ensure_algebraic(x) -> AlgebraicReal:
    if isinstance(x, (Quadratic, IsolatedRoot)):
        return x
    if isinstance(x, (int, Fraction)):
        return Quadratic(x)
    raise TypeError(f"not an exact real: {x!r}")


def _structural_eq(x: AlgebraicReal, y: AlgebraicReal) -> bool | None:
    """Exact equality decision; None means 'not equal by structure, compare
    numerically' is not yet settled and refinement is required."""
    if isinstance(x, Quadratic) and isinstance(y, Quadratic):
        return x.a == y.a and x.b == y.b and x.D == y.D
    if isinstance(x, Quadratic) and isinstance(y, IsolatedRoot):
        x, y = y, x
    if isinstance(x, IsolatedRoot) and isinstance(y, Quadratic):
        # y is a root of x.poly and lies in x's interval <=> equal
        val = _eval_int_poly_at_quadratic(x.poly, y)
        if val.sign() != 0:
            return False
        lo, hi = x.interval(Fraction(1, 16))
        ylo, yhi = y.interval(Fraction(1, 16))
        if yhi < lo or ylo > hi:
            return False
        # y is a root of x.poly near x's interval; settle by containment
        return _quadratic_in_interval(y, x)
    if isinstance(x, IsolatedRoot) and isinstance(y, IsolatedRoot):
        g = intpoly.poly_gcd(x.poly, y.poly)
        if intpoly.degree(g) < 1:
            return False
        xlo, xhi = x.interval(Fraction(1, 16))
        ylo, yhi = y.interval(Fraction(1, 16))
        lo, hi = max(xlo, ylo), min(xhi, yhi)
        if lo >= hi:
            # shrink both until separated or overlapping stabilizes
            return None
        chain = intpoly.sturm_chain(g)
        while intpoly.poly_eval(g, lo) == 0 or intpoly.poly_eval(g, hi) == 0:
            # perturb endpoints off roots of the gcd
            span = hi - lo
            lo -= span / 7
            hi += span / 7
        return intpoly.count_real_roots(chain, lo, hi) >= 1
    return None


def _quadratic_in_interval(q: Quadratic, r: IsolatedRoot) -> bool:
    lo, hi = r._lo, r._hi
    while True:
        qlo, qhi = q.interval((hi - lo) / 8)
        if qlo > lo and qhi < hi:
            return True
        if qhi < lo or qlo > hi:
            return False
        lo, hi = r.interval((hi - lo) / 8)


def alg_cmp(x, y) -> int:
    """Total order on exact reals: -1, 0, or +1."""
    x = ensure_algebraic(x)
    y = ensure_algebraic(y)
    if isinstance(x, Quadratic) and isinstance(y, Quadratic):
        if x.D == y.D or x.is_rational or y.is_rational:
            d = x - y
            return quad_sign(d.a, d.b, d.D)
    eq = _structural_eq(x, y)
    if eq is True:
        return 0
    width = Fraction(1, 16)
    while True:
        xlo, xhi = x.interval(width)
        ylo, yhi = y.interval(width)
        if xhi < ylo:
            return -1
        if yhi < xlo:
            return 1
        if eq is None:
            eq = _structural_eq(x, y)
            if eq is True:
                return 0
        if eq is False and width < Fraction(1, 2**512):
            raise AssertionError("failed to separate unequal algebraic numbers")
        width /= 256


def _eval_int_poly_at_quadratic(p: Poly, q: Quadratic) -> Quadratic:
    acc = Quadratic(0, 0, q.D)
    for c in reversed(p):
        acc = acc * q + Quadratic(c)
    return acc


def alg_float(x) -> float:
    return float(ensure_algebraic(x))


def algebraic_root(poly: Poly, lo: Fraction, hi: Fraction, width: Fraction = DEFAULT_WIDTH) -> AlgebraicReal:
    """The unique root of square-free integer poly in (lo, hi), promoted to a
    Quadratic when its minimal polynomial has degree <= 2.

    For higher-degree roots an IsolatedRoot refined below `width` is returned.
    """
    poly = intpoly.primitive(poly)
    if intpoly.degree(poly) == 1:
        return Quadratic(Fraction(-poly[0], poly[1]))
    lo, hi = intpoly.refine_interval(poly, lo, hi, Fraction(1, 16))
    if lo == hi:
        return Quadratic(lo)
    # degree-1 factor: a rational root in the interval
    r = intpoly._rational_root_in(poly, lo, hi)
    if r is not None:
        return Quadratic(r)
    q = _promote_quadratic(poly, lo, hi)
    if q is not None:
        return q
    root = IsolatedRoot(poly, lo, hi)
    root.interval(width)
    return root


def _promote_quadratic(poly: Poly, lo: Fraction, hi: Fraction) -> Quadratic | None:
    """Find a monic quadratic factor x^2 - t*x - u of poly owning the root in
    (lo, hi), and return that root exactly.

    Only applies to monic poly (characteristic polynomials), where quadratic
    algebraic numbers are quadratic algebraic integers.  The conjugate root
    is itself a root of poly, so the trace candidates t come from pairing the
    target with each other isolated real root; that keeps the search linear
    in the degree instead of in the coefficient size.
    """
    if poly[-1] != 1:
        return None
    lo, hi = intpoly.refine_interval(poly, lo, hi, Fraction(1, 2**20))
    if lo == hi:
        return Quadratic(lo)
    _, intervals = intpoly.isolate_real_roots(poly)
    for other in intervals:
        olo, ohi = other
        # narrow both roots until the trace pins down at most one integer
        while (hi - lo) + (ohi - olo) >= Fraction(1, 2):
            lo, hi = intpoly.refine_interval(poly, lo, hi, (hi - lo) / 4)
            olo, ohi = intpoly.refine_interval(poly, olo, ohi, (ohi - olo) / 4)
        for t in range(math.ceil(lo + olo), math.floor(hi + ohi) + 1):
            # u = x^2 - t*x at the target root; the interval is narrow enough
            # that at most a couple of integers qualify
            vals = [lo * lo - t * lo, hi * hi - t * hi]
            if lo < Fraction(t, 2) < hi:
                vals.append(Fraction(t, 2) ** 2 - t * Fraction(t, 2))
            for u in range(math.ceil(min(vals)), math.floor(max(vals)) + 1):
                disc = t * t + 4 * u
                if disc <= 0:
                    continue
                s = math.isqrt(disc)
                if s * s == disc:
                    continue  # rational roots were already ruled out
                try:
                    intpoly.poly_divexact(poly, (-u, -t, 1))
                except ValueError:
                    continue
                for sign in (1, -1):
                    cand = Quadratic(Fraction(t, 2), Fraction(sign, 2), disc)
                    if _quad_in_open_interval(cand, lo, hi):
                        return cand
    return None


def _quad_in_open_interval(q: Quadratic, lo: Fraction, hi: Fraction) -> bool:
    return quad_sign(q.a - lo, q.b, q.D) > 0 and quad_sign(q.a - hi, q.b, q.D) < 0


def largest_real_root(poly: Poly, width: Fraction = DEFAULT_WIDTH) -> AlgebraicReal:
    """Largest real root of an integer polynomial (square-free part is taken)."""
    sf = intpoly.squarefree_part(poly)
    rational, intervals = intpoly.isolate_real_roots(sf)
    if not rational and not intervals:
        raise ValueError("polynomial has no real roots")
    best: AlgebraicReal | None = None
    if rational:
        best = Quadratic(rational[-1])
    if intervals:
        lo, hi = intervals[-1]
        cand = algebraic_root(sf, lo, hi, width)
        if best is None or alg_cmp(cand, best) > 0:
            best = cand
    return best


def all_real_roots(poly: Poly, width: Fraction = DEFAULT_WIDTH) -> list[AlgebraicReal]:
    """All distinct real roots of an integer polynomial, ascending."""
    sf = intpoly.squarefree_part(poly)
    rational, intervals = intpoly.isolate_real_roots(sf)
    roots: list[AlgebraicReal] = [Quadratic(r) for r in rational]
    roots.extend(algebraic_root(sf, lo, hi, width) for lo, hi in intervals)
    roots.sort(key=_SortKey)
    return roots


class _SortKey:
    """Exact comparison key for sorting algebraic reals."""

    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return alg_cmp(self.v, other.v) < 0

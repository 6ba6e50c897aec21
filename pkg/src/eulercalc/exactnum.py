"""Exact number tower: big rationals, rational interval arithmetic, real
root isolation, and real algebraic numbers.

Univariate polynomials over Q are plain tuples of Fraction coefficients,
lowest degree first, with no trailing zero entry; ``()`` is the zero
polynomial.  Everything here is exact; there is no floating-point path.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Union

Rational = Fraction

QLike = Union[int, Fraction]


def sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


# ---------------------------------------------------------------------------
# univariate polynomials over Q


def upoly(coeffs: Iterable[QLike]) -> tuple:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def udeg(p) -> int:
    return len(p) - 1


def uconst(c) -> tuple:
    return upoly([c])


def uev(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def uderiv(p) -> tuple:
    return tuple(i * c for i, c in enumerate(p))[1:]


def uadd(p, q) -> tuple:
    if len(p) < len(q):
        p, q = q, p
    cs = list(p)
    for i, c in enumerate(q):
        cs[i] += c
    return upoly(cs)


def uneg(p) -> tuple:
    return tuple(-c for c in p)


def usub(p, q) -> tuple:
    return uadd(p, uneg(q))


def uscale(p, c) -> tuple:
    c = Fraction(c)
    if c == 0:
        return ()
    return tuple(a * c for a in p)


def umul(p, q) -> tuple:
    if not p or not q:
        return ()
    cs = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                cs[i + j] += a * b
    return upoly(cs)


def umonic(p) -> tuple:
    if not p:
        return ()
    return uscale(p, 1 / p[-1])


def udivmod(p, q):
    """Exact division with remainder over Q; q must be nonzero."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p)
    dq, lq = udeg(q), q[-1]
    quo = [Fraction(0)] * max(len(p) - dq, 0)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f = c / lq
        quo[i - dq] = f
        for j, b in enumerate(q):
            rem[i - dq + j] -= f * b
    return upoly(quo), upoly(rem)


def ugcd(p, q) -> tuple:
    """Monic gcd over Q (monic q for gcd((), q))."""
    while q:
        p, q = q, udivmod(p, q)[1]
    return umonic(p)


def usquarefree(p) -> tuple:
    """Monic square-free part of a nonzero polynomial."""
    if not p:
        raise ValueError("zero polynomial")
    if udeg(p) == 0:
        return (Fraction(1),)
    g = ugcd(p, uderiv(p))
    if udeg(g) == 0:
        return umonic(p)
    return umonic(udivmod(p, g)[0])


def ushift(p, c) -> tuple:
    """p(x + c)."""
    c = Fraction(c)
    acc: tuple = ()
    shift = (c, Fraction(1))
    for a in reversed(p):
        acc = uadd(umul(acc, shift), uconst(a))
    return acc


def ucompose_linear(p, a, b) -> tuple:
    """p(a + b*x) with b != 0."""
    a, b = Fraction(a), Fraction(b)
    acc: tuple = ()
    lin = (a, b)
    for cf in reversed(p):
        acc = uadd(umul(acc, lin), uconst(cf))
    return acc


def sign_variations(coeffs) -> int:
    last = 0
    flips = 0
    for c in coeffs:
        s = sign(c)
        if s == 0:
            continue
        if last and s != last:
            flips += 1
        last = s
    return flips


def cauchy_bound(p) -> Fraction:
    """B with every real root of p strictly inside (-B, B)."""
    if udeg(p) < 1:
        return Fraction(1)
    lead = abs(p[-1])
    return 1 + max(abs(c) for c in p[:-1]) / lead


# ---------------------------------------------------------------------------
# interval arithmetic (closed rational intervals)


def iv_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def iv_mul(a, b):
    vs = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(vs), max(vs))


def uev_interval(p, lo, hi):
    """Interval enclosure of p over [lo, hi] by interval Horner."""
    acc = (Fraction(0), Fraction(0))
    x = (Fraction(lo), Fraction(hi))
    for c in reversed(p):
        acc = iv_add(iv_mul(acc, x), (c, c))
    return acc


# ---------------------------------------------------------------------------
# Sturm sequences (the independent counting oracle; also used for
# algebraic-number comparison certificates)


def sturm_chain(p):
    chain = [p, uderiv(p)]
    while chain[-1]:
        r = udivmod(chain[-2], chain[-1])[1]
        if not r:
            break
        # scale by a positive constant to keep numbers small
        chain.append(uscale(uneg(r), 1 / abs(r[-1])))
    return [f for f in chain if f]


def _sign_at_inf(p, positive: bool) -> int:
    s = sign(p[-1])
    if positive or udeg(p) % 2 == 0:
        return s
    return -s


def _variations_at(chain, x: Optional[Fraction], positive_inf: bool) -> int:
    if x is None:
        return sign_variations(_sign_at_inf(f, positive_inf) for f in chain)
    return sign_variations(sign(uev(f, x)) for f in chain)


def sturm_count(p, lo: Optional[QLike] = None, hi: Optional[QLike] = None) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi),
    the whole line for None endpoints.  Finite endpoints must not be roots.
    """
    if not p:
        raise ValueError("zero polynomial")
    if udeg(p) == 0:
        return 0
    if lo is not None:
        lo = Fraction(lo)
        if uev(p, lo) == 0:
            raise ValueError("endpoint is a root")
    if hi is not None:
        hi = Fraction(hi)
        if uev(p, hi) == 0:
            raise ValueError("endpoint is a root")
    chain = sturm_chain(p)
    va = _variations_at(chain, lo, positive_inf=False)
    vb = _variations_at(chain, hi, positive_inf=True)
    return va - vb


# ---------------------------------------------------------------------------
# real algebraic numbers


class AlgebraicNumber:
    """The unique real root of ``poly`` (square-free over Q) inside the open
    rational interval (lo, hi).

    The interval never excludes the root and only ever shrinks; the
    endpoints are never roots of ``poly``.  Concurrent readers must tolerate
    monotone shrinking.
    """

    __slots__ = ("poly", "lo", "hi", "_exact")

    def __init__(self, poly, lo, hi, exact=None):
        self.poly = upoly(poly)
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self._exact = None if exact is None else Fraction(exact)
        if self._exact is None and udeg(self.poly) == 1:
            self._exact = -self.poly[0] / self.poly[1]

    @classmethod
    def from_rational(cls, r) -> "AlgebraicNumber":
        r = Fraction(r)
        return cls((-r, Fraction(1)), r - 1, r + 1, exact=r)

    @property
    def rational(self) -> Optional[Fraction]:
        return self._exact

    def interval(self):
        return (self.lo, self.hi)

    def width(self) -> Fraction:
        return self.hi - self.lo

    def _tighten_exact(self):
        r = self._exact
        w = (self.hi - self.lo) / 4
        lo, hi = r - w, r + w
        # keep endpoints off the (finitely many) other roots of poly
        while uev(self.poly, lo) == 0:
            lo = (lo + r) / 2
        while uev(self.poly, hi) == 0:
            hi = (hi + r) / 2
        if lo > self.lo:
            self.lo = lo
        if hi < self.hi:
            self.hi = hi

    def refine(self):
        """One bisection step; the interval strictly shrinks."""
        if self._exact is not None:
            self._tighten_exact()
            return
        m = (self.lo + self.hi) / 2
        v = uev(self.poly, m)
        if v == 0:
            self._exact = m
            self._tighten_exact()
        elif sign(v) == sign(uev(self.poly, self.lo)):
            self.lo = m
        else:
            self.hi = m

    def refine_below(self, w):
        w = Fraction(w)
        while self.hi - self.lo >= w:
            self.refine()

    def __float__(self) -> float:
        self.refine_below(Fraction(1, 10**17))
        return float((self.lo + self.hi) / 2)

    def __repr__(self):
        if self._exact is not None:
            return f"AlgebraicNumber({self._exact})"
        ps = " ".join(str(c) for c in self.poly)
        return f"AlgebraicNumber(<{ps}> in ({self.lo}, {self.hi}))"

    # ordering against rationals and other algebraic numbers
    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __eq__(self, other):
        if isinstance(other, (AlgebraicNumber, int, Fraction)):
            return compare(self, other) == 0
        return NotImplemented

    __hash__ = None  # mutable refinement state


def _changes_sign(g, lo, hi) -> bool:
    sa, sb = sign(uev(g, lo)), sign(uev(g, hi))
    assert sa != 0 and sb != 0
    return sa != sb


def sign_at(q, a) -> int:
    """Exact sign of the univariate rational polynomial q at a, where a is a
    Fraction or an AlgebraicNumber."""
    q = upoly(q)
    if isinstance(a, (int, Fraction)):
        return sign(uev(q, Fraction(a)))
    if not q:
        return 0
    if a._exact is not None:
        return sign(uev(q, a._exact))
    g = ugcd(q, a.poly)
    # roots of g are common roots of q and a.poly; a's interval holds exactly
    # one root of a.poly, so g has a sign change there iff q(a) = 0
    if udeg(g) >= 1 and _changes_sign(g, a.lo, a.hi):
        return 0
    while True:
        lo_v, hi_v = uev_interval(q, a.lo, a.hi)
        if lo_v > 0:
            return 1
        if hi_v < 0:
            return -1
        a.refine()
        if a._exact is not None:
            return sign(uev(q, a._exact))


def compare(a, b) -> int:
    """Exact three-way comparison of Fractions/AlgebraicNumbers."""
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return sign(Fraction(a) - Fraction(b))
    if isinstance(a, (int, Fraction)):
        return -compare(b, a)
    if isinstance(b, (int, Fraction)):
        return sign_at((-Fraction(b), Fraction(1)), a)
    if a is b:
        return 0
    if a._exact is not None:
        return -compare(b, a._exact)
    if b._exact is not None:
        return compare(a, b._exact)
    g = ugcd(a.poly, b.poly)
    if udeg(g) >= 1 and _changes_sign(g, a.lo, a.hi) and _changes_sign(g, b.lo, b.hi):
        # both are roots of g; equal iff they never separate
        while True:
            if a.hi <= b.lo:
                return -1
            if b.hi <= a.lo:
                return 1
            hull_lo, hull_hi = min(a.lo, b.lo), max(a.hi, b.hi)
            if sturm_count(g, hull_lo, hull_hi) == 1:
                return 0
            a.refine()
            b.refine()
    while True:
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        a.refine()
        b.refine()


def separate(a: AlgebraicNumber, b: AlgebraicNumber):
    """Refine until the isolating intervals are disjoint (roots must differ)."""
    while not (a.hi <= b.lo or b.hi <= a.lo):
        a.refine()
        b.refine()


# ---------------------------------------------------------------------------
# root isolation: Descartes' rule on Moebius-transformed intervals plus
# bisection, on the square-free part


def _descartes_var(p, a, b) -> int:
    """Descartes bound for the number of roots of p in the open (a, b)."""
    q = ucompose_linear(p, a, b - a)  # roots in (a,b) -> (0,1)
    r = ushift(upoly(reversed(q)), 1)  # roots in (0,1) -> (0,oo)
    return sign_variations(r)


def _certify_one(sq, a, b):
    """(a, b) holds exactly one (simple) root; return an entry with
    endpoints that are not roots of sq."""
    while sign(uev(sq, a)) == 0:
        m = (a + b) / 2
        if uev(sq, m) == 0:
            return ("exact", m)
        if _descartes_var(sq, m, b) >= 1:
            a = m
        else:
            b = m
    while sign(uev(sq, b)) == 0:
        m = (a + b) / 2
        if uev(sq, m) == 0:
            return ("exact", m)
        if _descartes_var(sq, a, m) >= 1:
            b = m
        else:
            a = m
    assert sign(uev(sq, a)) != sign(uev(sq, b))
    return ("iv", a, b)


def _vca(sq, a, b, out):
    v = _descartes_var(sq, a, b)
    if v == 0:
        return
    if v == 1:
        out.append(_certify_one(sq, a, b))
        return
    m = (a + b) / 2
    if uev(sq, m) == 0:
        _vca(sq, a, m, out)
        out.append(("exact", m))
        _vca(sq, m, b, out)
    else:
        _vca(sq, a, m, out)
        _vca(sq, m, b, out)


def isolate_real_roots(p) -> list:
    """All distinct real roots of the nonzero polynomial p, in increasing
    order, as AlgebraicNumbers with pairwise disjoint isolating intervals."""
    p = upoly(p)
    if not p:
        raise ValueError("zero polynomial")
    sq = usquarefree(p)
    if udeg(sq) == 0:
        return []
    bound = cauchy_bound(sq)
    entries: list = []
    _vca(sq, -bound, bound, entries)
    roots = []
    for i, e in enumerate(entries):
        if e[0] == "iv":
            roots.append(AlgebraicNumber(sq, e[1], e[2]))
        else:
            r = e[1]
            lo = entries[i - 1][-1] if i > 0 else r - 1
            hi = entries[i + 1][1] if i + 1 < len(entries) else r + 1
            # the gap between neighbouring roots holds only r; guard the
            # endpoints against accidental roots of sq
            while uev(sq, lo) == 0:
                lo = (lo + r) / 2
            while uev(sq, hi) == 0:
                hi = (hi + r) / 2
            roots.append(AlgebraicNumber(sq, lo, hi, exact=r))
    for x, y in zip(roots, roots[1:]):
        separate(x, y)
    return roots

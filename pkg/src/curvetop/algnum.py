"""Real algebraic numbers and the exact coefficient fields built on them.

An :class:`AlgebraicNumber` is a squarefree rational polynomial plus an
isolating interval.  :class:`AlgebraicField` turns one of them into a
computation context for the residue ring Q[T]/(defpoly): elements are
polynomial residues, signs are decided exactly (gcd test for zero, interval
refinement otherwise), and inversion shrinks the modulus when the defining
polynomial turns out to be reducible.  :class:`QuadExtRing` layers a single
square root on top, which is all the closed-form root formulas ever need.

Subresultant sequences over these rings are computed by lifting residues to
plain polynomial representatives, running the fraction-free chain in the
polynomial domain, and reducing afterwards -- the specialisation property of
subresultants makes this sound as long as the leading coefficient does not
vanish at the algebraic point, which the callers guarantee.
"""

from __future__ import annotations

from fractions import Fraction

from . import subres
from .errors import NotSquarefree
from .intervals import RatInterval, eval_on_interval
from .poly import UniPoly, sign_of


def _sign_fraction(c):
    if c > 0:
        return 1
    if c < 0:
        return -1
    return 0


# ---------------------------------------------------------------------------
# root isolation (generic Descartes bisection)
# ---------------------------------------------------------------------------

def _descartes_variations(coeff_signs):
    """Sign variations, zeros skipped."""
    out = 0
    prev = 0
    for s in coeff_signs:
        if s == 0:
            continue
        if prev and s != prev:
            out += 1
        prev = s
    return out


def _variations_in_interval(p, a, b, sign_fn):
    """Descartes bound for the number of roots of p in the open interval (a, b)."""
    n = p.degree()
    q = p.taylor_shift(a).scale_var(b - a)      # roots in (0,1)
    w = q.reverse(n).taylor_shift(Fraction(1))  # roots in (0,inf)
    return _descartes_variations([sign_fn(c) for c in w.coeffs])


def _synthetic_div_root(p, r):
    """Exact quotient p / (T - r) for a known root r (Horner)."""
    out = []
    acc = None
    for c in reversed(p.coeffs):
        acc = c if acc is None else acc * r + c
        out.append(acc)
    out.pop()  # the remainder, p(r) = 0
    return UniPoly(list(reversed(out)))


def isolate_squarefree_roots(p, sign_fn, bound, with_polys=False):
    """Isolating intervals for all real roots of squarefree p in (-bound, bound).

    Returns a sorted list of (lo, hi) rational pairs; lo == hi marks an exact
    rational root, otherwise the interval is open with nonvanishing endpoints.
    With ``with_polys`` each entry is (lo, hi, q) where q is the (possibly
    deflated) polynomial that is nonzero at both endpoints and has exactly
    one root inside -- the safe defining polynomial for that interval.
    """
    results = []

    def visit(a, b, q):
        v = _variations_in_interval(q, a, b, sign_fn)
        if v == 0:
            return
        if v == 1:
            results.append((a, b, q))
            return
        m = (a + b) / 2
        sm = sign_fn(q.eval(m))
        if sm == 0:
            # exact rational root at the midpoint: deflate so neighbouring
            # intervals keep nonvanishing endpoints
            q2 = _synthetic_div_root(q, m)
            visit(a, m, q2)
            results.append((m, m, q))
            visit(m, b, q2)
        else:
            visit(a, m, q)
            visit(m, b, q)

    visit(-bound, bound, p)
    results.sort(key=lambda iv: (iv[0], iv[1]))
    if with_polys:
        return results
    return [(lo, hi) for lo, hi, _ in results]


def cauchy_bound_rational(p):
    """Power-of-two Cauchy root bound for a Q-coefficient polynomial."""
    lc = abs(p.leading)
    top = max(abs(c) for c in p.coeffs)
    b = 1 + top / lc
    bound = Fraction(2)
    while bound < b:
        bound *= 2
    return bound


# ---------------------------------------------------------------------------
# algebraic numbers over Q
# ---------------------------------------------------------------------------

class AlgebraicNumber:
    """A real algebraic number: squarefree defining polynomial + isolating interval.

    Immutable; refinement returns a new value.  Rationals are the degenerate
    case defpoly = T - r with a point interval.
    """

    __slots__ = ("defpoly", "lo", "hi")

    def __init__(self, defpoly, lo, hi):
        self.defpoly = defpoly
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)

    @classmethod
    def from_rational(cls, r):
        r = Fraction(r)
        return cls(UniPoly.rational([-r, 1]), r, r)

    @property
    def is_exact(self):
        return self.lo == self.hi

    def exact_value(self):
        if not self.is_exact:
            raise ValueError("not an exact rational")
        return self.lo

    def interval(self):
        return RatInterval(self.lo, self.hi)

    def _bisected(self, lo, hi):
        """One bisection step on (lo, hi); returns the new endpoints."""
        m = (lo + hi) / 2
        sm = _sign_fraction(self.defpoly.eval(m))
        if sm == 0:
            return m, m
        if _sign_fraction(self.defpoly.eval(lo)) * sm < 0:
            return lo, m
        return m, hi

    def refine(self, width):
        """A new AlgebraicNumber whose interval is at most ``width`` wide."""
        width = Fraction(width)
        lo, hi = self.lo, self.hi
        while hi - lo > width:
            lo, hi = self._bisected(lo, hi)
        return AlgebraicNumber(self.defpoly, lo, hi)

    def to_float(self, digits=12):
        a = self.refine(Fraction(1, 10 ** digits))
        return float((a.lo + a.hi) / 2)

    def __repr__(self):
        if self.is_exact:
            return f"AlgebraicNumber({self.lo})"
        return f"AlgebraicNumber({self.defpoly.to_string('x')} in ({self.lo}, {self.hi}))"

    # comparisons ------------------------------------------------------------

    def equals(self, other):
        if self.is_exact and other.is_exact:
            return self.lo == other.lo
        if self.is_exact:
            r = self.lo
            return other.lo <= r <= other.hi and other.defpoly.eval(r) == 0
        if other.is_exact:
            return other.equals(self)
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return False
        g = self.defpoly.gcd_monic(other.defpoly)
        if g.degree() < 1:
            return False
        # g divides both squarefree defpolys: at most one root of g in the
        # overlap, present iff the signs at the ends differ or an end is a root
        sl = _sign_fraction(g.eval(lo))
        sh = _sign_fraction(g.eval(hi))
        if sl == 0 or sh == 0:
            # overlap endpoint is a root of g; it must lie in both isolating
            # intervals to be the common value
            r = lo if sl == 0 else hi
            return (self.lo <= r <= self.hi and self.defpoly.eval(r) == 0
                    and other.lo <= r <= other.hi and other.defpoly.eval(r) == 0)
        return sl * sh < 0

    def compare(self, other):
        """-1, 0, +1 ordering consistent with the real numbers."""
        if self.equals(other):
            return 0
        a, b = self, other
        lo_a, hi_a, lo_b, hi_b = a.lo, a.hi, b.lo, b.hi
        while not (hi_a < lo_b or hi_b < lo_a):
            if hi_a - lo_a >= hi_b - lo_b and lo_a != hi_a:
                lo_a, hi_a = a._bisected(lo_a, hi_a)
            else:
                lo_b, hi_b = b._bisected(lo_b, hi_b)
        return -1 if hi_a < lo_b else 1

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __eq__(self, other):
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def to_json(self):
        return {
            "defpoly": [str(c) for c in self.defpoly.coeffs],
            "lo": str(self.lo),
            "hi": str(self.hi),
        }


def compare(a, b):
    """Total order on algebraic numbers (module-level convenience)."""
    return a.compare(b)


def refine(a, width):
    return a.refine(width)


def isolate_real_roots(p):
    """Ordered real roots of a squarefree rational polynomial as AlgebraicNumbers."""
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    if p.degree() == 0:
        return []
    if not p.is_squarefree():
        raise NotSquarefree("isolate_real_roots requires a squarefree input")
    mp = p.monic()
    bound = cauchy_bound_rational(mp)
    ivs = isolate_squarefree_roots(mp, lambda c: _sign_fraction(c), bound,
                                   with_polys=True)
    out = []
    for lo, hi, q in ivs:
        if lo == hi:
            out.append(AlgebraicNumber.from_rational(lo))
        else:
            # q is nonzero at both endpoints, so bisection stays safe even
            # when a neighbouring rational root belongs to the original p
            out.append(AlgebraicNumber(q.monic(), lo, hi))
    return out


def sign_at(q, alpha):
    """Exact sign of the rational polynomial q at the algebraic number alpha."""
    if alpha.is_exact:
        return _sign_fraction(q.eval(alpha.lo))
    if q.is_zero():
        return 0
    g = q.gcd_monic(alpha.defpoly)
    if g.degree() >= 1:
        sl = _sign_fraction(g.eval(alpha.lo))
        sh = _sign_fraction(g.eval(alpha.hi))
        if sl * sh < 0:
            return 0
    lo, hi = alpha.lo, alpha.hi
    while True:
        box = eval_on_interval(q, RatInterval(lo, hi))
        if box.lo > 0:
            return 1
        if box.hi < 0:
            return -1
        lo, hi = alpha._bisected(lo, hi)
        if lo == hi:
            return _sign_fraction(q.eval(lo))


# ---------------------------------------------------------------------------
# the rational base field (context object)
# ---------------------------------------------------------------------------

class RationalField:
    """Field context for plain Fraction coefficients."""

    is_rational_field = True

    def coerce(self, c):
        return Fraction(c)

    def sign(self, c):
        return _sign_fraction(Fraction(c))

    def is_zero(self, c):
        return Fraction(c) == 0

    def div(self, a, b):
        return Fraction(a) / Fraction(b)

    def lift_coeff(self, c):
        return Fraction(c)

    def reduce_coeff(self, rep):
        # representative of a rational element is the rational itself
        if isinstance(rep, UniPoly):
            if rep.degree() > 0:
                raise ValueError("nonconstant representative over Q")
            return rep.coeff(0)
        return Fraction(rep)

    def normalize_poly(self, p):
        return p

    def sequence_for(self, p):
        return subres.sequence_for(p)

    def enclosure(self, c, level):
        return RatInterval.point(Fraction(c))

    def isolate(self, p):
        """Isolating intervals of a squarefree polynomial over this field."""
        mp = p.monic()
        return isolate_squarefree_roots(mp, self.sign, cauchy_bound_rational(mp))

    def to_float(self, c, digits=12):
        return float(Fraction(c))


QQ = RationalField()


# ---------------------------------------------------------------------------
# the residue field Q(alpha)
# ---------------------------------------------------------------------------

class AlgebraicElement:
    """An element of Q(alpha), stored as a polynomial residue in alpha."""

    __slots__ = ("field", "rep", "_sign")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep
        self._sign = None

    def __bool__(self):
        # syntactic test only; exact vanishing is field.sign(self) == 0
        return not self.rep.is_zero()

    def sign(self):
        if self._sign is None:
            self._sign = self.field._sign_impl(self)
        return self._sign

    def is_zero(self):
        return self.sign() == 0

    def _co(self, other):
        if isinstance(other, AlgebraicElement):
            if other.field is not self.field:
                raise ValueError("mixing elements of different algebraic fields")
            return other
        return self.field.from_fraction(Fraction(other))

    def __add__(self, other):
        if isinstance(other, (QuadExtElement, UniPoly)):
            return NotImplemented       # defer to the wider ring
        other = self._co(other)
        return AlgebraicElement(self.field, (self.rep + other.rep).rem(self.field.modulus))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicElement(self.field, -self.rep)

    def __sub__(self, other):
        if isinstance(other, (QuadExtElement, UniPoly)):
            return NotImplemented
        return self + (-self._co(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraicElement(self.field, self.rep.scale(Fraction(other)))
        if isinstance(other, (QuadExtElement, UniPoly)):
            return NotImplemented
        other = self._co(other)
        return AlgebraicElement(self.field, (self.rep * other.rep).rem(self.field.modulus))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.field.div(self, other)

    def __rtruediv__(self, other):
        return self.field.div(self._co(other), self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, AlgebraicElement)):
            return (self - other).is_zero()
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"<{self.rep.to_string('a')}>"


class AlgebraicField:
    """Computation context for Q(alpha).

    Holds the *current* defining modulus and isolating interval.  Both only
    ever improve (the modulus loses factors that provably do not vanish at
    alpha, the interval shrinks), so sharing the context between values is
    safe: existing residues stay valid because discarded factors never vanish
    at alpha.
    """

    is_rational_field = False

    def __init__(self, alpha):
        self.alpha_number = alpha
        self.modulus = alpha.defpoly.monic()
        self.lo = alpha.lo
        self.hi = alpha.hi

    # -- element construction ----------------------------------------------

    def elem(self, rep):
        return AlgebraicElement(self, rep.rem(self.modulus))

    def alpha(self):
        return self.elem(UniPoly.var())

    def from_fraction(self, c):
        return AlgebraicElement(self, UniPoly.rational([c]))

    def coerce(self, c):
        if isinstance(c, AlgebraicElement):
            return c
        return self.from_fraction(Fraction(c))

    def reduce_coeff(self, rep):
        if isinstance(rep, UniPoly):
            return self.elem(rep)
        return self.from_fraction(Fraction(rep))

    def lift_coeff(self, e):
        if isinstance(e, AlgebraicElement):
            return e.rep
        return UniPoly.rational([Fraction(e)])

    # -- interval / modulus state -------------------------------------------

    @property
    def is_exact(self):
        return self.lo == self.hi

    def _collapse(self, r):
        self.modulus = UniPoly.rational([-r, 1])
        self.lo = self.hi = r

    def bisect(self):
        if self.is_exact:
            return
        m = (self.lo + self.hi) / 2
        sm = _sign_fraction(self.modulus.eval(m))
        if sm == 0:
            self._collapse(m)
            return
        if _sign_fraction(self.modulus.eval(self.lo)) * sm < 0:
            self.hi = m
        else:
            self.lo = m

    def refine_to(self, width):
        while self.hi - self.lo > width:
            self.bisect()

    def interval(self):
        return RatInterval(self.lo, self.hi)

    def alpha_float(self, digits=12):
        self.refine_to(Fraction(1, 10 ** digits))
        return float((self.lo + self.hi) / 2)

    def _root_in_current_interval(self, h):
        """Does (squarefree, monic) h | modulus vanish at alpha?"""
        if self.is_exact:
            return h.eval(self.lo) == 0
        sl = _sign_fraction(h.eval(self.lo))
        sh = _sign_fraction(h.eval(self.hi))
        return sl * sh < 0

    # -- exact arithmetic services -------------------------------------------

    def _sign_impl(self, e):
        rep = e.rep.rem(self.modulus)
        if rep.is_zero():
            return 0
        if self.is_exact:
            return _sign_fraction(rep.eval(self.lo))
        if self.modulus.degree() == 1:
            r = -self.modulus.coeff(0) / self.modulus.coeff(1)
            return _sign_fraction(rep.eval(r))
        g = rep.gcd_monic(self.modulus)
        if g.degree() >= 1 and self._root_in_current_interval(g):
            return 0
        while True:
            box = eval_on_interval(rep, RatInterval(self.lo, self.hi))
            if box.lo > 0:
                return 1
            if box.hi < 0:
                return -1
            self.bisect()
            if self.is_exact:
                return _sign_fraction(rep.eval(self.lo))

    def sign(self, e):
        if isinstance(e, (int, Fraction)):
            return _sign_fraction(Fraction(e))
        return e.sign()

    def is_zero(self, e):
        return self.sign(e) == 0

    def div(self, a, b):
        a = self.coerce(a)
        b = self.coerce(b)
        while True:
            g, u, _v = b.rep.rem(self.modulus).xgcd(self.modulus)
            if g.degree() == 0:
                inv = u.scale(1 / g.coeff(0))
                return AlgebraicElement(self, (a.rep * inv).rem(self.modulus))
            gm = g.monic()
            if self._root_in_current_interval(gm):
                raise ZeroDivisionError("division by a vanishing algebraic element")
            # alpha is a root of modulus/g, so shrink the modulus and retry
            self.modulus = self.modulus.exact_div(gm)

    def enclosure(self, e, level):
        if isinstance(e, (int, Fraction)):
            return RatInterval.point(Fraction(e))
        self.refine_to(Fraction(1, 2 ** level))
        return eval_on_interval(e.rep.rem(self.modulus), self.interval())

    def to_float(self, e, digits=12):
        level = 4
        while True:
            box = self.enclosure(e, level)
            if box.width() < Fraction(1, 10 ** digits):
                return float(box.midpoint())
            level += 8

    # -- polynomial services ---------------------------------------------------

    def normalize_poly(self, p):
        """Drop semantically-zero leading coefficients."""
        coeffs = list(p.coeffs)
        while coeffs and self.sign(coeffs[-1]) == 0:
            coeffs.pop()
        return UniPoly(coeffs)

    def lift_poly(self, p):
        return UniPoly([self.lift_coeff(c) for c in p.coeffs])

    def reduce_poly(self, p):
        return UniPoly([self.reduce_coeff(c) for c in p.coeffs])

    def sequence_for(self, p):
        """Subresultant sequence of p over Q(alpha), via lift / chain / reduce.

        The leading coefficient of p must be semantically nonzero (use
        normalize_poly first): then every entry specialises correctly.
        """
        lifted = self.lift_poly(p)
        seq = subres.sequence_for(lifted)
        reduced = [self.reduce_poly(entry) for entry in seq.polys]
        return subres.SubresSequence(reduced)

    def isolate(self, p):
        """Isolating intervals for a squarefree p over Q(alpha)."""
        p = self.normalize_poly(p)
        if p.degree() < 1:
            return []
        bound = self._root_bound(p)
        return isolate_squarefree_roots(p, self.sign, bound)

    def _root_bound(self, p):
        level = 6
        while True:
            lc_box = self.enclosure(p.leading, level)
            if not lc_box.contains_zero():
                lc_low = min(abs(lc_box.lo), abs(lc_box.hi))
                top = Fraction(0)
                for c in p.coeffs:
                    box = self.enclosure(c, level)
                    top = max(top, abs(box.lo), abs(box.hi))
                b = 1 + top / lc_low
                bound = Fraction(2)
                while bound < b:
                    bound *= 2
                return bound
            level += 8


# ---------------------------------------------------------------------------
# one square root on top: base(sqrt(w))
# ---------------------------------------------------------------------------

class QuadExtElement:
    """a + b*sqrt(w) over a base field, w > 0 fixed by the ring."""

    __slots__ = ("ring", "a", "b", "_sign")

    def __init__(self, ring, a, b):
        self.ring = ring
        self.a = a
        self.b = b
        self._sign = None

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def _co(self, other):
        if isinstance(other, QuadExtElement):
            if other.ring is not self.ring:
                raise ValueError("mixing elements of different quadratic extensions")
            return other
        base = self.ring.base
        return QuadExtElement(self.ring, base.coerce(other),
                              base.coerce(0))

    @staticmethod
    def _defer(other):
        return isinstance(other, UniPoly)

    def sign(self):
        if self._sign is None:
            self._sign = self.ring._sign_impl(self)
        return self._sign

    def is_zero(self):
        return self.sign() == 0

    def __add__(self, other):
        if self._defer(other):
            return NotImplemented
        other = self._co(other)
        return QuadExtElement(self.ring, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtElement(self.ring, -self.a, -self.b)

    def __sub__(self, other):
        if self._defer(other):
            return NotImplemented
        return self + (-self._co(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadExtElement(self.ring, self.a * other, self.b * other)
        if self._defer(other):
            return NotImplemented
        other = self._co(other)
        w = self.ring.w
        return QuadExtElement(
            self.ring,
            self.a * other.a + self.b * other.b * w,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._co(other)
        return self * self.ring.invert(other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadExtElement)):
            return (self - self._co(other)).is_zero()
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"<({self.a}) + ({self.b})*sqrt(w)>"


class QuadExtRing:
    """base(sqrt(w)) with w a strictly positive base element."""

    is_rational_field = False

    def __init__(self, base, w):
        if base.sign(w) <= 0:
            raise ValueError("quadratic extension needs w > 0")
        self.base = base
        self.w = base.coerce(w)

    def elem(self, a, b):
        return QuadExtElement(self, self.base.coerce(a), self.base.coerce(b))

    def sqrt_w(self):
        return self.elem(0, 1)

    def coerce(self, c):
        if isinstance(c, QuadExtElement):
            return c
        return self.elem(c, 0)

    def from_fraction(self, c):
        return self.elem(Fraction(c), 0)

    def _sign_impl(self, e):
        sa = self.base.sign(e.a)
        sb = self.base.sign(e.b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb            # sqrt(w) > 0
        if sa == sb:
            return sa
        t = self.base.sign(e.a * e.a - e.b * e.b * self.w)
        return sa * t

    def sign(self, e):
        if isinstance(e, (int, Fraction)):
            return _sign_fraction(Fraction(e))
        if isinstance(e, QuadExtElement):
            return e.sign()
        return self.base.sign(e)

    def is_zero(self, e):
        return self.sign(e) == 0

    def invert(self, e):
        norm = e.a * e.a - e.b * e.b * self.w   # (a+bs)(a-bs)
        if self.base.sign(norm) == 0:
            raise ZeroDivisionError("division by zero in quadratic extension")
        if self.base.is_rational_field:
            na, nb = e.a / norm, -e.b / norm
        else:
            na = self.base.div(e.a, norm)
            nb = -self.base.div(e.b, norm)
        return QuadExtElement(self, na, nb)

    def div(self, a, b):
        return self.coerce(a) * self.invert(self.coerce(b))

    def enclosure(self, e, level):
        if isinstance(e, (int, Fraction)):
            return RatInterval.point(Fraction(e))
        if not isinstance(e, QuadExtElement):
            return self.base.enclosure(e, level)
        tol = Fraction(1, 2 ** level)
        box_a = self.base.enclosure(e.a, level)
        box_b = self.base.enclosure(e.b, level)
        box_w = self.base.enclosure(self.w, level)
        return box_a + box_b * box_w.sqrt(tol)

    def to_float(self, e, digits=12):
        level = 6
        while True:
            box = self.enclosure(e, level)
            if box.width() < Fraction(1, 10 ** digits):
                return float(box.midpoint())
            level += 8

    # -- polynomial services --------------------------------------------------

    def normalize_poly(self, p):
        coeffs = list(p.coeffs)
        while coeffs and self.sign(coeffs[-1]) == 0:
            coeffs.pop()
        return UniPoly(coeffs)

    def _lift_elem(self, e):
        e = self.coerce(e)
        return UniPoly([self.base.lift_coeff(e.a), self.base.lift_coeff(e.b)])

    def _reduce_entry(self, c):
        # c is a UniPoly in U over the base's lift ring; reduce mod U^2 - w
        w_rep = self.base.lift_coeff(self.w)
        divisor = UniPoly([-w_rep, w_rep * 0, w_rep * 0 + 1]) \
            if isinstance(w_rep, UniPoly) else UniPoly([-w_rep, Fraction(0), Fraction(1)])
        if isinstance(c, UniPoly):
            _, r = c.divmod_poly(divisor)
            a_rep = r.coeff(0)
            b_rep = r.coeff(1)
        else:
            a_rep, b_rep = c, Fraction(0)
        return QuadExtElement(self, self.base.reduce_coeff(a_rep),
                              self.base.reduce_coeff(b_rep))

    def reduce_poly(self, p):
        return UniPoly([self._reduce_entry(c) for c in p.coeffs])

    def sequence_for(self, p):
        lifted = UniPoly([self._lift_elem(c) for c in p.coeffs])
        seq = subres.sequence_for(lifted)
        reduced = [self.reduce_poly(entry) for entry in seq.polys]
        return subres.SubresSequence(reduced)

    def isolate(self, p):
        p = self.normalize_poly(p)
        if p.degree() < 1:
            return []
        bound = self._root_bound(p)
        return isolate_squarefree_roots(p, self.sign, bound)

    def _root_bound(self, p):
        level = 6
        while True:
            lc_box = self.enclosure(p.leading, level)
            if not lc_box.contains_zero():
                lc_low = min(abs(lc_box.lo), abs(lc_box.hi))
                top = Fraction(0)
                for c in p.coeffs:
                    box = self.enclosure(c, level)
                    top = max(top, abs(box.lo), abs(box.hi))
                b = 1 + top / lc_low
                bound = Fraction(2)
                while bound < b:
                    bound *= 2
                return bound
            level += 8

"""Exact dense polynomial arithmetic over the rationals and nested rings.

``UniPoly`` is a dense univariate polynomial whose coefficients live in any
exact coefficient ring: ``Fraction``, another ``UniPoly`` (giving Q[x][y],
used for parametric computations), or the algebraic-residue elements from
:mod:`curvetop.algnum`.  Coefficients only need ``+``, ``-``, ``*``, ``==``
and falsiness-as-zero; scalar multiplication by ``int``/``Fraction`` must
work.  Normalisation strips *syntactically* zero leading coefficients; a
semantic zero test for residue coefficients is the job of the field objects
in :mod:`curvetop.algnum`.

``BiPoly`` is a dense bivariate polynomial P(x, y) over Q, stored as a
tuple of UniPoly-in-x coefficients indexed by the power of y.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import NotSquarefree

Rat = Fraction


def sign_of(c):
    """Exact sign in {-1, 0, +1} of an int/Fraction, or of anything with .sign()."""
    if isinstance(c, (int, Fraction)):
        if c > 0:
            return 1
        if c < 0:
            return -1
        return 0
    return c.sign()


def _is_zero(c):
    return not c


def _coeff_div(a, b):
    """Exact coefficient division (a / b must be representable in the ring)."""
    if isinstance(a, UniPoly):
        return a.exact_div(b)
    return a / b


class UniPoly:
    """Dense univariate polynomial; coeffs[i] is the coefficient of T^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def rational(cls, coeffs):
        """Polynomial over Q; entries coerced to Fraction."""
        return cls([Fraction(c) for c in coeffs])

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def zero(cls):
        return cls([])

    @classmethod
    def monomial(cls, c, k):
        return cls([0 * c] * k + [c]) if k else cls([c])

    @classmethod
    def var(cls):
        """The polynomial T over Q."""
        return cls([Fraction(0), Fraction(1)])

    @classmethod
    def from_roots(cls, roots, lead=Fraction(1)):
        p = cls.const(Fraction(lead))
        for r in roots:
            p = p * cls([-Fraction(r), Fraction(1)])
        return p

    # -- basic queries -------------------------------------------------------

    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def leading(self):
        return self.coeffs[-1]

    def coeff(self, k):
        """Coefficient of T^k (0 beyond the degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            # scalars act as constant polynomials (keeps nested rings total)
            other = UniPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    def __radd__(self, other):
        return self + other

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            if not self.coeffs or not other.coeffs:
                return UniPoly.zero()
            out = [None] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if _is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    t = a * b
                    out[i + j] = t if out[i + j] is None else out[i + j] + t
            return UniPoly([Fraction(0) if c is None else c for c in out])
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        result = UniPoly.const(Fraction(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        if _is_zero(c):
            return UniPoly.zero()
        return UniPoly([a * c for a in self.coeffs])

    def shift_up(self, k):
        """Multiply by T^k."""
        if not self.coeffs or k == 0:
            return self
        return UniPoly([Fraction(0)] * k + list(self.coeffs))

    # -- calculus / evaluation ------------------------------------------------

    def derivative(self):
        return UniPoly([c * i for i, c in enumerate(self.coeffs) if i > 0])

    def eval(self, x):
        """Horner evaluation; x may live in any extension of the coefficient ring."""
        if not self.coeffs:
            return 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def taylor_shift(self, a):
        """P(T + a), by in-place Horner."""
        b = list(self.coeffs)
        n = len(b)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                b[j] = b[j] + a * b[j + 1]
        return UniPoly(b)

    def scale_var(self, c):
        """P(c * T)."""
        out = []
        power = 1
        for i, a in enumerate(self.coeffs):
            out.append(a * power if i else a)
            power = power * c
        return UniPoly(out)

    def reverse(self, n=None):
        """T^n * P(1/T) with n >= deg(P) (default: n = deg)."""
        if n is None:
            n = self.degree()
        out = [Fraction(0)] * (n + 1)
        for i, c in enumerate(self.coeffs):
            out[n - i] = c
        return UniPoly(out)

    # -- division ------------------------------------------------------------

    def divmod_poly(self, other):
        """Quotient and remainder; coefficient divisions must be exact or field."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [None] * max(0, self.degree() - other.degree() + 1)
        r = list(self.coeffs)
        d = other.degree()
        lc = other.leading
        while len(r) - 1 >= d and r:
            while r and _is_zero(r[-1]):
                r.pop()
            if len(r) - 1 < d or not r:
                break
            k = len(r) - 1 - d
            c = _coeff_div(r[-1], lc)
            q[k] = c
            for i, oc in enumerate(other.coeffs):
                r[k + i] = r[k + i] - c * oc
            r.pop()
        qp = UniPoly([Fraction(0) if c is None else c for c in q])
        return qp, UniPoly(r)

    def exact_div(self, other):
        """Exact quotient; raises if the division leaves a (syntactic) remainder."""
        if isinstance(other, UniPoly):
            q, r = self.divmod_poly(other)
            if not r.is_zero():
                raise ValueError("exact_div: nonzero remainder")
            return q
        return UniPoly([_coeff_div(c, other) for c in self.coeffs])

    def div_scalar(self, c):
        """Coefficient-wise exact division by a coefficient-ring element.

        Needed alongside exact_div because in nested rings a coefficient is
        itself a UniPoly and would otherwise be mistaken for a same-level
        divisor.
        """
        return UniPoly([_coeff_div(a, c) for a in self.coeffs])

    def pseudo_rem(self, other):
        """prem(P, Q): remainder of lc(Q)^(deg P - deg Q + 1) * P by Q."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo-remainder by zero")
        d = other.degree()
        lc = other.leading
        r = self
        e = self.degree() - d + 1
        while r and r.degree() >= d:
            s = r.leading
            r = UniPoly(list(r.coeffs[:-1])).scale(lc) - \
                UniPoly(list(other.coeffs[:-1])).scale(s).shift_up(r.degree() - d)
            e -= 1
        for _ in range(e):
            r = r.scale(lc)
        return r

    # -- Q-specific helpers ----------------------------------------------------

    def monic(self):
        if self.is_zero():
            return self
        lc = self.leading
        return UniPoly([_coeff_div(c, lc) for c in self.coeffs])

    def rem(self, other):
        return self.divmod_poly(other)[1]

    def gcd_monic(self, other):
        """Euclidean gcd over a coefficient field, monic-normalised."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.rem(b)
        if a.is_zero():
            return a
        return a.monic()

    def xgcd(self, other):
        """Extended Euclid over a coefficient field: (g, u, v) with u*P + v*Q = g."""
        r0, r1 = self, other
        u0, u1 = UniPoly.const(Fraction(1)), UniPoly.zero()
        v0, v1 = UniPoly.zero(), UniPoly.const(Fraction(1))
        while not r1.is_zero():
            q, r = r0.divmod_poly(r1)
            r0, r1 = r1, r
            u0, u1 = u1, u0 - q * u1
            v0, v1 = v1, v0 - q * v1
        return r0, u0, v0

    def squarefree_part(self):
        """P / gcd(P, P'), monic-normalised; same roots, all simple."""
        if self.is_zero():
            raise ValueError("squarefree part of the zero polynomial")
        if self.degree() == 0:
            return UniPoly.const(Fraction(1))
        g = self.gcd_monic(self.derivative())
        return self.exact_div(g).monic()

    def is_squarefree(self):
        if self.degree() <= 0:
            return True
        return self.gcd_monic(self.derivative()).degree() == 0

    # -- printing ----------------------------------------------------------------

    def to_string(self, var="T"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if _is_zero(c):
                continue
            if isinstance(c, (int, Fraction)):
                neg = c < 0
                mag = -c if neg else c
                if i == 0:
                    body = f"{mag}"
                elif mag == 1:
                    body = var if i == 1 else f"{var}^{i}"
                else:
                    body = f"{mag}*{var}" if i == 1 else f"{mag}*{var}^{i}"
                sign = "-" if neg else "+"
            else:
                body = f"({c})" if i == 0 else (
                    f"({c})*{var}" if i == 1 else f"({c})*{var}^{i}")
                sign = "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"UniPoly({self.to_string()})"


def check_squarefree(p):
    """Raise NotSquarefree unless gcd(P, P') is constant."""
    if not p.is_squarefree():
        raise NotSquarefree(f"{p!r} has a repeated root")


class BiPoly:
    """Dense bivariate polynomial over Q: coeffs_y[j] is the UniPoly-in-x of y^j."""

    __slots__ = ("coeffs_y",)

    def __init__(self, coeffs_y):
        rows = list(coeffs_y)
        while rows and rows[-1].is_zero():
            rows.pop()
        self.coeffs_y = tuple(rows)

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_dict(cls, monomials):
        """monomials: {(i, j): coefficient} with i the x-power, j the y-power."""
        if not monomials:
            return cls([])
        deg_y = max(j for (_, j) in monomials)
        rows = []
        for j in range(deg_y + 1):
            row = {}
            for (i, jj), c in monomials.items():
                if jj == j:
                    row[i] = row.get(i, Fraction(0)) + Fraction(c)
            deg_x = max(row) if row else -1
            rows.append(UniPoly([row.get(i, Fraction(0)) for i in range(deg_x + 1)]))
        return cls(rows)

    @classmethod
    def zero(cls):
        return cls([])

    @classmethod
    def from_unipoly_y(cls, p):
        """Wrap a UniPoly in y whose coefficients are UniPoly in x."""
        return cls(p.coeffs)

    def as_unipoly_y(self):
        """View as UniPoly in y with UniPoly-in-x coefficients."""
        return UniPoly(self.coeffs_y)

    def monomial_dict(self):
        out = {}
        for j, row in enumerate(self.coeffs_y):
            for i, c in enumerate(row.coeffs):
                if c:
                    out[(i, j)] = c
        return out

    # -- queries ----------------------------------------------------------------

    def is_zero(self):
        return not self.coeffs_y

    def __bool__(self):
        return bool(self.coeffs_y)

    def degree_y(self):
        return len(self.coeffs_y) - 1

    def degree_x(self):
        return max((row.degree() for row in self.coeffs_y), default=-1)

    def total_degree(self):
        return max((i + j for (i, j) in self.monomial_dict()), default=-1)

    def lc_y(self):
        """Leading coefficient with respect to y (a UniPoly in x)."""
        return self.coeffs_y[-1]

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.coeffs_y == other.coeffs_y

    __hash__ = None

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        return BiPoly.from_unipoly_y(self.as_unipoly_y() + other.as_unipoly_y())

    def __sub__(self, other):
        return BiPoly.from_unipoly_y(self.as_unipoly_y() - other.as_unipoly_y())

    def __neg__(self):
        return BiPoly([-row for row in self.coeffs_y])

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            return BiPoly.from_unipoly_y(self.as_unipoly_y() * other.as_unipoly_y())
        return BiPoly([row * other for row in self.coeffs_y])

    def derivative(self, var):
        if var == "y":
            return BiPoly.from_unipoly_y(self.as_unipoly_y().derivative())
        if var == "x":
            return BiPoly([row.derivative() for row in self.coeffs_y])
        raise ValueError(f"unknown variable {var!r}")

    # -- evaluation -----------------------------------------------------------

    def eval_x(self, x0):
        """Specialise x, returning a UniPoly in y over Q."""
        x0 = Fraction(x0)
        return UniPoly([row.eval(x0) for row in self.coeffs_y])

    def eval_y(self, y0):
        """Specialise y, returning a UniPoly in x over Q."""
        y0 = Fraction(y0)
        acc = UniPoly.zero()
        for row in reversed(self.coeffs_y):
            acc = acc.scale(y0) + row
        return acc

    def eval_point(self, x0, y0):
        return self.eval_x(x0).eval(Fraction(y0))

    # -- geometry helpers ----------------------------------------------------

    def shear(self, t):
        """P(x + t*y, y): a topology-preserving coordinate shear."""
        t = Fraction(t)
        out = {}
        for (i, j), c in self.monomial_dict().items():
            # (x + t y)^i expands over k = power of x kept
            for k in range(i + 1):
                key = (k, j + i - k)
                out[key] = out.get(key, Fraction(0)) + c * comb(i, k) * t ** (i - k)
        return BiPoly.from_dict(out)

    def content_in_y(self):
        """Monic gcd over Q[x] of the y-coefficients."""
        g = UniPoly.zero()
        for row in self.coeffs_y:
            if row.is_zero():
                continue
            g = row.monic() if g.is_zero() else g.gcd_monic(row)
            if g.degree() == 0:
                break
        return g

    def primitive_in_y(self):
        c = self.content_in_y()
        if c.is_zero() or c.degree() == 0:
            return self
        return BiPoly([row.exact_div(c) for row in self.coeffs_y])

    def to_string(self):
        d = self.monomial_dict()
        if not d:
            return "0"
        parts = []
        for (i, j) in sorted(d, key=lambda k: (k[0] + k[1], k[1], k[0])):
            c = d[(i, j)]
            neg = c < 0
            mag = -c if neg else c
            names = []
            if i:
                names.append("x" if i == 1 else f"x^{i}")
            if j:
                names.append("y" if j == 1 else f"y^{j}")
            if not names:
                body = f"{mag}"
            elif mag == 1:
                body = "*".join(names)
            else:
                body = "*".join([f"{mag}"] + names)
            parts.append(("-" if neg else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"BiPoly({self.to_string()})"

"""Closed-form multiple roots of univariate polynomials via subresultants.

Degree 4 and 5 follow the explicit case tables (dispatch on the vanishing
pattern of the principal subresultant coefficients, then per-case root
formulas that are rational in the input coefficients, with at most one
square root).  Higher degrees walk the iterated-gcd tau chain and peel one
multiplicity layer at a time; the patterns that admit no such description
(a multiplicity value carried by three real roots, or shared between a real
root and a complex pair) raise :class:`UnsupportedPattern` so the caller can
fall back to a coordinate shear.

Everything is generic over the coefficient field: the same code runs over Q
and over Q(alpha), which is how critical fibers P(alpha, y) are analysed.
"""

from __future__ import annotations

from fractions import Fraction

from .algnum import QQ, QuadExtRing
from .errors import DegreeMismatch, NoMultipleRoot, UnsupportedPattern
from .poly import UniPoly
from .rootcount import generalized_count


# ---------------------------------------------------------------------------
# closed-form root values
# ---------------------------------------------------------------------------

class ClosedFormRoot:
    """A root expressed exactly in the input's coefficients.

    kind "rational": value = num/den, a plain field element.
    kind "quadratic": value = (u + branch * v * sqrt(w)) / d with w > 0;
    the two branches of a pair share their QuadExtRing.
    """

    __slots__ = ("kind", "field", "val", "ring", "u", "v", "w", "d", "branch")

    def __init__(self, kind, field, **parts):
        self.kind = kind
        self.field = field
        self.val = parts.get("val")
        self.ring = parts.get("ring")
        self.u = parts.get("u")
        self.v = parts.get("v")
        self.w = parts.get("w")
        self.d = parts.get("d")
        self.branch = parts.get("branch")

    @classmethod
    def rational(cls, field, value):
        return cls("rational", field, val=field.coerce(value))

    @classmethod
    def quadratic_pair(cls, field, u, v, w, d):
        """Both branches of (u +- v sqrt(w))/d, sharing one extension ring."""
        u, v, w, d = (field.coerce(t) for t in (u, v, w, d))
        if field.sign(w) <= 0:
            raise ValueError("quadratic root pair needs w > 0")
        if field.sign(d) == 0:
            raise ZeroDivisionError("quadratic root pair with zero denominator")
        ring = QuadExtRing(field, w)
        a = field.div(u, d)
        out = []
        for branch in (-1, 1):
            b = field.div(v * branch, d)
            root = cls("quadratic", field, ring=ring, u=u, v=v, w=w, d=d,
                       branch=branch, val=ring.elem(a, b))
            out.append(root)
        return out

    def value(self):
        """The exact value: a field element or a QuadExtElement."""
        return self.val

    def enclosure(self, level):
        if self.kind == "rational":
            return self.field.enclosure(self.val, level)
        return self.ring.enclosure(self.val, level)

    def to_float(self, digits=12):
        if self.kind == "rational":
            if self.field.is_rational_field:
                return float(self.val)
            return self.field.to_float(self.val, digits)
        return self.ring.to_float(self.val, digits)

    def minimal_quadratic(self):
        """Monic quadratic over the base field vanishing on the pair."""
        if self.kind != "quadratic":
            raise ValueError("minimal_quadratic only for quadratic roots")
        f = self.field
        tr = f.div(2 * self.u, self.d)
        nrm = f.div(self.u * self.u - self.v * self.v * self.w, self.d * self.d)
        return UniPoly([nrm, -tr, f.coerce(1)])

    def describe(self):
        if self.kind == "rational":
            return _fmt_elem(self.field, self.val)
        sgn = "+" if self.branch > 0 else "-"
        return (f"({_fmt_elem(self.field, self.u)} {sgn} "
                f"{_fmt_elem(self.field, self.v)}*sqrt({_fmt_elem(self.field, self.w)}))"
                f"/({_fmt_elem(self.field, self.d)})")

    def __repr__(self):
        return f"ClosedFormRoot({self.describe()})"


def _fmt_elem(field, e):
    if isinstance(e, (int, Fraction)):
        return str(e)
    if hasattr(e, "rep"):
        if e.rep.degree() <= 0:
            return str(e.rep.coeff(0))
        return e.rep.to_string("a")
    return str(e)


def order_roots(entries, enclosure_fn):
    """Sort items by their exact real value; items must be pairwise distinct.

    ``entries`` is a list of arbitrary items, ``enclosure_fn(item, level)``
    must return a shrinking RatInterval around the item's value.
    """
    decorated = list(entries)

    def less(x, y):
        level = 6
        while level < 400:
            bx = enclosure_fn(x, level)
            by = enclosure_fn(y, level)
            if bx.hi < by.lo:
                return True
            if by.hi < bx.lo:
                return False
            level += 8
        raise ArithmeticError("could not separate two values (equal inputs?)")

    # insertion sort with exact comparison (lists are tiny)
    out = []
    for item in decorated:
        pos = len(out)
        for i, existing in enumerate(out):
            if less(item, existing):
                pos = i
                break
        out.insert(pos, item)
    return out


# ---------------------------------------------------------------------------
# multiplicity structures
# ---------------------------------------------------------------------------

class MultiplicityStructure:
    """Full multiplicity decomposition of a polynomial with multiple roots."""

    def __init__(self, field, lead, real_parts, complex_factors, simple_part,
                 case_tag, tau_degrees=None):
        self.field = field
        self.lead = lead
        self.real_parts = real_parts            # [(multiplicity, ClosedFormRoot)]
        self.complex_factors = complex_factors  # [(multiplicity, monic UniPoly)]
        self.simple_part = simple_part          # monic squarefree UniPoly
        self.case_tag = case_tag
        self.tau_degrees = tau_degrees or []

    @property
    def complex_pair_multiplicities(self):
        out = []
        for m, fac in self.complex_factors:
            out.extend([m] * (fac.degree() // 2))
        return out

    def multiple_real_roots(self):
        return [(m, r) for (m, r) in self.real_parts if m >= 2]

    def degree_accounted(self):
        total = sum(m for m, _ in self.real_parts)
        total += sum(m * fac.degree() for m, fac in self.complex_factors)
        total += max(self.simple_part.degree(), 0)
        return total

    def reconstruct(self):
        """lead * product of all factors; must reproduce the input exactly."""
        f = self.field
        out = UniPoly([f.coerce(self.lead)])
        seen_pairs = set()
        for m, root in self.real_parts:
            if root.kind == "rational":
                factor = UniPoly([-root.val, f.coerce(1)])
                out = out * factor ** m
            else:
                key = id(root.ring)
                if key in seen_pairs:
                    continue
                seen_pairs.add(key)
                out = out * root.minimal_quadratic() ** m
        for m, fac in self.complex_factors:
            out = out * fac ** m
        if self.simple_part.degree() > 0:
            out = out * self.simple_part
        return out

    def sorted_real_parts(self):
        return order_roots(self.real_parts,
                           lambda item, level: item[1].enclosure(level))

    def describe(self):
        lines = [f"case: {self.case_tag}"]
        for m, root in self.real_parts:
            lines.append(f"  multiplicity {m}: {root.describe()}")
        for m, fac in self.complex_factors:
            lines.append(f"  complex pair multiplicity {m}: {fac.to_string()}")
        lines.append(f"  simple part: {self.simple_part.to_string()}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# helpers over a generic field
# ---------------------------------------------------------------------------

def _synthetic_peel(P, beta, m, field):
    """Exact quotient P / (T - beta)^m, checking each remainder vanishes."""
    cur = P
    for _ in range(m):
        out = []
        acc = None
        for c in reversed(cur.coeffs):
            acc = c if acc is None else acc * beta + c
            out.append(acc)
        rem = out.pop()
        if field.sign(rem) != 0:
            raise ArithmeticError("closed-form root does not divide the polynomial")
        cur = field.normalize_poly(UniPoly(list(reversed(out))))
    return cur


def _poly_div_semantic(P, D, field):
    """Exact polynomial division over the field (semantic remainder check)."""
    q, r = P.divmod_poly(D)
    if not field.normalize_poly(r).is_zero():
        raise ArithmeticError("inexact polynomial division in multiplicity peel")
    return field.normalize_poly(q)


def _monic(P, field):
    P = field.normalize_poly(P)
    if P.is_zero():
        return P
    lc = P.leading
    if field.is_rational_field:
        return UniPoly([Fraction(c) / Fraction(lc) for c in P.coeffs])
    return UniPoly([field.div(c, lc) for c in P.coeffs])


def tau_chain(P, field=QQ, with_data=False):
    """tau_0 = P, tau_{k+1} = gcd(tau_k, tau_k') via subresultants, down to a constant.

    Every entry is (up to the final constant) a genuine subresultant of its
    predecessor, which is what keeps all coefficients polynomial in the
    input's.  With ``with_data`` the per-level sequences and exact real-root
    counts come along (used by the general extraction).
    """
    P = field.normalize_poly(P)
    if P.degree() < 2:
        raise ValueError("tau chain needs degree >= 2")
    chain = [P]
    seqs = []
    counts = []
    cur = P
    while True:
        deg = cur.degree()
        if deg == 0:
            seqs.append(None)
            counts.append(0)
            break
        if deg == 1:
            seqs.append(None)
            counts.append(1)
            chain.append(UniPoly([field.coerce(1)]))
            seqs.append(None)
            counts.append(0)
            break
        seq = field.sequence_for(cur)
        seqs.append(seq)
        counts.append(generalized_count(seq.principal_list(), field.sign))
        nxt = None
        for j in range(deg - 1):
            if field.sign(seq.principal(j)) != 0:
                nxt = field.normalize_poly(seq.poly(j))
                break
        if nxt is None:
            # all lower principals vanish: gcd is the derivative itself
            nxt = field.normalize_poly(seq.poly(deg - 1))
        chain.append(nxt)
        cur = nxt
    if with_data:
        return chain, seqs, counts
    return chain


# ---------------------------------------------------------------------------
# degree 4
# ---------------------------------------------------------------------------

def extract_deg4(P, field=QQ):
    """The five-case table for quartics with a multiple root."""
    P = field.normalize_poly(P)
    if P.degree() != 4:
        raise DegreeMismatch(f"extract_deg4 needs degree 4, got {P.degree()}")
    f = field
    seq = f.sequence_for(P)
    s = [seq.principal(j) for j in range(5)]
    if f.sign(s[0]) != 0:
        raise NoMultipleRoot("quartic is squarefree (sres_0 != 0)")
    a4, a3, a0 = P.coeff(4), P.coeff(3), P.coeff(0)

    z1 = f.sign(s[1]) == 0
    z2 = f.sign(s[2]) == 0

    if not z1:
        # double root + two distinct simple roots (real or conjugate pair)
        s10 = seq.secondary(1, 0)
        beta = f.div(-s10, s[1])
        rest = _synthetic_peel(P, beta, 2, f)
        return MultiplicityStructure(
            f, a4, [(2, ClosedFormRoot.rational(f, beta))], [],
            _monic(rest, f), "deg4-case5")

    if not z2:
        s21 = seq.secondary(2, 1)
        s20 = seq.secondary(2, 0)
        disc = s21 * s21 - 4 * (s[2] * s20)
        sd = f.sign(disc)
        if sd == 0:
            # triple root + one simple root
            beta = f.div(-s21, 2 * s[2])
            if f.sign(beta) != 0:
                gamma = f.div(a0, a4 * (beta * beta * beta))
                rest = UniPoly([-f.coerce(gamma), f.coerce(1)])
            else:
                rest = _monic(_synthetic_peel(P, beta, 3, f), f)
                gamma = f.coerce(-rest.coeff(0))
            return MultiplicityStructure(
                f, a4,
                [(3, ClosedFormRoot.rational(f, beta)),
                 (1, ClosedFormRoot.rational(f, gamma))],
                [], UniPoly([f.coerce(1)]), "deg4-case2")
        if sd > 0:
            # two distinct real double roots
            pair = ClosedFormRoot.quadratic_pair(f, -s21, 1, disc, 2 * s[2])
            return MultiplicityStructure(
                f, a4, [(2, pair[0]), (2, pair[1])], [],
                UniPoly([f.coerce(1)]), "deg4-case3")
        # two conjugate complex double roots
        quad = _monic(seq.poly(2), f)
        return MultiplicityStructure(
            f, a4, [], [(2, quad)], UniPoly([f.coerce(1)]), "deg4-case4")

    # s0 = s1 = s2 = 0: quadruple root
    s3 = seq.principal(3)
    s32 = seq.secondary(3, 2)
    beta = f.div(-s32, 3 * s3)
    return MultiplicityStructure(
        f, a4, [(4, ClosedFormRoot.rational(f, beta))], [],
        UniPoly([f.coerce(1)]), "deg4-case1")


# ---------------------------------------------------------------------------
# degree 5
# ---------------------------------------------------------------------------

def extract_deg5(P, field=QQ):
    """The nine-shape table for quintics with a multiple root."""
    P = field.normalize_poly(P)
    if P.degree() != 5:
        raise DegreeMismatch(f"extract_deg5 needs degree 5, got {P.degree()}")
    f = field
    seq = f.sequence_for(P)
    s = [seq.principal(j) for j in range(6)]
    if f.sign(s[0]) != 0:
        raise NoMultipleRoot("quintic is squarefree (sres_0 != 0)")
    a5, a4, a0 = P.coeff(5), P.coeff(4), P.coeff(0)
    count = generalized_count(seq.principal_list(), f.sign)  # = #distinct real roots

    one = UniPoly([f.coerce(1)])

    if f.sign(s[1]) != 0:
        # double root + squarefree cubic (cases 4a / 4b)
        s10 = seq.secondary(1, 0)
        beta = f.div(-s10, s[1])
        cubic = _monic(_synthetic_peel(P, beta, 2, f), f)
        if count == 4:
            tag = "deg5-4a"
        elif count == 2:
            tag = "deg5-4b"
        else:
            raise ArithmeticError(f"impossible discriminator C={count} in case 4")
        return MultiplicityStructure(
            f, a5, [(2, ClosedFormRoot.rational(f, beta))], [], cubic, tag)

    if f.sign(s[2]) != 0:
        # gcd has degree 2 (cases 3a-3d)
        s21 = seq.secondary(2, 1)
        s20 = seq.secondary(2, 0)
        disc = s21 * s21 - 4 * (s[2] * s20)
        sd = f.sign(disc)
        if sd == 0:
            # triple root, quadratic of simple roots
            beta = f.div(-s21, 2 * s[2])
            quad = _monic(_synthetic_peel(P, beta, 3, f), f)
            if count == 3:
                tag = "deg5-3a"
            elif count == 1:
                tag = "deg5-3b"
            else:
                raise ArithmeticError(f"impossible discriminator C={count} in case 3ab")
            return MultiplicityStructure(
                f, a5, [(3, ClosedFormRoot.rational(f, beta))], [], quad, tag)
        if count == 3:
            if sd < 0:
                raise ArithmeticError("case 3c discriminator disagrees with disc sign")
            # two real double roots + a simple real root
            pair = ClosedFormRoot.quadratic_pair(f, -s21, 1, disc, 2 * s[2])
            if f.sign(s20) != 0:
                gamma2 = f.div(-(s[2] * s[2]) * a0, a5 * (s20 * s20))
            else:
                qmin = pair[0].minimal_quadratic()
                lin = _poly_div_semantic(_poly_div_semantic(P, qmin, f), qmin, f)
                lin = _monic(lin, f)
                gamma2 = f.coerce(-lin.coeff(0))
            return MultiplicityStructure(
                f, a5,
                [(2, pair[0]), (2, pair[1]),
                 (1, ClosedFormRoot.rational(f, gamma2))],
                [], one, "deg5-3c")
        if count == 1:
            if sd > 0:
                raise ArithmeticError("case 3d discriminator disagrees with disc sign")
            # conjugate double pair + one simple real root
            quad = _monic(seq.poly(2), f)
            if f.sign(s20) != 0:
                beta = f.div(-(s[2] * s[2]) * a0, a5 * (s20 * s20))
            else:
                lin = _monic(_poly_div_semantic(_poly_div_semantic(P, quad, f), quad, f), f)
                beta = f.coerce(-lin.coeff(0))
            return MultiplicityStructure(
                f, a5, [(1, ClosedFormRoot.rational(f, beta))],
                [(2, quad)], one, "deg5-3d")
        raise ArithmeticError(f"impossible discriminator C={count} in case 3cd")

    if f.sign(s[3]) != 0:
        # gcd has degree 3 (cases 2a / 2b), separated by the subresultants of tau_1
        tau1 = f.normalize_poly(seq.poly(3))
        tseq = f.sequence_for(tau1)
        t0 = f.sign(tseq.principal(0)) == 0
        t1 = f.sign(tseq.principal(1)) == 0
        if not t0:
            raise ArithmeticError("gcd of case-2 quintic must have a multiple root")
        s32 = seq.secondary(3, 2)
        if t1:
            # quadruple root + simple root
            beta = f.div(-s32, 3 * s[3])
            if f.sign(beta) != 0:
                beta4 = (beta * beta) * (beta * beta)
                gamma = f.div(-a0, a5 * beta4)
                rest = UniPoly([-f.coerce(gamma), f.coerce(1)])
            else:
                rest = _monic(_synthetic_peel(P, beta, 4, f), f)
                gamma = f.coerce(-rest.coeff(0))
            return MultiplicityStructure(
                f, a5,
                [(4, ClosedFormRoot.rational(f, beta)),
                 (1, ClosedFormRoot.rational(f, gamma))],
                [], one, "deg5-2a")
        # triple root + double root
        t_s1 = tseq.principal(1)
        t_s10 = tseq.secondary(1, 0)
        beta = f.div(-t_s10, t_s1)
        s30 = seq.secondary(3, 0)
        if f.sign(beta) != 0:
            gamma = f.div(-s30, s[3] * (beta * beta))
        else:
            quad = _monic(_synthetic_peel(P, beta, 3, f), f)
            gamma = f.div(-quad.coeff(1), f.coerce(2))
        return MultiplicityStructure(
            f, a5,
            [(3, ClosedFormRoot.rational(f, beta)),
             (2, ClosedFormRoot.rational(f, gamma))],
            [], one, "deg5-2b")

    # s0 = ... = s3 = 0: quintuple root
    s43 = seq.secondary(4, 3)
    beta = f.div(-s43, 4 * seq.principal(4))
    return MultiplicityStructure(
        f, a5, [(5, ClosedFormRoot.rational(f, beta))], [], one, "deg5-1")


# ---------------------------------------------------------------------------
# general degree (and the 6/7 exception detector)
# ---------------------------------------------------------------------------

def extract_general(P, field=QQ):
    """Tau-chain extraction under the closed-form theorem's hypotheses.

    Supported: all multiplicity values >= 2 appear on at most two real roots,
    never on three, and never simultaneously on a real root and a complex
    pair (the conservative reading of the hypothesis).  Complex-only values
    may repeat; their quadratic (or quartic) blocks are divided out but no
    roots are materialised for them.
    """
    f = field
    P = f.normalize_poly(P)
    n = P.degree()
    if n < 2:
        raise DegreeMismatch("extraction needs degree >= 2")
    chain, seqs, counts = tau_chain(P, f, with_data=True)
    degrees = [c.degree() for c in chain]
    if degrees[1] == 0:
        raise NoMultipleRoot("polynomial is squarefree")

    K = len(chain) - 1              # chain[K] is the final constant
    # A[m] = #real roots with multiplicity >= m;  B[m] = same for complex pairs
    A = {m: counts[m - 1] for m in range(1, K + 1)}
    A[K + 1] = 0
    B = {}
    for m in range(1, K + 1):
        drop = degrees[m - 1] - degrees[m]
        b2 = drop - A[m]
        if b2 < 0 or b2 % 2:
            raise ArithmeticError("inconsistent multiplicity pattern from tau chain")
        B[m] = b2 // 2
    B[K + 1] = 0

    pattern = {}
    for m in range(1, K + 1):
        a_m = A[m] - A[m + 1]
        b_m = B[m] - B[m + 1]
        if a_m or b_m:
            pattern[m] = (a_m, b_m)

    for m, (a_m, b_m) in pattern.items():
        if m < 2:
            continue
        if a_m >= 3 or (a_m >= 1 and b_m >= 1):
            raise UnsupportedPattern(n, pattern, degrees)

    # peel the layers: e_k = tau_{k-1}/tau_k, Q_m = e_m/e_{m+1}
    e = {}
    for k in range(1, K + 1):
        e[k] = _poly_div_semantic(chain[k - 1], chain[k], f)
    real_parts = []
    complex_factors = []
    simple_part = UniPoly([f.coerce(1)])
    for m in range(1, K + 1):
        q_m = e[m] if m == K else _poly_div_semantic(e[m], e[m + 1], f)
        q_m = _monic(q_m, f)
        a_m, b_m = pattern.get(m, (0, 0))
        if q_m.degree() != a_m + 2 * b_m:
            raise ArithmeticError("peeled layer degree disagrees with sign counts")
        if q_m.degree() == 0:
            continue
        if m == 1:
            simple_part = q_m
            continue
        if a_m == 1 and b_m == 0:
            beta = f.coerce(-q_m.coeff(0))
            real_parts.append((m, ClosedFormRoot.rational(f, beta)))
        elif a_m == 2 and b_m == 0:
            c1, c0 = q_m.coeff(1), q_m.coeff(0)
            disc = c1 * c1 - 4 * c0
            if f.sign(disc) <= 0:
                raise ArithmeticError("two real roots expected but disc <= 0")
            pair = ClosedFormRoot.quadratic_pair(f, -c1, 1, disc, 2)
            real_parts.append((m, pair[0]))
            real_parts.append((m, pair[1]))
        elif a_m == 0 and b_m >= 1:
            complex_factors.append((m, q_m))
        else:
            raise UnsupportedPattern(n, pattern, degrees)

    return MultiplicityStructure(
        f, P.leading, real_parts, complex_factors, simple_part,
        "general", degrees)


def extract_deg67(P, field=QQ):
    """Degree 6/7 extraction; the listed exception shapes raise UnsupportedPattern."""
    P = field.normalize_poly(P)
    if P.degree() not in (6, 7):
        raise DegreeMismatch(f"extract_deg67 needs degree 6 or 7, got {P.degree()}")
    out = extract_general(P, field)
    out.case_tag = f"deg{P.degree()}-general"
    return out


def extract(P, field=QQ):
    """Dispatch extraction by degree (4 and 5 use the explicit case tables)."""
    P = field.normalize_poly(P)
    deg = P.degree()
    if deg == 4:
        return extract_deg4(P, field)
    if deg == 5:
        return extract_deg5(P, field)
    return extract_general(P, field)

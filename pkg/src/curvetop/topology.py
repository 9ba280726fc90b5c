"""Topology graph of a real algebraic plane curve P(x, y) = 0.

The sweep works on critical fibers directly: the y-structure of every
critical line is obtained in closed form from the multiple-root extraction
over Q(alpha), branch counts at ramification points come from the
higher-derivative test, singular points are handled by tangent-cone
factorisation and, for the two-critical-point quartic/quintic
configurations, by the relative position of the derivative curve.  Only when
a fiber falls outside all supported patterns is the curve sheared and the
sweep restarted.

After every rule-based assignment at a fiber with several singular points,
the result is cross-checked against an exact separator count (no branch can
cross a horizontal line y = c without P(x, c) vanishing), and a disagreement
downgrades the fiber to the shear fallback rather than shipping a wrong
graph.
"""

from __future__ import annotations

from fractions import Fraction

from . import multroot
from .algnum import (
    QQ,
    AlgebraicField,
    AlgebraicNumber,
    isolate_real_roots,
)
from .errors import (
    AmbiguousAssignment,
    DegenerateDirection,
    RetriesExhausted,
    UnsupportedPattern,
    ZeroDiscriminant,
)
from .intervals import RatInterval
from .poly import BiPoly, UniPoly
from .rootcount import count_distinct_real_roots
from .subres import gcd_by_subres, resultant


# ---------------------------------------------------------------------------
# exact coordinate values carried by graph vertices
# ---------------------------------------------------------------------------

class RationalValue:
    __slots__ = ("q",)

    def __init__(self, q):
        self.q = Fraction(q)

    def enclosure(self, level):
        return RatInterval.point(self.q)

    def to_float(self, digits=12):
        return float(self.q)

    def exact_json(self):
        return {"type": "rational", "value": str(self.q)}


class AlphaValue:
    """The x-coordinate of a critical fiber (the field's algebraic point)."""

    __slots__ = ("field",)

    def __init__(self, field):
        self.field = field

    def enclosure(self, level):
        self.field.refine_to(Fraction(1, 2 ** level))
        return self.field.interval()

    def to_float(self, digits=12):
        return self.field.alpha_float(digits)

    def exact_json(self):
        return {"type": "algebraic",
                "defpoly": [str(c) for c in self.field.modulus.coeffs],
                "lo": str(self.field.lo), "hi": str(self.field.hi)}


class AlgNumValue:
    __slots__ = ("num",)

    def __init__(self, num):
        self.num = num

    def enclosure(self, level):
        r = self.num.refine(Fraction(1, 2 ** level))
        return RatInterval(r.lo, r.hi)

    def to_float(self, digits=12):
        return self.num.to_float(digits)

    def exact_json(self):
        d = self.num.to_json()
        d["type"] = "algebraic"
        return d


class ResidueValue:
    """An element of Q(alpha): closed-form rational expression in alpha."""

    __slots__ = ("field", "elem")

    def __init__(self, field, elem):
        self.field = field
        self.elem = elem

    def enclosure(self, level):
        return self.field.enclosure(self.elem, level)

    def to_float(self, digits=12):
        return self.field.to_float(self.elem, digits)

    def exact_json(self):
        rep = self.elem.rep if hasattr(self.elem, "rep") else UniPoly.rational(
            [Fraction(self.elem)])
        return {"type": "residue", "rep": [str(c) for c in rep.coeffs],
                "alpha": AlphaValue(self.field).exact_json()}


class QuadValue:
    """A closed-form (u +- v*sqrt(w))/d root over the fiber field."""

    __slots__ = ("root",)

    def __init__(self, root):
        self.root = root

    def enclosure(self, level):
        return self.root.enclosure(level)

    def to_float(self, digits=12):
        return self.root.to_float(digits)

    def exact_json(self):
        from .multroot import _fmt_elem
        r = self.root
        return {"type": "quadratic", "u": _fmt_elem(r.field, r.u),
                "v": _fmt_elem(r.field, r.v), "w": _fmt_elem(r.field, r.w),
                "d": _fmt_elem(r.field, r.d), "branch": r.branch}


class IsolatedRootValue:
    """A simple root of a fiber polynomial over Q(alpha), kept as an interval."""

    __slots__ = ("field", "poly", "lo", "hi", "_sign_lo")

    def __init__(self, field, poly, lo, hi):
        self.field = field
        self.poly = poly
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self._sign_lo = None

    def _bisect(self):
        if self.lo == self.hi:
            return
        if self._sign_lo is None:
            self._sign_lo = self.field.sign(self.poly.eval(self.lo))
        m = (self.lo + self.hi) / 2
        sm = self.field.sign(self.poly.eval(m))
        if sm == 0:
            self.lo = self.hi = m
            return
        if sm == self._sign_lo:
            self.lo = m
        else:
            self.hi = m

    def enclosure(self, level):
        width = Fraction(1, 2 ** level)
        while self.hi - self.lo > width:
            self._bisect()
        return RatInterval(self.lo, self.hi)

    def to_float(self, digits=12):
        box = self.enclosure(40)
        return float(box.midpoint())

    def exact_json(self):
        return {"type": "isolated", "lo": str(self.lo), "hi": str(self.hi)}


# ---------------------------------------------------------------------------
# fiber analysis data
# ---------------------------------------------------------------------------

class BranchCounts:
    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right

    def __repr__(self):
        return f"({self.left},{self.right})"

    def __eq__(self, other):
        return (self.left, self.right) == (other.left, other.right)

    __hash__ = None


class FiberPoint:
    __slots__ = ("y", "multiplicity", "kind", "branches", "value_kind")

    def __init__(self, y, multiplicity, kind):
        self.y = y                      # an exact value object
        self.multiplicity = multiplicity
        self.kind = kind                # regular / ramification / singular
        self.branches = None            # BranchCounts, filled by assignment


class CriticalFiber:
    def __init__(self, field, points, structure, lc_vanishes=False):
        self.field = field
        self.points = points            # ascending in y
        self.structure = structure      # MultiplicityStructure of P(alpha, .)
        self.lc_vanishes = lc_vanishes

    @property
    def alpha_value(self):
        return AlphaValue(self.field)


def specialize_at(P, field):
    """P(alpha, y) as a UniPoly in y over Q(alpha), semantically normalised."""
    coeffs = [field.reduce_coeff(c) for c in P.coeffs_y]
    return field.normalize_poly(UniPoly(coeffs))


# ---------------------------------------------------------------------------
# curve preprocessing and the discriminant
# ---------------------------------------------------------------------------

def discriminant_x(P):
    """Squarefree part of Res_y(P, P_y); raises ZeroDiscriminant if it vanishes."""
    if P.degree_y() < 1:
        raise ValueError("discriminant_x needs positive degree in y")
    py = P.derivative("y")
    res = resultant(P.as_unipoly_y(), py.as_unipoly_y())
    if isinstance(res, UniPoly):
        rx = res
    else:
        rx = UniPoly.rational([res])
    if rx.is_zero():
        raise ZeroDiscriminant("P has a repeated factor in y")
    if rx.degree() == 0:
        return UniPoly.rational([1])
    return rx.squarefree_part()


def bivariate_squarefree(P):
    """Squarefree part of a y-primitive bivariate polynomial."""
    if P.degree_y() < 1:
        return P
    py = P.derivative("y")
    g = gcd_by_subres(P.as_unipoly_y(), py.as_unipoly_y())
    g = BiPoly.from_unipoly_y(g).primitive_in_y()
    if g.degree_y() < 1:
        return P
    quo, rem = P.as_unipoly_y().divmod_poly(g.as_unipoly_y())
    if not rem.is_zero():
        raise ArithmeticError("squarefree factor does not divide the curve")
    return BiPoly.from_unipoly_y(quo).primitive_in_y()


def curve_preprocess(P):
    """Split off vertical-line components, return (vertical_xs, squarefree part)."""
    if P.is_zero():
        raise ValueError("the zero polynomial does not define a curve")
    content = P.content_in_y()
    vertical = []
    if content.degree() >= 1:
        vertical = isolate_real_roots(content.squarefree_part())
    prim = P.primitive_in_y()
    if prim.degree_y() < 1:
        return vertical, BiPoly.zero()
    return vertical, bivariate_squarefree(prim)


# ---------------------------------------------------------------------------
# fiber analysis
# ---------------------------------------------------------------------------

def analyze_fiber(P, alpha):
    """Exact point structure of the fiber over a critical x-coordinate."""
    field = AlgebraicField(alpha)
    fiber_poly = specialize_at(P, field)
    if fiber_poly.degree() < P.degree_y():
        return CriticalFiber(field, [], None, lc_vanishes=True)

    structure = multroot.extract(fiber_poly, field)

    px = P.derivative("x")
    px_at = specialize_at(px, field)

    points = []
    for mult, root in structure.real_parts:
        if root.kind == "rational":
            yval = ResidueValue(field, root.val)
            px_val = px_at.eval(root.val)
            px_sign = field.sign(px_val)
        else:
            yval = QuadValue(root)
            px_val = px_at.eval(root.value())
            px_sign = root.ring.sign(px_val)
        if mult == 1:
            kind = "regular"
        elif px_sign == 0:
            kind = "singular"
        else:
            kind = "ramification"
        points.append(FiberPoint(yval, mult, kind))

    if structure.simple_part.degree() >= 1:
        for lo, hi in field.isolate(structure.simple_part):
            points.append(FiberPoint(
                IsolatedRootValue(field, structure.simple_part, lo, hi),
                1, "regular"))

    points = multroot.order_roots(points, lambda pt, level: pt.y.enclosure(level))
    return CriticalFiber(field, points, structure)


def count_branches_between(P, gamma):
    """Distinct real points of the curve on the sample line x = gamma."""
    fiber = P.eval_x(gamma)
    fiber = UniPoly([c for c in fiber.coeffs])
    if fiber.is_zero():
        raise ValueError("sample line lies in the curve")
    sq = fiber.squarefree_part()
    if sq.degree() != fiber.monic().degree():
        raise ArithmeticError("sample line is not generic (hit a critical x)")
    if sq.degree() == 0:
        return 0, []
    roots = isolate_real_roots(sq)
    return len(roots), roots


# ---------------------------------------------------------------------------
# branch counting at critical points
# ---------------------------------------------------------------------------

def _eval_at_point(poly_over_field, yvalue, field):
    """Evaluate a specialised fiber polynomial at an exact y-value; exact sign."""
    if isinstance(yvalue, ResidueValue):
        return field.sign(poly_over_field.eval(yvalue.elem))
    if isinstance(yvalue, QuadValue):
        ring = yvalue.root.ring
        return ring.sign(poly_over_field.eval(yvalue.root.value()))
    raise TypeError("critical points must carry closed-form coordinates")


def ramification_branches(P, field, point):
    """Half-branch counts at a critical, non-singular point (derivative test)."""
    px_at = specialize_at(P.derivative("x"), field)
    sx = _eval_at_point(px_at, point.y, field)
    if sx == 0:
        raise ValueError("ramification test called at a singular point")
    dk = P.derivative("y")
    for k in range(2, P.degree_y() + 1):
        dk = dk.derivative("y")
        s = _eval_at_point(specialize_at(dk, field), point.y, field)
        if s != 0:
            if k % 2 == 1:
                return BranchCounts(1, 1)
            # Phi^(k) = -P_{y^k}/P_x at the point: positive -> local minimum
            # of x = Phi(y), branches open to the right
            e = -s * sx
            if e > 0:
                return BranchCounts(0, 2)
            return BranchCounts(2, 0)
    raise DegenerateDirection("all pure y-derivatives vanish at the point")


class TangentCone:
    __slots__ = ("degree", "s_mult", "real_slopes", "complex_pairs",
                 "squarefree", "vertical")

    def __init__(self, degree, s_mult, real_slopes, complex_pairs, squarefree):
        self.degree = degree
        self.s_mult = s_mult
        self.real_slopes = real_slopes
        self.complex_pairs = complex_pairs
        self.squarefree = squarefree
        self.vertical = s_mult >= 1

    @property
    def conclusive(self):
        return self.squarefree and not self.vertical

    def __repr__(self):
        return (f"TangentCone(deg={self.degree}, s^{self.s_mult}, "
                f"{self.real_slopes} real, {self.complex_pairs} complex, "
                f"squarefree={self.squarefree})")


def tangent_slopes(P, field, point):
    """Factor structure of the lowest homogeneous part of P(s+alpha, t+beta)."""
    if isinstance(point.y, ResidueValue):
        ring = field
        x0 = field.alpha()
        y0 = point.y.elem
    elif isinstance(point.y, QuadValue):
        ring = point.y.root.ring
        x0 = ring.coerce(field.alpha())
        y0 = point.y.root.value()
    else:
        raise TypeError("tangent cone needs closed-form coordinates")

    # translate: first shift x by x0 inside each y-coefficient, then shift y
    shifted_rows = [row.taylor_shift(x0) for row in P.coeffs_y]   # rows over ring, in s
    in_t = UniPoly(shifted_rows)          # polynomial in t(=y) with UniPoly-in-s coeffs
    translated = in_t.taylor_shift(y0)    # P(s + x0, t + y0)

    monos = {}
    for j, row in enumerate(translated.coeffs):
        if not isinstance(row, UniPoly):
            row = UniPoly([row])
        for i, c in enumerate(row.coeffs):
            if ring.sign(c) != 0:
                monos[(i, j)] = c
    if not monos:
        raise DegenerateDirection("translated polynomial is zero")
    d = min(i + j for (i, j) in monos)
    hmon = {(i, j): c for (i, j), c in monos.items() if i + j == d}
    e = min(i for (i, _j) in hmon)
    # dehomogenise h / s^e: g1(m) = sum over i+j=d of c_{ij} m^j, deg = d - e
    coeffs = [hmon.get((d - j, j)) for j in range(d - e + 1)]
    coeffs = [ring.coerce(0) if c is None else c for c in coeffs]
    g1 = ring.normalize_poly(UniPoly(coeffs))

    deg1 = g1.degree()
    if deg1 <= 0:
        real_slopes, complex_pairs, g1_squarefree = 0, 0, True
    elif deg1 == 1:
        real_slopes, complex_pairs, g1_squarefree = 1, 0, True
    else:
        seq = ring.sequence_for(g1)
        gcd_deg = deg1 - 1
        for j in range(deg1 - 1):
            if ring.sign(seq.principal(j)) != 0:
                gcd_deg = j
                break
        g1_squarefree = gcd_deg == 0
        if g1_squarefree:
            from .rootcount import generalized_count
            real_slopes = generalized_count(seq.principal_list(), ring.sign)
            complex_pairs = (deg1 - real_slopes) // 2
        else:
            real_slopes, complex_pairs = None, None
    # h itself is squarefree iff its dehomogenisation is and s appears at
    # most once
    return TangentCone(d, e, real_slopes, complex_pairs,
                       g1_squarefree and e <= 1)


# ---------------------------------------------------------------------------
# the derivative-curve position rule (two singular points in one fiber)
# ---------------------------------------------------------------------------

def _derivative_curve_sample(P, field, gamma, side):
    """Move the sample inside the zone where C_{P_y}'s branch count is stable.

    The relative vertical order of C_P and C_{P_y} branches is constant on
    the whole critical interval (they only meet on critical lines), but the
    *number* of real branches of C_{P_y} changes at that curve's own critical
    abscissas, so the position rule must sample before the first of them.
    """
    py = P.derivative("y")
    if py.degree_y() < 1:
        return gamma
    try:
        dpy = discriminant_x(py)
    except ZeroDiscriminant:
        return gamma
    if dpy.degree() < 1:
        return gamma
    alpha = _alpha_number(field)
    gnum = AlgebraicNumber.from_rational(Fraction(gamma))
    blockers = []
    for root in isolate_real_roots(dpy):
        if side == "right":
            if root.compare(alpha) > 0 and root.compare(gnum) < 0:
                blockers.append(root)
        else:
            if root.compare(alpha) < 0 and root.compare(gnum) > 0:
                blockers.append(root)
    if not blockers:
        return gamma
    if side == "right":
        nearest = blockers[0]
        for b in blockers[1:]:
            if b.compare(nearest) < 0:
                nearest = b
        while True:
            field.refine_to(max(nearest.hi - nearest.lo, Fraction(1, 4096)))
            nearest = nearest.refine((nearest.hi - nearest.lo) / 2
                                     if nearest.hi > nearest.lo else Fraction(1))
            if field.hi < nearest.lo:
                return (field.hi + nearest.lo) / 2
    nearest = blockers[0]
    for b in blockers[1:]:
        if b.compare(nearest) > 0:
            nearest = b
    while True:
        field.refine_to(max(nearest.hi - nearest.lo, Fraction(1, 4096)))
        nearest = nearest.refine((nearest.hi - nearest.lo) / 2
                                 if nearest.hi > nearest.lo else Fraction(1))
        if nearest.hi < field.lo:
            return (nearest.hi + field.lo) / 2


def _line_roots(P, gamma):
    """Isolated roots of P(gamma, .) and of P_y(gamma, .) on a sample line."""
    p_fiber = P.eval_x(gamma)
    py_fiber = P.derivative("y").eval_x(gamma)
    p_roots = isolate_real_roots(p_fiber.squarefree_part())
    py_roots = isolate_real_roots(py_fiber.squarefree_part()) \
        if py_fiber.degree() >= 1 else []
    return p_roots, py_roots


def _count_above_below(p_roots, py_roots, k):
    """Derivative-curve branches above at least k / below at least k curve branches.

    p_roots ascending: u is above at least k of them iff u > p_roots[k-1];
    below at least k iff u < p_roots[len-k].
    """
    above = 0
    below = 0
    hi = p_roots[k - 1]
    lo = p_roots[len(p_roots) - k]
    for u in py_roots:
        if u.compare(hi) > 0:
            above += 1
        if u.compare(lo) < 0:
            below += 1
    return above, below


def assign_branches_deg4(P, fiber, left_info, right_info):
    """Route branches for a quartic fiber with two singular double roots."""
    sing = [pt for pt in fiber.points if pt.kind == "singular"]
    if len(sing) != 2 or any(pt.multiplicity != 2 for pt in sing) or \
            len(fiber.points) != 2:
        raise AmbiguousAssignment("fiber does not match the two-double-root shape")
    low, high = fiber.points
    out = {}
    for side, (count, gamma) in (("left", left_info), ("right", right_info)):
        if count == 0:
            out[side] = (0, 0)
        elif count == 4:
            out[side] = (2, 2)
        elif count == 2:
            # tangent cones were inconclusive (else the caller resolved the
            # point already); use the relative position of the derivative curve
            gamma = _derivative_curve_sample(P, fiber.field, gamma, side)
            p_roots, py_roots = _line_roots(P, gamma)
            if len(p_roots) != 2:
                raise AmbiguousAssignment("sample line count drifted")
            above, below = _count_above_below(p_roots, py_roots, 2)
            if above >= 2:
                out[side] = (2, 0)      # both branches to the lower point
            elif below >= 2:
                out[side] = (0, 2)
            else:
                raise AmbiguousAssignment(
                    "derivative-curve position rule inconclusive")
        else:
            raise AmbiguousAssignment(f"impossible side count {count} for a quartic")
    low.branches = BranchCounts(out["left"][0], out["right"][0])
    high.branches = BranchCounts(out["left"][1], out["right"][1])


def assign_branches_deg5(P, fiber, left_info, right_info):
    """Route branches for the two quintic fiber shapes of the branch rules."""
    sing = [pt for pt in fiber.points if pt.kind == "singular"]
    mults = sorted(pt.multiplicity for pt in sing)
    regular = [pt for pt in fiber.points if pt.kind != "singular"]

    if mults == [2, 2] and len(regular) == 1 and \
            all(pt.multiplicity == 1 for pt in regular):
        _deg5_two_doubles(P, fiber, left_info, right_info)
    elif mults == [2, 3] and not regular:
        _deg5_triple_double(P, fiber, left_info, right_info)
    else:
        raise AmbiguousAssignment("fiber does not match a supported quintic shape")


def _deg5_two_doubles(P, fiber, left_info, right_info):
    doubles = [pt for pt in fiber.points if pt.kind == "singular"]
    simple = [pt for pt in fiber.points if pt.multiplicity == 1][0]
    low, high = doubles
    sides = {}
    for side, (count, gamma) in (("left", left_info), ("right", right_info)):
        if count == 1:
            sides[side] = (0, 0, 1)
        elif count == 5:
            sides[side] = (2, 2, 1)
        elif count == 3:
            gamma = _derivative_curve_sample(P, fiber.field, gamma, side)
            p_roots, py_roots = _line_roots(P, gamma)
            if len(p_roots) != 3:
                raise AmbiguousAssignment("sample line count drifted")
            # at least two derivative branches above at least two curve
            # branches -> the lower double takes the pair
            above, below = _count_above_below(p_roots, py_roots, 2)
            if above >= 2:
                sides[side] = (2, 0, 1)
            else:
                sides[side] = (0, 2, 1)
        else:
            raise AmbiguousAssignment(f"impossible side count {count} for a quintic")
    low.branches = BranchCounts(sides["left"][0], sides["right"][0])
    high.branches = BranchCounts(sides["left"][1], sides["right"][1])
    simple.branches = BranchCounts(sides["left"][2], sides["right"][2])


def _deg5_triple_double(P, fiber, left_info, right_info):
    triple = [pt for pt in fiber.points if pt.multiplicity == 3][0]
    double = [pt for pt in fiber.points if pt.multiplicity == 2][0]
    triple_below = fiber.points.index(triple) < fiber.points.index(double)
    sides = {}
    for side, (count, gamma) in (("left", left_info), ("right", right_info)):
        if count == 1:
            sides[side] = {"triple": 1, "double": 0}
        elif count == 5:
            sides[side] = {"triple": 3, "double": 2}
        elif count == 3:
            gamma = _derivative_curve_sample(P, fiber.field, gamma, side)
            p_roots, py_roots = _line_roots(P, gamma)
            if len(p_roots) != 3:
                raise AmbiguousAssignment("sample line count drifted")
            if len(py_roots) == 2:
                sides[side] = {"triple": 1, "double": 2}
            elif len(py_roots) == 4:
                above, below = _count_above_below(p_roots, py_roots, 3)
                if above >= 2 and below >= 2:
                    # the paper rules this configuration out; treat a sighting
                    # as an inconsistency rather than trusting either branch
                    raise AmbiguousAssignment(
                        "derivative curve surrounds the fiber branches")
                if above >= 2:
                    winner = "triple" if triple_below else "double"
                else:
                    winner = "triple" if not triple_below else "double"
                if winner == "triple":
                    sides[side] = {"triple": 3, "double": 0}
                else:
                    sides[side] = {"triple": 1, "double": 2}
            else:
                raise AmbiguousAssignment(
                    "derivative curve has an unexpected branch count")
        else:
            raise AmbiguousAssignment(f"impossible side count {count} for a quintic")
    triple.branches = BranchCounts(sides["left"]["triple"], sides["right"]["triple"])
    double.branches = BranchCounts(sides["left"]["double"], sides["right"]["double"])


# ---------------------------------------------------------------------------
# exact separator validation (no strand crosses y = c without P(x, c) = 0)
# ---------------------------------------------------------------------------

def _separators(fiber):
    """Rationals strictly between consecutive fiber points."""
    pts = fiber.points
    seps = []
    for a, b in zip(pts, pts[1:]):
        level = 8
        while True:
            ia = a.y.enclosure(level)
            ib = b.y.enclosure(level)
            if ia.hi < ib.lo:
                seps.append((ia.hi + ib.lo) / 2)
                break
            level += 8
            if level > 400:
                raise AmbiguousAssignment("could not separate fiber points")
    return seps


def _certified_sample(P, alpha_field, gamma, separators, side):
    """A sample abscissa between alpha and gamma crossed by no separator line."""
    gamma = Fraction(gamma)
    for _ in range(40):
        ok = True
        for c in separators:
            if P.eval_point(gamma, c) == 0:
                # separator line passes through the sample point; nudge gamma
                ok = False
                break
        if not ok:
            alpha_field.refine_to(Fraction(1, 1 << 16))
            edge = alpha_field.hi if side == "right" else alpha_field.lo
            gamma = (edge + gamma) / 2
            continue
        blockers = []
        for c in separators:
            h = P.eval_y(c)
            if h.is_zero():
                raise AmbiguousAssignment("separator line lies in the curve")
            for root in isolate_real_roots(h.squarefree_part()):
                # does the crossing sit strictly between alpha and gamma?
                gr = AlgebraicNumber.from_rational(gamma)
                if side == "right":
                    lo_cmp = root.compare(_alpha_number(alpha_field))
                    hi_cmp = root.compare(gr)
                    if lo_cmp > 0 and hi_cmp < 0:
                        blockers.append(root)
                else:
                    lo_cmp = root.compare(gr)
                    hi_cmp = root.compare(_alpha_number(alpha_field))
                    if lo_cmp > 0 and hi_cmp < 0:
                        blockers.append(root)
        if not blockers:
            return gamma
        # move the sample inside the innermost crossing
        if side == "right":
            nearest = blockers[0]
            for b in blockers[1:]:
                if b.compare(nearest) < 0:
                    nearest = b
            while True:
                alpha_field.refine_to(nearest.hi - nearest.lo if
                                      nearest.hi > nearest.lo else Fraction(1, 1024))
                nearest = nearest.refine((nearest.hi - nearest.lo) / 2
                                         if nearest.hi > nearest.lo else Fraction(1, 1024))
                if alpha_field.hi < nearest.lo:
                    gamma = (alpha_field.hi + nearest.lo) / 2
                    break
        else:
            nearest = blockers[0]
            for b in blockers[1:]:
                if b.compare(nearest) > 0:
                    nearest = b
            while True:
                alpha_field.refine_to(nearest.hi - nearest.lo if
                                      nearest.hi > nearest.lo else Fraction(1, 1024))
                nearest = nearest.refine((nearest.hi - nearest.lo) / 2
                                         if nearest.hi > nearest.lo else Fraction(1, 1024))
                if nearest.hi < alpha_field.lo:
                    gamma = (nearest.hi + alpha_field.lo) / 2
                    break
    else:
        raise AmbiguousAssignment("could not certify a separator-free sample")
    return gamma


def _alpha_number(field):
    return AlgebraicNumber(field.modulus, field.lo, field.hi)


def _band_counts(P, fiber, gamma, separators):
    """Exact number of curve points on x = gamma in each fiber band."""
    roots = isolate_real_roots(P.eval_x(gamma).squarefree_part())
    counts = [0] * len(fiber.points)
    for r in roots:
        band = 0
        for c in separators:
            if r.compare(AlgebraicNumber.from_rational(c)) > 0:
                band += 1
            else:
                break
        counts[band] += 1
    return counts


def validate_assignment(P, fiber, left_info, right_info):
    """Cross-check assigned branch counts against the separator count."""
    separators = _separators(fiber)
    for side, (count, gamma) in (("left", left_info), ("right", right_info)):
        certified = _certified_sample(P, fiber.field, gamma, separators, side)
        got = _band_counts(P, fiber, certified, separators)
        want = [pt.branches.left if side == "left" else pt.branches.right
                for pt in fiber.points]
        if got != want:
            raise AmbiguousAssignment(
                f"separator validation rejected the {side} assignment "
                f"(rules said {want}, bands say {got})")


# ---------------------------------------------------------------------------
# per-fiber resolution
# ---------------------------------------------------------------------------

def resolve_fiber(P, fiber, left_info, right_info):
    """Fill in BranchCounts for every point of a critical fiber."""
    n_left, _ = left_info
    n_right, _ = right_info
    field = fiber.field

    unresolved = []
    for pt in fiber.points:
        if pt.kind == "regular":
            pt.branches = BranchCounts(1, 1)
        elif pt.kind == "ramification":
            pt.branches = ramification_branches(P, field, pt)
        else:
            unresolved.append(pt)

    used_position_rule = False
    if unresolved:
        still = []
        for pt in unresolved:
            cone = tangent_slopes(P, field, pt)
            if cone.conclusive:
                k = cone.real_slopes
                pt.branches = BranchCounts(k, k)
            else:
                still.append(pt)
        unresolved = still

    if len(unresolved) == 1:
        pt = unresolved[0]
        rem_left = n_left - sum(q.branches.left for q in fiber.points if q.branches)
        rem_right = n_right - sum(q.branches.right for q in fiber.points if q.branches)
        m = pt.multiplicity
        for rem in (rem_left, rem_right):
            if rem < 0 or rem > m or (rem - m) % 2 != 0:
                raise AmbiguousAssignment(
                    f"remainder {rem} incompatible with multiplicity {m}")
        pt.branches = BranchCounts(rem_left, rem_right)
    elif len(unresolved) == 2:
        deg = P.degree_y()
        if deg == 4:
            assign_branches_deg4(P, fiber, left_info, right_info)
        elif deg == 5:
            assign_branches_deg5(P, fiber, left_info, right_info)
        else:
            raise AmbiguousAssignment(
                "several degenerate singular points outside the quartic/quintic rules")
        used_position_rule = True
    elif len(unresolved) > 2:
        raise AmbiguousAssignment("more than two degenerate singular points in a fiber")

    total_left = sum(pt.branches.left for pt in fiber.points)
    total_right = sum(pt.branches.right for pt in fiber.points)
    if total_left != n_left or total_right != n_right:
        raise AmbiguousAssignment(
            f"fiber branch totals ({total_left},{total_right}) do not match "
            f"interval counts ({n_left},{n_right})")

    if used_position_rule or any(pt.kind == "singular" for pt in fiber.points):
        validate_assignment(P, fiber, left_info, right_info)


# ---------------------------------------------------------------------------
# the sweep and the graph
# ---------------------------------------------------------------------------

class Vertex:
    __slots__ = ("x", "y", "kind", "fiber_index")

    def __init__(self, x, y, kind, fiber_index):
        self.x = x
        self.y = y
        self.kind = kind
        self.fiber_index = fiber_index


class TopologyGraph:
    """Vertices on fibers, edges between consecutive fibers, vertical lines."""

    def __init__(self, vertices, edges, vertical_lines, shear_t, fibers,
                 polynomial, sheared_polynomial):
        self.vertices = vertices
        self.edges = edges                    # (u, v, interval_index)
        self.vertical_lines = vertical_lines  # [AlgebraicNumber]
        self.shear_t = shear_t
        self.fibers = fibers                  # [(kind, x value object)]
        self.polynomial = polynomial
        self.sheared_polynomial = sheared_polynomial

    def degree(self, v):
        return sum(1 for (a, b, _t) in self.edges if a == v or b == v)

    def adjacency(self):
        adj = {i: [] for i in range(len(self.vertices))}
        for a, b, _t in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def original_xy_float(self, v, digits=9):
        """Float coordinates in the input frame (undoing the shear)."""
        xs = self.vertices[v].x.to_float(digits)
        ys = self.vertices[v].y.to_float(digits)
        t = float(self.shear_t)
        return xs + t * ys, ys

    def consistency_report(self):
        """Check the structural invariants; returns a list of violations."""
        problems = []
        boundary = {0, len(self.fibers) - 1}
        for i, v in enumerate(self.vertices):
            d = self.degree(i)
            kind = v.kind
            if kind == "sample":
                want = 1 if v.fiber_index in boundary else 2
                if d != want:
                    problems.append(f"sample vertex {i} has degree {d}, wants {want}")
        for a, b, _t in self.edges:
            fa = self.vertices[a].fiber_index
            fb = self.vertices[b].fiber_index
            if abs(fa - fb) != 1:
                problems.append(f"edge {a}-{b} does not join consecutive fibers")
        return problems

    def to_json_dict(self, digits=6):
        verts = []
        for i, v in enumerate(self.vertices):
            x, y = self.original_xy_float(v=i, digits=max(digits, 9))
            verts.append({
                "id": i,
                "x": round(x, digits),
                "y": round(y, digits),
                "kind": v.kind,
                "fiber": v.fiber_index,
                "x_exact": v.x.exact_json(),
                "y_exact": v.y.exact_json(),
            })
        return {
            "polynomial": self.polynomial.to_string(),
            "shear": str(self.shear_t),
            "vertices": verts,
            "edges": [[a, b] for (a, b, _t) in self.edges],
            "vertical_lines": [
                {"x": v.to_float(), "defpoly": [str(c) for c in v.defpoly.coeffs]}
                for v in self.vertical_lines],
            "fibers": [{"index": i, "kind": kind,
                        "x": xv.to_float(digits)}
                       for i, (kind, xv) in enumerate(self.fibers)],
        }

    def to_dot(self, digits=4):
        colors = {"singular": "red", "ramification": "red",
                  "regular": "blue", "sample": "gray"}
        lines = ["graph curve {", "  node [shape=point];",
                 "  edge [color=violet];"]
        for i, v in enumerate(self.vertices):
            x, y = self.original_xy_float(i)
            lines.append(
                f'  v{i} [pos="{x:.{digits}f},{y:.{digits}f}!", '
                f'color={colors.get(v.kind, "black")}, '
                f'xlabel="{v.kind[0]}"];')
        for a, b, _t in self.edges:
            lines.append(f"  v{a} -- v{b};")
        for k, vx in enumerate(self.vertical_lines):
            lines.append(f'  // vertical line x = {vx.to_float():.{digits}f}')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _disjoint_criticals(criticals):
    """Refine isolating intervals until pairwise disjoint; keep ordering."""
    out = list(criticals)
    for i in range(len(out) - 1):
        while not (out[i].hi < out[i + 1].lo):
            w = out[i].hi - out[i].lo
            w2 = out[i + 1].hi - out[i + 1].lo
            if w >= w2 and w > 0:
                out[i] = out[i].refine(w / 2)
            elif w2 > 0:
                out[i + 1] = out[i + 1].refine(w2 / 2)
            else:
                raise ArithmeticError("coincident critical abscissas")
    return out


def _sweep(Q):
    """One sweep attempt over a prepared (squarefree, lc-safe) curve."""
    D = discriminant_x(Q)
    criticals = isolate_real_roots(D) if D.degree() >= 1 else []
    criticals = _disjoint_criticals(criticals)
    r = len(criticals)

    bound = Fraction(1)
    for a in criticals:
        bound = max(bound, abs(a.lo), abs(a.hi))
    bound = bound + 1

    if r == 0:
        sample_x = [-bound, bound]
    else:
        sample_x = [-bound]
        for i in range(r - 1):
            sample_x.append((criticals[i].hi + criticals[i + 1].lo) / 2)
        sample_x.append(bound)
    samples = [count_branches_between(Q, g) for g in sample_x]

    fibers = []
    for alpha in criticals:
        fib = analyze_fiber(Q, alpha)
        if fib.lc_vanishes:
            raise AmbiguousAssignment("leading coefficient vanished at a critical x")
        fibers.append(fib)

    for i, fib in enumerate(fibers):
        left_info = (samples[i][0], sample_x[i])
        right_info = (samples[i + 1][0], sample_x[i + 1])
        resolve_fiber(Q, fib, left_info, right_info)

    # vertices fiber by fiber: sample_0, crit_0, sample_1, ..., crit_{r-1}, sample_r
    vertices = []
    fiber_meta = []
    ids = []            # per fiber: list of vertex ids ascending in y
    edges = []

    def add_fiber(kind, xval, points):
        idx = len(fiber_meta)
        fiber_meta.append((kind, xval))
        vids = []
        for (yval, pkind) in points:
            vids.append(len(vertices))
            vertices.append(Vertex(xval, yval, pkind, idx))
        ids.append(vids)
        return idx

    add_fiber("sample", RationalValue(sample_x[0]),
              [(AlgNumValue(root), "sample") for root in samples[0][1]])
    if r == 0:
        add_fiber("sample", RationalValue(sample_x[1]),
                  [(AlgNumValue(root), "sample") for root in samples[1][1]])
    for i, fib in enumerate(fibers):
        add_fiber("critical", fib.alpha_value,
                  [(pt.y, pt.kind) for pt in fib.points])
        add_fiber("sample", RationalValue(sample_x[i + 1]),
                  [(AlgNumValue(root), "sample") for root in samples[i + 1][1]])

    if r == 0:
        if samples[0][0] != samples[1][0]:
            raise ArithmeticError("branch count varies on a critical-point-free sweep")
        for a, b in zip(ids[0], ids[1]):
            edges.append((a, b, 0))
    else:
        for i, fib in enumerate(fibers):
            left_ids = ids[2 * i]
            crit_ids = ids[2 * i + 1]
            right_ids = ids[2 * i + 2]
            # non-crossing wiring: consume sample vertices bottom-up
            pos = 0
            for pt, vid in zip(fib.points, crit_ids):
                for _ in range(pt.branches.left):
                    edges.append((left_ids[pos], vid, 2 * i))
                    pos += 1
            if pos != len(left_ids):
                raise ArithmeticError("left wiring out of balance")
            pos = 0
            for pt, vid in zip(fib.points, crit_ids):
                for _ in range(pt.branches.right):
                    edges.append((vid, right_ids[pos], 2 * i + 1))
                    pos += 1
            if pos != len(right_ids):
                raise ArithmeticError("right wiring out of balance")

    return vertices, edges, fiber_meta


def compute_topology(P, max_shears=8):
    """Topology graph of the curve P(x, y) = 0 with shear fallback."""
    vertical, core = curve_preprocess(P)
    if core.is_zero() or core.degree_y() < 1:
        return TopologyGraph([], [], vertical, Fraction(0), [], P, core)

    shear_values = [Fraction(0)]
    k = 1
    while len(shear_values) < max_shears + 1:
        shear_values.append(Fraction(k))
        shear_values.append(Fraction(-k))
        k += 1
    shear_values = shear_values[:max_shears + 1]

    last_failure = None
    for t in shear_values:
        Q = core.shear(t) if t else core
        lc = Q.lc_y()
        if lc.degree() >= 1 and count_distinct_real_roots(lc) > 0:
            last_failure = "leading coefficient has real roots"
            continue
        try:
            vertices, edges, fiber_meta = _sweep(Q)
        except (UnsupportedPattern, AmbiguousAssignment, DegenerateDirection) as exc:
            last_failure = f"shear {t}: {exc}"
            continue
        return TopologyGraph(vertices, edges, vertical, t, fiber_meta, P, Q)
    raise RetriesExhausted(len(shear_values), last_failure)

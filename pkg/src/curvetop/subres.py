"""Subresultant polynomials with a single signed convention.

The convention used throughout carries the sign factor (-1)^j * delta(p-j-1),
delta(k) = (-1)^(k(k+1)/2), on top of the classical determinant definition.
With it one sequence serves both gcd extraction (vanishing pattern of the
principal coefficients) and real root counting (generalised sign count of the
same coefficients), and it specialises safely: every entry is a polynomial
function of the input coefficients, so parameters or algebraic numbers may be
substituted after the computation as long as the leading coefficient survives.

Two independent computation paths are provided:

* :func:`subresultant_det` - the literal determinant (with the unit/-T rows),
  evaluated by exact minor expansion.  Ground truth; fine for small degrees.
* :func:`subresultant_sequence` - a pseudo-remainder chain with exact
  divisions (fraction-free, no coefficient inversion), usable over Q, Q[x],
  and nested polynomial rings.  The test suite pins both paths to each other.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegreeOrder
from .poly import UniPoly, _coeff_div, _is_zero


def delta(k):
    """(-1)^(k(k+1)/2)."""
    return -1 if (k * (k + 1) // 2) % 2 else 1


def paper_sign(p, j):
    """The convention's sign factor for index j of a degree-(p, q) pair."""
    return delta(p - j - 1) * (-1 if j % 2 else 1)


# ---------------------------------------------------------------------------
# determinant oracle
# ---------------------------------------------------------------------------

def _det_minor_expansion(rows):
    """Determinant by memoised expansion along the first remaining column.

    ``rows`` is a list of equal-length lists of UniPoly entries.  Exponential
    in principle, fine for the sizes the oracle is used at (<= 13).
    """
    n = len(rows)
    cache = {}

    def rec(row_ids):
        if not row_ids:
            return UniPoly.const(Fraction(1))
        key = row_ids
        hit = cache.get(key)
        if hit is not None:
            return hit
        col = n - len(row_ids)
        total = UniPoly.zero()
        for pos, r in enumerate(row_ids):
            entry = rows[r][col]
            if entry.is_zero():
                continue
            sub = rec(row_ids[:pos] + row_ids[pos + 1:])
            term = entry * sub
            total = total + term if pos % 2 == 0 else total - term
        cache[key] = total
        return total

    return rec(tuple(range(n)))


def subresultant_det(P, Q, j):
    """Sres_j(P, Q) straight from the defining determinant (signed convention).

    Requires deg(P) >= deg(Q) > j >= 0.  Entries of the matrix live in the
    coefficient ring; the unit/-T rows make the result a polynomial of degree
    at most j.
    """
    p, q = P.degree(), Q.degree()
    if p < q:
        raise DegreeOrder(f"deg(P)={p} < deg(Q)={q}")
    if not (0 <= j < q):
        raise ValueError(f"subresultant index {j} out of range for q={q}")
    n = p + q - j  # square matrix size
    zero = UniPoly.zero()

    def conster(c):
        return UniPoly.const(c)

    rows = []
    for r in range(q - j):  # shifted coefficient rows of P
        row = [zero] * n
        for i in range(p + 1):
            row[r + i] = conster(P.coeffs[p - i])
        rows.append(row)
    for r in range(p - j):  # shifted coefficient rows of Q
        row = [zero] * n
        for i in range(q + 1):
            row[r + i] = conster(Q.coeffs[q - i])
        rows.append(row)
    one = conster(Fraction(1))
    minus_t = UniPoly([Fraction(0), Fraction(-1)])
    for k in range(j):  # the unit / -T rows
        row = [zero] * n
        row[n - j - 1 + k] = one
        row[n - j + k] = minus_t
        rows.append(row)

    det = _det_minor_expansion(rows)
    # collapse UniPoly-in-T with constant-UniPoly... entries are over the base
    # ring embedded as constants; det is a UniPoly in T whose coefficients are
    # base ring elements already.
    sgn = paper_sign(p, j)
    return det if sgn == 1 else -det


# ---------------------------------------------------------------------------
# pseudo-remainder chain (fraction-free fast path)
# ---------------------------------------------------------------------------

def _power(c, n):
    out = None
    for _ in range(n):
        out = c if out is None else out * c
    if out is None:
        raise ValueError("zeroth power not needed here")
    return out


def _classical_chain(P, Q):
    """Pseudo-remainder subresultant chain for deg P > deg Q.

    Returns ``chain`` with chain[j] equal to (-1)^j times the determinant
    value of index j (defective indices hold the zero polynomial); the
    (-1)^j twist is an artifact of the prem(. , -.) recurrence and is folded
    into the caller's sign factor.  Exact divisions only, so the computation
    is valid over any integral domain whose elements follow the coefficient
    protocol (Q, Q[x], nested polynomial rings).
    """
    p, q = P.degree(), Q.degree()
    chain = [UniPoly.zero() for _ in range(q)]
    if q < 0:
        return chain

    # z tracks the principal coefficient of the regular subresultant A,
    # with s_q taken as lc(Q)^(p-q) by convention.
    z = _power(Q.leading, p - q) if p > q else Q.leading
    A = Q
    B = P.pseudo_rem(-Q)
    while True:
        if B.is_zero():
            break
        d, e = A.degree(), B.degree()
        if d - 1 < q:
            chain[d - 1] = B
        delta_de = d - e
        if delta_de > 1:
            # fill the bottom of the degree gap: S_e is similar to B
            num = _power(B.leading, delta_de - 1)
            den = _power(z, delta_de - 1)
            C = B.scale(num).div_scalar(den)
            if 0 <= e < q:
                chain[e] = C
        else:
            C = B
        if e == 0:
            break
        nxt = A.pseudo_rem(-B)
        divisor = _power(z, delta_de) * A.leading
        B = nxt.div_scalar(divisor)
        A = C
        z = A.leading
    return chain


def subresultant_sequence(P, Q, j_max=None):
    """Signed subresultants Sres_j(P, Q) for j = 0..q-1 via the fast chain.

    deg P >= deg Q >= 0 required; the deg P == deg Q case is delegated to the
    determinant oracle entry by entry (the chain needs a strict degree drop).
    """
    p, q = P.degree(), Q.degree()
    if p < 0 or q < 0:
        raise ValueError("zero polynomial in subresultant sequence")
    if p < q:
        raise DegreeOrder(f"deg(P)={p} < deg(Q)={q}")
    if p == q:
        return [subresultant_det(P, Q, j) for j in range(q)]
    chain = _classical_chain(P, Q)
    out = []
    for j in range(q):
        # chain[j] = (-1)^j * D_j already, so only the delta factor remains.
        sgn = delta(p - j - 1)
        out.append(chain[j] if sgn == 1 else -chain[j])
    return out


def subresultant(P, Q, j):
    """Sres_j(P, Q) in the signed convention (fast path, oracle for p == q)."""
    p, q = P.degree(), Q.degree()
    if p < q:
        raise DegreeOrder(f"deg(P)={p} < deg(Q)={q}")
    if not (0 <= j < q):
        raise ValueError(f"subresultant index {j} out of range for q={q}")
    return subresultant_sequence(P, Q)[j]


def resultant(P, Q):
    """Sres_0(P, Q); vanishes iff P and Q share a root in the closure."""
    if P.is_zero() or Q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    p, q = P.degree(), Q.degree()
    if p < q:
        # res(P,Q) = (-1)^(pq) res(Q,P) classically; adjust the convention's
        # delta factor which depends on the first argument's degree.
        r = resultant(Q, P)
        sgn = (-1 if (p * q) % 2 else 1) * delta(q - 1) * delta(p - 1)
        return -r if sgn == -1 else r
    if q == 0:
        c = _power(Q.leading, p) if p else Q.leading
        sgn = paper_sign(p, 0) if p else 1
        return c if sgn == 1 else -c
    return subresultant_sequence(P, Q)[0].coeff(0)


class SubresSequence:
    """The subresultant sequence of a single polynomial P (against P')."""

    def __init__(self, polys):
        self.polys = list(polys)  # index j = 0..p

    @property
    def p(self):
        return len(self.polys) - 1

    def poly(self, j):
        return self.polys[j]

    def principal(self, j):
        """s_j: the coefficient of T^j in Sres_j (possibly a syntactic zero)."""
        return self.polys[j].coeff(j)

    def secondary(self, j, k):
        """s_{j,k}: the coefficient of T^k in Sres_j, k < j."""
        return self.polys[j].coeff(k)

    def principal_list(self):
        """[s_p, s_{p-1}, ..., s_0] as used by the root-counting theorem."""
        return [self.principal(j) for j in range(self.p, -1, -1)]


def sequence_for(P):
    """Subresultant sequence of P: Sres_p = P, Sres_{p-1} = P', then the pair chain."""
    p = P.degree()
    if p < 2:
        raise ValueError("sequence_for needs deg(P) >= 2")
    lower = subresultant_sequence(P, P.derivative())
    return SubresSequence(lower + [P.derivative(), P])


def gcd_by_subres(P, Q, is_zero=None):
    """gcd(P, Q) as the first subresultant with nonvanishing principal coefficient.

    ``is_zero`` decides coefficient vanishing (defaults to the syntactic
    test); pass a semantic predicate when coefficients are residues of
    algebraic numbers.  If every principal coefficient below deg(Q) vanishes,
    Q divides P and Q itself is returned.
    """
    if is_zero is None:
        is_zero = _is_zero
    p, q = P.degree(), Q.degree()
    if p < q:
        raise DegreeOrder(f"deg(P)={p} < deg(Q)={q}")
    if q == 0:
        return UniPoly.const(Q.leading)
    seq = subresultant_sequence(P, Q)
    for j in range(q):
        if not is_zero(seq[j].coeff(j)):
            return seq[j]
    return Q

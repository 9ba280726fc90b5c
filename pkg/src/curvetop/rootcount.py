"""Sign counting on subresultant coefficients and exact real-root counts.

The counting functions consume *signs of exact ring elements*: over Q the
sign is immediate, over Q(alpha) it comes from the field context.  A single
wrong sign corrupts everything downstream, so no floating point is ever
involved here.
"""

from __future__ import annotations

from fractions import Fraction

from .algnum import QQ
from .errors import ZeroEntry
from .poly import sign_of


def _signs(values, sign_fn):
    if sign_fn is None:
        sign_fn = sign_of
    return [sign_fn(v) for v in values]


def variations(values, sign_fn=None):
    """Number of adjacent sign changes; every entry must be nonzero."""
    signs = _signs(values, sign_fn)
    if not signs:
        raise ValueError("empty sign list")
    if any(s == 0 for s in signs):
        raise ZeroEntry("variations requires a zero-free list")
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def permanences(values, sign_fn=None):
    """Number of adjacent sign agreements; every entry must be nonzero."""
    signs = _signs(values, sign_fn)
    if not signs:
        raise ValueError("empty sign list")
    if any(s == 0 for s in signs):
        raise ZeroEntry("permanences requires a zero-free list")
    return sum(1 for a, b in zip(signs, signs[1:]) if a == b)


def generalized_count(values, sign_fn=None):
    """The generalised permanences-minus-variations count C.

    Input: exact elements (zeros allowed except in the first position).
    Maximal zero-free blocks contribute P - V; every *internal* zero run of
    even length k contributes (-1)^(k/2) * sign(next/previous); odd runs and
    the trailing run contribute nothing.
    """
    signs = _signs(values, sign_fn)
    if not signs:
        raise ValueError("empty sign list")
    if signs[0] == 0:
        raise ValueError("generalized count requires a nonzero first element")

    total = 0
    i = 0
    n = len(signs)
    prev_block_last = None
    while i < n:
        if signs[i] == 0:
            run = 0
            while i < n and signs[i] == 0:
                run += 1
                i += 1
            if i < n:  # internal zero run
                if run % 2 == 0:
                    eps = (-1) ** (run // 2) * (signs[i] * prev_block_last)
                    total += eps
            # trailing run: nothing
        else:
            block_start = i
            while i < n and signs[i] != 0:
                i += 1
            block = signs[block_start:i]
            p = sum(1 for a, b in zip(block, block[1:]) if a == b)
            v = sum(1 for a, b in zip(block, block[1:]) if a != b)
            total += p - v
            prev_block_last = block[-1]
    return total


def count_distinct_real_roots(P, field=QQ):
    """Number of distinct real roots of P, by sign counting on its sequence.

    Works over Q and over Q(alpha) (pass the field context); the degree after
    semantic normalisation must be at least 1.
    """
    P = field.normalize_poly(P)
    deg = P.degree()
    if deg < 1:
        raise ValueError("root count needs a nonconstant polynomial")
    if deg == 1:
        return 1
    seq = field.sequence_for(P)
    return generalized_count(seq.principal_list(), field.sign)


def descartes_positive_count(P, field=QQ):
    """Sign variations of the coefficient list: the Descartes count.

    Exact count of positive roots with multiplicity when P is known to have
    only real roots (the symmetric-pencil use case); otherwise an upper bound
    of the same parity.
    """
    P = field.normalize_poly(P)
    if P.is_zero():
        raise ValueError("Descartes count of the zero polynomial")
    signs = [field.sign(c) for c in P.coeffs]
    out = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            out += 1
        prev = s
    return out

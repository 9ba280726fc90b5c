import random
from fractions import Fraction

import pytest

from curvetop.algnum import AlgebraicField, isolate_real_roots
from curvetop.errors import DegreeMismatch, NoMultipleRoot, UnsupportedPattern
from curvetop.multroot import (
    extract,
    extract_deg4,
    extract_deg5,
    extract_deg67,
    extract_general,
    tau_chain,
)
from curvetop.poly import UniPoly
from curvetop.rootcount import generalized_count
from curvetop.subres import sequence_for


def T():
    return UniPoly.var()


def lin(r):
    return T() - UniPoly.rational([Fraction(r)])


def rational_roots(struct):
    return sorted((m, Fraction(root.val)) for m, root in struct.real_parts
                  if root.kind == "rational")


class TestDeg4Cases:
    def test_case1_quadruple(self):
        m = extract_deg4(lin(5) ** 4)
        assert m.case_tag == "deg4-case1"
        assert rational_roots(m) == [(4, Fraction(5))]

    def test_case2_triple_plus_simple(self):
        p = lin(1) ** 3 * lin(2)
        assert p == UniPoly.rational([2, -7, 9, -5, 1])
        m = extract_deg4(p)
        assert m.case_tag == "deg4-case2"
        assert rational_roots(m) == [(1, Fraction(2)), (3, Fraction(1))]

    def test_case2_beta_zero_fallback(self):
        # paper's beta=0 alternative; the sign forces gamma = -a3/a4
        m = extract_deg4(T() ** 3 * lin(2))
        assert rational_roots(m) == [(1, Fraction(2)), (3, Fraction(0))]

    def test_case3_two_real_doubles(self):
        m = extract_deg4((T() * T() - UniPoly.rational([1])) ** 2)
        assert m.case_tag == "deg4-case3"
        vals = sorted(root.to_float() for _, root in m.real_parts)
        assert vals == [-1.0, 1.0]
        assert all(mm == 2 for mm, _ in m.real_parts)
        assert m.reconstruct() == (T() * T() - UniPoly.rational([1])) ** 2

    def test_case4_complex_doubles(self):
        m = extract_deg4((T() * T() + UniPoly.rational([1])) ** 2)
        assert m.case_tag == "deg4-case4"
        assert m.real_parts == []
        assert m.complex_pair_multiplicities == [2]

    def test_case5_double_plus_complex_simple(self):
        m = extract_deg4(lin(3) ** 2 * (T() * T() + UniPoly.rational([1])))
        assert m.case_tag == "deg4-case5"
        assert rational_roots(m) == [(2, Fraction(3))]
        assert m.simple_part == T() * T() + UniPoly.rational([1])

    def test_squarefree_rejected(self):
        with pytest.raises(NoMultipleRoot):
            extract_deg4(lin(1) * lin(2) * lin(3) * lin(4))

    def test_wrong_degree(self):
        with pytest.raises(DegreeMismatch):
            extract_deg4(lin(1) ** 3)


class TestDeg5Cases:
    def test_case1(self):
        m = extract_deg5(lin(2) ** 5)
        assert m.case_tag == "deg5-1"
        assert rational_roots(m) == [(5, Fraction(2))]

    def test_case2a(self):
        m = extract_deg5(lin(1) ** 4 * lin(3))
        assert m.case_tag == "deg5-2a"
        assert rational_roots(m) == [(1, Fraction(3)), (4, Fraction(1))]

    def test_case2b(self):
        m = extract_deg5(lin(1) ** 3 * lin(2) ** 2)
        assert m.case_tag == "deg5-2b"
        assert rational_roots(m) == [(2, Fraction(2)), (3, Fraction(1))]

    def test_case3a(self):
        m = extract_deg5(lin(1) ** 3 * lin(2) * lin(5))
        assert m.case_tag == "deg5-3a"
        assert rational_roots(m) == [(3, Fraction(1))]
        assert m.simple_part == (lin(2) * lin(5)).monic()

    def test_case3b(self):
        m = extract_deg5(lin(1) ** 3 * (T() * T() + UniPoly.rational([1])))
        assert m.case_tag == "deg5-3b"
        assert rational_roots(m) == [(3, Fraction(1))]
        assert m.simple_part == T() * T() + UniPoly.rational([1])

    def test_case3c_paper_instance(self):
        p = lin(1) ** 2 * lin(2) ** 2 * lin(5)
        m = extract_deg5(p)
        assert m.case_tag == "deg5-3c"
        assert rational_roots(m) == [(1, Fraction(5))]
        doubles = sorted(root.to_float() for mm, root in m.real_parts if mm == 2)
        assert doubles == [1.0, 2.0]
        assert m.reconstruct() == p

    def test_case3d(self):
        p = lin(5) * (T() * T() + UniPoly.rational([1])) ** 2
        m = extract_deg5(p)
        assert m.case_tag == "deg5-3d"
        assert rational_roots(m) == [(1, Fraction(5))]
        assert m.complex_pair_multiplicities == [2]

    def test_case4a(self):
        m = extract_deg5(lin(1) ** 2 * lin(2) * lin(3) * lin(4))
        assert m.case_tag == "deg5-4a"
        assert rational_roots(m) == [(2, Fraction(1))]
        assert m.simple_part == (lin(2) * lin(3) * lin(4)).monic()

    def test_case4b(self):
        m = extract_deg5(lin(1) ** 2 * lin(2) * (T() * T() + UniPoly.rational([1])))
        assert m.case_tag == "deg5-4b"
        assert rational_roots(m) == [(2, Fraction(1))]
        assert m.simple_part.degree() == 3

    def test_discriminator_values(self):
        # the paper's C-count discriminators: 3 vs 1 for the 3x cases,
        # 4 vs 2 for the 4x cases
        for p, want in [
            (lin(1) ** 3 * lin(2) * lin(5), 3),
            (lin(1) ** 3 * (T() * T() + UniPoly.rational([1])), 1),
            (lin(1) ** 2 * lin(2) ** 2 * lin(5), 3),
            (lin(5) * (T() * T() + UniPoly.rational([1])) ** 2, 1),
            (lin(1) ** 2 * lin(2) * lin(3) * lin(4), 4),
            (lin(1) ** 2 * lin(2) * (T() * T() + UniPoly.rational([1])), 2),
        ]:
            seq = sequence_for(p)
            assert generalized_count(seq.principal_list()) == want


class TestTauChain:
    def test_cube(self):
        ch = tau_chain(lin(1) ** 3)
        assert len(ch) == 4
        degs = [c.degree() for c in ch]
        assert degs == [3, 2, 1, 0]
        for c, d in zip(ch[:-1], degs):
            assert c.eval(Fraction(1)) == 0 or d == 0

    def test_squarefree(self):
        ch = tau_chain(lin(1) * lin(2))
        assert [c.degree() for c in ch] == [2, 0]

    def test_two_doubles(self):
        ch = tau_chain(lin(1) ** 2 * lin(2) ** 2)
        assert [c.degree() for c in ch] == [4, 2, 0]
        tau1 = ch[1]
        assert tau1.eval(Fraction(1)) == 0 and tau1.eval(Fraction(2)) == 0
        # tau_1 is a genuine subresultant of P
        p = lin(1) ** 2 * lin(2) ** 2
        seq = sequence_for(p)
        assert tau1 == seq.poly(2)


class TestGeneral:
    def test_mult_5_3(self):
        p = lin(1) ** 5 * lin(2) ** 3 * lin(4)
        m = extract_general(p)
        assert rational_roots(m) == [(3, Fraction(2)), (5, Fraction(1))]
        assert m.simple_part == lin(4).monic()
        assert m.reconstruct() == p

    def test_complex_triple_discarded(self):
        p = (T() * T() + UniPoly.rational([1])) ** 3 * lin(1)
        m = extract_general(p)
        assert m.real_parts == []
        assert m.complex_pair_multiplicities == [3]
        assert m.simple_part == lin(1)

    def test_three_real_doubles_unsupported(self):
        with pytest.raises(UnsupportedPattern):
            extract_general(lin(1) ** 2 * lin(2) ** 2 * lin(3) ** 2)

    def test_exception_carries_tau_data(self):
        try:
            extract_general(lin(1) ** 2 * lin(2) ** 2 * lin(3) ** 2)
        except UnsupportedPattern as e:
            assert e.degree == 6
            assert e.pattern[2] == (3, 0)
            assert e.tau_degrees[0] == 6
        else:
            pytest.fail("expected UnsupportedPattern")

    def test_two_real_doubles_supported_deg6(self):
        p = lin(1) ** 2 * lin(2) ** 2 * lin(3) * lin(5)
        m = extract_general(p)
        assert sorted(mm for mm, _ in m.real_parts) == [2, 2]
        assert m.reconstruct() == p

    def test_repeated_complex_values_allowed(self):
        q1 = T() * T() + UniPoly.rational([1])
        q2 = T() * T() + UniPoly.rational([2])
        p = q1 ** 2 * q2 ** 2 * lin(3) ** 3
        m = extract_general(p)
        assert rational_roots(m) == [(3, Fraction(3))]
        assert sorted(m.complex_pair_multiplicities) == [2, 2]
        assert m.reconstruct() == p


class TestDeg67:
    def test_deg6_exceptions(self):
        with pytest.raises(UnsupportedPattern):
            extract_deg67(lin(1) ** 2 * lin(2) ** 2 * lin(4) ** 2)
        q = T() * T() + UniPoly.rational([1])
        with pytest.raises(UnsupportedPattern):
            extract_deg67(lin(1) ** 2 * q ** 2)

    def test_deg7_exceptions(self):
        with pytest.raises(UnsupportedPattern):
            extract_deg67(lin(1) ** 2 * lin(2) ** 2 * lin(3) ** 2 * lin(4))
        q = T() * T() + UniPoly.rational([1])
        with pytest.raises(UnsupportedPattern):
            extract_deg67(lin(1) ** 2 * lin(2) * q ** 2)

    def test_deg7_conservative_reading(self):
        # one real double and one complex double pair share the value 2;
        # the conservative reading of the hypothesis refuses closed forms
        q = T() * T() + UniPoly.rational([1])
        with pytest.raises(UnsupportedPattern):
            extract_deg67(lin(1) ** 2 * q ** 2 * lin(3))

    def test_deg6_supported(self):
        p = lin(1) ** 4 * lin(2) * lin(3)
        m = extract_deg67(p)
        assert m.case_tag == "deg6-general"
        assert rational_roots(m) == [(4, Fraction(1))]

    def test_wrong_degree(self):
        with pytest.raises(DegreeMismatch):
            extract_deg67(lin(1) ** 3)


class TestInvariants:
    def plant(self, rng, deg_target):
        while True:
            real_roots, complex_pairs = [], []
            used, mults = set(), []
            budget = deg_target
            attempts = 0
            while budget > 0 and attempts < 50:
                attempts += 1
                m = rng.randint(2, min(4, budget)) if (
                    budget >= 2 and rng.random() < 0.6) else 1
                if rng.random() < 0.2 and budget >= 2 * m:
                    b = Fraction(rng.randint(-3, 3))
                    c = Fraction(rng.randint(1, 5))
                    if b * b - 4 * c >= 0:
                        continue
                    if m >= 2 and m in mults:
                        continue
                    complex_pairs.append((UniPoly([c, b, Fraction(1)]), m))
                    if m >= 2:
                        mults.append(m)
                    budget -= 2 * m
                else:
                    r = Fraction(rng.randint(-6, 6), rng.randint(1, 2))
                    if r in used:
                        continue
                    if m >= 2 and mults.count(m) >= 2:
                        continue
                    if m >= 2 and any(mc == m and fac.degree() == 2
                                      for fac, mc in complex_pairs):
                        continue
                    used.add(r)
                    real_roots.append((r, m))
                    if m >= 2:
                        mults.append(m)
                    budget -= m
            if budget == 0 and any(m >= 2 for _, m in real_roots + [
                    (None, mc) for _, mc in complex_pairs]):
                P = UniPoly.rational([rng.choice([1, 2, -1])])
                for r, m in real_roots:
                    P = P * lin(r) ** m
                for q, m in complex_pairs:
                    P = P * q ** m
                return P, real_roots, complex_pairs

    def test_fuzz_planted_structures(self):
        rng = random.Random(55)
        supported = 0
        for _ in range(1000):
            deg = rng.randint(4, 9)
            P, real_roots, complex_pairs = self.plant(rng, deg)
            try:
                m = extract(P)
            except UnsupportedPattern:
                continue
            supported += 1
            assert m.reconstruct() == P
            assert m.degree_accounted() == P.degree()
            planted = sorted(mm for _, mm in real_roots if mm >= 2)
            got = sorted(mm for mm, _ in m.real_parts if mm >= 2)
            assert planted == got
        assert supported > 900

    def test_derivative_vanishing(self):
        rng = random.Random(56)
        for _ in range(100):
            P, real_roots, _ = self.plant(rng, rng.randint(4, 8))
            try:
                m = extract(P)
            except UnsupportedPattern:
                continue
            for mult, root in m.real_parts:
                if root.kind == "rational":
                    val = Fraction(root.val)
                    d = P
                    for _k in range(mult):
                        assert d.eval(val) == 0
                        d = d.derivative()
                    assert d.eval(val) != 0
                else:
                    # verify via exact division by the minimal quadratic
                    q = root.minimal_quadratic()
                    cur = P
                    for _k in range(mult):
                        quo, rem = cur.divmod_poly(q)
                        assert rem.is_zero()
                        cur = quo
                    _, rem = cur.divmod_poly(q)
                    assert not rem.is_zero()

    def test_deg4_deg5_vs_general_crosscheck(self):
        rng = random.Random(57)
        for _ in range(200):
            P, _, _ = self.plant(rng, rng.choice([4, 5]))
            try:
                m1 = extract(P)
                m2 = extract_general(P)
            except UnsupportedPattern:
                continue
            r1 = sorted((mm, round(root.to_float(), 9))
                        for mm, root in m1.real_parts if mm >= 2)
            r2 = sorted((mm, round(root.to_float(), 9))
                        for mm, root in m2.real_parts if mm >= 2)
            assert r1 == r2


class TestOverAlgebraicField:
    def test_fiber_style_extraction(self):
        # P(alpha, y) with alpha = sqrt(2): (y - alpha)^2 * (y + 1)
        sqrt2 = isolate_real_roots(T() * T() - UniPoly.rational([2]))[1]
        F = AlgebraicField(sqrt2)
        a = F.alpha()
        y_minus_a = UniPoly([-a, F.from_fraction(1)])
        p = y_minus_a * y_minus_a * UniPoly([F.from_fraction(1), F.from_fraction(1)])
        m = extract(p, F)
        assert m.case_tag == "general"
        [(mult, root)] = [(mm, r) for mm, r in m.real_parts if mm >= 2]
        assert mult == 2
        assert abs(root.to_float() - 2 ** 0.5) < 1e-9
        assert m.simple_part.degree() == 1

    def test_deg4_fiber(self):
        # (y^2 - alpha)^2 over Q(sqrt2): case 3 with roots +-2^(1/4)
        sqrt2 = isolate_real_roots(T() * T() - UniPoly.rational([2]))[1]
        F = AlgebraicField(sqrt2)
        a = F.alpha()
        y2_minus_a = UniPoly([-a, F.from_fraction(0), F.from_fraction(1)])
        m = extract_deg4(y2_minus_a * y2_minus_a, F)
        assert m.case_tag == "deg4-case3"
        vals = sorted(root.to_float() for _, root in m.real_parts)
        assert abs(vals[0] + 2 ** 0.25) < 1e-9
        assert abs(vals[1] - 2 ** 0.25) < 1e-9

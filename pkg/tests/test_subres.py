import random
from fractions import Fraction

import pytest

from curvetop.poly import UniPoly
from curvetop.errors import DegreeOrder
from curvetop.subres import (
    delta,
    gcd_by_subres,
    resultant,
    sequence_for,
    subresultant,
    subresultant_det,
    subresultant_sequence,
)


def T():
    return UniPoly.var()


def one():
    return UniPoly.rational([1])


def rand_unipoly(rng, deg, lo=-6, hi=6):
    while True:
        cs = [Fraction(rng.randint(lo, hi)) for _ in range(deg + 1)]
        if cs[-1] != 0:
            return UniPoly(cs)


class TestDeterminantOracle:
    def test_sres0_from_definition(self):
        # Sres_0(T^2-1, 2T): the pair is (P, P'), so the value must equal
        # a_p * disc(P) = 1 * (0^2 - 4*1*(-1)) = 4.
        P = T() * T() - one()
        Q = UniPoly.rational([0, 2])
        s0 = subresultant_det(P, Q, 0)
        assert s0 == UniPoly.rational([4])

    def test_repeated_rows_vanish(self):
        rng = random.Random(11)
        for _ in range(20):
            P = rand_unipoly(rng, rng.randint(2, 5))
            for j in range(P.degree()):
                assert subresultant_det(P, P, j).is_zero()

    def test_sres1_of_planted_double_root(self):
        P = (T() - one()) ** 2 * (T() + UniPoly.rational([2]))
        s1 = subresultant_det(P, P.derivative(), 1)
        assert s1.degree() == 1
        assert s1.eval(Fraction(1)) == 0


class TestChainAgainstOracle:
    def test_random_pairs(self):
        rng = random.Random(12)
        checked = 0
        for _ in range(60):
            p = rng.randint(1, 6)
            q = rng.randint(1, p)
            P, Q = rand_unipoly(rng, p), rand_unipoly(rng, q)
            if rng.random() < 0.4 and q >= 2:
                g = rand_unipoly(rng, rng.randint(1, q - 1))
                P, Q = P * g, Q * g
            if P.degree() < Q.degree():
                P, Q = Q, P
            fast = subresultant_sequence(P, Q)
            for j in range(Q.degree()):
                assert fast[j] == subresultant_det(P, Q, j)
                checked += 1
        assert checked > 100

    def test_degree_gaps(self):
        rng = random.Random(13)
        for _ in range(30):
            p = rng.randint(3, 7)
            q = rng.randint(1, p - 2)
            P = UniPoly.rational(
                [rng.randint(-3, 3), rng.randint(-3, 3)] + [0] * (p - 2) + [1])
            Q = UniPoly.rational([rng.randint(-3, 3)] + [0] * (q - 1) + [1])
            fast = subresultant_sequence(P, Q)
            for j in range(q):
                assert fast[j] == subresultant_det(P, Q, j)

    def test_degree_order_enforced(self):
        with pytest.raises(DegreeOrder):
            subresultant(T(), T() * T(), 0)


class TestSequenceFor:
    def test_disc_of_t2_plus_1(self):
        seq = sequence_for(T() * T() + one())
        assert seq.principal(0) == Fraction(-4)

    def test_symbolic_double_root(self):
        # (T-c)^2 with symbolic c: coefficients in Q[c]
        c = UniPoly.var()                        # the parameter c
        P = UniPoly([c * c, UniPoly.rational([0, -2]), UniPoly.rational([1])])
        seq = sequence_for(P)
        assert not seq.principal(0)

    def test_three_simple_real_roots(self):
        P = T() ** 3 - UniPoly.rational([0, 3])   # T^3 - 3T
        seq = sequence_for(P)
        for j in range(P.degree() + 1):
            assert seq.principal(j) != 0
        # oracle agreement
        for j in range(2):
            assert seq.poly(j) == subresultant_det(P, P.derivative(), j)

    def test_endpoints(self):
        P = rand_unipoly(random.Random(14), 5)
        seq = sequence_for(P)
        assert seq.poly(5) == P
        assert seq.poly(4) == P.derivative()
        assert seq.principal(5) == P.leading
        assert seq.principal(4) == 5 * P.leading

    def test_principal_is_coefficient_of_tj(self):
        rng = random.Random(15)
        for _ in range(20):
            P = rand_unipoly(rng, rng.randint(2, 6))
            seq = sequence_for(P)
            for j in range(P.degree() - 1):
                assert seq.principal(j) == seq.poly(j).coeff(j)
                assert seq.poly(j).is_zero() or seq.poly(j).degree() <= j


class TestResultant:
    def test_common_root(self):
        assert resultant(T() - one(), T() - one()) == UniPoly.rational([0]).coeff(0)

    def test_disjoint_roots(self):
        assert resultant(T() - one(), T() + one()) != 0

    def test_sqrt2_sqrt3(self):
        r = resultant(T() * T() - UniPoly.rational([2]),
                      T() * T() - UniPoly.rational([3]))
        oracle = subresultant_det(T() * T() - UniPoly.rational([2]),
                                  T() * T() - UniPoly.rational([3]), 0).coeff(0)
        assert r == oracle != 0

    def test_zero_iff_shared_root(self):
        rng = random.Random(16)
        for _ in range(60):
            a = rand_unipoly(rng, rng.randint(1, 4))
            b = rand_unipoly(rng, rng.randint(1, 4))
            share = rng.random() < 0.5
            if share:
                g = T() - UniPoly.rational([rng.randint(-3, 3)])
                a, b = a * g, b * g
            r = resultant(a, b)
            if share:
                assert r == 0
            else:
                g = a.gcd_monic(b)
                assert (r == 0) == (g.degree() >= 1)


class TestGcdBySubres:
    def test_planted_double_root(self):
        P = (T() - one()) ** 2 * (T() + UniPoly.rational([2]))
        g = gcd_by_subres(P, P.derivative())
        assert g.monic() == T() - one()

    def test_coprime(self):
        g = gcd_by_subres(T() * T() - one(), T() * T() + one())
        assert g.degree() == 0

    def test_shared_linear_factor(self):
        two, three = UniPoly.rational([2]), UniPoly.rational([3])
        a = (T() - one()) * (T() - two)
        b = (T() - one()) * (T() - three)
        assert gcd_by_subres(a, b).monic() == T() - one()

    def test_matches_euclid_on_planted_factors(self):
        rng = random.Random(17)
        for _ in range(200):
            g = rand_unipoly(rng, rng.randint(0, 3))
            a = rand_unipoly(rng, rng.randint(1, 3)) * g
            b = rand_unipoly(rng, rng.randint(1, 3)) * g
            if a.degree() < b.degree():
                a, b = b, a
            if b.degree() < 1:
                continue
            got = gcd_by_subres(a, b)
            want = a.gcd_monic(b)
            assert got.degree() == want.degree()
            assert got.monic() == want

    def test_q_divides_p(self):
        q = (T() - one()) * (T() + one())
        p = q * (T() - UniPoly.rational([3]))
        assert gcd_by_subres(p, q).monic() == q.monic()


class TestDiscriminantIdentity:
    def test_quadratic(self):
        # sres_0 = a_2 * disc, disc = b^2 - 4ac
        rng = random.Random(18)
        for _ in range(60):
            a, b, c = (Fraction(rng.randint(-6, 6)) for _ in range(3))
            if a == 0:
                continue
            P = UniPoly([c, b, a])
            seq = sequence_for(P)
            assert seq.principal(0) == a * (b * b - 4 * a * c)

    def test_cubic_product_of_root_differences(self):
        # disc = a^4 * prod_{i<j} (r_i - r_j)^2 / a^2 ... use the classical
        # formula disc = (prod of squared differences) * a^(2n-2) / a^... via
        # planted rational roots: disc(a*(T-r1)(T-r2)(T-r3))
        rng = random.Random(19)
        for _ in range(40):
            roots = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(3)]
            a = Fraction(rng.choice([1, 2, -1, 3]))
            P = UniPoly.from_roots(roots, a)
            seq = sequence_for(P)
            diffs = Fraction(1)
            for i in range(3):
                for j in range(i + 1, 3):
                    diffs *= (roots[i] - roots[j]) ** 2
            disc = a ** 4 * diffs
            assert seq.principal(0) == a * disc


class TestSpecialization:
    def test_parametric_sequence_specialises(self):
        rng = random.Random(20)
        checked = 0
        for _ in range(50):
            p = rng.randint(2, 5)
            q = rng.randint(1, p - 1)

            def rand_parametric(deg):
                while True:
                    rows = [UniPoly.rational(
                        [rng.randint(-4, 4) for _ in range(rng.randint(1, 3))])
                        for _ in range(deg + 1)]
                    if not rows[-1].is_zero():
                        return UniPoly(rows)

            P, Q = rand_parametric(p), rand_parametric(q)
            seq = subresultant_sequence(P, Q)
            c0 = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            if not P.leading.eval(c0) or not Q.leading.eval(c0):
                continue

            def spec(poly):
                return UniPoly([cc.eval(c0) if isinstance(cc, UniPoly) else cc
                                for cc in poly.coeffs])

            seq_s = subresultant_sequence(spec(P), spec(Q))
            for j in range(q):
                assert spec(seq[j]) == seq_s[j]
                checked += 1
        assert checked >= 50


def test_delta_factor():
    assert [delta(k) for k in range(6)] == [1, -1, -1, 1, 1, -1]

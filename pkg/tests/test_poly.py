import random
from fractions import Fraction

import pytest

from curvetop.poly import BiPoly, UniPoly
from curvetop.errors import NotSquarefree


def T():
    return UniPoly.var()


def rat(n, d=1):
    return Fraction(n, d)


def rand_unipoly(rng, deg, lo=-9, hi=9):
    while True:
        cs = [Fraction(rng.randint(lo, hi)) for _ in range(deg + 1)]
        if cs[-1] != 0:
            return UniPoly(cs)


class TestUniPolyBasics:
    def test_derivative_power_rule(self):
        p = T() * T() - UniPoly.rational([1])   # T^2 - 1
        assert p.derivative() == UniPoly.rational([0, 2])

    def test_eval_root(self):
        p = T() * T() - UniPoly.rational([1])
        assert p.eval(rat(1)) == 0

    def test_difference_of_squares(self):
        one = UniPoly.rational([1])
        assert (T() - one) * (T() + one) == T() * T() - one

    def test_zero_normalisation(self):
        p = UniPoly.rational([1, 2, 0, 0])
        assert p.degree() == 1
        assert UniPoly.rational([0, 0]).is_zero()

    def test_divmod_roundtrip(self):
        rng = random.Random(1)
        for _ in range(100):
            a = rand_unipoly(rng, rng.randint(0, 6))
            b = rand_unipoly(rng, rng.randint(0, 4))
            q, r = a.divmod_poly(b)
            assert q * b + r == a
            assert r.is_zero() or r.degree() < b.degree()

    def test_taylor_shift(self):
        rng = random.Random(2)
        for _ in range(50):
            p = rand_unipoly(rng, rng.randint(0, 6))
            a = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            x = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            assert p.taylor_shift(a).eval(x) == p.eval(x + a)

    def test_pseudo_rem_matches_scaled_rem(self):
        rng = random.Random(3)
        for _ in range(60):
            a = rand_unipoly(rng, rng.randint(2, 6))
            b = rand_unipoly(rng, rng.randint(1, a.degree()))
            prem = a.pseudo_rem(b)
            scale = b.leading ** (a.degree() - b.degree() + 1)
            assert prem == a.scale(scale).rem(b)


class TestSquarefree:
    def test_double_root_collapses(self):
        one = UniPoly.rational([1])
        p = (T() - one) ** 2
        assert p.squarefree_part() == T() - one

    def test_already_squarefree(self):
        p = T() * T() + UniPoly.rational([1])
        assert p.squarefree_part() == p

    def test_triple_and_simple(self):
        one = UniPoly.rational([1])
        two = UniPoly.rational([2])
        p = (T() - one) ** 3 * (T() - two)
        expected = ((T() - one) * (T() - two)).monic()
        assert p.squarefree_part() == expected

    def test_random_squarefree_has_trivial_gcd(self):
        rng = random.Random(4)
        for _ in range(80):
            p = rand_unipoly(rng, rng.randint(1, 7))
            sqf = p.squarefree_part()
            assert sqf.gcd_monic(sqf.derivative()).degree() == 0


class TestEvalCommutes:
    def test_eval_ring_homomorphism(self):
        rng = random.Random(5)
        for _ in range(500):
            a = rand_unipoly(rng, rng.randint(0, 5))
            b = rand_unipoly(rng, rng.randint(0, 5))
            x = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
            assert (a + b).eval(x) == a.eval(x) + b.eval(x)
            assert (a * b).eval(x) == a.eval(x) * b.eval(x)


def bp(text_dict):
    return BiPoly.from_dict(text_dict)


class TestBiPoly:
    def test_shear_linear(self):
        # shear(x, 1) = x + y
        p = bp({(1, 0): 1})
        assert p.shear(1) == bp({(1, 0): 1, (0, 1): 1})

    def test_identity_shear(self):
        p = bp({(0, 2): 1, (1, 0): -1})   # y^2 - x
        assert p.shear(0) == p

    def test_shear_expansion(self):
        # shear(x^2 - y, 1) = (x+y)^2 - y
        p = bp({(2, 0): 1, (0, 1): -1})
        expect = bp({(2, 0): 1, (1, 1): 2, (0, 2): 1, (0, 1): -1})
        assert p.shear(1) == expect

    def test_shear_roundtrip(self):
        rng = random.Random(6)
        for _ in range(50):
            mons = {}
            for _ in range(rng.randint(1, 8)):
                mons[(rng.randint(0, 3), rng.randint(0, 3))] = rng.randint(-5, 5)
            p = bp(mons)
            t = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            assert p.shear(t).shear(-t) == p

    def test_shear_degree_in_y_grows(self):
        p = bp({(2, 0): 1, (0, 1): -1})   # x^2 - y
        assert p.shear(1).degree_y() >= p.degree_y()

    def test_eval_point(self):
        circle = bp({(2, 0): 1, (0, 2): 1, (0, 0): -1})
        assert circle.eval_point(1, 0) == 0
        assert circle.eval_point(0, 0) == -1

    def test_content_in_y(self):
        # x*(x^2+y^2-1) has y-content x
        p = bp({(3, 0): 1, (1, 2): 1, (1, 0): -1})
        assert p.content_in_y() == UniPoly.rational([0, 1])
        prim = p.primitive_in_y()
        assert prim == bp({(2, 0): 1, (0, 2): 1, (0, 0): -1})

    def test_derivatives(self):
        p = bp({(0, 2): 1, (2, 0): 1, (0, 0): -1})
        assert p.derivative("y") == bp({(0, 1): 2})
        assert p.derivative("x") == bp({(1, 0): 2})


class TestCheckSquarefree:
    def test_raises(self):
        from curvetop.poly import check_squarefree
        p = (T() - UniPoly.rational([1])) ** 2
        with pytest.raises(NotSquarefree):
            check_squarefree(p)

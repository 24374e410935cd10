"""Unit tests for bivariate polynomials, gcds, resultants, and fractions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagwalk.bivar import (BiPoly, BiRational, RatFunc, bi_gcd, interp_x,
                            resultant_y, resultant_y_sylvester, squarefree_bi)
from diagwalk.corealg import UniPoly

coeffs = st.integers(min_value=-5, max_value=5)


@st.composite
def bipolys(draw, max_dx=2, max_dy=3):
    dx = draw(st.integers(0, max_dx))
    dy = draw(st.integers(0, max_dy))
    cols = []
    for _ in range(dy + 1):
        cols.append(UniPoly([draw(coeffs) for _ in range(dx + 1)], "x"))
    return BiPoly(cols, "x", "y")


nonzero_bipolys = bipolys().filter(lambda p: not p.is_zero())


class TestBiPolyRing:
    @given(bipolys(), bipolys(), bipolys())
    @settings(max_examples=40, deadline=None)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c

    @given(bipolys(), bipolys())
    @settings(max_examples=40, deadline=None)
    def test_eval_commutes_with_product(self, a, b):
        x0, y0 = Fraction(2, 3), Fraction(-1, 2)
        assert (a * b).eval_xy(x0, y0) == a.eval_xy(x0, y0) * b.eval_xy(x0, y0)

    @given(nonzero_bipolys, nonzero_bipolys)
    @settings(max_examples=40, deadline=None)
    def test_exact_div_inverts_product(self, a, b):
        assert (a * b).exact_div(b) == a

    def test_derivatives_commute(self):
        p = BiPoly.from_terms({(2, 3): 5, (1, 1): -2, (0, 4): 7})
        assert p.derivative_x().derivative_y() == p.derivative_y().derivative_x()

    def test_primitive_positive_is_idempotent_and_proportional(self):
        p = BiPoly.from_terms({(1, 1): Fraction(-4, 6), (0, 0): Fraction(-2, 3)})
        q = p.primitive_positive()
        assert q == q.primitive_positive()
        assert q == BiPoly.from_terms({(1, 1): 1, (0, 0): 1})


class TestBiGcd:
    @given(nonzero_bipolys, nonzero_bipolys)
    @settings(max_examples=30, deadline=None)
    def test_divides_both(self, a, b):
        g = bi_gcd(a, b)
        a.exact_div(g)
        b.exact_div(g)

    @given(nonzero_bipolys, nonzero_bipolys, nonzero_bipolys)
    @settings(max_examples=25, deadline=None)
    def test_absorbs_common_factor(self, a, b, m):
        g = bi_gcd(a * m, b * m)
        g.exact_div(m.primitive_positive())

    @given(nonzero_bipolys, nonzero_bipolys)
    @settings(max_examples=25, deadline=None)
    def test_cofactors_are_coprime(self, a, b):
        g = bi_gcd(a, b)
        g2 = bi_gcd(a.exact_div(g), b.exact_div(g))
        assert g2.is_constant()

    def test_pure_content_case(self):
        a = BiPoly.from_terms({(2, 1): 2, (2, 0): 2})   # 2x^2(y+1)
        b = BiPoly.from_terms({(2, 2): 3, (2, 0): -3})  # 3x^2(y^2-1)
        g = bi_gcd(a, b)
        assert g == BiPoly.from_terms({(2, 1): 1, (2, 0): 1})


class TestSquarefreeBi:
    def test_known_multiplicities(self):
        f1 = BiPoly.from_terms({(0, 1): 1, (1, 0): -1})       # y - x
        f2 = BiPoly.from_terms({(0, 2): 1, (1, 0): 1})        # y^2 + x
        q = f1 ** 3 * f2
        dec = squarefree_bi(q)
        assert sorted(m for _, m in dec.factors) == [1, 3]
        assert dec.recombine() == q
        star = dec.squarefree_part()
        assert bi_gcd(star, star.derivative_y()).deg_y == 0

    @given(nonzero_bipolys.filter(lambda p: p.deg_y >= 1))
    @settings(max_examples=20, deadline=None)
    def test_squarefree_part_divides(self, p):
        q = p * p
        dec = squarefree_bi(q)
        assert dec.recombine() == q


class TestResultant:
    @given(nonzero_bipolys.filter(lambda p: p.deg_y >= 1),
           nonzero_bipolys.filter(lambda p: p.deg_y >= 1))
    @settings(max_examples=25, deadline=None)
    def test_matches_sylvester_determinant(self, p, q):
        assert resultant_y(p, q) == resultant_y_sylvester(p, q)

    def test_vanishes_iff_common_factor(self):
        f = BiPoly.from_terms({(0, 1): 1, (2, 0): -1})
        a = f * BiPoly.from_terms({(0, 1): 1, (0, 0): 1})
        b = f * BiPoly.from_terms({(0, 1): 1, (1, 0): 3})
        assert resultant_y(a, b).is_zero()

    def test_linear_case_is_evaluation(self):
        # res_y(y - u(x), q) = q(x, u(x))
        u = UniPoly([1, 2], "x")
        p = BiPoly.from_ratfunc_ypoly([RatFunc(-u), RatFunc.one("x")])
        q = BiPoly.from_terms({(0, 2): 1, (1, 0): 1})
        expect = u * u + UniPoly([0, 1], "x")
        assert resultant_y(p, q) == expect


class TestBiRational:
    def test_reduction_to_lowest_terms(self):
        f = BiPoly.from_terms({(0, 1): 1, (1, 0): -1})
        g = BiPoly.from_terms({(0, 1): 1, (1, 0): 1})
        r = BiRational(f * g, f * f)
        assert r.num == g and r.den == f

    @given(nonzero_bipolys, nonzero_bipolys, nonzero_bipolys)
    @settings(max_examples=20, deadline=None)
    def test_common_factor_cancels(self, a, b, m):
        assert BiRational(a * m, b * m) == BiRational(a, b)

    def test_field_identities(self):
        x = BiRational(BiPoly.from_terms({(1, 0): 1}))
        y = BiRational(BiPoly.from_terms({(0, 1): 1}))
        one = BiRational(BiPoly.one())
        f = (x + y) / (one - x * y)
        assert f * (one - x * y) == x + y
        assert f - f == BiRational(BiPoly.zero())

    def test_derivative_quotient_rule(self):
        num = BiPoly.from_terms({(1, 1): 1, (0, 0): 1})
        den = BiPoly.from_terms({(0, 2): 1, (1, 0): -1})
        f = BiRational(num, den)
        dy = f.derivative_y()
        lhs = dy.num * (den * den)
        rhs = (num.derivative_y() * den - num * den.derivative_y()) * dy.den
        assert lhs == rhs


def test_interp_x_round_trip():
    p = BiPoly.from_terms({(2, 1): 3, (0, 2): -1, (1, 0): 5})
    nodes = [-2, -1, 0, 1, 2]
    pairs = [(x0, p.eval_x(x0)) for x0 in nodes]
    assert interp_x(pairs, "x", "y") == p

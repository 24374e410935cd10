"""Unit tests for composed sums of roots and the Psi truncation."""

import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from diagwalk.bivar import BiPoly
from diagwalk.composed import (psi_truncation, pure_composed_sum,
                               pure_composed_sum_bi)
from diagwalk.corealg import TruncSeries, UniPoly, integer_nodes
from diagwalk.errors import PreconditionError


def poly_from_roots(roots, var="y"):
    out = UniPoly.one(var)
    for r in roots:
        out = out * UniPoly([-Fraction(r), 1], var)
    return out


class TestPsiTruncation:
    def test_c2_is_half_square_minus_dilation(self):
        prec = 6
        s = TruncSeries([1, 3, -2, 5, 0, 7], prec)
        got = psi_truncation([s.dilate(m) for m in (1, 2)])
        expect = (s * s - s.dilate(2)) * Fraction(1, 2)
        assert got == expect

    def test_c3_newton_formula(self):
        prec = 7
        s = TruncSeries([2, -1, 4, 1, 3, 0, 5], prec)
        got = psi_truncation([s.dilate(m) for m in (1, 2, 3)])
        s2, s3 = s.dilate(2), s.dilate(3)
        expect = (s * s * s - s * s2 * 3 + s3 * 2) * Fraction(1, 6)
        assert got == expect

    def test_rejects_empty(self):
        with pytest.raises(PreconditionError):
            psi_truncation([])


class TestPureComposedSum:
    def test_c_equals_one_is_identity(self):
        p = poly_from_roots([1, -2, Fraction(1, 2)])
        assert pure_composed_sum(p, 1).poly == p.monic()

    def test_c_equals_degree_is_trace(self):
        p = poly_from_roots([1, 2, 5])
        res = pure_composed_sum(p, 3)
        assert res.poly == UniPoly([-8, 1], "y")

    def test_conjugate_pair(self):
        # y^2 + 1, c = 2: i + (-i) = 0
        res = pure_composed_sum(UniPoly([1, 0, 1], "y"), 2)
        assert res.poly == UniPoly([0, 1], "y")

    def test_rational_roots_match_subset_sums(self):
        roots = [1, 2, 4, -3]
        p = poly_from_roots(roots)
        for c in (1, 2, 3):
            sums = [sum(t) for t in combinations(roots, c)]
            assert pure_composed_sum(p, c).poly == poly_from_roots(sums)

    def test_multiplicity_counted(self):
        # (y-1)^2: the only 2-sum is 2
        p = poly_from_roots([1, 1])
        assert pure_composed_sum(p, 2).poly == UniPoly([-2, 1], "y")

    def test_nonmonic_input(self):
        p = poly_from_roots([Fraction(1, 2), 3]) * 4
        assert pure_composed_sum(p, 2).poly == poly_from_roots([Fraction(7, 2)])

    def test_degree_is_binomial(self):
        random.seed(3)
        for _ in range(5):
            d = random.randint(2, 6)
            c = random.randint(1, d)
            p = UniPoly([random.randint(-5, 5) for _ in range(d)] + [1], "y")
            res = pure_composed_sum(p, c)
            assert res.degree == comb(d, c)
            assert res.poly.degree == comb(d, c)
            assert res.poly.leading() == 1

    def test_rejects_bad_c(self):
        p = poly_from_roots([1, 2])
        with pytest.raises(PreconditionError):
            pure_composed_sum(p, 0)
        with pytest.raises(PreconditionError):
            pure_composed_sum(p, 3)
        with pytest.raises(PreconditionError):
            pure_composed_sum(UniPoly([5], "y"), 1)


class TestBivariate:
    def test_rational_branches(self):
        # roots y = x, 2x, x^2; pairwise sums 3x, x + x^2, 2x + x^2
        p = (BiPoly.from_terms({(0, 1): 1, (1, 0): -1})
             * BiPoly.from_terms({(0, 1): 1, (1, 0): -2})
             * BiPoly.from_terms({(0, 1): 1, (2, 0): -1}))
        expect = (BiPoly.from_terms({(0, 1): 1, (1, 0): -3})
                  * BiPoly.from_terms({(0, 1): 1, (1, 0): -1, (2, 0): -1})
                  * BiPoly.from_terms({(0, 1): 1, (1, 0): -2, (2, 0): -1}))
        assert pure_composed_sum_bi(p, 2) == expect

    def test_specialization_commutes(self):
        # evaluating the bivariate result at x0 recovers the univariate one
        # up to the a(x0)^D scaling
        random.seed(7)
        for _ in range(6):
            p = BiPoly(tuple(
                UniPoly([random.randint(-4, 4) for _ in range(3)], "x")
                for _ in range(4)), "x", "y")
            if p.deg_y < 2:
                continue
            c = 2
            out = pure_composed_sum_bi(p, c)
            bigd = comb(p.deg_y, c)
            a = p.y_coeff(p.deg_y)
            for x0 in (1, -2, 3):
                a0 = a.eval(x0)
                if a0 == 0:
                    continue
                uni = pure_composed_sum(p.eval_x(x0), c, check=False).poly
                assert out.eval_x(x0) == uni * a0 ** bigd

    def test_degree_bound(self):
        p = BiPoly.from_terms({(0, 3): 1, (2, 1): -2, (1, 0): 1})
        c = 2
        out = pure_composed_sum_bi(p, c)
        bigd = comb(p.deg_y, c)
        assert out.deg_y == bigd
        assert out.deg_x <= p.deg_x * bigd

"""Unit tests for lattice-walk counting and series expansion."""

from math import comb

import pytest

from diagwalk.bivar import BiPoly
from diagwalk.corealg import TruncSeries
from diagwalk.errors import PreconditionError
from diagwalk.walks import (StepSet, WalkTable, bench_methods, bridge_input,
                            expand_walks, meander_input, walk_counts_naive)

DYCK = StepSet([1, -1])
MOTZKIN = StepSet([1, 0, -1])


class TestStepSet:
    def test_amplitude(self):
        s = StepSet([2, 1, -2])
        assert s.u_plus == 2 and s.u_minus == 2 and s.d == 4
        assert s.gamma_at_one() == 3

    def test_rejects_one_sided(self):
        with pytest.raises(PreconditionError):
            StepSet([1, 2])
        with pytest.raises(PreconditionError):
            StepSet([])


class TestNaiveCounts:
    def test_dyck_excursions_are_catalan(self):
        table = walk_counts_naive(DYCK, 8, confined=True)
        evens = [table.excursions(2 * n) for n in range(5)]
        assert evens == [1, 1, 2, 5, 14]
        assert all(table.excursions(2 * n + 1) == 0 for n in range(4))

    def test_motzkin_excursions(self):
        table = walk_counts_naive(MOTZKIN, 5, confined=True)
        assert [table.excursions(n) for n in range(6)] == [1, 1, 2, 4, 9, 21]

    def test_length_zero_row(self):
        table = walk_counts_naive(StepSet([3, -1]), 0)
        assert table.count(0, 0) == 1

    def test_bridges_vs_binomials(self):
        table = walk_counts_naive(DYCK, 10)
        assert [table.bridges(2 * n) for n in range(6)] == \
            [comb(2 * n, n) for n in range(6)]

    def test_row_sums_are_step_powers(self):
        s = StepSet([2, 0, -1])
        table = walk_counts_naive(s, 6)
        for n in range(7):
            total = sum(table.count(n, k)
                        for k in range(-n * s.u_minus, n * s.u_plus + 1))
            assert total == 3 ** n


class TestInputs:
    def test_dyck_bridge_input(self):
        f = bridge_input(DYCK)
        # 1/(y - x(1 + y^2)), up to fraction normalization
        from diagwalk.bivar import BiRational
        expect = BiRational(
            BiPoly.one(),
            BiPoly.from_terms({(0, 1): 1, (1, 0): -1, (1, 2): -1}))
        assert f == expect

    def test_denominator_bidegree(self):
        for alts in ([1, -1], [2, 1, -2], [3, -1], [1, 0, -1]):
            s = StepSet(alts)
            f = bridge_input(s)
            assert f.den.deg_x <= 1 and f.den.deg_y <= s.d
            g = meander_input(s)
            assert g.den.deg_x <= 1 and g.den.deg_y <= s.d + 1


class TestExpandWalks:
    def test_dyck_golden(self):
        ws = expand_walks(DYCK, 6)
        assert ws.B.coeffs == [1, 0, 2, 0, 6, 0, 20]
        assert ws.E.coeffs == [1, 0, 1, 0, 2, 0, 5]
        assert ws.M.coeffs == [comb(n, n // 2) for n in range(7)]

    def test_motzkin_golden(self):
        ws = expand_walks(MOTZKIN, 6)
        assert ws.E.coeffs == [1, 1, 2, 4, 9, 21, 51]

    def test_matches_naive_aggregates(self):
        for alts in ([1, -1], [2, -1], [1, 0, -1]):
            s = StepSet(alts)
            n = 40
            ws = expand_walks(s, n)
            full = walk_counts_naive(s, n)
            conf = walk_counts_naive(s, n, confined=True)
            assert ws.B.coeffs == [full.bridges(m) for m in range(n + 1)]
            assert ws.E.coeffs == [conf.excursions(m) for m in range(n + 1)]
            assert ws.M.coeffs == [conf.meanders(m) for m in range(n + 1)]
            assert ws.A.coeffs == [full.below_zero(m) for m in range(n + 1)]

    def test_functional_identities(self):
        s = StepSet([2, -1])
        n = 60
        ws = expand_walks(s, n)
        # x E'/E = B - 1
        lhs = (TruncSeries(ws.E.derivative().coeffs[:n - 1], n - 1)
               * TruncSeries(ws.E.coeffs[:n - 1], n - 1).inverse())
        xlhs = TruncSeries([0] + lhs.coeffs, n)
        bminus1 = ws.B - TruncSeries.one(n + 1)
        assert xlhs.coeffs == bminus1.coeffs[:n]
        # -x (log((1 - x Gamma(1)) M))' = A
        gm = TruncSeries([1, -s.gamma_at_one()], n + 1) * ws.M
        dlog = (TruncSeries(gm.derivative().coeffs[:n - 1], n - 1)
                * TruncSeries(gm.coeffs[:n - 1], n - 1).inverse())
        xdlog = TruncSeries([0] + dlog.coeffs, n)
        assert [-c for c in xdlog.coeffs] == ws.A.coeffs[:n]

    def test_rejects_zero_precision(self):
        with pytest.raises(PreconditionError):
            expand_walks(DYCK, 0)


def test_bench_report_shape():
    report = bench_methods(DYCK, [20, 40])
    assert [row["N"] for row in report] == [20, 40]
    for row in report:
        assert row["naive_seconds"] >= 0 and row["fast_seconds"] >= 0

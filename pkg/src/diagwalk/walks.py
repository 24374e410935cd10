"""Counting lattice walks: bridges, excursions and meanders.

A step set is a finite set of altitude increments u, each step being
(1, u).  The full walk series W(x, y) = 1/(1 - x Gamma(y)) is rational,
so the bridge series [y^0] W and the auxiliary meander series
A = [y^0] y W/(1-y) are sums of residues; creative telescoping gives them
small linear ODEs whose recurrences expand the series in linear time per
term.  The naive counting table doubles as the oracle and the source of
initial conditions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .bivar import BiPoly, BiRational
from .corealg import Rat, TruncSeries
from .errors import PreconditionError, TelescoperNotFoundError
from .telescope import ode_to_recurrence, telescoper, unroll


class StepSet:
    """Finite set of simple steps (1, u), with at least one up and one down step."""

    __slots__ = ("altitudes", "u_minus", "u_plus")

    def __init__(self, altitudes):
        alts = frozenset(int(u) for u in altitudes)
        if not alts:
            raise PreconditionError("steps-empty", "step set is empty")
        if max(alts) < 1 or min(alts) > -1:
            raise PreconditionError(
                "steps-one-sided",
                "need at least one positive and one negative step")
        self.altitudes = alts
        self.u_minus = -min(alts)
        self.u_plus = max(alts)

    @property
    def d(self):
        """Vertical amplitude u- + u+."""
        return self.u_minus + self.u_plus

    def gamma_at_one(self):
        """Gamma(1) = number of steps."""
        return len(self.altitudes)

    def __repr__(self):
        return "StepSet(%s)" % sorted(self.altitudes)


class WalkTable:
    """Exact counts w_{n,k} of walks of length n and final altitude k.

    Confined tables count walks that never leave the upper half plane.
    Entries are plain integers; row n covers the reachable window
    [-n*u_minus, n*u_plus] (or [0, n*u_plus] when confined).
    """

    __slots__ = ("steps", "rows", "confined")

    def __init__(self, steps, rows, confined):
        self.steps = steps
        self.rows = rows
        self.confined = confined

    def count(self, n, k):
        if not 0 <= n < len(self.rows):
            raise IndexError("row %d not computed" % n)
        low = 0 if self.confined else -n * self.steps.u_minus
        idx = k - low
        row = self.rows[n]
        if 0 <= idx < len(row):
            return row[idx]
        return 0

    def bridges(self, n):
        return self.count(n, 0)

    def excursions(self, n):
        if not self.confined:
            raise PreconditionError("table-not-confined",
                                    "excursions need a confined table")
        return self.count(n, 0)

    def meanders(self, n):
        if not self.confined:
            raise PreconditionError("table-not-confined",
                                    "meanders need a confined table")
        return sum(self.rows[n])

    def below_zero(self, n):
        """Number of walks of length n ending at a strictly negative altitude."""
        if self.confined:
            raise PreconditionError("table-confined",
                                    "negative endpoints need the full table")
        low = -n * self.steps.u_minus
        return sum(self.rows[n][:max(0, -low)])


def walk_counts_naive(steps, n, confined=False):
    """Fill the counting table up to length n by the step recurrence."""
    rows = [[1]]
    alts = sorted(steps.altitudes)
    for m in range(1, n + 1):
        plow = 0 if confined else -(m - 1) * steps.u_minus
        low = 0 if confined else -m * steps.u_minus
        high = m * steps.u_plus
        prev = rows[-1]
        row = [0] * (high - low + 1)
        for k in range(low, high + 1):
            acc = 0
            for u in alts:
                j = k - u - plow
                if 0 <= j < len(prev):
                    acc += prev[j]
            row[k - low] = acc
        rows.append(row)
    return WalkTable(steps, rows, confined)


def _denominator(steps):
    """y^{u-} (1 - x Gamma(y)) as a bivariate polynomial of bidegree <= (1, d)."""
    um = steps.u_minus
    terms = {(0, um): Fraction(1)}
    for u in steps.altitudes:
        terms[(1, u + um)] = terms.get((1, u + um), Fraction(0)) - 1
    den = BiPoly.from_terms(terms)
    assert den.deg_x <= 1 and den.deg_y <= steps.d
    return den


def bridge_input(steps):
    """W(x,y)/y cleared of negative powers: y^{u- - 1} / (y^{u-}(1 - x Gamma))."""
    return BiRational(BiPoly.from_terms({(0, steps.u_minus - 1): 1}),
                      _denominator(steps))


def meander_input(steps):
    """W(x,y)/(1-y) cleared of negative powers."""
    one_minus_y = BiPoly.from_terms({(0, 0): 1, (0, 1): -1})
    return BiRational(BiPoly.from_terms({(0, steps.u_minus): 1}),
                      one_minus_y * _denominator(steps))


@dataclass(frozen=True)
class WalkSeries:
    """Expansions of equal precision: bridges B, excursions E, meanders M,
    and the auxiliary series A counting walks ending strictly below zero."""

    B: TruncSeries
    E: TruncSeries
    M: TruncSeries
    A: TruncSeries


def _check_counts(name, series):
    for c in series.coeffs:
        if c.denominator != 1 or c < 0:
            raise AssertionError("%s has a non-counting coefficient" % name)


def _naive_series(steps, n):
    """B, E, M, A to precision n + 1 straight from the counting tables."""
    full = walk_counts_naive(steps, n, confined=False)
    conf = walk_counts_naive(steps, n, confined=True)
    rng = range(n + 1)
    return WalkSeries(
        B=TruncSeries([full.bridges(m) for m in rng], n + 1),
        E=TruncSeries([conf.excursions(m) for m in rng], n + 1),
        M=TruncSeries([conf.meanders(m) for m in rng], n + 1),
        A=TruncSeries([full.below_zero(m) for m in rng], n + 1),
    )


def _series_from_telescoper(f, max_order, steps, aggregate, n):
    ode, _ = telescoper(f, max_order)
    rec = ode_to_recurrence(ode)
    need = min(max(rec.order, rec.singular_horizon), n + 1)
    table = walk_counts_naive(steps, max(need - 1, 0), confined=False)
    init = [aggregate(table, m) for m in range(need)]
    return unroll(rec, init, n + 1), ode


def expand_walks(steps, n, naive_fallback=False):
    """Expand B, E, M (and A) to precision n + 1.

    B and A come from telescoper-derived recurrences seeded with naive
    counts; E = exp(int (B-1)/x) and M = exp(-int A/x)/(1 - x Gamma(1)).
    When no telescoper is found within the expected order bound, either
    raises or, with ``naive_fallback``, falls back to the counting tables.
    """
    if n < 1:
        raise PreconditionError("walks-precision", "need n >= 1")
    try:
        d = steps.d
        bser, ode_b = _series_from_telescoper(
            bridge_input(steps), d, steps, WalkTable.bridges, n)
        assert ode_b.order <= d
        aser, _ = _series_from_telescoper(
            meander_input(steps), d + 1, steps, WalkTable.below_zero, n)
    except TelescoperNotFoundError:
        if not naive_fallback:
            raise
        return _naive_series(steps, n)
    # E = exp(int (B-1)/x); M = exp(-int A/x)/(1 - x Gamma(1))
    eser = TruncSeries(bser.coeffs[1:], n).integrate().exp()
    expo = (-TruncSeries(aser.coeffs[1:], n)).integrate().exp()
    geom = TruncSeries([1, -steps.gamma_at_one()], n + 1).inverse()
    mser = expo * geom
    out = WalkSeries(B=bser, E=eser, M=mser, A=aser)
    for name in ("B", "E", "M", "A"):
        _check_counts(name, getattr(out, name))
    return out


def bench_methods(steps, ns):
    """Wall-clock comparison of naive counting vs recurrence unrolling.

    Returns one report row per requested precision; a small-precision
    cross-check asserts both methods agree before timing.
    """
    small = min(min(ns), 12)
    assert _naive_series(steps, small).B == expand_walks(steps, small).B
    report = []
    for n in ns:
        t0 = time.perf_counter()
        _naive_series(steps, n)
        t_naive = time.perf_counter() - t0
        t0 = time.perf_counter()
        expand_walks(steps, n)
        t_fast = time.perf_counter() - t0
        report.append({"N": n, "naive_seconds": t_naive,
                       "fast_seconds": t_fast})
    return report

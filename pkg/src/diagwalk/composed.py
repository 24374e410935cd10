"""Polynomials canceling sums of c distinct roots of a polynomial.

Given P with roots a_1, ..., a_d, computes the polynomial whose roots are
all sums a_{i_1} + ... + a_{i_c} over strictly increasing index tuples.
Everything runs through truncated Newton series and the exponential
generating function of the power sums, so the cost stays polynomial in
the output degree binom(d, c).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, lcm

from .bivar import BiPoly
from .corealg import (Rat, TruncSeries, UniPoly, hadamard, integer_nodes,
                      interpolate_vectors, newton_series, poly_from_newton)
from .errors import PreconditionError


@dataclass(frozen=True)
class ComposedSumResult:
    """Monic annihilator of the c-fold root sums, of degree binom(d, c)."""

    poly: UniPoly
    c: int
    degree: int


def psi_truncation(parts):
    """[z^c] exp(sum_n (-1)^(n-1) t_n z^n / n) for series t_1, ..., t_c.

    The z-exponential is computed by the recurrence m F_m = sum k G_k F_{m-k}
    with truncated-series coefficients; returns the top z-coefficient.
    """
    c = len(parts)
    if c == 0:
        raise PreconditionError("psi-empty", "need at least one series")
    prec = parts[0].precision
    g = [TruncSeries.zero(prec)]
    for n, t in enumerate(parts, start=1):
        g.append(t * Rat((-1) ** (n - 1), n))
    f = [TruncSeries.one(prec)]
    for m in range(1, c + 1):
        acc = TruncSeries.zero(prec)
        for k in range(1, m + 1):
            acc = acc + (g[k] * k) * f[m - k]
        f.append(acc * Rat(1, m))
    return f[c]


def pure_composed_sum(p, c, check=True):
    """Annihilator of the sums of c roots of a univariate polynomial.

    The result is monic of degree binom(deg p, c); roots are counted with
    multiplicity.
    """
    d = p.degree
    if d < 1:
        raise PreconditionError("composed-constant",
                                "input polynomial must be nonconstant")
    if not 1 <= c <= d:
        raise PreconditionError("composed-c-range",
                                "need 1 <= c <= deg(p)")
    bigd = comb(d, c)
    prec = bigd + 1
    n = newton_series(p, prec)
    s = hadamard(n, TruncSeries.exponential(prec))
    top = psi_truncation([s.dilate(m) for m in range(1, c + 1)])
    nc = hadamard(top, TruncSeries.factorials(prec))
    if nc.coeffs[0] != bigd:
        raise PreconditionError("composed-inconsistent",
                                "Newton series reconstruction failed")
    poly = poly_from_newton(nc, bigd, check=check)
    return ComposedSumResult(poly=UniPoly(poly.coeffs, p.var), c=c, degree=bigd)


def pure_composed_sum_bi(p, c, yvar=None):
    """Bivariate case: a^D times the c-fold root-sum annihilator of p in y.

    Here a is the leading coefficient of p with respect to y and
    D = binom(deg_y p, c); the result is a polynomial of bidegree at most
    (deg_x(p) * D, D), computed by evaluation-interpolation in x.
    """
    dy = p.deg_y
    if dy < 1:
        raise PreconditionError("composed-constant",
                                "input must be nonconstant in y")
    if not 1 <= c <= dy:
        raise PreconditionError("composed-c-range", "need 1 <= c <= deg_y(p)")
    bigd = comb(dy, c)
    a = p.y_coeff(dy)
    dega = a.degree
    capx = p.deg_x * bigd
    count = 1 + capx
    # rows[i][j] = a(x0)^(D-j) * sigma_j(x0): the y^j coefficient of the
    # output divided by a^j, a polynomial of degree <= capx - j*deg(a)
    # (clearing a symmetric function of degree D-j in the branches needs
    # only that power of the leading coefficient)
    nodes, rows = [], []
    for x0 in integer_nodes():
        a0 = a.eval(x0)
        if a0 == 0:
            continue
        sig = pure_composed_sum(p.eval_x(x0), c, check=False).poly
        pw = [Rat(1)]
        for _ in range(bigd):
            pw.append(pw[-1] * a0)
        rows.append([sig[j] * pw[bigd - j] for j in range(bigd + 1)])
        nodes.append(x0)
        if len(nodes) == count:
            break
    # interpolate the components in groups of equal degree cap, then put
    # the a^j factors back
    cols = [None] * (bigd + 1)
    j = 0
    while j <= bigd:
        cap = capx - j * dega
        group = [j]
        while group[-1] < bigd and capx - (group[-1] + 1) * dega == cap:
            group.append(group[-1] + 1)
        take = cap + 1
        vecs = [[rows[i][jj] for jj in group] for i in range(take)]
        for jj, col in zip(group, interpolate_vectors(nodes[:take], vecs,
                                                      p.xvar)):
            cols[jj] = col
        j = group[-1] + 1
    apow = UniPoly.one(p.xvar)
    out_cols = []
    for j in range(bigd + 1):
        out_cols.append(cols[j] * apow if j else cols[j])
        if j < bigd:
            apow = apow * a
    out = BiPoly(out_cols, p.xvar, yvar or p.yvar)
    assert out.deg_y == bigd and out.deg_x <= capx
    return out

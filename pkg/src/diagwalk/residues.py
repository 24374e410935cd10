"""Annihilating polynomials for the residues of a bivariate rational function.

For f = P/Q in Q(x)(y), computes R(x, z) vanishing at every residue of f
with respect to y, in time polynomial in the pole multiplicities.  The
classical Rothstein-Trager resultant handles simple poles; higher
multiplicities are treated through a truncated Taylor expansion of the
shifted function, avoiding any symbolic precomputation that would grow
exponentially with the multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bivar import (BiPoly, BiRational, SqfDecompBi, _bareiss_det, _sylvester,
                    interp_x, squarefree_bi)
from .corealg import Rat, UniPoly, integer_nodes, squarefree_uni
from .errors import PreconditionError


@dataclass(frozen=True)
class DegreeBoundsResidues:
    """A priori bidegree bounds for the residue annihilator."""

    deg_x: int
    deg_z: int


@dataclass(frozen=True)
class ResiduePoly:
    """Residue annihilator R(x, z), optionally with its per-multiplicity factors."""

    poly: BiPoly
    bounds: DegreeBoundsResidues
    factors: tuple = None  # of (BiPoly, int), when requested


def residue_degree_bounds(num, den, sqf=None):
    """Bidegree bounds for the residue annihilator of num/den (coprime).

    deg_z is at most the y-degree of the squarefree part of the
    denominator; deg_x is bounded by
    2*dxs*(dy+1) + (2*dys-1)*dx - 2*dxs*dys, itself at most 2*dx*dy.
    """
    if sqf is None:
        sqf = squarefree_bi(den)
    star = sqf.squarefree_part()
    if sqf.content.degree > 0:
        # x-only factors live in the decomposition's content but still
        # contribute to the residues' x-degree
        cstar = squarefree_uni(sqf.content).squarefree_part()
        star = star * BiPoly.from_unipoly_x(cstar, star.yvar)
    dxs, dys = max(star.deg_x, 0), max(star.deg_y, 0)
    dx = max(num.deg_x, den.deg_x, 0)
    dy = max(num.deg_y, den.deg_y, 0)
    bx = 2 * dxs * (dy + 1) + (2 * dys - 1) * dx - 2 * dxs * dys
    return DegreeBoundsResidues(deg_x=max(min(bx, 2 * dx * dy), 0), deg_z=dys)


def _shift_coeffs(p, limit):
    """First ``limit`` t-coefficients of p(x, y+t)."""
    out = p.taylor_shift_y(limit)
    zero = BiPoly.zero(p.xvar, p.yvar)
    out += [zero] * (limit - len(out))
    return out


def _trunc_mul(a, b, limit):
    """Product of two t-coefficient lists, truncated at t^limit."""
    zero = a[0] * 0 if a else b[0] * 0
    out = [zero] * limit
    for i, ca in enumerate(a[:limit]):
        if ca:
            for j, cb in enumerate(b[:limit - i]):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
    return out


def _trunc_pow(a, n, limit):
    out = None
    base = a
    while n:
        if n & 1:
            out = base if out is None else _trunc_mul(out, base, limit)
        n >>= 1
        if n:
            base = _trunc_mul(base, base, limit)
    return out


def _resultant_with_z(a, b, qi, zvar):
    """Resultant_y(a - z*b, qi) in Q[x][z], by evaluation-interpolation.

    The Sylvester matrix keeps its generic shape at every node (the
    determinant is a polynomial in the entries), so no node is skipped.
    """
    e = max(a.deg_y, b.deg_y)
    dq = qi.deg_y
    bound = dq * max(a.deg_x, b.deg_x, 0) + e * qi.deg_x
    zero = UniPoly.zero(zvar)
    one = UniPoly.one(zvar)
    values = []
    nodes = []
    for x0 in integer_nodes():
        au = a.eval_x(x0)
        bu = b.eval_x(x0)
        fc = [UniPoly([au[j], -bu[j]], zvar) for j in range(e + 1)]
        gc = [UniPoly.constant(c, zvar) for c in qi.eval_x(x0).coeffs]
        gc += [zero] * (dq + 1 - len(gc))
        if e == 0:
            det = fc[0] ** dq
        else:
            rows = _sylvester(fc, gc, zero)
            det = _bareiss_det(rows, one, lambda u, v: u.exact_div(v))
        values.append(det)
        nodes.append(x0)
        if len(nodes) == bound + 1:
            break
    return interp_x(list(zip(nodes, values)), qi.xvar, zvar)


def algebraic_residues(num, den, zvar="z", want_factors=False,
                       squarefree_z=False):
    """Annihilating polynomial of the residues of num/den with respect to y.

    Returns a :class:`ResiduePoly` whose ``poly`` is a primitive bivariate
    polynomial in (x, zvar) vanishing at every residue of the reduced
    fraction.  ``squarefree_z`` replaces the result by its squarefree part
    in zvar; ``want_factors`` also reports the factor contributed by each
    pole multiplicity.
    """
    f = BiRational(num, den)
    if f.is_zero():
        raise PreconditionError("residues-zero", "residues of the zero function")
    p, q = f.num, f.den
    if q.deg_y < 1:
        raise PreconditionError("residues-no-poles",
                                "denominator has no poles in y")
    sqf = squarefree_bi(q)
    bounds = residue_degree_bounds(p, q, sqf)
    result = BiPoly.one(p.xvar, zvar)
    factors = []
    for qi, i in sqf.factors:
        ui = q.exact_div(qi ** i)
        nshift = _shift_coeffs(p, i)
        ushift = _shift_coeffs(ui, i)
        qshift = qi.taylor_shift_y(i + 1)
        zero = BiPoly.zero(p.xvar, p.yvar)
        v = qshift[1:i + 1]
        v += [zero] * (i - len(v))
        dser = _trunc_mul(ushift, _trunc_pow(v, i, i), i)
        d0 = dser[0]
        # fraction-free expansion: S_k = n_k / d0^(k+1)
        n = [nshift[0]]
        d0pow = [BiPoly.one(p.xvar, p.yvar)]  # d0^k
        for k in range(1, i):
            d0pow.append(d0pow[-1] * d0)
            acc = nshift[k] * d0pow[k]
            for j in range(1, k + 1):
                if dser[j]:
                    acc = acc - dser[j] * n[k - j] * d0pow[j - 1]
            n.append(acc)
        s = BiRational(n[i - 1], d0 * d0pow[i - 1])
        ri = _resultant_with_z(s.num, s.den, qi, zvar).primitive_positive()
        factors.append((ri, i))
        result = result * ri
    result = result.primitive_positive()
    if squarefree_z:
        result = squarefree_bi(result).squarefree_part().primitive_positive()
    assert result.deg_y <= bounds.deg_z
    assert result.deg_x <= bounds.deg_x
    return ResiduePoly(poly=result, bounds=bounds,
                       factors=tuple(factors) if want_factors else None)


def _complex_shift(coeffs, a):
    """Coefficients of p(a + t) for a complex a, by Horner."""
    out = [0j]
    for c in reversed(coeffs):
        # out = out*(t + a) + c
        shifted = [0j] + out
        for k in range(len(out)):
            shifted[k] += a * out[k]
        shifted[0] += complex(c)
        out = shifted
    while len(out) > 1 and abs(out[-1]) == 0:
        out.pop()
    return out


def _local_residue(pc, qc, alpha, mult):
    """Residue at a numeric simple-cluster pole alpha of multiplicity mult."""
    ps = _complex_shift(pc, alpha)
    qs = _complex_shift(qc, alpha)
    scale = max(abs(c) for c in qs)
    for j in range(mult):
        if j < len(qs) and abs(qs[j]) > 1e-6 * scale:
            raise ArithmeticError("pole multiplicity lost numerically")
    unit = qs[mult:]
    need = mult
    ps += [0j] * max(0, need - len(ps))
    ser = [0j] * need
    for k in range(need):
        acc = ps[k]
        for j in range(1, k + 1):
            if j < len(unit):
                acc -= unit[j] * ser[k - j]
        ser[k] = acc / unit[0]
    return ser[mult - 1]


def verify_residues_numeric(num, den, rpoly, xs=None, tol=1e-8):
    """Numeric oracle: check R(x0, residue) is small at sample points x0.

    Residues are recomputed independently from complex roots of the
    squarefree factors and local Laurent expansions.  Returns the largest
    normalized residual seen.
    """
    import numpy as np

    rpoly = getattr(rpoly, "poly", rpoly)
    f = BiRational(num, den)
    sqf = squarefree_bi(f.den)
    if xs is None:
        xs = [Fraction(1, 7), Fraction(-2, 11), Fraction(3, 13)]
    worst = 0.0
    rcoeffs = [(i, j, float(c)) for (i, j), c in rpoly.terms()]
    for x0 in xs:
        qu = f.den.eval_x(x0)
        pu = f.num.eval_x(x0)
        if qu.degree != f.den.deg_y:
            continue
        pc = [complex(c) for c in pu.coeffs]
        qc = [complex(c) for c in qu.coeffs]
        for qi, i in sqf.factors:
            qiu = qi.eval_x(x0)
            if qiu.degree != qi.deg_y:
                continue
            roots = np.roots([float(c) for c in reversed(qiu.coeffs)])
            for alpha in roots:
                res = _local_residue(pc, qc, complex(alpha), i)
                val = sum(c * float(x0) ** a * res ** b for a, b, c in rcoeffs)
                scale = max(abs(c * float(x0) ** a * max(1.0, abs(res)) ** b)
                            for a, b, c in rcoeffs)
                worst = max(worst, abs(val) / scale)
    if worst > tol:
        raise AssertionError("numeric residue check failed: %.3g" % worst)
    return worst

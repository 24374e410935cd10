"""Annihilating polynomials for diagonals of bivariate rational functions.

The diagonal of F = A/B is the series of equal-index coefficients
sum f_{n,n} t^n.  It equals a sum of residues of (1/y) F(t/y, y) over the
small branches of the denominator, so an annihilator comes from chaining
the residue annihilator with a composed-sum step.  A naive series
expansion provides independent certification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .bivar import BiPoly, BiRational, RatFunc, squarefree_bi
from .composed import pure_composed_sum_bi
from .corealg import Rat, TruncSeries, UniPoly, squarefree_uni
from .errors import PreconditionError
from .residues import algebraic_residues


@dataclass(frozen=True)
class DiagDegree:
    """sup{i - j} over monomials x^i y^j; drives the x -> x/y substitution."""

    value: int

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, DiagDegree):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)


@dataclass(frozen=True)
class DiagBounds:
    """A priori data for the diagonal annihilator's bidegree bound.

    The output bidegree is at most (D_x * binom(D_y, c), binom(D_y, c)).
    """

    D_x: int
    D_y: int
    c: int
    epsilon: int

    @property
    def bideg(self):
        b = comb(self.D_y, self.c) if self.c <= self.D_y else 0
        return (self.D_x * b, b)


@dataclass(frozen=True)
class DiagonalAnnihilator:
    """Primitive polynomial phi(t, D) with phi(t, Diag F) = 0."""

    phi: BiPoly
    bounds: DiagBounds
    series_check_depth: int


def ddeg(p):
    """Diagonal degree of a nonzero bivariate polynomial."""
    if p.is_zero():
        raise PreconditionError("ddeg-zero", "diagonal degree of 0")
    return DiagDegree(max(i - j for (i, j), _ in p.terms()))


def substitute_diag(p, xvar=None):
    """Write p(x/y, y) = y^(-ddeg) * p~ with p~(x, 0) != 0.

    Returns (ddeg(p), p~); the monomial x^i y^j maps to x^i y^(j-i+ddeg).
    """
    d = ddeg(p)
    terms = {(i, j - i + d.value): c for (i, j), c in p.terms()}
    return d, BiPoly.from_terms(terms, xvar or p.xvar, p.yvar)


def count_small_branches(q):
    """Number of distinct y-branches of q(t, y) = 0 tending to 0 with t.

    Read off the Newton polygon of the squarefree part: the y-valuation of
    the coefficient of t^(val_t).
    """
    if q.is_zero():
        raise PreconditionError("small-branches-zero", "zero polynomial")
    if q.deg_y < 1:
        return 0
    star = squarefree_bi(q).squarefree_part()
    vx = min(i for (i, j), _ in star.terms())
    col = [star.coeff(vx, j) for j in range(star.deg_y + 1)]
    for j, c in enumerate(col):
        if c:
            return j
    raise PreconditionError("small-branches-divisible",
                            "polynomial divisible by its first variable")


def _bivariate_squarefree_part(b):
    """Squarefree part of b as a bivariate polynomial.

    The y-squarefree decomposition parks x-only factors in its content, so
    the content's own squarefree part must be multiplied back in; dropping
    it would shrink the degree data below factors that still contribute
    residues.
    """
    if b.deg_y < 1:
        if b.deg_x < 1:
            return b
        star = squarefree_uni(b.y_coeff(0)).squarefree_part()
        return BiPoly.from_unipoly_x(star, b.yvar)
    dec = squarefree_bi(b)
    star = dec.squarefree_part()
    if dec.content.degree > 0:
        cstar = squarefree_uni(dec.content).squarefree_part()
        star = star * BiPoly.from_unipoly_x(cstar, b.yvar)
    return star


def diag_bounds(f):
    """Degree-bound data for algebraic_diagonal(f), from the input bidegrees."""
    a, b = f.num, f.den
    bstar = _bivariate_squarefree_part(b)
    dx = max(a.deg_x, b.deg_x, 0)
    dy = max(a.deg_y, b.deg_y, 0)
    dxs = max(bstar.deg_x, 0)
    dys = max(bstar.deg_y, 0)
    alpha = ddeg(b).value - ddeg(a).value - 1
    eps = 1 if alpha < 0 else 0
    big_dx = 2 * dxs * (dx - dxs + dy - dys + 1) + dx * (2 * (dxs + dys + eps) - 1)
    big_dy = dxs + dys + eps
    if b.deg_y >= 1:
        ns = count_small_branches(bstar) if not bstar.is_zero() else 0
        c = ns + ddeg(bstar).value + eps
    else:
        c = eps
    return DiagBounds(D_x=max(big_dx, 0), D_y=big_dy, c=c, epsilon=eps)


def _substituted_fraction(f):
    """G = (1/y) f(t/y, y) as a coprime fraction (p, q) in (t, y)."""
    da, an = substitute_diag(f.num, "t")
    db, bn = substitute_diag(f.den, "t")
    alpha = db.value - da.value - 1
    if alpha >= 0:
        p = an.mul_y_power(alpha)
        q = bn
    else:
        p = an
        q = bn.mul_y_power(-alpha)
    return BiRational(p, q), alpha


def _rational_residue_at_zero(p, q):
    """Residue at y = 0 of p / (y^k q') with q'(t, 0) != 0, as a RatFunc in t.

    k is the y-valuation of q; the residue is the coefficient of y^(k-1)
    in the series expansion of p / q'.
    """
    k = min(j for (i, j), _ in q.terms())
    qp = [RatFunc(q.y_coeff(j + k)) for j in range(q.deg_y - k + 1)]
    ser = []
    for m in range(k):
        acc = RatFunc(p.y_coeff(m))
        for j in range(1, m + 1):
            if j < len(qp):
                acc = acc - qp[j] * ser[m - j]
        ser.append(acc / qp[0])
    return ser[k - 1]


def shift_annihilator(phi, r):
    """Clear denominators of phi(t, D - r(t)) for a rational function r.

    The shift must have no pole at t = 0.
    """
    if isinstance(r, (int, Fraction, UniPoly)):
        r = RatFunc(r if isinstance(r, UniPoly) else UniPoly.constant(r, phi.xvar))
    if r.den.eval(0) == 0:
        raise PreconditionError("shift-pole", "shift has a pole at the origin")
    d = phi.deg_y
    num = BiPoly.from_unipoly_x(r.num, phi.yvar)
    den = BiPoly.from_unipoly_x(r.den, phi.yvar)
    yy = BiPoly.from_terms({(0, 1): 1}, phi.xvar, phi.yvar)
    lin = den * yy - num  # den*D - num
    out = BiPoly.zero(phi.xvar, phi.yvar)
    for j in range(d + 1):
        c = phi.y_coeff(j)
        if not c.is_zero():
            out = out + BiPoly.from_unipoly_x(c, phi.yvar) * lin ** j * den ** (d - j)
    return out.primitive_positive()


def _numer_normalize(p):
    """Minimal denominator clearing: strip t-content, then primitive-positive."""
    cx = p.content_x()
    if cx.degree > 0:
        p = p.exact_div(BiPoly.from_unipoly_x(cx, p.yvar))
    return p.primitive_positive()


def algebraic_diagonal(f, optimize=False, check_depth=0):
    """Annihilator phi(t, D) of the diagonal of a bivariate rational function.

    The input denominator must not vanish at the origin.  With
    ``optimize``, the rational branch y = 0 introduced when the
    denominator's diagonal degree exceeds the numerator's is split off and
    handled by a shift, lowering the output degree; the default follows
    the plain residue-plus-composed-sum pipeline.  A positive
    ``check_depth`` verifies the result against the naive diagonal series
    to that order.
    """
    if not isinstance(f, BiRational):
        f = BiRational(f)
    if f.den.eval_xy(0, 0) == 0:
        raise PreconditionError("diag-pole-origin",
                                "denominator vanishes at the origin")
    bounds = diag_bounds(f)
    if f.is_zero() or f.num.deg_y == f.num.deg_x == f.den.deg_y == f.den.deg_x == 0:
        # constant function: diagonal is the constant itself
        val = Fraction(f.num.coeff(0, 0), f.den.coeff(0, 0))
        phi = BiPoly.from_terms({(0, 1): val.denominator,
                                 (0, 0): -val.numerator}, "t", "D")
        return DiagonalAnnihilator(phi.primitive_positive(), bounds, check_depth)
    g, alpha = _substituted_fraction(f)
    p, q = g.num, g.den
    if q.deg_y < 1:
        raise PreconditionError("diag-no-branches",
                                "substituted denominator is constant in y")
    c = count_small_branches(q)
    if c == 0:
        # no small branches: the diagonal is identically zero
        phi = BiPoly.from_terms({(0, 1): 1}, "t", "D")
        return DiagonalAnnihilator(phi, bounds, check_depth)
    rp = algebraic_residues(p, q, zvar="y")
    r = rp.poly  # in (t, y)
    phi = None
    if optimize and alpha < 0:
        res0 = _rational_residue_at_zero(p, q)
        lin = BiPoly.from_ratfunc_ypoly([-res0, RatFunc.one("t")], "t", "y")
        lin = lin.primitive_positive()
        try:
            rest = r.exact_div(lin)
        except ValueError:
            rest = None
        if rest is not None:
            if c == 1:
                phi = shift_annihilator(
                    BiPoly.from_terms({(0, 1): 1}, "t", "y"), res0)
            elif rest.deg_y >= c - 1:
                phi = pure_composed_sum_bi(rest, c - 1)
                phi = shift_annihilator(phi, res0)
    if phi is None:
        if r.deg_y < c:
            raise PreconditionError("diag-degenerate",
                                    "residue annihilator degree below branch count")
        phi = pure_composed_sum_bi(r, c)
    phi = _numer_normalize(BiPoly(phi.cy, "t", "D"))
    bx, by = bounds.bideg
    assert phi.deg_y <= by and phi.deg_x <= bx
    out = DiagonalAnnihilator(phi, bounds, check_depth)
    if check_depth:
        if not certify(f, out, check_depth):
            raise AssertionError("diagonal annihilator failed the series check")
    return out


def diagonal_series_naive(f, n):
    """First n diagonal coefficients of f, by bivariate series division."""
    if not isinstance(f, BiRational):
        f = BiRational(f)
    b00 = f.den.coeff(0, 0)
    if b00 == 0:
        raise PreconditionError("diag-pole-origin",
                                "denominator vanishes at the origin")
    bterms = [((i, j), c) for (i, j), c in f.den.terms() if (i, j) != (0, 0)]
    coeffs = {}
    inv = Rat(1) / b00
    for i in range(n):
        for j in range(n):
            acc = f.num.coeff(i, j)
            for (k, l), c in bterms:
                if k <= i and l <= j:
                    acc -= c * coeffs[(i - k, j - l)]
            coeffs[(i, j)] = acc * inv
    return TruncSeries([coeffs[(m, m)] for m in range(n)], n)


def certify(f, phi, n):
    """Check phi against the naive diagonal series of f.

    True iff phi(t, series) vanishes modulo t^(n - deg_t(phi) - 1): the
    composition of a degree-bounded polynomial with an n-term series is
    only exact to that order.
    """
    poly = phi.phi if isinstance(phi, DiagonalAnnihilator) else phi
    if n <= poly.deg_x:
        raise PreconditionError("certify-depth",
                                "need n > deg_t of the annihilator")
    ser = diagonal_series_naive(f, n)
    margin = n - poly.deg_x - 1
    acc = TruncSeries.zero(n)
    power = TruncSeries.one(n)
    for j in range(poly.deg_y + 1):
        cj = poly.y_coeff(j)
        if not cj.is_zero():
            acc = acc + TruncSeries(list(cj.coeffs), n) * power
        if j < poly.deg_y:
            power = power * ser
    return all(c == 0 for c in acc.coeffs[:margin])

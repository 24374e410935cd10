"""Dense bivariate polynomials and rational functions over Q.

A :class:`BiPoly` is stored as a dense vector of UniPoly-in-x
coefficients indexed by the y-exponent, which makes the "polynomial in y
over Q[x]" view that every algorithm here takes essentially free.
Resultants with respect to y use evaluation-interpolation at integer
nodes; a fraction-free Sylvester determinant is kept as an independent
oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import _fieldpoly as fp
from .corealg import (Rat, UniPoly, as_rat, integer_nodes, interpolate,
                      interpolate_vectors)
from .errors import PreconditionError


class RatFunc:
    """Reduced fraction of univariate polynomials (a rational function).

    The denominator is kept monic and coprime to the numerator, so equality
    is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if isinstance(num, (int, Fraction)):
            num = UniPoly.constant(num, "x" if den is None else den.var)
        if den is None:
            den = UniPoly.one(num.var)
            _reduced = True
        elif isinstance(den, (int, Fraction)):
            den = UniPoly.constant(den, num.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = UniPoly.one(num.var)
            else:
                g = num.gcd(den)
                if g.degree > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                lead = den.leading()
                if lead != 1:
                    inv = Rat(1) / lead
                    num = num * inv
                    den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def one(cls, var="x"):
        return cls(UniPoly.one(var))

    @classmethod
    def zero(cls, var="x"):
        return cls(UniPoly.zero(var))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree == 0

    def as_poly(self):
        if not self.is_polynomial():
            raise ValueError("rational function is not a polynomial")
        return self.num

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, UniPoly)):
            return RatFunc(other if isinstance(other, UniPoly)
                           else UniPoly.constant(other, self.num.var))
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return RatFunc(self.num * other, self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def derivative(self):
        return RatFunc(self.num.derivative() * self.den
                       - self.num * self.den.derivative(),
                       self.den * self.den)

    def eval(self, x0):
        d = self.den.eval(x0)
        if d == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return self.num.eval(x0) / d

    def __repr__(self):
        from .printer import format_unipoly

        if self.is_polynomial():
            return "RatFunc(%s)" % format_unipoly(self.num)
        return "RatFunc((%s)/(%s))" % (format_unipoly(self.num),
                                       format_unipoly(self.den))


class BiPoly:
    """Dense bivariate polynomial over Q with variable tags (xvar, yvar)."""

    __slots__ = ("cy", "xvar", "yvar")

    def __init__(self, y_coeffs, xvar="x", yvar="y"):
        cs = [c if isinstance(c, UniPoly) else UniPoly([c] if c else [], xvar)
              for c in y_coeffs]
        cs = [UniPoly(c.coeffs, xvar) for c in cs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.cy = tuple(cs)
        self.xvar = xvar
        self.yvar = yvar

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, xvar="x", yvar="y"):
        return cls((), xvar, yvar)

    @classmethod
    def one(cls, xvar="x", yvar="y"):
        return cls((UniPoly.one(xvar),), xvar, yvar)

    @classmethod
    def constant(cls, c, xvar="x", yvar="y"):
        return cls((UniPoly.constant(c, xvar),), xvar, yvar)

    @classmethod
    def from_terms(cls, terms, xvar="x", yvar="y"):
        """Build from a {(x_exp, y_exp): coefficient} mapping."""
        if not terms:
            return cls.zero(xvar, yvar)
        dy = max(j for (_, j) in terms)
        cols = [{} for _ in range(dy + 1)]
        for (i, j), c in terms.items():
            if c:
                cols[j][i] = cols[j].get(i, Rat(0)) + as_rat(c)
        ys = []
        for col in cols:
            if col:
                dx = max(col)
                ys.append(UniPoly([col.get(i, 0) for i in range(dx + 1)], xvar))
            else:
                ys.append(UniPoly.zero(xvar))
        return cls(ys, xvar, yvar)

    @classmethod
    def from_unipoly_y(cls, p, xvar="x"):
        """Embed a univariate polynomial in y."""
        return cls([UniPoly.constant(c, xvar) for c in p.coeffs], xvar, p.var)

    @classmethod
    def from_unipoly_x(cls, p, yvar="y"):
        """Embed a univariate polynomial in x."""
        return cls((p,), p.var, yvar)

    # -- structure ----------------------------------------------------

    def is_zero(self):
        return not self.cy

    def __bool__(self):
        return bool(self.cy)

    @property
    def deg_y(self):
        return len(self.cy) - 1

    @property
    def deg_x(self):
        return max((c.degree for c in self.cy), default=-1)

    @property
    def bideg(self):
        return (self.deg_x, self.deg_y)

    def coeff(self, i, j):
        if 0 <= j <= self.deg_y:
            return self.cy[j][i]
        return Rat(0)

    def y_coeff(self, j):
        if 0 <= j <= self.deg_y:
            return self.cy[j]
        return UniPoly.zero(self.xvar)

    def terms(self):
        for j, c in enumerate(self.cy):
            for i, v in enumerate(c.coeffs):
                if v:
                    yield (i, j), v

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            if isinstance(other, (int, Fraction)):
                return self == BiPoly.constant(other, self.xvar, self.yvar)
            return NotImplemented
        return self.cy == other.cy

    def __hash__(self):
        return hash(self.cy)

    def is_constant(self):
        return self.deg_y <= 0 and self.deg_x <= 0

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.constant(other, self.xvar, self.yvar)
        if isinstance(other, UniPoly):
            if other.var == self.xvar:
                return BiPoly.from_unipoly_x(other, self.yvar)
            return BiPoly.from_unipoly_y(other, self.xvar)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.cy, other.cy
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return BiPoly(out, self.xvar, self.yvar)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly([-c for c in self.cy], self.xvar, self.yvar)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return BiPoly.zero(self.xvar, self.yvar)
            return BiPoly([c * other for c in self.cy], self.xvar, self.yvar)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.cy, other.cy
        if not a or not b:
            return BiPoly.zero(self.xvar, self.yvar)
        out = [UniPoly.zero(self.xvar) for _ in range(len(a) + len(b) - 1)]
        for i, ca in enumerate(a):
            if not ca.is_zero():
                for j, cb in enumerate(b):
                    if not cb.is_zero():
                        out[i + j] = out[i + j] + ca * cb
        return BiPoly(out, self.xvar, self.yvar)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = BiPoly.one(self.xvar, self.yvar)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def mul_y_power(self, k):
        """Multiply by yvar**k."""
        if self.is_zero():
            return self
        return BiPoly([UniPoly.zero(self.xvar)] * k + list(self.cy),
                      self.xvar, self.yvar)

    # -- evaluation / calculus ------------------------------------------

    def eval_x(self, x0):
        """Specialize x, returning a UniPoly in y."""
        return UniPoly([c.eval(x0) for c in self.cy], self.yvar)

    def eval_y(self, y0):
        """Specialize y, returning a UniPoly in x."""
        y0 = as_rat(y0)
        acc = UniPoly.zero(self.xvar)
        for c in reversed(self.cy):
            acc = acc * y0 + c
        return acc

    def eval_xy(self, x0, y0):
        return self.eval_x(x0).eval(y0)

    def derivative_y(self):
        return BiPoly([c * j for j, c in enumerate(self.cy)][1:],
                      self.xvar, self.yvar)

    def derivative_x(self):
        return BiPoly([c.derivative() for c in self.cy], self.xvar, self.yvar)

    def taylor_shift_y(self, limit=None):
        """Coefficients of t^k in p(x, y+t): the list [p, p_y/1!, p_yy/2!, ...]."""
        out = []
        cur = self
        k = 0
        while not cur.is_zero() and (limit is None or k < limit):
            out.append(cur)
            k += 1
            cur = cur.derivative_y() * Fraction(1, k)
        return out

    # -- normalization ---------------------------------------------------

    def content_scalar(self):
        """Positive rational c such that self/c has coprime integer coefficients."""
        if self.is_zero():
            return Rat(0)
        nums = []
        dens = []
        for c in self.cy:
            for v in c.coeffs:
                if v:
                    nums.append(v.numerator)
                    dens.append(v.denominator)
        return Fraction(gcd(*nums), lcm(*dens))

    def content_x(self):
        """Monic gcd in Q[x] of the y-coefficients."""
        g = UniPoly.zero(self.xvar)
        for c in self.cy:
            g = g.gcd(c)
            if g.degree == 0 and not g.is_zero():
                break
        return g

    def _lead_sign(self):
        """Sign of the first nonzero coefficient scanning (y desc, x asc)."""
        for c in reversed(self.cy):
            for v in c.coeffs:
                if v:
                    return 1 if v > 0 else -1
        return 0

    def primitive_positive(self):
        """Integer coefficients, content 1, canonical positive sign.

        The sign rule: scanning monomials by decreasing y-degree then
        increasing x-degree, the first nonzero coefficient is positive.
        """
        if self.is_zero():
            return self
        c = self.content_scalar() * self._lead_sign()
        return self * (Rat(1) / c)

    # -- conversions ------------------------------------------------------

    def to_ratfunc_ypoly(self):
        """View as a polynomial in y with RatFunc-in-x coefficients."""
        return [RatFunc(c) for c in self.cy]

    @classmethod
    def from_ratfunc_ypoly(cls, coeffs, xvar="x", yvar="y"):
        """Clear x-denominators of a Q(x)[y] polynomial; returns a BiPoly.

        The result is the input multiplied by the (monic) lcm of the
        coefficient denominators.
        """
        return cls.from_ratfunc_ypoly_scaled(coeffs, xvar, yvar)[0]

    @classmethod
    def from_ratfunc_ypoly_scaled(cls, coeffs, xvar="x", yvar="y"):
        """Like from_ratfunc_ypoly, but also returns the multiplier used."""
        den = UniPoly.one(xvar)
        for c in coeffs:
            g = den.gcd(c.den)
            den = den * c.den.exact_div(g)
        out = [c.num * den.exact_div(c.den) for c in coeffs]
        return cls(out, xvar, yvar), den

    def exact_div(self, other):
        """Exact bivariate division; raises ValueError if inexact."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        q, r = fp.fp_divmod(self.to_ratfunc_ypoly(), other.to_ratfunc_ypoly())
        if r:
            raise ValueError("inexact bivariate division")
        out = []
        for c in q:
            if not c.is_polynomial():
                raise ValueError("inexact bivariate division")
            out.append(c.num)
        return BiPoly(out, self.xvar, self.yvar)

    def __repr__(self):
        from .printer import format_bipoly

        return "BiPoly(%s)" % format_bipoly(self)


@dataclass(frozen=True)
class SqfDecompBi:
    """q = content(x) * prod Q_i^i with Q_i primitive, squarefree in y."""

    factors: tuple  # of (BiPoly, int)
    content: UniPoly  # in Q[x], possibly with a rational scalar

    def recombine(self):
        if not self.factors:
            raise ValueError("empty decomposition")
        xv, yv = self.factors[0][0].xvar, self.factors[0][0].yvar
        out = BiPoly.from_unipoly_x(self.content, yv)
        for f, m in self.factors:
            out = out * f ** m
        return out

    def squarefree_part(self):
        xv, yv = self.factors[0][0].xvar, self.factors[0][0].yvar
        out = BiPoly.one(xv, yv)
        for f, _ in self.factors:
            out = out * f
        return out


def _primitive_part_y(p):
    """Divide out the x-content and scalar content (sign kept canonical)."""
    cx = p.content_x()
    if cx.degree > 0:
        p = p.exact_div(BiPoly.from_unipoly_x(cx, p.yvar))
    c = p.content_scalar() * p._lead_sign()
    if c and c != 1:
        p = p * (Rat(1) / c)
    return p


def _divides_y(d, p):
    """Whether d divides p in Q(x)[y] (degrees make it exact over Q[x] too)."""
    rem = fp.fp_divmod(p.to_ratfunc_ypoly(), d.to_ratfunc_ypoly())[1]
    return not fp.fp_trim(rem)


def bi_gcd(a, b):
    """Primitive-positive gcd in Q[x][y], by evaluation-interpolation.

    The y-gcd is interpolated from univariate gcds at integer nodes and
    verified by trial division; unlucky nodes (where the specialized gcd
    degree jumps) are weeded out by retrying with more nodes.  This keeps
    the common coprime case at one univariate gcd per operand pair.
    """
    if a.is_zero():
        return b.primitive_positive()
    if b.is_zero():
        return a.primitive_positive()
    cont = a.content_x().gcd(b.content_x())
    if a.deg_y == 0 or b.deg_y == 0:
        return BiPoly.from_unipoly_x(cont, a.yvar).primitive_positive()
    p, q = _primitive_part_y(a), _primitive_part_y(b)
    lp, lq = _lead_y(p), _lead_y(q)
    gamma = lp.gcd(lq)
    bound = min(p.deg_x, q.deg_x) + gamma.degree + 1
    while True:
        nodes, gvals = [], []
        best = None
        for x0 in integer_nodes():
            if lp.eval(x0) == 0 or lq.eval(x0) == 0:
                continue
            g0 = p.eval_x(x0).gcd(q.eval_x(x0))
            if g0.degree == 0:
                return BiPoly.from_unipoly_x(cont, a.yvar).primitive_positive()
            if best is None or g0.degree < best:
                best, nodes, gvals = g0.degree, [], []
            if g0.degree == best:
                nodes.append(Rat(x0))
                scaled = g0 * gamma.eval(x0)
                gvals.append([scaled.coeffs[j] if j < len(scaled.coeffs)
                              else Rat(0) for j in range(best + 1)])
            if len(nodes) >= bound:
                break
        cols = interpolate_vectors(nodes, gvals, var=p.xvar)
        cand = _primitive_part_y(BiPoly(tuple(cols), p.xvar, p.yvar))
        if cand.deg_y == best and _divides_y(cand, p) and _divides_y(cand, q):
            g = cand * BiPoly.from_unipoly_x(cont, a.yvar)
            return g.primitive_positive()
        bound *= 2  # some sampled nodes were unlucky; take more


def squarefree_bi(q):
    """Squarefree decomposition in y over Q(x), content in Q[x]."""
    if q.is_zero():
        raise PreconditionError("squarefree-zero", "squarefree decomposition of 0")
    if q.deg_y < 1:
        raise PreconditionError("squarefree-y-constant",
                                "input must be nonconstant in y")
    raw, _ = fp.fp_yun(q.to_ratfunc_ypoly())
    factors = []
    prod = BiPoly.one(q.xvar, q.yvar)
    for f, m in raw:
        g = BiPoly.from_ratfunc_ypoly(f, q.xvar, q.yvar)
        cx = g.content_x()
        if cx.degree > 0:
            g = g.exact_div(BiPoly.from_unipoly_x(cx, q.yvar))
        g = g.primitive_positive()
        factors.append((g, m))
        prod = prod * g ** m
    content = q.exact_div(prod)
    if content.deg_y != 0:
        raise AssertionError("squarefree content not y-free")
    return SqfDecompBi(tuple(factors), content.y_coeff(0))


def _lead_y(p):
    return p.cy[-1]


def resultant_y(p, q, nodes=None):
    """Resultant_y of two bivariate polynomials, by evaluation-interpolation.

    Nodes 0, 1, -1, 2, -2, ... are used, skipping points where the
    y-leading coefficient of either operand vanishes.
    """
    if p.deg_y < 1 and q.deg_y < 1:
        raise PreconditionError("resultant-y-constant",
                                "at least one operand must involve y")
    if p.is_zero() or q.is_zero():
        return UniPoly.zero(p.xvar)
    bound = p.deg_x * q.deg_y + q.deg_x * p.deg_y
    lp, lq = _lead_y(p), _lead_y(q)
    used, values = [], []
    for x0 in integer_nodes():
        if lp.eval(x0) == 0 or lq.eval(x0) == 0:
            continue
        pu = p.eval_x(x0)
        qu = q.eval_x(x0)
        values.append(pu.resultant(qu))
        used.append(x0)
        if len(used) == bound + 1:
            break
    res = interpolate(used, values, p.xvar)
    assert res.degree <= bound
    return res


def _bareiss_det(matrix, one, exact_div):
    """Fraction-free determinant over an integral domain."""
    n = len(matrix)
    if n == 0:
        return one
    m = [row[:] for row in matrix]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return one * 0
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * piv - m[i][k] * m[k][j]
                m[i][j] = exact_div(num, prev)
            m[i][k] = one * 0
        prev = piv
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def _sylvester(fc, gc, zero):
    """Sylvester matrix rows from coefficient lists (index = exponent)."""
    n, m = len(fc) - 1, len(gc) - 1
    size = n + m
    rows = []
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(fc)):
            row[i + k] = c
        rows.append(row)
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(gc)):
            row[i + k] = c
        rows.append(row)
    return rows


def resultant_y_sylvester(p, q):
    """Independent resultant oracle: Bareiss determinant of the Sylvester matrix.

    Entries are UniPoly in x; no evaluation is involved.
    """
    if p.deg_y < 1 and q.deg_y < 1:
        raise PreconditionError("resultant-y-constant",
                                "at least one operand must involve y")
    if p.is_zero() or q.is_zero():
        return UniPoly.zero(p.xvar)
    if p.deg_y == 0:
        return p.y_coeff(0) ** q.deg_y
    if q.deg_y == 0:
        return q.y_coeff(0) ** p.deg_y
    rows = _sylvester(list(p.cy), list(q.cy), UniPoly.zero(p.xvar))
    return _bareiss_det(rows, UniPoly.one(p.xvar),
                        lambda a, b: a.exact_div(b))


def eval_x(p, x0):
    """Specialize a BiPoly at x = x0 (a UniPoly in y)."""
    return p.eval_x(x0)


def interp_x(values, xvar="x", yvar="y"):
    """Interpolate a BiPoly from (node, UniPoly-in-y) pairs."""
    nodes = [n for n, _ in values]
    if len(set(nodes)) != len(nodes):
        raise PreconditionError("interp-duplicate-nodes",
                                "interpolation nodes must be distinct")
    dy = max((v.degree for _, v in values), default=-1)
    vecs = [[v[j] for j in range(dy + 1)] for _, v in values]
    cols = interpolate_vectors(nodes, vecs, xvar)
    return BiPoly(cols, xvar, yvar)


class BiRational:
    """Coprime-normalized fraction of bivariate polynomials."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if isinstance(num, (int, Fraction)):
            xv = den.xvar if isinstance(den, BiPoly) else "x"
            yv = den.yvar if isinstance(den, BiPoly) else "y"
            num = BiPoly.constant(num, xv, yv)
        if den is None:
            den = BiPoly.one(num.xvar, num.yvar)
            _reduced = True
        elif isinstance(den, (int, Fraction)):
            den = BiPoly.constant(den, num.xvar, num.yvar)
        if den.is_zero():
            raise PreconditionError("zero-denominator",
                                    "rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = BiPoly.one(num.xvar, num.yvar)
            else:
                g = bi_gcd(num, den)
                if not g.is_constant() or g.content_scalar() != 1:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            c = den.content_scalar() * den._lead_sign()
            if c and c != 1:
                inv = Rat(1) / c
                num = num * inv
                den = den * inv
        self.num = num
        self.den = den

    @property
    def xvar(self):
        return self.num.xvar

    @property
    def yvar(self):
        return self.num.yvar

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, BiRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def _coerce(self, other):
        if isinstance(other, BiRational):
            return other
        if isinstance(other, (int, Fraction, BiPoly)):
            return BiRational(other if isinstance(other, BiPoly)
                              else BiPoly.constant(other, self.xvar, self.yvar))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BiRational(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return BiRational(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BiRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return BiRational(self.num * other.den, self.den * other.num)

    def derivative_x(self):
        return BiRational(self.num.derivative_x() * self.den
                          - self.num * self.den.derivative_x(),
                          self.den * self.den)

    def derivative_y(self):
        return BiRational(self.num.derivative_y() * self.den
                          - self.num * self.den.derivative_y(),
                          self.den * self.den)

    def __repr__(self):
        from .printer import format_bipoly

        return "BiRational((%s)/(%s))" % (format_bipoly(self.num),
                                          format_bipoly(self.den))


def normalize_birational(a, b):
    """Coprime canonical fraction a/b."""
    return BiRational(a, b)

"""Exact rational scalars, dense univariate polynomials and truncated series.

Everything here works over Q through :class:`fractions.Fraction`; no
floating point enters any algebraic path.  Polynomials are dense lists of
coefficients indexed by exponent, series are dense coefficient lists of a
fixed length (the precision).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import PreconditionError

Rat = Fraction


def as_rat(v):
    """Coerce an int or Fraction to Fraction."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError("cannot coerce %r to a rational" % type(v).__name__)


class UniPoly:
    """Dense univariate polynomial over Q.

    ``coeffs[k]`` is the coefficient of ``var**k``; the top coefficient is
    nonzero unless the polynomial is zero (empty tuple).
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var="y"):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, var="y"):
        return cls((), var)

    @classmethod
    def one(cls, var="y"):
        return cls((1,), var)

    @classmethod
    def constant(cls, c, var="y"):
        return cls((c,), var)

    @classmethod
    def monomial(cls, k, c=1, var="y"):
        return cls([0] * k + [c], var)

    # -- basic structure ----------------------------------------------

    @property
    def degree(self):
        """Degree, with deg 0 = -1."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ((as_rat(other),) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k <= self.degree else Rat(0)

    def leading(self):
        if not self.coeffs:
            return Rat(0)
        return self.coeffs[-1]

    def valuation(self):
        """Smallest exponent with nonzero coefficient; None for zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    # -- ring operations ----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,), self.var)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

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
                return UniPoly.zero(self.var)
            return UniPoly([c * other for c in self.coeffs], self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(self.var)
        out = [Rat(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly.one(self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other):
        """Euclidean division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        q = [Rat(0)] * max(len(r) - d, 0)
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k]
            if not c:
                continue
            f = c / lead
            q[k - d] = f
            for j in range(d + 1):
                r[k - d + j] -= f * other.coeffs[j]
        return UniPoly(q, self.var), UniPoly(r, self.var)

    def __floordiv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Rat(1) / as_rat(other))
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    # -- calculus and transforms --------------------------------------

    def derivative(self):
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def integral(self):
        """Antiderivative with zero constant term."""
        return UniPoly([Rat(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)],
                       self.var)

    def eval(self, x0):
        x0 = as_rat(x0)
        acc = Rat(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def reciprocal(self):
        """rec(P) = x^deg(P) * P(1/x): the reversed coefficient list."""
        if not self.coeffs:
            return UniPoly.zero(self.var)
        return UniPoly(list(reversed(self.coeffs)), self.var)

    def taylor_shift(self, a):
        """P(x + a), by Horner on the shifted variable."""
        a = as_rat(a)
        out = UniPoly.zero(self.var)
        shift = UniPoly((a, 1), self.var)
        for c in reversed(self.coeffs):
            out = out * shift + c
        return out

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return UniPoly([c / lead for c in self.coeffs], self.var)

    def content(self):
        """Rational content: positive c with self/c integer, coprime coefficients."""
        if self.is_zero():
            return Rat(0)
        num = gcd(*(c.numerator for c in self.coeffs)) if self.coeffs else 0
        den = lcm(*(c.denominator for c in self.coeffs))
        return Fraction(num, den)

    def primitive_positive(self):
        """Normalize to integer coefficients, content 1, positive leading coefficient."""
        if self.is_zero():
            return self
        c = self.content()
        if self.coeffs[-1] < 0:
            c = -c
        return self * (Rat(1) / c)

    # -- gcd and resultants --------------------------------------------

    def _int_coeffs(self):
        den = lcm(*(c.denominator for c in self.coeffs))
        return [int(c * den) for c in self.coeffs]

    def gcd(self, other):
        """Monic gcd; gcd(0, 0) = 0.

        Small operands go through a primitive pseudo-remainder sequence
        over the integers; large ones through modular images (Euclid mod a
        sequence of word-size primes, Chinese remaindering, trial
        division), whose cost is governed by the size of the gcd rather
        than by the remainder-sequence coefficient swell.
        """
        if self.is_zero():
            return other.monic()
        if other.is_zero():
            return self.monic()

        a, b = _int_primitive(self._int_coeffs()), \
            _int_primitive(other._int_coeffs())
        if len(a) < len(b):
            a, b = b, a
        if len(b) > 9 or max(abs(c) for c in a + b) >= 1 << 256:
            g = _int_gcd_modular(a, b)
            return UniPoly([Fraction(v) for v in g], self.var).monic()
        prim = _int_primitive
        while True:
            # integer pseudo-remainder of a by b
            lb = b[-1]
            r = list(a)
            while len(r) >= len(b):
                lr = r.pop()
                if not lr:
                    continue
                shift = len(r) - len(b) + 1
                r = [lb * c for c in r]
                for i, bv in enumerate(b[:-1]):
                    r[shift + i] -= lr * bv
            while r and not r[-1]:
                r.pop()
            if not r:
                break
            a, b = b, prim(r)
        return UniPoly([Fraction(v) for v in b], self.var).monic()

    def xgcd(self, other):
        """Extended gcd: returns (g, u, v) with g monic and u*self + v*other = g."""
        a, b = self, other
        ua, va = UniPoly.one(self.var), UniPoly.zero(self.var)
        ub, vb = UniPoly.zero(self.var), UniPoly.one(self.var)
        while not b.is_zero():
            q, r = a.divmod(b)
            a, b = b, r
            ua, ub = ub, ua - q * ub
            va, vb = vb, va - q * vb
        if a.is_zero():
            return a, ua, va
        lead = a.coeffs[-1]
        inv = Rat(1) / lead
        return a * inv, ua * inv, va * inv

    def resultant(self, other):
        """Resultant via the Euclidean product formula over Q."""
        a, b = self, other
        if a.is_zero() or b.is_zero():
            return Rat(0)
        if a.degree == 0:
            return a.coeffs[0] ** b.degree
        if b.degree == 0:
            return b.coeffs[0] ** a.degree
        sign = Rat(1)
        if a.degree < b.degree:
            if (a.degree * b.degree) % 2:
                sign = -sign
            a, b = b, a
        res = sign
        while True:
            r = a % b
            if r.is_zero():
                return Rat(0)
            if (a.degree * b.degree) % 2:
                res = -res
            res *= b.leading() ** (a.degree - r.degree)
            a, b = b, r
            if b.degree == 0:
                return res * b.coeffs[0] ** a.degree

    def rational_roots(self):
        """All rational roots (without multiplicity)."""
        if self.is_zero():
            raise PreconditionError("roots-of-zero", "zero polynomial has every root")
        p = self.primitive_positive()
        roots = []
        v = p.valuation()
        if v:
            roots.append(Rat(0))
            p = UniPoly(p.coeffs[v:], self.var)
        if p.degree == 0:
            return roots
        a0 = int(p.coeffs[0])
        an = int(p.coeffs[-1])
        for pn in _divisors(abs(a0)):
            for qn in _divisors(abs(an)):
                for cand in (Fraction(pn, qn), Fraction(-pn, qn)):
                    if cand not in roots and p.eval(cand) == 0:
                        roots.append(cand)
        return roots

    def __repr__(self):
        from .printer import format_unipoly

        return "UniPoly(%s)" % format_unipoly(self)


def _int_primitive(c):
    """Integer coefficient list divided by its (positive) content."""
    g = 0
    for v in c:
        g = gcd(g, v)
    return [v // g for v in c] if g > 1 else list(c)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n):
    """Miller-Rabin, deterministic for n < 3.3e24 with the bases above."""
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes_from(start):
    n = start | 1
    while True:
        if _is_prime(n):
            yield n
        n += 2


def _mod_rem(a, b, p):
    """Remainder of two coefficient lists modulo p; b nonzero, trimmed."""
    r = list(a)
    dv = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    for i in range(len(r) - 1, dv - 1, -1):
        c = r[i]
        if c:
            q = c * inv % p
            off = i - dv
            for j in range(dv):
                r[off + j] = (r[off + j] - q * b[j]) % p
    del r[dv:]
    while r and not r[-1]:
        r.pop()
    return r


def _mod_gcd_image(a, b, p):
    """Monic gcd modulo prime p of two integer coefficient lists."""
    a = [c % p for c in a]
    b = [c % p for c in b]
    while a and not a[-1]:
        a.pop()
    while b and not b[-1]:
        b.pop()
    while b:
        a, b = b, _mod_rem(a, b, p)
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _int_divides(d, a):
    """Exact divisibility in Z[x] of primitive coefficient lists."""
    if len(d) > len(a):
        return False
    r = list(a)
    dl = d[-1]
    dv = len(d) - 1
    for i in range(len(r) - 1, dv - 1, -1):
        c = r[i]
        if c:
            if c % dl:
                return False
            q = c // dl
            off = i - dv
            for j in range(dv):
                r[off + j] -= q * d[j]
            r[i] = 0
    return not any(r[:dv])


def _int_gcd_modular(a, b):
    """Primitive gcd in Z[x] of two primitive integer coefficient lists.

    Monic gcd images modulo word-size primes are scaled to the leading
    coefficient gcd, combined by Chinese remaindering with symmetric
    lifting, and confirmed by trial division once two consecutive primes
    produce the same candidate.  Primes whose image degree exceeds the
    smallest seen are unlucky and discarded; a degree-zero image proves
    coprimality immediately.
    """
    lc = gcd(a[-1], b[-1])
    best = None
    crt, mod, prev = None, 0, None
    for p in _primes_from(1 << 62):
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        img = _mod_gcd_image(a, b, p)
        d = len(img) - 1
        if d == 0:
            return [1]
        scale = lc % p
        img = [c * scale % p for c in img]
        if best is None or d < best:
            best, crt, mod, prev = d, img, p, None
        elif d > best:
            continue
        else:
            inv = pow(mod % p, p - 2, p)
            newmod = mod * p
            crt = [(c + ((ci - c % p) * inv % p) * mod) % newmod
                   for c, ci in zip(crt, img)]
            mod = newmod
        half = mod // 2
        cand = [c - mod if c > half else c for c in crt]
        cand = _int_primitive(cand)
        if cand[-1] < 0:
            cand = [-c for c in cand]
        if cand == prev and _int_divides(cand, a) and _int_divides(cand, b):
            return cand
        prev = cand


def _divisors(n):
    if n == 0:
        return []
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


@dataclass(frozen=True)
class SqfDecompUni:
    """Squarefree decomposition q = content * prod Q_i^i with Q_i squarefree."""

    factors: tuple  # of (UniPoly, int), multiplicities strictly increasing
    content: Fraction

    def recombine(self):
        var = self.factors[0][0].var if self.factors else "y"
        out = UniPoly.constant(self.content, var)
        for f, m in self.factors:
            out = out * f ** m
        return out

    def squarefree_part(self):
        var = self.factors[0][0].var if self.factors else "y"
        out = UniPoly.one(var)
        for f, _ in self.factors:
            out = out * f
        return out


def poly_gcd(a, b):
    """Monic gcd of two univariate polynomials."""
    return a.gcd(b)


def squarefree_uni(q):
    """Squarefree decomposition of a nonzero polynomial, by Yun's algorithm."""
    if q.is_zero():
        raise PreconditionError("squarefree-zero", "squarefree decomposition of 0")
    lead = q.leading()
    f = q.monic()
    fp = f.derivative()
    g = f.gcd(fp)
    factors = []
    if g.degree == 0:
        if f.degree > 0:
            factors.append((f, 1))
        return SqfDecompUni(tuple(factors), lead)
    c = f.exact_div(g)
    d = fp.exact_div(g) - c.derivative()
    i = 1
    while c.degree > 0:
        p = c.gcd(d)
        c = c.exact_div(p)
        d = d.exact_div(p) - c.derivative()
        if p.degree > 0:
            factors.append((p, i))
        i += 1
    return SqfDecompUni(tuple(factors), lead)


def reciprocal(p):
    """rec(P) = x^deg(P) P(1/x)."""
    return p.reciprocal()


class TruncSeries:
    """Truncated power series over Q: exactly ``precision`` coefficients."""

    __slots__ = ("coeffs", "precision")

    def __init__(self, coeffs, precision=None):
        cs = [as_rat(c) for c in coeffs]
        if precision is None:
            precision = len(cs)
        if len(cs) < precision:
            cs += [Rat(0)] * (precision - len(cs))
        else:
            cs = cs[:precision]
        self.coeffs = cs
        self.precision = precision

    @classmethod
    def zero(cls, precision):
        return cls([], precision)

    @classmethod
    def one(cls, precision):
        return cls([1], precision)

    @classmethod
    def exponential(cls, precision):
        """exp(x) = sum x^n / n!."""
        cs = [Rat(1)]
        for n in range(1, precision):
            cs.append(cs[-1] / n)
        return cls(cs, precision)

    @classmethod
    def factorials(cls, precision):
        """sum n! x^n."""
        cs = [Rat(1)]
        for n in range(1, precision):
            cs.append(cs[-1] * n)
        return cls(cs, precision)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.precision == other.precision and self.coeffs == other.coeffs

    def __getitem__(self, k):
        return self.coeffs[k]

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def _prec(self, other):
        return min(self.precision, other.precision)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            out = list(self.coeffs)
            out[0] += other
            return TruncSeries(out, self.precision)
        n = self._prec(other)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.precision)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncSeries([c * other for c in self.coeffs], self.precision)
        n = self._prec(other)
        out = [Rat(0)] * n
        for i, ca in enumerate(self.coeffs[:n]):
            if ca:
                for j in range(n - i):
                    cb = other.coeffs[j]
                    if cb:
                        out[i + j] += ca * cb
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def truncate(self, precision):
        return TruncSeries(self.coeffs, precision)

    def derivative(self):
        n = self.precision
        return TruncSeries([i * self.coeffs[i] for i in range(1, n)],
                           max(n - 1, 0))

    def integrate(self):
        """Antiderivative with zero constant term, precision raised by one."""
        return TruncSeries([Rat(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)],
                           self.precision + 1)

    def dilate(self, m):
        """f(m*x)."""
        out = []
        p = Rat(1)
        for c in self.coeffs:
            out.append(c * p)
            p *= m
        return TruncSeries(out, self.precision)

    def inverse(self):
        if self.coeffs[0] == 0:
            raise PreconditionError("inv-constant-zero",
                                    "series inverse needs f(0) != 0")
        n = self.precision
        inv0 = Rat(1) / self.coeffs[0]
        out = [inv0] + [Rat(0)] * (n - 1)
        for k in range(1, n):
            acc = Rat(0)
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    acc += self.coeffs[j] * out[k - j]
            out[k] = -inv0 * acc
        return TruncSeries(out, n)

    def exp(self):
        if self.coeffs[0] != 0:
            raise PreconditionError("exp-constant-nonzero",
                                    "series exp needs f(0) = 0")
        n = self.precision
        out = [Rat(1)] + [Rat(0)] * (n - 1)
        # g' = f' g  =>  n g_n = sum_{k=1}^{n} k f_k g_{n-k}
        for m in range(1, n):
            acc = Rat(0)
            for k in range(1, m + 1):
                if self.coeffs[k]:
                    acc += k * self.coeffs[k] * out[m - k]
            out[m] = acc / m
        return TruncSeries(out, n)

    def log(self):
        if self.coeffs[0] != 1:
            raise PreconditionError("log-constant-not-one",
                                    "series log needs f(0) = 1")
        return (self.derivative() * self.inverse().truncate(self.precision - 1)
                ).integrate().truncate(self.precision)


def series_inv(f):
    return f.inverse()


def series_exp(f):
    return f.exp()


def series_log(f):
    return f.log()


def series_integrate(f):
    return f.integrate()


def hadamard(a, b):
    """Coefficientwise product; both series must share the precision."""
    if a.precision != b.precision:
        raise PreconditionError("hadamard-precision",
                                "Hadamard product needs equal precisions")
    return TruncSeries([x * y for x, y in zip(a.coeffs, b.coeffs)], a.precision)


def newton_series(p, n):
    """Generating series of the power sums of the roots of p, to precision n."""
    if p.is_zero():
        raise PreconditionError("newton-zero", "Newton series of 0")
    dp = p.derivative()
    num = TruncSeries([dp[p.degree - 1 - k] for k in range(min(n, p.degree))], n)
    den = TruncSeries([p[p.degree - k] for k in range(min(n, p.degree + 1))], n)
    return num * den.inverse()


def poly_from_newton(s, d, check=True):
    """Reconstruct the monic degree-d polynomial with Newton series s."""
    if s.precision < d + 1:
        raise PreconditionError("newton-precision",
                                "need at least d+1 power sums")
    if s.coeffs[0] != d:
        raise PreconditionError("newton-inconsistent",
                                "power sum of order 0 must equal the degree")
    # rec(P) = exp(int (d - N)/y dy), truncated at y^{d+1}
    quo = TruncSeries([-s.coeffs[k + 1] for k in range(d)], d)
    e = quo.integrate().exp()  # precision d+1
    p = UniPoly([e.coeffs[d - k] for k in range(d + 1)], "y")
    if check and newton_series(p, d + 1) != s.truncate(d + 1):
        raise PreconditionError("newton-inconsistent",
                                "series is not the Newton series of a monic polynomial")
    return p


def interpolation_basis(nodes):
    """Shared Lagrange data: (master polynomial quotients q_i, weights w_i).

    q_i = prod_{j != i} (x - x_j) and w_i = 1/q_i(x_i); interpolation of
    values v_i is sum v_i w_i q_i, in O(n^2) coefficient operations total.
    """
    nodes = [as_rat(x) for x in nodes]
    master = [Rat(1)]
    for x0 in nodes:
        # multiply by (x - x0)
        master = [Rat(0)] + master
        for k in range(len(master) - 1):
            master[k] -= x0 * master[k + 1]
    quotients = []
    weights = []
    n = len(nodes)
    for x0 in nodes:
        # synthetic division of master by (x - x0)
        q = [Rat(0)] * n
        acc = master[n]
        for k in range(n - 1, -1, -1):
            q[k] = acc
            acc = master[k] + x0 * acc
        quotients.append(q)
        val = Rat(0)
        for c in reversed(q):
            val = val * x0 + c
        weights.append(Rat(1) / val)
    return quotients, weights


def _interpolation_basis_int(nodes):
    """Integer variant of the Lagrange data for integer nodes.

    Returns (quotients, denominators) with q_i = prod_{j != i} (x - x_j)
    as integer coefficient lists and den_i = q_i(x_i); all-arithmetic is on
    plain ints, which avoids rational normalization entirely.
    """
    master = [1]
    for x0 in nodes:
        master = [0] + master
        for k in range(len(master) - 1):
            master[k] -= x0 * master[k + 1]
    quotients, dens = [], []
    n = len(nodes)
    for x0 in nodes:
        q = [0] * n
        acc = master[n]
        for k in range(n - 1, -1, -1):
            q[k] = acc
            acc = master[k] + x0 * acc
        quotients.append(q)
        val = 0
        for c in reversed(q):
            val = val * x0 + c
        dens.append(val)
    return quotients, dens


def interpolate(nodes, values, var="x"):
    """Exact polynomial through the given (pairwise distinct) nodes."""
    return interpolate_vectors(nodes, [[v] for v in values], var)[0]


def _interpolate_vectors_rational(nodes, value_vectors, var):
    quotients, weights = interpolation_basis(nodes)
    n = len(nodes)
    ncomp = len(value_vectors[0]) if value_vectors else 0
    out = [[Rat(0)] * n for _ in range(ncomp)]
    for q, w, vec in zip(quotients, weights, value_vectors):
        for c in range(ncomp):
            f = as_rat(vec[c]) * w
            if f:
                row = out[c]
                for k in range(n):
                    if q[k]:
                        row[k] += f * q[k]
    return [UniPoly(row, var) for row in out]


def interpolate_vectors(nodes, value_vectors, var="x"):
    """Interpolate several components at once, sharing the Lagrange basis.

    value_vectors[i] is the vector of component values at nodes[i]; returns
    one UniPoly per component.  Integer nodes take a pure-integer path
    (values scaled by their common denominator, one division at the end),
    which avoids per-operation rational normalization.
    """
    if len(set(nodes)) != len(nodes):
        raise PreconditionError("interp-duplicate-nodes",
                                "interpolation nodes must be distinct")
    nodes = [as_rat(x) for x in nodes]
    if any(x.denominator != 1 for x in nodes):
        return _interpolate_vectors_rational(nodes, value_vectors, var)
    qint, dens = _interpolation_basis_int([int(x) for x in nodes])
    n = len(nodes)
    ncomp = len(value_vectors[0]) if value_vectors else 0
    # clear the value denominators once
    vden = 1
    for vec in value_vectors:
        for v in vec:
            vden = lcm(vden, as_rat(v).denominator)
    wl = 1
    for d in dens:
        wl = lcm(wl, abs(d))
    out = [[0] * n for _ in range(ncomp)]
    for q, d, vec in zip(qint, dens, value_vectors):
        m = wl // d
        for c in range(ncomp):
            v = as_rat(vec[c])
            f = int(v * vden) * m
            if f:
                row = out[c]
                for k in range(n):
                    if q[k]:
                        row[k] += f * q[k]
    scale = Fraction(1, vden * wl)
    return [UniPoly([c * scale for c in row], var) for row in out]


def integer_nodes():
    """0, 1, -1, 2, -2, ... — the standard evaluation node stream."""
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1

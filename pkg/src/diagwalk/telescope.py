"""Creative telescoping for bivariate rational functions.

Hermite reduction with respect to y splits F into an exact derivative and
a residual with squarefree denominator.  A telescoper is a differential
operator L = sum a_i(x) d/dx^i with L(F) = d/dy(certificate); it is found
by reducing each x-derivative of F and eliminating the residuals over
Q(x).  The resulting linear ODE converts to a P-recursive recurrence that
expands power-series solutions in linear time per term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import _fieldpoly as fp
from .bivar import BiPoly, BiRational, RatFunc
from .corealg import Rat, TruncSeries, UniPoly
from .errors import PreconditionError, TelescoperNotFoundError


@dataclass(frozen=True)
class HermiteForm:
    """F = d/dy(integrable_part) + residual_numer/residual_denom exactly.

    The residual denominator is squarefree in y (times a possible
    x-content absorbed from clearing coefficients); the residual numerator
    has smaller y-degree.
    """

    integrable_part: BiRational
    residual_numer: BiPoly
    residual_denom: BiPoly


@dataclass(frozen=True)
class LinODE:
    """Operator sum coeffs[i](x) * d/dx^i, coeffs[-1] nonzero, primitive vector."""

    order: int
    coeffs: tuple  # of UniPoly in x


@dataclass(frozen=True)
class LinRec:
    """Recurrence sum coeffs[k](n) * u_{n+k} = 0 for n >= 0.

    ``singular_horizon`` is the number of leading terms that cannot be
    produced by the recurrence itself (indices at or below a zero of the
    leading coefficient, in computed-term space).
    """

    order: int
    coeffs: tuple  # of UniPoly in n
    singular_horizon: int


def _fp_fraction_to_birational(num, den, xvar, yvar):
    """Fraction of RatFunc-coefficient y-polynomials, as a BiRational.

    The cleared polynomials are reduced by the bivariate gcd.
    """
    num = fp.fp_trim(list(num))
    if not num:
        return BiRational(BiPoly.zero(xvar, yvar))
    bn, sn = BiPoly.from_ratfunc_ypoly_scaled(num, xvar, yvar)
    bd, sd = BiPoly.from_ratfunc_ypoly_scaled(den, xvar, yvar)
    return BiRational(bn * BiPoly.from_unipoly_x(sd, yvar),
                      bd * BiPoly.from_unipoly_x(sn, yvar))


def hermite_reduce(f, check=True):
    """Hermite reduction of f with respect to y.

    Splits f = d/dy(g) + a/q with q squarefree in y and deg_y a < deg_y q;
    the residual carries exactly the residues of f.
    """
    if not isinstance(f, BiRational):
        f = BiRational(f)
    xvar, yvar = f.xvar, f.yvar
    if f.den.deg_y < 1:
        raise PreconditionError("hermite-y-constant",
                                "denominator must involve y")
    one = RatFunc.one(xvar)
    num = f.num.to_ratfunc_ypoly()
    den = f.den.to_ratfunc_ypoly()
    g = BiRational(BiPoly.zero(xvar, yvar))
    quo, rem = fp.fp_divmod(num, den)
    if quo:
        # the y-polynomial part integrates exactly
        integ = [one * 0] + [c * Fraction(1, k + 1) for k, c in enumerate(quo)]
        g = g + _fp_fraction_to_birational(integ, [one], xvar, yvar)
    factors, lead = fp.fp_yun(den)
    rem = fp.fp_scale(rem, one / lead)
    residual = []  # pairs (numerator, squarefree factor)
    for di, mult in factors:
        cof = [one]
        for dj, mj in factors:
            if dj is not di:
                cof = fp.fp_mul(cof, _fp_pow(dj, mj))
        # partial fraction: component = rem * cof^{-1} mod di^mult
        dim = _fp_pow(di, mult)
        _, s, _ = fp.fp_xgcd(cof, dim, one)
        a = fp.fp_divmod(fp.fp_mul(rem, s), dim)[1]
        dip = fp.fp_deriv(di)
        _, si, ti = fp.fp_xgcd(di, dip, one)
        k = mult
        while k > 1:
            # a/di^k = d/dy(-v/((k-1) di^(k-1))) + (u + v'/(k-1))/di^(k-1)
            v = fp.fp_divmod(fp.fp_mul(a, ti), di)[1]
            u = fp.fp_exact_div(fp.fp_sub(a, fp.fp_mul(v, dip)), di)
            g = g + _fp_fraction_to_birational(
                fp.fp_scale(v, one * Fraction(-1, k - 1)),
                _fp_pow(di, k - 1), xvar, yvar)
            a = fp.fp_add(u, fp.fp_scale(fp.fp_deriv(v), one * Fraction(1, k - 1)))
            k -= 1
        a = fp.fp_divmod(a, di)[1]
        residual.append((a, di))
    # combine the simple-pole parts over the product of the factors
    rnum = []
    rden = [one]
    for _, di in residual:
        rden = fp.fp_mul(rden, di)
    for a, di in residual:
        cof = fp.fp_exact_div(rden, di)
        rnum = fp.fp_add(rnum, fp.fp_mul(a, cof))
    bn, sn = BiPoly.from_ratfunc_ypoly_scaled(rnum, xvar, yvar)
    bd, sd = BiPoly.from_ratfunc_ypoly_scaled(rden, xvar, yvar)
    rn = bn * BiPoly.from_unipoly_x(sd, yvar)
    rd = bd * BiPoly.from_unipoly_x(sn, yvar)
    if check:
        back = g.derivative_y() + BiRational(rn, rd)
        if not (back - f).is_zero():
            raise AssertionError("Hermite identity failed")
    return HermiteForm(integrable_part=g, residual_numer=rn, residual_denom=rd)


def _fp_pow(a, n):
    out = [a[-1] / a[-1]] if a else []
    base = a
    while n:
        if n & 1:
            out = fp.fp_mul(out, base)
        base = fp.fp_mul(base, base)
        n >>= 1
    return out


def _canonical_residual(rn, rd, q, one):
    """Numerator a with rn/rd = a/q, q the monic squarefree denominator."""
    if rn.is_zero():
        return []
    rn_fp = rn.to_ratfunc_ypoly()
    rd_fp = rd.to_ratfunc_ypoly()
    lead = rd_fp[-1]
    cof = fp.fp_exact_div(q, fp.fp_monic(rd_fp))
    return fp.fp_scale(fp.fp_mul(rn_fp, cof), one / lead)


def _fp_deriv_x(a):
    """Coefficient-wise x-derivative of a y-polynomial over Q(x)."""
    return fp.fp_trim([c.derivative() for c in a])


def _kernel_last_one(rows):
    """Solve sum c_i rows[i] = 0 with c[-1] = 1, or return None.

    rows are equal-length vectors of RatFunc; classic elimination over the
    fraction field.
    """
    m = len(rows)
    width = len(rows[0])
    # transpose: equations indexed by component, unknowns c_0..c_{m-2}, rhs -rows[-1]
    a = [[rows[i][j] for i in range(m - 1)] + [-rows[m - 1][j]]
         for j in range(width)]
    ncols = m - 1
    pivots = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, width):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = RatFunc.one() / a[r][col]
        a[r] = [v * inv for v in a[r]]
        for i in range(width):
            if i != r and a[i][col]:
                factor = a[i][col]
                a[i] = [vi - factor * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    for i in range(r, width):
        if a[i][ncols]:
            return None  # inconsistent: no kernel vector with c[-1] = 1
    sol = [RatFunc.zero()] * ncols
    for row, col in enumerate(pivots):
        sol[col] = a[row][ncols]
    return sol + [RatFunc.one()]


def _clear_vector(cs):
    """Scale a RatFunc vector to a primitive integer-coefficient UniPoly vector."""
    den = UniPoly.one(cs[0].num.var)
    for c in cs:
        g = den.gcd(c.den)
        den = den * c.den.exact_div(g)
    polys = [c.num * den.exact_div(c.den) for c in cs]
    g = UniPoly.zero(den.var)
    for p in polys:
        g = g.gcd(p)
    if g.degree > 0:
        polys = [p.exact_div(g) for p in polys]
    nums, dens = [], []
    for p in polys:
        for v in p.coeffs:
            if v:
                nums.append(v.numerator)
                dens.append(v.denominator)
    scale = Fraction(lcm(*dens), gcd(*nums))
    if polys[-1].leading() < 0:
        scale = -scale
    return [p * scale for p in polys]


def telescoper(f, max_order, check=True):
    """Minimal-order telescoper of f with respect to y, with its certificate.

    Searches orders r = 0, 1, ..., max_order for polynomials a_i(x), not
    all zero, with sum a_i(x) (d/dx)^i f = d/dy(certificate); the identity
    is verified exactly before returning.  Raises
    :class:`TelescoperNotFoundError` when no order works.
    """
    if not isinstance(f, BiRational):
        f = BiRational(f)
    if f.den.deg_y < 1:
        raise PreconditionError("telescoper-y-constant",
                                "denominator must involve y")
    xvar, yvar = f.xvar, f.yvar
    one = RatFunc.one(xvar)
    # monic squarefree part q of the denominator over Q(x); every reduced
    # residual lives in Q(x)[y]/(q)
    den_fp = f.den.to_ratfunc_ypoly()
    q = fp.fp_monic(fp.fp_exact_div(
        den_fp, fp.fp_gcd(den_fp, fp.fp_deriv(den_fp))))
    qy = fp.fp_deriv(q)
    qx = _fp_deriv_x(q)
    _, _, qy_inv = fp.fp_xgcd(q, qy, one)  # inverse of q' modulo q
    width = fp.fp_deg(q)
    form0 = hermite_reduce(f, check=check)
    a = _canonical_residual(form0.residual_numer, form0.residual_denom,
                            q, one)
    residuals = [a]  # d^r f/dx^r = d/dy(G_r) + residuals[r]/q
    vees = []  # vees[j] = v with G_{j+1} = d/dx G_j - v/q
    vectors = []
    for r in range(max_order + 1):
        if r > 0:
            # d/dx(a/q) = n/q^2; one multiplicity-reduction step brings it
            # back to the canonical a'/q form, all over Q(x)[y]
            a = residuals[r - 1]
            n = fp.fp_sub(fp.fp_mul(_fp_deriv_x(a), q), fp.fp_mul(a, qx))
            if not n:
                residuals.append([])
                vees.append([])
            else:
                v = fp.fp_divmod(fp.fp_mul(n, qy_inv), q)[1]
                u = fp.fp_exact_div(fp.fp_sub(n, fp.fp_mul(v, qy)), q)
                residuals.append(
                    fp.fp_divmod(fp.fp_add(u, fp.fp_deriv(v)), q)[1])
                vees.append(v)
        cur = residuals[r]
        vectors.append([cur[j] if j < len(cur) else RatFunc.zero(xvar)
                        for j in range(width)])
        if not cur:
            sol = [RatFunc.zero(xvar)] * r + [one]
        else:
            sol = _kernel_last_one(vectors) if r > 0 else None
        if sol is None:
            continue
        coeffs = _clear_vector(sol)
        cert = _assemble_certificate(coeffs, form0.integrable_part, vees,
                                     q, qx, xvar, yvar)
        ode = LinODE(order=r, coeffs=tuple(coeffs))
        if check:
            _verify_telescoper(f, coeffs, cert)
        return ode, cert
    raise TelescoperNotFoundError(
        "no telescoper of order <= %d" % max_order)


def _assemble_certificate(coeffs, g0, vees, q, qx, xvar, yvar):
    """Certificate sum_i coeffs[i] G_i with G_i = d^i/dx^i G_0 - sum parts.

    G_{j} = d/dx G_{j-1} - vees[j-1]/q, so
    G_i = d^i/dx^i G_0 - sum_{j<=i} d^{i-j}/dx^{i-j} (vees[j-1]/q).
    Derivatives are taken without gcd reduction: d/dx (n/q^k) =
    (n_x q - k n q_x)/q^{k+1}.
    """
    r = len(coeffs) - 1
    num = []
    den = [RatFunc.one(xvar)]
    # the d^i/dx^i G_0 part, over powers of the fixed denominator of G_0
    if not g0.is_zero():
        m = g0.num.to_ratfunc_ypoly()
        dd = g0.den.to_ratfunc_ypoly()
        ddx = _fp_deriv_x(dd)
        for i in range(r + 1):
            if coeffs[i]:
                num = fp.fp_add(num, fp.fp_scale(
                    fp.fp_mul(m, _fp_pow(dd, r - i)), RatFunc(coeffs[i])))
            if i < r:
                m = fp.fp_sub(fp.fp_mul(_fp_deriv_x(m), dd),
                              fp.fp_scale(fp.fp_mul(m, ddx),
                                          RatFunc(UniPoly.constant(i + 1,
                                                                   xvar))))
        den = _fp_pow(dd, r + 1)
    # the v/q chains, over powers of q
    if r > 0:
        total = []  # total[k] = numerator over q^{k+1}
        for j in range(1, r + 1):
            chain = [-c for c in vees[j - 1]]
            for s in range(r - j + 1):
                i = j + s
                if coeffs[i]:
                    w = fp.fp_scale(chain, RatFunc(coeffs[i]))
                    while len(total) <= s:
                        total.append([])
                    total[s] = fp.fp_add(total[s], w)
                if s < r - j:
                    chain = fp.fp_sub(
                        fp.fp_mul(_fp_deriv_x(chain), q),
                        fp.fp_scale(fp.fp_mul(chain, qx),
                                    RatFunc(UniPoly.constant(s + 1, xvar))))
        acc = []
        for k in range(len(total)):
            acc = fp.fp_add(fp.fp_mul(acc, q), total[k])
        if acc:
            qm = _fp_pow(q, len(total))
            num = fp.fp_add(fp.fp_mul(num, qm), fp.fp_mul(acc, den))
            den = fp.fp_mul(den, qm)
    return _fp_fraction_to_birational(num, den, xvar, yvar)


def _verify_telescoper(f, coeffs, cert):
    """Exact check of sum a_i d^i f/dx^i = d/dy(certificate), gcd-free.

    The x-derivatives are kept unreduced over powers of the denominator and
    the identity is verified by cross-multiplication.
    """
    q = f.den
    qx = q.derivative_x()
    order = len(coeffs) - 1
    nums = [f.num]
    for i in range(order):
        nums.append(nums[-1].derivative_x() * q - (i + 1) * nums[-1] * qx)
    lhs = BiPoly.zero(f.xvar, f.yvar)
    qpow = BiPoly.one(f.xvar, f.yvar)
    for i in range(order, -1, -1):
        if coeffs[i]:
            lhs = lhs + BiPoly.from_unipoly_x(coeffs[i], f.yvar) * nums[i] * qpow
        if i:
            qpow = qpow * q
    # unreduced d/dy of the certificate, then cross-multiply
    dnum = cert.num.derivative_y() * cert.den \
        - cert.num * cert.den.derivative_y()
    dden = cert.den * cert.den
    qfull = q ** (order + 1)
    if lhs * dden != dnum * qfull:
        raise AssertionError("telescoper identity failed")


def _falling_factorial(k, i, var="n"):
    """(n+k)(n+k-1)...(n+k-i+1) as a polynomial in n."""
    out = UniPoly.one(var)
    for s in range(i):
        out = out * UniPoly([k - s, 1], var)
    return out


def ode_to_recurrence(ode):
    """P-recursive recurrence satisfied by power-series solutions of the ODE.

    The term a_{i,j} x^j (d/dx)^i maps x^n to ff(n, i) x^{n-i+j}, giving
    sum_k q_k(n) u_{n+k} = 0 with order = spread of i-j over the nonzero
    ODE coefficients.
    """
    terms = []
    for i, c in enumerate(ode.coeffs):
        for j, v in enumerate(c.coeffs):
            if v:
                terms.append((i, j, v))
    shifts = [i - j for i, j, _ in terms]
    smin, smax = min(shifts), max(shifts)
    order = smax - smin
    qs = [UniPoly.zero("n") for _ in range(order + 1)]
    for i, j, v in terms:
        k = i - j - smin
        qs[k] = qs[k] + _falling_factorial(k, i) * v
    lead = qs[order]
    # computed-term indices n+order with n >= max(0, smin) and lead(n) != 0
    horizon = max(order, smin + order)
    nmin = max(0, smin)
    for root in lead.rational_roots():
        if root.denominator == 1 and root >= nmin:
            horizon = max(horizon, int(root) + order + 1)
    return LinRec(order=order, coeffs=tuple(qs), singular_horizon=horizon)


def unroll(rec, initial, n):
    """First n terms of the sequence determined by the recurrence.

    ``initial`` must supply at least max(order, singular_horizon) terms;
    each further term costs one evaluation of the recurrence.
    """
    init = list(initial.coeffs) if isinstance(initial, TruncSeries) \
        else [Rat(c) if isinstance(c, int) else c for c in initial]
    need = max(rec.order, rec.singular_horizon)
    if len(init) < min(need, n):
        raise PreconditionError("unroll-initial",
                                "need %d initial terms" % need)
    u = init[:n]
    for m in range(len(u), n):
        idx = m - rec.order
        acc = Rat(0)
        for k in range(rec.order):
            acc += rec.coeffs[k].eval(idx) * u[idx + k]
        lead = rec.coeffs[rec.order].eval(idx)
        if lead == 0:
            raise PreconditionError("unroll-singular",
                                    "recurrence singular at index %d" % m)
        u.append(-acc / lead)
    return TruncSeries(u, n)

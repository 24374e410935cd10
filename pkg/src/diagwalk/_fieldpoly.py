"""Dense polynomial arithmetic over an arbitrary exact field.

Polynomials are plain lists of field elements (index = exponent, no
trailing zeros, zero = empty list).  Elements must support +, -, *, /,
multiplication by int, equality and truth testing.  Used with
:class:`diagwalk.bivar.RatFunc` coefficients for computations in
Q(x)[y] and Q(z)[y].
"""

from __future__ import annotations


def fp_trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def fp_deg(a):
    return len(a) - 1


def fp_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return fp_trim(out)


def fp_neg(a):
    return [-c for c in a]


def fp_sub(a, b):
    return fp_add(a, fp_neg(b))


def fp_scale(a, s):
    if not s:
        return []
    return fp_trim([c * s for c in a])


def fp_mul(a, b):
    if not a or not b:
        return []
    out = [None] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if not cb:
                continue
            t = ca * cb
            out[i + j] = t if out[i + j] is None else out[i + j] + t
    zero = a[0] * 0
    return fp_trim([zero if c is None else c for c in out])


def fp_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    d = len(b) - 1
    lead = b[-1]
    q = [a[0] * 0 if a else b[0] * 0] * max(len(r) - d, 0)
    for k in range(len(r) - 1, d - 1, -1):
        c = r[k]
        if not c:
            continue
        f = c / lead
        q[k - d] = f
        for j in range(d + 1):
            r[k - d + j] = r[k - d + j] - f * b[j]
    return fp_trim(q), fp_trim(r)


def fp_exact_div(a, b):
    q, r = fp_divmod(a, b)
    if r:
        raise ValueError("inexact polynomial division")
    return q


def fp_monic(a):
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def fp_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, fp_divmod(a, b)[1]
    return fp_monic(a)


def fp_xgcd(a, b, one):
    """Extended gcd; returns (g, u, v), g monic, u*a + v*b = g."""
    zero = one * 0
    ua, va = [one], []
    ub, vb = [], [one]
    a, b = list(a), list(b)
    while b:
        q, r = fp_divmod(a, b)
        a, b = b, r
        ua, ub = ub, fp_sub(ua, fp_mul(q, ub))
        va, vb = vb, fp_sub(va, fp_mul(q, vb))
    if not a:
        return a, ua, va
    inv = one / a[-1]
    return fp_scale(a, inv), fp_scale(ua, inv), fp_scale(va, inv)


def fp_deriv(a):
    return fp_trim([c * i for i, c in enumerate(a)][1:])


def fp_yun(a):
    """Yun squarefree decomposition over a field of characteristic 0.

    Returns (factors, lead): monic squarefree pairwise-coprime factors as
    (poly, multiplicity) with multiplicities strictly increasing, and the
    leading coefficient, so that a = lead * prod factor^mult.
    """
    lead = a[-1]
    f = fp_monic(a)
    fp = fp_deriv(f)
    g = fp_gcd(f, fp)
    factors = []
    if len(g) == 1:
        if len(f) > 1:
            factors.append((f, 1))
        return factors, lead
    c = fp_exact_div(f, g)
    d = fp_sub(fp_exact_div(fp, g), fp_deriv(c))
    i = 1
    while len(c) > 1:
        p = fp_gcd(c, d)
        c = fp_exact_div(c, p)
        d = fp_sub(fp_exact_div(d, p), fp_deriv(c))
        if len(p) > 1:
            factors.append((p, i))
        i += 1
    return factors, lead


def fp_resultant(a, b, one):
    """Resultant of two field polynomials via the Euclidean product formula."""
    zero = one * 0
    if not a or not b:
        return zero
    da, db = fp_deg(a), fp_deg(b)
    if da == 0:
        return _fp_pow_elem(a[0], db, one)
    if db == 0:
        return _fp_pow_elem(b[0], da, one)
    sign = one
    if da < db:
        if (da * db) % 2:
            sign = -sign
        a, b = b, a
    res = sign
    while True:
        r = fp_divmod(a, b)[1]
        if not r:
            return zero
        da, db = fp_deg(a), fp_deg(b)
        if (da * db) % 2:
            res = -res
        res = res * _fp_pow_elem(b[-1], da - fp_deg(r), one)
        a, b = b, r
        if fp_deg(b) == 0:
            return res * _fp_pow_elem(b[0], fp_deg(a), one)


def _fp_pow_elem(c, n, one):
    out = one
    for _ in range(n):
        out = out * c
    return out

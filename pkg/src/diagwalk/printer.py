"""Canonical text rendering of polynomials, fractions, and series.

The format is chosen so that printing followed by re-parsing with the
expression parser in :mod:`diagwalk.cli` is the identity: explicit ``*``
for products, ``^`` for powers, rationals as ``p/q``.  Univariate
polynomials print in ascending degree without spaces ("1-4*t"); bivariate
polynomials print in descending degree of the outer (second) variable
with spaced separators ("(1-4*t)*D^2 - 1").
"""

from __future__ import annotations

from fractions import Fraction


def format_coeff(c):
    """A rational coefficient as an exact literal, ``p`` or ``p/q``."""
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def _format_monomial(c, var, k):
    """c * var^k with the usual 1/-1 and exponent elisions; c nonzero."""
    if k == 0:
        return format_coeff(c)
    v = var if k == 1 else "%s^%d" % (var, k)
    if c == 1:
        return v
    if c == -1:
        return "-" + v
    return "%s*%s" % (format_coeff(c), v)


def format_unipoly(p, ascending=True):
    """Canonical text for a univariate polynomial, e.g. ``1-4*t``."""
    if p.is_zero():
        return "0"
    ks = range(len(p.coeffs)) if ascending else range(p.degree, -1, -1)
    parts = []
    for k in ks:
        c = p.coeffs[k]
        if not c:
            continue
        mono = _format_monomial(c, p.var, k)
        if parts and not mono.startswith("-"):
            mono = "+" + mono
        parts.append(mono)
    return "".join(parts)


def _coeff_text(u, yvar, j):
    """One y^j term of a bivariate polynomial, with parenthesized x-part."""
    if j == 0:
        return format_unipoly(u)
    nterms = sum(1 for c in u.coeffs if c)
    if nterms == 1:
        k = next(i for i, c in enumerate(u.coeffs) if c)
        c = u.coeffs[k]
        if k == 0:
            head = "" if c == 1 else ("-" if c == -1 else format_coeff(c) + "*")
        else:
            head = _format_monomial(c, u.var, k) + "*"
    else:
        head = "(%s)*" % format_unipoly(u)
    return head + (yvar if j == 1 else "%s^%d" % (yvar, j))


def format_bipoly(p):
    """Canonical text for a bivariate polynomial, e.g. ``(1-4*t)*D^2 - 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for j in range(p.deg_y, -1, -1):
        u = p.y_coeff(j)
        if u.is_zero():
            continue
        text = _coeff_text(u, p.yvar, j)
        if not parts:
            parts.append(text)
        elif text.startswith("-"):
            parts.append("- " + text[1:])
        else:
            parts.append("+ " + text)
    return " ".join(parts)


def format_birational(f):
    """Canonical text for a fraction of bivariate polynomials."""
    num = format_bipoly(f.num)
    if f.den.is_constant() and f.den.coeff(0, 0) == 1:
        return num
    den = format_bipoly(f.den)
    if " " in num or "/" in num:
        num = "(%s)" % num
    if " " in den or "/" in den or "+" in den[1:] or "-" in den[1:]:
        den = "(%s)" % den
    return "%s/%s" % (num, den)


def format_series(s):
    """Truncated series as comma-separated exact rationals."""
    return ", ".join(format_coeff(c) for c in s.coeffs)

"""Command-line front end.

Subcommands cover every pipeline: ``residues`` and ``diagonal`` take a
bivariate rational expression, ``composed-sum`` a polynomial and a count,
``walks`` a step set and a precision.  All output is exact; ``--json``
switches to a machine-readable encoding with a schema version.  Exit
codes distinguish parse errors (2), precondition violations (3), and
algorithmic failures such as a failed certification (4).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bivar import BiPoly, BiRational
from .composed import pure_composed_sum, pure_composed_sum_bi
from .corealg import TruncSeries, UniPoly
from .diagonal import algebraic_diagonal, certify, diagonal_series_naive
from .errors import (DiagwalkError, ParseError, PreconditionError,
                     TelescoperNotFoundError)
from .printer import (format_bipoly, format_coeff, format_series,
                      format_unipoly)
from .residues import algebraic_residues
from .walks import StepSet, bench_methods, expand_walks, walk_counts_naive

SCHEMA_VERSION = 1
EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_FAILURE = 4


# ---------------------------------------------------------------------------
# expression parsing


_OPS = set("+-*/^()")


def _tokenize(text):
    """Tokens as (kind, value, line, column); kinds: int, name, op, end."""
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in _OPS:
            tokens.append(("op", ch, line, start_col))
            col += 1
            i += 1
            continue
        raise ParseError("unexpected character %r" % ch, line, start_col)
    tokens.append(("end", None, line, col))
    return tokens


class _Parser:
    """Recursive descent over the token list.

    Grammar (precedence low to high, ``^`` right-associative):
        sum    := term (('+'|'-') term)*
        term   := unary (('*'|'/') unary)*
        unary  := '-' unary | power
        power  := atom ('^' unary)?
        atom   := int | name | '(' sum ')'
    """

    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, ch):
        kind, value, line, col = self.next()
        if kind != "op" or value != ch:
            raise ParseError("expected %r" % ch, line, col)

    def parse(self):
        ast = self.sum()
        kind, value, line, col = self.peek()
        if kind != "end":
            raise ParseError("unexpected %r" % str(value), line, col)
        return ast

    def sum(self):
        node = self.term()
        while True:
            kind, value, _, _ = self.peek()
            if kind == "op" and value in "+-":
                self.next()
                node = ("add" if value == "+" else "sub", node, self.term())
            else:
                return node

    def term(self):
        node = self.unary()
        while True:
            kind, value, _, _ = self.peek()
            if kind == "op" and value in "*/":
                self.next()
                node = ("mul" if value == "*" else "div", node, self.unary())
            else:
                return node

    def unary(self):
        kind, value, _, _ = self.peek()
        if kind == "op" and value == "-":
            self.next()
            return ("neg", self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        kind, value, line, col = self.peek()
        if kind == "op" and value == "^":
            self.next()
            return ("pow", node, self.unary(), (line, col))
        return node

    def atom(self):
        kind, value, line, col = self.next()
        if kind == "int":
            return ("num", Fraction(value))
        if kind == "name":
            return ("var", value, (line, col))
        if kind == "op" and value == "(":
            node = self.sum()
            self.expect_op(")")
            return node
        raise ParseError("expected a number, variable, or '('", line, col)


def parse_expr(text, variables):
    """AST of an arithmetic expression over the declared variables.

    The variable check happens at parse time so unknown names are
    position-annotated syntax errors rather than evaluation failures.
    """
    if not text.strip():
        raise ParseError("empty expression", 1, 1)
    ast = _Parser(_tokenize(text)).parse()
    _check_vars(ast, set(variables))
    return ast


def _check_vars(ast, names):
    if ast[0] == "var":
        _, name, (line, col) = ast
        if name not in names:
            raise ParseError("unknown variable %r" % name, line, col)
    elif ast[0] in ("neg",):
        _check_vars(ast[1], names)
    elif ast[0] in ("add", "sub", "mul", "div"):
        _check_vars(ast[1], names)
        _check_vars(ast[2], names)
    elif ast[0] == "pow":
        _check_vars(ast[1], names)
        _check_vars(ast[2], names)


def eval_expr(ast, xvar, yvar):
    """Evaluate an AST to a reduced fraction of bivariate polynomials."""
    env = {
        xvar: BiRational(BiPoly.from_terms({(1, 0): 1}, xvar, yvar)),
        yvar: BiRational(BiPoly.from_terms({(0, 1): 1}, xvar, yvar)),
    }
    one = BiRational(BiPoly.one(xvar, yvar))

    def const(c):
        return BiRational(BiPoly.constant(c.numerator, xvar, yvar),
                          BiPoly.constant(c.denominator, xvar, yvar))

    def const_value(node):
        """The exact rational value of a constant subexpression, or None."""
        v = ev(node)
        if v.num.is_constant() and v.den.is_constant():
            return Fraction(v.num.coeff(0, 0), v.den.coeff(0, 0))
        return None

    def ev(node):
        op = node[0]
        if op == "num":
            return const(node[1])
        if op == "var":
            return env[node[1]]
        if op == "neg":
            return -ev(node[1])
        if op == "add":
            return ev(node[1]) + ev(node[2])
        if op == "sub":
            return ev(node[1]) - ev(node[2])
        if op == "mul":
            return ev(node[1]) * ev(node[2])
        if op == "div":
            den = ev(node[2])
            if den.is_zero():
                raise PreconditionError("zero-denominator",
                                        "division by zero")
            return ev(node[1]) / den
        if op == "pow":
            line, col = node[3]
            e = const_value(node[2])
            if e is None or e.denominator != 1 or e < 0:
                raise ParseError("exponent must be a nonnegative integer",
                                 line, col)
            base = ev(node[1])
            out = one
            for _ in range(int(e)):
                out = out * base
            return out
        raise AssertionError("unhandled node %r" % (op,))

    return ev(ast)


def parse_rational_expr(text, xvar, yvar):
    return eval_expr(parse_expr(text, (xvar, yvar)), xvar, yvar)


def parse_step_set(text):
    """Step set from "2,1,-2" or "{(1,2),(1,1),(1,-2)}"."""
    text = text.strip()
    if text.startswith("{"):
        if not text.endswith("}"):
            raise ParseError("unterminated step set", 1, len(text))
        import re
        alts = []
        body = text[1:-1].replace(" ", "")
        pairs = re.findall(r"\((-?\d+),(-?\d+)\)", body)
        if ",".join("(%s,%s)" % p for p in pairs) != body:
            raise ParseError("malformed step set", 1, 1)
        for a, b in pairs:
            if int(a) != 1:
                raise ParseError("steps must advance by exactly one", 1, 1)
            alts.append(int(b))
        if not alts:
            raise ParseError("empty step set", 1, 1)
        return StepSet(alts)
    try:
        alts = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ParseError("malformed step set", 1, 1)
    if not alts:
        raise ParseError("empty step set", 1, 1)
    return StepSet(alts)


# ---------------------------------------------------------------------------
# output


def _poly_json(p, kind="polynomial"):
    if isinstance(p, UniPoly):
        terms = [[k, 0, format_coeff(c)] for k, c in enumerate(p.coeffs) if c]
        variables = [p.var]
    else:
        terms = [[i, j, format_coeff(c)] for (i, j), c in sorted(p.terms())]
        variables = [p.xvar, p.yvar]
    return {"kind": kind, "variables": variables, "terms": terms}


def _series_json(s):
    return {"kind": "series",
            "coefficients": [format_coeff(c) for c in s.coeffs]}


def _emit(payload, as_json):
    if as_json:
        payload = {k: v for k, v in payload.items() if k != "text"}
        payload["schema_version"] = SCHEMA_VERSION
        print(json.dumps(payload, indent=None, sort_keys=True))
    else:
        for line in payload["text"]:
            print(line)


def _read_expr(arg):
    if arg == "-":
        return sys.stdin.read()
    return arg


# ---------------------------------------------------------------------------
# subcommands


def _cmd_residues(args):
    f = parse_rational_expr(_read_expr(args.expr), "x", "y")
    rp = algebraic_residues(f.num, f.den, zvar="z",
                            want_factors=args.factors)
    payload = {"result": _poly_json(rp.poly),
               "bounds": {"deg_x": rp.bounds.deg_x,
                          "deg_z": rp.bounds.deg_z},
               "text": [format_bipoly(rp.poly)]}
    if args.factors:
        payload["factors"] = [
            {"multiplicity": i, **_poly_json(ri)} for ri, i in rp.factors]
        for ri, i in rp.factors:
            payload["text"].append("multiplicity %d: %s"
                                   % (i, format_bipoly(ri)))
    _emit(payload, args.json)
    return EXIT_OK


def _cmd_composed_sum(args):
    if args.c < 1:
        raise PreconditionError("composed-c-range", "need c >= 1")
    f = parse_rational_expr(_read_expr(args.poly), "x", "y")
    if not f.den.is_constant():
        raise PreconditionError("composed-not-polynomial",
                                "input must be a polynomial")
    p = (f.num * f.den.coeff(0, 0) ** -1
         if f.den.coeff(0, 0) != 1 else f.num)
    if p.deg_x == 0:
        u = UniPoly([p.coeff(0, j) for j in range(p.deg_y + 1)], "y")
        res = pure_composed_sum(u, args.c).poly
        payload = {"result": _poly_json(res),
                   "text": [format_unipoly(res, ascending=False)]}
    else:
        res = pure_composed_sum_bi(p, args.c)
        payload = {"result": _poly_json(res),
                   "text": [format_bipoly(res)]}
    _emit(payload, args.json)
    return EXIT_OK


def _cmd_diagonal(args):
    f = parse_rational_expr(_read_expr(args.expr), "x", "y")
    res = algebraic_diagonal(f, optimize=args.optimize)
    payload = {"result": _poly_json(res.phi),
               "bounds": {"deg_t": res.bounds.bideg[0],
                          "deg_D": res.bounds.bideg[1]},
               "text": [format_bipoly(res.phi)]}
    certified = None
    if args.certify:
        certified = certify(f, res, args.certify)
        payload["certified"] = certified
        payload["text"].append("certified to order %d: %s"
                               % (args.certify, certified))
    if args.series:
        ser = diagonal_series_naive(f, args.series)
        payload["series"] = _series_json(ser)
        payload["text"].append("series: " + format_series(ser))
    _emit(payload, args.json)
    if certified is False:
        print("certification failed", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def _walk_series_naive(steps, n):
    full = walk_counts_naive(steps, n, confined=False)
    conf = walk_counts_naive(steps, n, confined=True)
    rng = range(n + 1)
    return {"B": TruncSeries([full.bridges(m) for m in rng], n + 1),
            "E": TruncSeries([conf.excursions(m) for m in rng], n + 1),
            "M": TruncSeries([conf.meanders(m) for m in rng], n + 1)}


def _cmd_walks(args):
    steps = parse_step_set(args.steps)
    if args.N < 1:
        raise PreconditionError("walks-precision", "need N >= 1")
    if args.bench:
        ns = sorted({max(args.N // 4, 1), max(args.N // 2, 1), args.N})
        report = bench_methods(steps, ns)
        payload = {"bench": report,
                   "text": ["N=%d naive %.4fs recurrence %.4fs"
                            % (row["N"], row["naive_seconds"],
                               row["fast_seconds"]) for row in report]}
        _emit(payload, args.json)
        return EXIT_OK
    wanted = [name for name, flag in
              (("B", args.bridges), ("E", args.excursions),
               ("M", args.meanders)) if flag]
    if args.all or not wanted:
        wanted = ["B", "E", "M"]
    if args.naive:
        series = _walk_series_naive(steps, args.N)
    else:
        ws = expand_walks(steps, args.N)
        series = {"B": ws.B, "E": ws.E, "M": ws.M}
    payload = {"series": {name: _series_json(series[name])
                          for name in wanted},
               "text": []}
    for name in wanted:
        text = format_series(series[name])
        payload["text"].append(text if len(wanted) == 1
                               else "%s: %s" % (name, text))
    _emit(payload, args.json)
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def build_parser():
    parser = argparse.ArgumentParser(
        prog="diagwalk",
        description="Exact annihilators for residues, diagonals, composed "
                    "sums of roots, and lattice-walk series.")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output with a schema version")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS,
                        help="machine-readable output with a schema version")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("residues", parents=[common],
                       help="annihilator of the residues in y of a rational "
                            "function of (x, y)")
    p.add_argument("expr", help="rational expression in x and y, or - for stdin")
    p.add_argument("--factors", action="store_true",
                   help="also list the factor from each pole multiplicity")
    p.set_defaults(func=_cmd_residues)

    p = sub.add_parser("composed-sum", parents=[common],
                       help="annihilator of sums of c roots of a polynomial")
    p.add_argument("poly", help="polynomial in y (optionally also x), or -")
    p.add_argument("c", type=int, help="number of roots per sum")
    p.set_defaults(func=_cmd_composed_sum)

    p = sub.add_parser("diagonal", parents=[common],
                       help="annihilator of the diagonal of a rational "
                            "function of (x, y)")
    p.add_argument("expr", help="rational expression in x and y, or - for stdin")
    p.add_argument("--series", type=int, metavar="N",
                   help="also print the first N diagonal coefficients")
    p.add_argument("--certify", type=int, metavar="N",
                   help="check the result against N naive coefficients")
    p.add_argument("--optimize", action="store_true",
                   help="split off the rational branch at y = 0 when possible")
    p.set_defaults(func=_cmd_diagonal)

    p = sub.add_parser("walks", parents=[common],
                       help="series of bridges, excursions, and meanders")
    p.add_argument("steps", help='step altitudes, "2,1,-2" or "{(1,2),(1,-2)}"')
    p.add_argument("-N", type=int, required=True,
                   help="expansion order (series has N + 1 terms)")
    p.add_argument("--bridges", action="store_true")
    p.add_argument("--excursions", action="store_true")
    p.add_argument("--meanders", action="store_true")
    p.add_argument("--all", action="store_true")
    p.add_argument("--naive", action="store_true",
                   help="use the counting tables instead of recurrences")
    p.add_argument("--bench", action="store_true",
                   help="time both methods at N/4, N/2, N")
    p.set_defaults(func=_cmd_walks)
    return parser


def _emit_error(exc, code_name, as_json):
    if as_json:
        print(json.dumps({"schema_version": SCHEMA_VERSION,
                          "error": {"class": code_name,
                                    "message": str(exc)}}),
              file=sys.stderr)
    else:
        print("error (%s): %s" % (code_name, exc), file=sys.stderr)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _emit_error(exc, "parse", args.json)
        return EXIT_PARSE
    except PreconditionError as exc:
        _emit_error(exc, "precondition", args.json)
        return EXIT_PRECONDITION
    except (TelescoperNotFoundError, AssertionError, ArithmeticError) as exc:
        _emit_error(exc, "failure", args.json)
        return EXIT_FAILURE
    except DiagwalkError as exc:
        _emit_error(exc, "failure", args.json)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())

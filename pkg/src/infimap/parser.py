"""Text grammar for maps, rational paths, and semialgebraic sets.

Grammar sketch (full EBNF in README):

    map    = [ "map" "R^" INT "->" "R^" INT ":" ] "(" expr { "," expr } ")"
             [ "/" expr ]
    path   = "(" lexpr { "," lexpr } ")"
    set    = or ; or = and { "or" and } ; and = item { "and" item }
    item   = "(" or ")" | expr REL expr ;  REL = "<" | "<=" | "=" | ">=" | ">"

Expressions use integer and rational literals only (decimals are rejected
to preserve exactness), "+ - * ^", parentheses, and juxtaposition as
implicit multiplication ("2x", "(x+1)(x-1)").  Division is restricted:
inside a component the divisor must be a nonzero constant; in a path it
must be a monomial in t; the trailing map-level "/" introduces the common
denominator and may be any expression.  Variables are fixed names x1..xn
with aliases x, y, z for the first three, and t in paths.

Every error carries a source position.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ArityError, ParseError
from .maps import Atom, BoolNode, RationalPath, RegularMap, SemialgebraicSet
from .polyring import LaurentPoly, MPoly, format_rational

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<number>\d+\.\d+|\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<arrow>->)
  | (?P<rel><=|>=|<|>|=)
  | (?P<op>[-+*/^(),:])
""", re.VERBOSE)

_VAR_RE = re.compile(r"^x([1-9][0-9]*)$")
_ALIASES = {"x": 1, "y": 2, "z": 3}


def _show(tok) -> str:
    return repr(tok.value) if tok.value else "end of input"


class Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col

    def __repr__(self):
        return f"Token({self.kind}, {self.value!r}, {self.line}:{self.col})"


def tokenize(text: str):
    tokens = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind == "number" and "." in value:
            raise ParseError(
                "decimal literals are not allowed; use exact rationals like 3/10",
                line, col)
        if kind not in ("ws", "comment"):
            if kind == "op":
                kind = value
            elif kind == "name" and value in ("and", "or"):
                kind = value  # reserved connectives, never operands
            tokens.append(Token(kind, value, line, col))
        newlines = value.count("\n")
        if newlines:
            line += newlines
            col = len(value) - value.rfind("\n")
        else:
            col += len(value)
        pos = m.end()
    tokens.append(Token("end", "", line, col))
    return tokens


# AST nodes are tuples: (kind, payload..., line, col)


class _ExprParser:
    """Pratt parser for arithmetic expressions over the token stream."""

    BINARY = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}

    def __init__(self, tokens, start=0):
        self.tokens = tokens
        self.pos = start

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {_show(tok)}",
                             tok.line, tok.col)
        return self.advance()

    def _starts_operand(self, tok) -> bool:
        return tok.kind in ("number", "name", "(")

    def expression(self, rbp=0):
        tok = self.advance()
        left = self._nud(tok)
        while True:
            tok = self.peek()
            lbp = self.BINARY.get(tok.kind, 0)
            if lbp > rbp:
                self.advance()
                left = self._led(tok, left)
            elif self._starts_operand(tok) and 20 > rbp:
                # juxtaposition: "2x", "x y", ")("
                left = ("*", left, self.expression(20), tok.line, tok.col)
            else:
                return left

    def _nud(self, tok):
        if tok.kind == "number":
            return ("num", Fraction(int(tok.value)), tok.line, tok.col)
        if tok.kind == "name":
            return ("var", tok.value, tok.line, tok.col)
        if tok.kind == "(":
            inner = self.expression(0)
            self.expect(")")
            return inner
        if tok.kind == "-":
            return ("neg", self.expression(25), tok.line, tok.col)
        if tok.kind == "+":
            return self.expression(25)
        raise ParseError(f"unexpected token {_show(tok)}", tok.line, tok.col)

    def _led(self, tok, left):
        if tok.kind == "^":
            right = self.expression(self.BINARY["^"] - 1)
            return ("^", left, right, tok.line, tok.col)
        right = self.expression(self.BINARY[tok.kind])
        return (tok.kind, left, right, tok.line, tok.col)


def _collect_vars(node, out):
    kind = node[0]
    if kind == "var":
        out.append((node[1], node[2], node[3]))
    elif kind == "num":
        return
    elif kind == "neg":
        _collect_vars(node[1], out)
    else:
        _collect_vars(node[1], out)
        _collect_vars(node[2], out)


def _var_index(name, line, col):
    if name in _ALIASES:
        return _ALIASES[name]
    m = _VAR_RE.match(name)
    if m:
        return int(m.group(1))
    raise ParseError(f"unknown variable {name!r} (use x1..xn or x, y, z)", line, col)


def _int_exponent(node):
    kind = node[0]
    if kind == "num":
        value = node[1]
        if value.denominator != 1:
            raise ParseError("exponent must be an integer", node[-2], node[-1])
        return value.numerator
    if kind == "neg":
        return -_int_exponent(node[1])
    raise ParseError("exponent must be an integer literal", node[-2], node[-1])


def lower_to_mpoly(node, nvars: int, env: dict) -> MPoly:
    kind = node[0]
    if kind == "num":
        return MPoly.constant(nvars, node[1])
    if kind == "var":
        name = node[1]
        if name not in env:
            raise ParseError(f"unknown variable {name!r}", node[2], node[3])
        return MPoly.variable(nvars, env[name])
    if kind == "neg":
        return -lower_to_mpoly(node[1], nvars, env)
    if kind == "+":
        return lower_to_mpoly(node[1], nvars, env) + lower_to_mpoly(node[2], nvars, env)
    if kind == "-":
        return lower_to_mpoly(node[1], nvars, env) - lower_to_mpoly(node[2], nvars, env)
    if kind == "*":
        return lower_to_mpoly(node[1], nvars, env) * lower_to_mpoly(node[2], nvars, env)
    if kind == "/":
        den = lower_to_mpoly(node[2], nvars, env)
        if not den.is_constant() or den.is_zero():
            raise ParseError(
                "division inside a component must be by a nonzero constant"
                " (put a common denominator after the tuple instead)",
                node[-2], node[-1])
        return lower_to_mpoly(node[1], nvars, env) * (1 / den.constant_value())
    if kind == "^":
        exponent = _int_exponent(node[2])
        if exponent < 0:
            raise ParseError("negative exponents are not allowed here",
                             node[-2], node[-1])
        return lower_to_mpoly(node[1], nvars, env) ** exponent
    raise ParseError(f"unsupported construct {kind!r}", node[-2], node[-1])


def lower_to_laurent(node) -> LaurentPoly:
    kind = node[0]
    if kind == "num":
        return LaurentPoly.constant(node[1])
    if kind == "var":
        if node[1] != "t":
            raise ParseError(f"paths use the single variable t, found {node[1]!r}",
                             node[2], node[3])
        return LaurentPoly.t_power(1)
    if kind == "neg":
        return -lower_to_laurent(node[1])
    if kind == "+":
        return lower_to_laurent(node[1]) + lower_to_laurent(node[2])
    if kind == "-":
        return lower_to_laurent(node[1]) - lower_to_laurent(node[2])
    if kind == "*":
        return lower_to_laurent(node[1]) * lower_to_laurent(node[2])
    if kind == "/":
        den = lower_to_laurent(node[2])
        if len(den.terms) != 1:
            raise ParseError(
                "denominator is not a monomial in t; general rational paths"
                " are outside the Laurent grammar", node[-2], node[-1])
        (exp, coeff), = den.terms.items()
        return lower_to_laurent(node[1]) * LaurentPoly.t_power(-exp, 1 / coeff)
    if kind == "^":
        exponent = _int_exponent(node[2])
        base = lower_to_laurent(node[1])
        if exponent >= 0:
            return base ** exponent
        if len(base.terms) != 1:
            raise ParseError("negative powers require a monomial base",
                             node[-2], node[-1])
        (exp, coeff), = base.terms.items()
        return LaurentPoly.t_power(exp * exponent, coeff ** exponent)
    raise ParseError(f"unsupported construct {kind!r}", node[-2], node[-1])


# ----------------------------------------------------------------------
# Top-level grammars

_HEADER_RE = re.compile(r"map\b")


def _resolve_env(asts, declared_n=None):
    seen = []
    for node in asts:
        _collect_vars(node, seen)
    indices = {}
    for name, line, col in seen:
        if name == "t":
            raise ParseError("t is reserved for paths", line, col)
        indices[name] = _var_index(name, line, col)
    n = max(indices.values(), default=1)
    if declared_n is not None:
        for name, line, col in seen:
            if indices[name] > declared_n:
                raise ParseError(
                    f"variable {name!r} exceeds declared domain R^{declared_n}",
                    line, col)
        n = declared_n
    env = {name: idx - 1 for name, idx in indices.items()}
    return n, env


def parse_map(text: str, falsify_denominator: bool = True) -> RegularMap:
    """Parse a regular map and gcd-reduce it.

    Attaches a warning (never an error) when the numeric falsifier finds
    evidence that the denominator vanishes on R^n; certified nonvanishing
    is out of reach in general.
    """
    tokens = tokenize(text)
    parser = _ExprParser(tokens)
    declared_n = declared_m = None
    if parser.peek().kind == "name" and parser.peek().value == "map":
        parser.advance()
        declared_n = _parse_space_dim(parser)
        parser.expect("arrow")
        declared_m = _parse_space_dim(parser)
        parser.expect(":")
    parser.expect("(")
    component_asts = [parser.expression(0)]
    while parser.peek().kind == ",":
        parser.advance()
        component_asts.append(parser.expression(0))
    parser.expect(")")
    denominator_ast = None
    if parser.peek().kind == "/":
        parser.advance()
        denominator_ast = parser.expression(0)
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected trailing input {tok.value!r}", tok.line, tok.col)
    if declared_m is not None and declared_m != len(component_asts):
        raise ParseError(
            f"declared R^{declared_m} range but found {len(component_asts)} components",
            1, 1)

    all_asts = list(component_asts)
    if denominator_ast is not None:
        all_asts.append(denominator_ast)
    n, env = _resolve_env(all_asts, declared_n)
    components = tuple(lower_to_mpoly(a, n, env) for a in component_asts)
    if denominator_ast is not None:
        f0 = lower_to_mpoly(denominator_ast, n, env)
        if f0.is_zero():
            raise ParseError("denominator is identically zero",
                             denominator_ast[-2], denominator_ast[-1])
    else:
        f0 = MPoly.constant(n, 1)
    result = RegularMap(f0, components).reduce()
    if falsify_denominator:
        warning = _denominator_warning(result.f0)
        if warning:
            result = result.with_warning(warning)
    return result


def _parse_space_dim(parser) -> int:
    tok = parser.expect("name")
    if tok.value != "R":
        raise ParseError("expected R^n in map header", tok.line, tok.col)
    parser.expect("^")
    num = parser.expect("number")
    return int(num.value)


def _denominator_warning(f0: MPoly):
    """Cheap falsifier: look for a sign change or an exact zero of f0."""
    if f0.is_constant():
        return None
    n = f0.nvars
    points = []
    if n <= 3:
        radius = range(-3, 4)
        if n == 1:
            points = [(a,) for a in radius]
        elif n == 2:
            points = [(a, b) for a in radius for b in radius]
        else:
            points = [(a, b, c) for a in radius for b in radius for c in radius]
    import random

    rng = random.Random(0xF0)
    for _ in range(200):
        scale = 10 ** rng.randint(0, 4)
        points.append(tuple(
            Fraction(rng.randint(-8 * scale, 8 * scale), rng.randint(1, 7))
            for _ in range(n)))
    sign = 0
    for p in points:
        value = f0.eval_exact(p)
        if value == 0:
            return (f"denominator vanishes at ({', '.join(map(str, p))});"
                    " the map is not regular there")
        s = 1 if value > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return ("denominator changes sign on R^n, so it has a real zero;"
                    " the map is not regular")
    return None


def parse_path(text: str) -> RationalPath:
    tokens = tokenize(text)
    parser = _ExprParser(tokens)
    parser.expect("(")
    asts = [parser.expression(0)]
    while parser.peek().kind == ",":
        parser.advance()
        asts.append(parser.expression(0))
    parser.expect(")")
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected trailing input {tok.value!r}", tok.line, tok.col)
    return RationalPath(tuple(lower_to_laurent(a) for a in asts))


def parse_set(text: str) -> SemialgebraicSet:
    tokens = tokenize(text)
    parser = _ExprParser(tokens)
    tree_ast = _parse_or(parser)
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected trailing input {tok.value!r}", tok.line, tok.col)

    expr_asts = []

    def collect(node):
        if node[0] == "atom":
            expr_asts.append(node[1])
            expr_asts.append(node[2])
        else:
            for child in node[2]:
                collect(child)

    collect(tree_ast)
    n, env = _resolve_env(expr_asts)

    def lower(node):
        if node[0] == "atom":
            lhs = lower_to_mpoly(node[1], n, env)
            rhs = lower_to_mpoly(node[2], n, env)
            return Atom(lhs - rhs, node[3])
        return BoolNode(node[0], tuple(lower(c) for c in node[2]))

    return SemialgebraicSet(n, lower(tree_ast))


def _parse_or(parser):
    parts = [_parse_and(parser)]
    while parser.peek().kind == "or":
        parser.advance()
        parts.append(_parse_and(parser))
    if len(parts) == 1:
        return parts[0]
    return ("or", None, tuple(parts))


def _parse_and(parser):
    parts = [_parse_item(parser)]
    while parser.peek().kind == "and":
        parser.advance()
        parts.append(_parse_item(parser))
    if len(parts) == 1:
        return parts[0]
    return ("and", None, tuple(parts))


def _parse_item(parser):
    if parser.peek().kind == "(" and _is_boolean_group(parser):
        parser.advance()
        inner = _parse_or(parser)
        parser.expect(")")
        return inner
    lhs = parser.expression(0)
    tok = parser.peek()
    if tok.kind != "rel":
        raise ParseError(f"expected a relation, found {_show(tok)}",
                         tok.line, tok.col)
    parser.advance()
    rhs = parser.expression(0)
    return ("atom", lhs, rhs, tok.value)


def _is_boolean_group(parser) -> bool:
    # a '(' opens a boolean group iff a relation or connective occurs
    # before the matching ')'
    depth = 0
    for tok in parser.tokens[parser.pos:]:
        if tok.kind == "(":
            depth += 1
        elif tok.kind == ")":
            depth -= 1
            if depth == 0:
                return False
        elif tok.kind == "rel" and depth >= 1:
            return True
        elif tok.kind in ("and", "or") and depth >= 1:
            return True
        elif tok.kind == "end":
            return False
    return False


# ----------------------------------------------------------------------
# JSON AST export (stable schema: every node has "kind", inner nodes have
# "children", polynomial leaves have "terms")


def poly_ast(poly: MPoly) -> dict:
    return {
        "kind": "poly",
        "nvars": poly.nvars,
        "terms": [[format_rational(c), list(e)] for e, c in poly.sorted_terms()],
    }


def laurent_ast(poly: LaurentPoly) -> dict:
    return {
        "kind": "laurent",
        "terms": [[format_rational(poly.terms[e]), e]
                  for e in sorted(poly.terms, reverse=True)],
    }


def map_ast(f: RegularMap) -> dict:
    return {
        "kind": "map",
        "n": f.n,
        "m": f.m,
        "children": [poly_ast(c) for c in f.components],
        "denominator": poly_ast(f.f0),
    }


def path_ast(path: RationalPath) -> dict:
    return {
        "kind": "path",
        "n": path.n,
        "children": [laurent_ast(c) for c in path.components],
    }


def set_ast(s: SemialgebraicSet) -> dict:
    def walk(node):
        if isinstance(node, Atom):
            return {"kind": "atom", "relation": node.relation,
                    "poly": poly_ast(node.poly)}
        return {"kind": node.op, "children": [walk(c) for c in node.children]}

    return {"kind": "set", "n": s.nvars, "tree": walk(s.tree)}

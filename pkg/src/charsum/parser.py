"""Polynomial expression parsing and canonical printing.

Grammar (juxtaposition is NOT multiplication; '*' is required):

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | var | '(' expr ')'
    rational := nat ('/' nat)?
    var      := letter (letter | digit | '_')*

The optional leading '-' is the only extension over the stated grammar;
canonical printing never emits anything the grammar cannot re-read.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .mpoly import MPoly

EXPONENT_CAP = 1 << 32


@dataclass(frozen=True)
class PolyExpr:
    """A parsed polynomial together with its variable name table."""
    source: str
    poly: MPoly
    variables: tuple

    def __eq__(self, other):
        if not isinstance(other, PolyExpr):
            return NotImplemented
        return _normal_form(self) == _normal_form(other)

    def __hash__(self):
        return hash(_normal_form(self))


def _normal_form(pe):
    poly, kept = pe.poly.drop_unused_variables()
    names = tuple(pe.variables[i] for i in kept)
    return (names, poly.nvars, frozenset(poly.terms.items()))


class _Tokenizer:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip_ws()
        if self.pos >= len(self.text):
            return ("end", "", self.pos)
        ch = self.text[self.pos]
        start = self.pos
        if ch.isdigit():
            j = start
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            return ("nat", self.text[start:j], start)
        if ch.isalpha():
            j = start
            while j < len(self.text) and (self.text[j].isalnum()
                                          or self.text[j] == "_"):
                j += 1
            return ("name", self.text[start:j], start)
        if ch in "+-*/^()":
            return (ch, ch, start)
        raise ParseError("unexpected character %r" % ch, start)

    def take(self):
        tok = self.peek()
        self.pos = tok[2] + len(tok[1])
        return tok


class _Parser:
    def __init__(self, text, variables=None):
        self.toks = _Tokenizer(text)
        self.declared = list(variables) if variables is not None else None
        self.seen = []

    def var_index(self, name, pos):
        if self.declared is not None:
            if name not in self.declared:
                raise ParseError("unknown variable %r" % name, pos)
        if name not in self.seen:
            self.seen.append(name)
        return name

    # First pass builds an AST keyed by names; exponent tuples are
    # assigned after the full variable set is known.

    def parse_expr(self):
        kind, _, _ = self.toks.peek()
        negate = False
        if kind == "-":
            self.toks.take()
            negate = True
        node = self.parse_term()
        if negate:
            node = ("neg", node)
        while True:
            kind, _, _ = self.toks.peek()
            if kind == "+":
                self.toks.take()
                node = ("add", node, self.parse_term())
            elif kind == "-":
                self.toks.take()
                node = ("sub", node, self.parse_term())
            else:
                return node

    def parse_term(self):
        node = self.parse_factor()
        while True:
            kind, _, _ = self.toks.peek()
            if kind == "*":
                self.toks.take()
                node = ("mul", node, self.parse_factor())
            else:
                return node

    def parse_factor(self):
        node = self.parse_base()
        kind, _, _ = self.toks.peek()
        if kind == "^":
            self.toks.take()
            k2, text, pos = self.toks.peek()
            if k2 != "nat":
                raise ParseError("expected a natural number exponent", pos)
            self.toks.take()
            e = int(text)
            if e >= EXPONENT_CAP:
                raise ParseError("exponent %d exceeds cap 2^32" % e, pos)
            node = ("pow", node, e)
        return node

    def parse_base(self):
        kind, text, pos = self.toks.take()
        if kind == "nat":
            k2, t2, _ = self.toks.peek()
            if k2 == "/":
                self.toks.take()
                k3, t3, pos3 = self.toks.peek()
                if k3 != "nat":
                    raise ParseError("expected a denominator", pos3)
                self.toks.take()
                if int(t3) == 0:
                    raise ParseError("zero denominator", pos3)
                return ("const", Fraction(int(text), int(t3)))
            return ("const", Fraction(int(text)))
        if kind == "name":
            return ("var", self.var_index(text, pos))
        if kind == "(":
            node = self.parse_expr()
            k2, _, pos2 = self.toks.peek()
            if k2 != ")":
                raise ParseError("expected ')'", pos2)
            self.toks.take()
            return node
        raise ParseError("expected a rational, a variable or '('", pos)

    def finish(self):
        kind, text, pos = self.toks.peek()
        if kind != "end":
            raise ParseError("unexpected trailing input %r" % text, pos)


def _build(node, index, nvars):
    op = node[0]
    if op == "const":
        return MPoly.constant(node[1], nvars)
    if op == "var":
        return MPoly.variable(index[node[1]], nvars)
    if op == "neg":
        return -_build(node[1], index, nvars)
    if op == "add":
        return _build(node[1], index, nvars) + _build(node[2], index, nvars)
    if op == "sub":
        return _build(node[1], index, nvars) - _build(node[2], index, nvars)
    if op == "mul":
        return _build(node[1], index, nvars) * _build(node[2], index, nvars)
    if op == "pow":
        return _build(node[1], index, nvars) ** node[2]
    raise AssertionError(op)


def parse_polynomial(text, variables=None) -> PolyExpr:
    """Parse an expression into a PolyExpr.

    With `variables` the name table and its ordering are pinned (unknown
    names are errors); otherwise names are collected and sorted.
    """
    parser = _Parser(text, variables)
    ast = parser.parse_expr()
    parser.finish()
    if variables is not None:
        names = tuple(variables)
    else:
        names = tuple(sorted(parser.seen))
    index = {name: i for i, name in enumerate(names)}
    poly = _build(ast, index, len(names))
    return PolyExpr(text, poly, names)


def _fmt_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def poly_to_string(poly: MPoly, variables) -> str:
    """Canonical form: descending graded-lex terms, explicit '*', '^' for
    exponents > 1, no redundant unit coefficients."""
    if poly.is_zero():
        return "0"
    pieces = []
    for expts, coeff in poly.sorted_terms():
        factors = []
        for name, e in zip(variables, expts):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append("%s^%d" % (name, e))
        mag = abs(coeff)
        if not factors or mag != 1:
            factors.insert(0, _fmt_coeff(mag))
        body = "*".join(factors)
        if not pieces:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append((" + " if coeff > 0 else " - ") + body)
    return "".join(pieces)


def print_polynomial(pe: PolyExpr) -> str:
    return poly_to_string(pe.poly, pe.variables)

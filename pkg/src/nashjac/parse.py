"""Polynomial expressions and weight inference.

Grammar (whitespace is ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := rational | var ['^' uint]
    var    := 'x' uint | 'x' | 'y' | 'z' | 'w'

``x, y, z, w`` are aliases for ``x1 .. x4``.  The variable count is the
highest index that occurs (1 for a constant).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import InputError, NotWeightedHomogeneous
from .linalg import nullspace
from .poly import ALIASES, Polynomial, WeightSystem, default_names, dot

MAX_EXPONENT = 10_000


class ParseError(InputError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x\d+|[xyzw])|(?P<op>[-+*/^]))")


_KIND_NAMES = {"num": "a number", "var": "a variable", "op": "an operator"}


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _position(src: str, pos: int) -> Tuple[int, int]:
    line = src.count("\n", 0, pos) + 1
    col = pos - (src.rfind("\n", 0, pos) + 1) + 1
    return line, col


def _tokenize(src: str) -> List[_Tok]:
    toks = []
    pos = 0
    while pos < len(src):
        if src[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {src[pos]!r}", *_position(src, pos))
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0
        self.used_aliases = False
        self.used_indexed = False

    def _peek(self) -> Optional[_Tok]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def _error(self, message: str, tok: Optional[_Tok] = None):
        pos = tok.pos if tok is not None else len(self.src)
        raise ParseError(message, *_position(self.src, pos))

    def _take(self, kind: str) -> _Tok:
        tok = self._peek()
        what = _KIND_NAMES[kind]
        if tok is None:
            self._error(f"expected {what}, found end of input")
        if tok.kind != kind:
            self._error(f"expected {what}, found {tok.text!r}", tok)
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            self._error("empty expression")
        terms = []
        sign = 1
        tok = self._peek()
        if tok.kind == "op" and tok.text in "+-":
            sign = -1 if tok.text == "-" else 1
            self.i += 1
        terms.append((sign, self._term()))
        while self._peek() is not None:
            tok = self._take("op")
            if tok.text not in "+-":
                self._error(f"expected '+' or '-', found {tok.text!r}", tok)
            terms.append((-1 if tok.text == "-" else 1, self._term()))
        return terms

    def _term(self):
        powers = {}
        coeff_box = [Fraction(1)]
        self._factor(powers, coeff_box)
        while self._peek() is not None and self._peek().text == "*":
            self.i += 1
            self._factor(powers, coeff_box)
        return coeff_box[0], powers

    def _factor(self, powers, coeff_box):
        tok = self._peek()
        if tok is None:
            self._error("expected a number or a variable, found end of input")
        if tok.kind == "num":
            self.i += 1
            value = Fraction(int(tok.text))
            if self._peek() is not None and self._peek().text == "/":
                self.i += 1
                den = self._take("num")
                if int(den.text) == 0:
                    self._error("zero denominator", den)
                value /= int(den.text)
            coeff_box[0] *= value
            return
        if tok.kind == "var":
            self.i += 1
            if tok.text in ALIASES:
                index = ALIASES.index(tok.text)
                self.used_aliases = True
            else:
                index = int(tok.text[1:]) - 1
                self.used_indexed = True
                if index < 0:
                    self._error("variable indices start at x1", tok)
            k = 1
            if self._peek() is not None and self._peek().text == "^":
                self.i += 1
                exp_tok = self._take("num")
                k = int(exp_tok.text)
                if k > MAX_EXPONENT:
                    self._error(f"exponent overflow ({k} > {MAX_EXPONENT})", exp_tok)
            powers[index] = powers.get(index, 0) + k
            if powers[index] > MAX_EXPONENT:
                self._error(f"exponent overflow ({powers[index]} > {MAX_EXPONENT})", tok)
            return
        self._error(f"expected a number or a variable, found {tok.text!r}", tok)


def parse_with_names(src: str) -> Tuple[Polynomial, Tuple[str, ...]]:
    """Parse and also return variable names in the notation the input used."""
    if not isinstance(src, str) or not src.strip():
        raise ParseError("empty expression", 1, 1)
    p = _Parser(src)
    terms = p.parse()
    nvars = 1
    for _, (_, powers) in terms:
        if powers:
            nvars = max(nvars, max(powers) + 1)
    acc = {}
    for sign, (coeff, powers) in terms:
        e = tuple(powers.get(i, 0) for i in range(nvars))
        acc[e] = acc.get(e, 0) + sign * coeff
    poly = Polynomial(acc, nvars)
    return poly, default_names(nvars, aliases=not p.used_indexed)


def parse_polynomial(src: str) -> Polynomial:
    return parse_with_names(src)[0]


def parse_weights(text: str) -> WeightSystem:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"weights must be comma-separated integers, got {text!r}") from None
    return WeightSystem(values)


def infer_weights(f: Polynomial) -> Tuple[WeightSystem, int]:
    """Primitive positive weights w and degree d with gamma . w = d on the support."""
    if f.is_zero():
        raise InputError("the zero polynomial has no weights")
    s = f.nvars
    rows = [list(e) + [-1] for e in sorted(f.exponents())]
    basis = nullspace(rows, s + 1)
    if len(basis) == 0:
        raise NotWeightedHomogeneous(f"{f} admits no weight system", reason="no-positive-solution")
    if len(basis) > 1:
        raise NotWeightedHomogeneous(
            f"{f} has a {len(basis)}-dimensional family of weight systems", reason="not-unique"
        )
    v = basis[0]
    if v[-1] < 0:
        v = [-x for x in v]
    if v[-1] <= 0 or any(x <= 0 for x in v[:-1]):
        raise NotWeightedHomogeneous(f"{f} admits no positive weight system", reason="no-positive-solution")
    w = WeightSystem(tuple(v[:-1]))
    d = v[-1]
    assert all(dot(e, w.weights) == d for e in f.exponents())
    return w, d

"""Text syntax for superpolynomials and derivations.

Grammar (``^`` binds tighter than unary minus, then ``*``, then ``+``/``-``)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ('-' | '+') factor | atom ('^' ['-'] INT)?
    atom   := INT ('/' INT)? | 'i' | GEN | 'd/d' GEN | '(' expr ')'

A source may start with declarations such as ``even z; unit v; odd zeta, eta;``
which build the context the expression is read in. ``unit`` declares an
invertible even generator.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraError, Context, Generator, SuperPoly, invert_even
from .fields import Derivation, partial
from .gaussian import I, GaussianRational


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at column {pos + 1})")
        self.message = message
        self.pos = pos


_TOKEN = re.compile(
    r"\s*(?:(?P<dd>d/d(?P<ddname>[A-Za-z_][A-Za-z0-9_]*'*))"
    r"|(?P<num>\d+)"
    r"|(?P<id>[A-Za-z_][A-Za-z0-9_]*'*)"
    r"|(?P<op>[-+*/^()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(src: str) -> list[Token]:
    out = []
    pos = 0
    n = len(src)
    while pos < n:
        if src[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        start = m.start(m.lastgroup)
        if m.group("dd"):
            out.append(Token("dd", m.group("ddname"), start))
        elif m.group("num"):
            out.append(Token("num", m.group("num"), start))
        elif m.group("id"):
            out.append(Token("id", m.group("id"), start))
        else:
            out.append(Token("op", m.group("op"), start))
        pos = m.end()
    out.append(Token("end", "", n))
    return out


class _Parser:
    def __init__(self, ctx: Context, src: str, offset: int = 0):
        self.ctx = ctx
        self.toks = [Token(t.kind, t.text, t.pos + offset) for t in tokenize(src)]
        self.k = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def eat(self, kind: str, text: str | None = None) -> Token | None:
        t = self.tok
        if t.kind == kind and (text is None or t.text == text):
            self.k += 1
            return t
        return None

    def expect(self, kind: str, text: str) -> Token:
        t = self.eat(kind, text)
        if t is None:
            got = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, got {got!r}", self.tok.pos)
        return t

    def parse(self):
        value = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return value

    def expr(self):
        acc = self.term()
        while True:
            t = self.eat("op", "+") or self.eat("op", "-")
            if t is None:
                return acc
            rhs = self.term()
            acc = self._add(acc, rhs if t.text == "+" else -rhs, t.pos)

    def term(self):
        acc = self.factor()
        while True:
            t = self.eat("op", "*")
            if t is None:
                return acc
            acc = self._mul(acc, self.factor(), t.pos)

    def factor(self):
        t = self.eat("op", "-") or self.eat("op", "+")
        if t is not None:
            inner = self.factor()
            return -inner if t.text == "-" else inner
        pos = self.tok.pos
        base = self.atom()
        if self.eat("op", "^"):
            neg = self.eat("op", "-") is not None
            t = self.eat("num")
            if t is None:
                raise ParseError("expected an integer exponent", self.tok.pos)
            return self._power(base, -int(t.text) if neg else int(t.text), pos)
        return base

    def atom(self):
        t = self.tok
        if self.eat("num"):
            value = Fraction(int(t.text))
            if self.eat("op", "/"):
                q = self.eat("num")
                if q is None:
                    raise ParseError("expected a denominator", self.tok.pos)
                if int(q.text) == 0:
                    raise ParseError("zero denominator", q.pos)
                value /= int(q.text)
            return self.ctx.const(GaussianRational(value))
        if self.eat("dd"):
            self._declared(t)
            return partial(self.ctx, t.text)
        if self.eat("id"):
            if t.text == "i" and "i" not in self.ctx:
                return self.ctx.const(I)
            self._declared(t)
            return self.ctx.gen(t.text)
        if self.eat("op", "("):
            value = self.expr()
            self.expect("op", ")")
            return value
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos)

    def _declared(self, t: Token) -> None:
        if t.text not in self.ctx:
            raise ParseError(f"undeclared generator {t.text!r}", t.pos)

    def _power(self, base, n: int, pos: int):
        if isinstance(base, Derivation):
            raise ParseError("cannot raise a derivation to a power", pos)
        if n < 0:
            try:
                return invert_even(base) ** (-n)
            except AlgebraError as exc:
                raise ParseError(f"negative exponent on a non-invertible element: {exc}", pos) from None
        return base**n

    def _mul(self, a, b, pos: int):
        if isinstance(a, Derivation):
            raise ParseError("a derivation may only appear as the rightmost factor", pos)
        if isinstance(b, Derivation):
            try:
                return b.times(a)
            except AlgebraError as exc:
                raise ParseError(f"parity-invalid derivation term: {exc}", pos) from None
        return a * b

    def _add(self, a, b, pos: int):
        if isinstance(a, SuperPoly) and isinstance(b, SuperPoly):
            return a + b
        if isinstance(a, Derivation) and isinstance(b, Derivation):
            if a.parity != b.parity:
                raise ParseError("sum of derivations of different parity", pos)
            return a + b
        if isinstance(a, SuperPoly) and a.is_zero:
            return b
        if isinstance(b, SuperPoly) and b.is_zero:
            return a
        raise ParseError("cannot add a derivation and a function", pos)


_DECL = re.compile(r"\s*(even|unit|odd)\s+([^;]*);")


def parse_preamble(src: str) -> tuple[Context | None, int]:
    """Read leading ``even/unit/odd`` declarations; returns the context and where the body starts."""
    gens = []
    pos = 0
    while True:
        m = _DECL.match(src, pos)
        if m is None:
            break
        kind, names = m.group(1), m.group(2)
        for raw in names.split(","):
            name = raw.strip()
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*'*", name):
                raise ParseError(f"bad generator name {name!r}", m.start(2))
            gens.append(Generator(name, 1 if kind == "odd" else 0, kind == "unit"))
        pos = m.end()
    if not gens:
        return None, 0
    try:
        return Context(gens), pos
    except AlgebraError as exc:
        raise ParseError(str(exc), 0) from None


def parse_expression(src: str, ctx: Context | None = None):
    """Parse ``src`` into a SuperPoly or a Derivation."""
    declared, start = parse_preamble(src)
    if declared is not None:
        ctx = declared
    if ctx is None:
        raise ParseError("no context: declare generators, e.g. 'even z; odd zeta;'", 0)
    try:
        return _Parser(ctx, src[start:], start).parse()
    except AlgebraError as exc:
        raise ParseError(str(exc), start) from None


def parse_poly(src: str, ctx: Context | None = None) -> SuperPoly:
    value = parse_expression(src, ctx)
    if not isinstance(value, SuperPoly):
        raise ParseError("expected a function, got a derivation", 0)
    return value


def parse_derivation(src: str, ctx: Context | None = None, parity: int = 0) -> Derivation:
    """Like ``parse_expression`` but ``0`` reads as the zero derivation of ``parity``."""
    value = parse_expression(src, ctx)
    if isinstance(value, SuperPoly):
        if value.is_zero:
            return Derivation.zero(value.ctx, parity)
        raise ParseError("expected a derivation, got a function", 0)
    return value

"""Term syntax: AST over {0, 1, +, -, *, /}, parser, printer, and taxonomy.

Decimal integer literals are primitive atoms (sugar for the 0/1 fragment;
see ``desugar_literals``). Division nodes may carry a level decoration,
``ft`` (read as a fracterm) or ``fv`` (read as a fracvalue), written
``/ft`` and ``/fv`` in place of ``/``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from .errors import NotAFracterm, ParseError

FORMATS = ("inline", "colon", "frac")

# "frac" is the keyword of the nested output format; "ft"/"fv" are the
# decoration tags. None of them may be used as variable names.
RESERVED_WORDS = frozenset({"frac", "ft", "fv"})

_LIT_RE = re.compile(r"-?[0-9]+$")
_VAR_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*$")


class Level(Enum):
    """Levels of abstraction a fracsign occurrence can resolve to."""

    OCCURRENCE = "fso"
    SIGN = "fs"
    FRACTERM = "ft"
    FRACVALUE = "fv"
    FRAXION = "fx"  # the unresolved disjunction of the other four


# FRAXION stays outside the chain: it is the undecided reading.
ABSTRACTION_ORDER = {
    Level.OCCURRENCE: 0,
    Level.SIGN: 1,
    Level.FRACTERM: 2,
    Level.FRACVALUE: 3,
}


def more_abstract(a: Level, b: Level) -> bool:
    """True when level a sits strictly above level b in the hierarchy."""
    return ABSTRACTION_ORDER[a] > ABSTRACTION_ORDER[b]


@dataclass(frozen=True)
class Term:
    def __str__(self) -> str:
        return format_term(self, "inline")


@dataclass(frozen=True)
class Lit(Term):
    digits: str

    def __post_init__(self):
        if not _LIT_RE.match(self.digits):
            raise ValueError(f"bad literal digits: {self.digits!r}")

    @property
    def value(self) -> int:
        return int(self.digits)


@dataclass(frozen=True)
class Var(Term):
    name: str

    def __post_init__(self):
        if not _VAR_RE.match(self.name) or self.name in RESERVED_WORDS:
            raise ValueError(f"bad variable name: {self.name!r}")


@dataclass(frozen=True)
class Neg(Term):
    operand: Term


@dataclass(frozen=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Sub(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Mul(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Div(Term):
    left: Term
    right: Term
    decoration: Optional[str] = None  # None | "ft" | "fv"

    def __post_init__(self):
        if self.decoration not in (None, "ft", "fv"):
            raise ValueError(f"bad decoration: {self.decoration!r}")


def lit(n: int) -> Lit:
    return Lit(str(n))


# --------------------------------------------------------------------------
# Lexer


@dataclass(frozen=True)
class _Token:
    kind: str  # num | ident | op | div | frac | end
    text: str
    pos: int


def _tokenize(text: str, div_char: Optional[str]) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("num", text[i:j], i))
            i = j
            continue
        if c.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            word = text[i:j]
            if word == "frac" and div_char is None:
                deco = ""
                if text[j : j + 3] in ("_ft", "_fv"):
                    deco = text[j + 1 : j + 3]
                    j += 3
                tokens.append(_Token("frac", deco, i))
            elif word in RESERVED_WORDS:
                raise ParseError(f"reserved word {word!r}", position=i)
            else:
                tokens.append(_Token("ident", word, i))
            i = j
            continue
        if div_char is not None and c == div_char:
            # "ft"/"fv" glued to the division sign is always a decoration;
            # the printer parenthesizes denominators that would collide.
            tag = text[i + 1 : i + 3]
            if tag in ("ft", "fv"):
                tokens.append(_Token("div", tag, i))
                i += 3
                continue
            tokens.append(_Token("div", "", i))
            i += 1
            continue
        if c in "+-*(),":
            tokens.append(_Token("op", c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", position=i)
    tokens.append(_Token("end", "", n))
    return tokens


# --------------------------------------------------------------------------
# Parser
#
# expr   := term (("+" | "-") term)*
# term   := factor (("*" | DIV) factor)*
# factor := "-" factor | "(" expr ")" | literal | variable | frac-atom
#
# A "-" immediately followed (no gap) by digits in factor position is a
# signed literal; any other "-" in factor position is unary negation.


class _Parser:
    def __init__(self, tokens: list[_Token], fmt: str):
        self.tokens = tokens
        self.fmt = fmt
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}", position=tok.pos)
        return self.take()

    def parse_expr(self) -> Term:
        node = self.parse_term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.take()
                right = self.parse_term()
                node = Add(node, right) if tok.text == "+" else Sub(node, right)
            else:
                return node

    def parse_term(self) -> Term:
        node = self.parse_factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.take()
                node = Mul(node, self.parse_factor())
            elif tok.kind == "div":
                self.take()
                node = Div(node, self.parse_factor(), tok.text or None)
            else:
                return node

    def parse_factor(self) -> Term:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.take()
            nxt = self.peek()
            if nxt.kind == "num" and nxt.pos == tok.pos + 1:
                self.take()
                return Lit("-" + nxt.text)
            return Neg(self.parse_factor())
        if tok.kind == "op" and tok.text == "(":
            self.take()
            node = self.parse_expr()
            self.expect_op(")")
            return node
        if tok.kind == "num":
            self.take()
            return Lit(tok.text)
        if tok.kind == "ident":
            self.take()
            return Var(tok.text)
        if tok.kind == "frac":
            self.take()
            self.expect_op("(")
            left = self.parse_expr()
            self.expect_op(",")
            right = self.parse_expr()
            self.expect_op(")")
            return Div(left, right, tok.text or None)
        raise ParseError("expected a factor", position=tok.pos)


def parse_term(text: str, fmt: str = "inline") -> Term:
    """Parse term text in the given format (inline, colon, or frac)."""
    _check_format(fmt)
    div_char = {"inline": "/", "colon": ":", "frac": None}[fmt]
    parser = _Parser(_tokenize(text, div_char), fmt)
    node = parser.parse_expr()
    tail = parser.peek()
    if tail.kind != "end":
        raise ParseError(f"trailing input {tail.text!r}", position=tail.pos)
    return node


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise ParseError(f"unknown format {fmt!r}; expected one of {FORMATS}")


# --------------------------------------------------------------------------
# Printer

_PREC = {Add: 1, Sub: 1, Mul: 2, Div: 2, Neg: 3, Lit: 4, Var: 4}


def _prec(t: Term) -> int:
    return _PREC[type(t)]


def format_term(t: Term, fmt: str = "inline") -> str:
    """Render a term so that parse_term(format_term(t, f), f) == t."""
    _check_format(fmt)
    return _fmt(t, fmt)


def _wrap(t: Term, fmt: str, parens: bool) -> str:
    s = _fmt(t, fmt)
    return f"({s})" if parens else s


def _fmt(t: Term, fmt: str) -> str:
    if isinstance(t, Lit):
        return t.digits
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Neg):
        # Parenthesize literal operands so "-(3)" cannot re-lex as "-3".
        inner = _wrap(t.operand, fmt, isinstance(t.operand, Lit) or _prec(t.operand) < _PREC[Neg])
        return "-" + inner
    if isinstance(t, (Add, Sub)):
        op = "+" if isinstance(t, Add) else "-"
        left = _wrap(t.left, fmt, _prec(t.left) < 1)
        right = _wrap(t.right, fmt, _prec(t.right) <= 1)
        return f"{left}{op}{right}"
    if isinstance(t, Mul):
        left = _wrap(t.left, fmt, _prec(t.left) < 2)
        right = _wrap(t.right, fmt, _prec(t.right) <= 2)
        return f"{left}*{right}"
    if isinstance(t, Div):
        tag = t.decoration or ""
        if fmt == "frac":
            head = "frac" + (f"_{tag}" if tag else "")
            return f"{head}({_fmt(t.left, fmt)},{_fmt(t.right, fmt)})"
        sym = ("/" if fmt == "inline" else ":") + tag
        left = _wrap(t.left, fmt, _prec(t.left) < 2)
        right = _wrap(t.right, fmt, _prec(t.right) <= 2)
        if not tag and right[:2] in ("ft", "fv"):
            right = f"({right})"
        return f"{left}{sym}{right}"
    raise TypeError(f"not a term: {t!r}")


# --------------------------------------------------------------------------
# Structure helpers


def subterms(t: Term) -> Iterator[Term]:
    """All subterms of t, the term itself first."""
    yield t
    if isinstance(t, Neg):
        yield from subterms(t.operand)
    elif isinstance(t, (Add, Sub, Mul, Div)):
        yield from subterms(t.left)
        yield from subterms(t.right)


def contains_div(t: Term) -> bool:
    return any(isinstance(s, Div) for s in subterms(t))


def contains_var(t: Term) -> bool:
    return any(isinstance(s, Var) for s in subterms(t))


def erase_decorations(t: Term) -> Term:
    if isinstance(t, (Lit, Var)):
        return t
    if isinstance(t, Neg):
        return Neg(erase_decorations(t.operand))
    if isinstance(t, Add):
        return Add(erase_decorations(t.left), erase_decorations(t.right))
    if isinstance(t, Sub):
        return Sub(erase_decorations(t.left), erase_decorations(t.right))
    if isinstance(t, Mul):
        return Mul(erase_decorations(t.left), erase_decorations(t.right))
    if isinstance(t, Div):
        return Div(erase_decorations(t.left), erase_decorations(t.right))
    raise TypeError(f"not a term: {t!r}")


# --------------------------------------------------------------------------
# Taxonomy


@dataclass(frozen=True)
class TaxonomyFlags:
    """Syntactic classification of a term.

    proper is defined (non-None) exactly for simple fracterms.
    """

    is_fracterm: bool
    closed: bool
    flat: bool
    simple: bool
    safe: bool
    simplified: bool
    proper: Optional[bool]


def is_fracterm(t: Term) -> bool:
    """True iff the leading operator of t is division."""
    return isinstance(t, Div)


def _canonical_numeral(l: Lit) -> bool:
    # Rules out redundant forms such as "007" and "-0".
    return l.digits == str(l.value)


def classify(t: Term) -> TaxonomyFlags:
    fracterm = isinstance(t, Div)
    closed = not contains_var(t)
    flat = fracterm and not contains_div(t.left) and not contains_div(t.right)
    simple = flat and isinstance(t.left, Lit) and isinstance(t.right, Lit)
    safe = False
    simplified = False
    proper = None
    if simple:
        n, d = t.left.value, t.right.value
        safe = d != 0
        simplified = (
            d > 0
            and math.gcd(abs(n), d) == 1
            and _canonical_numeral(t.left)
            and _canonical_numeral(t.right)
        )
        proper = abs(n) < abs(d)
    return TaxonomyFlags(
        is_fracterm=fracterm,
        closed=closed,
        flat=flat,
        simple=simple,
        safe=safe,
        simplified=simplified,
        proper=proper,
    )


def num(t: Term) -> Term:
    """Numerator of a fracterm, decorations erased."""
    if not isinstance(t, Div):
        raise NotAFracterm(f"leading operator of {t} is not division")
    return erase_decorations(t.left)


def denom(t: Term) -> Term:
    """Denominator of a fracterm, decorations erased."""
    if not isinstance(t, Div):
        raise NotAFracterm(f"leading operator of {t} is not division")
    return erase_decorations(t.right)


# --------------------------------------------------------------------------
# Literal desugaring: every Lit expands into the {0, 1, +, *} fragment
# (plus unary minus for negative numerals).


def expand_literal(n: int) -> Term:
    if n < 0:
        return Neg(expand_literal(-n))
    if n == 0:
        return Lit("0")
    if n == 1:
        return Lit("1")
    two = Add(Lit("1"), Lit("1"))
    half = expand_literal(n // 2)
    doubled = Mul(two, half)
    return doubled if n % 2 == 0 else Add(doubled, Lit("1"))


def desugar_literals(t: Term) -> Term:
    """Replace every numeral other than 0 and 1 by its 0/1 expansion."""
    if isinstance(t, Lit):
        return t if t.digits in ("0", "1") else expand_literal(t.value)
    if isinstance(t, Var):
        return t
    if isinstance(t, Neg):
        return Neg(desugar_literals(t.operand))
    if isinstance(t, Add):
        return Add(desugar_literals(t.left), desugar_literals(t.right))
    if isinstance(t, Sub):
        return Sub(desugar_literals(t.left), desugar_literals(t.right))
    if isinstance(t, Mul):
        return Mul(desugar_literals(t.left), desugar_literals(t.right))
    if isinstance(t, Div):
        return Div(desugar_literals(t.left), desugar_literals(t.right), t.decoration)
    raise TypeError(f"not a term: {t!r}")

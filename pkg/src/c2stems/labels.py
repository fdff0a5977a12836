"""Element labels: the grammar, parser, and negative-cone arithmetic.

Canonical ASCII encoding: ``g`` for γ, ``r`` for ρ, ``t`` for τ.  Unicode
γ/ρ/τ are accepted on input.  The three label shapes are

* positive cone:  ``r^a t^b <body>``  (plain Ext classes times ρ, τ powers),
* negative cone:  ``g/(r^a t^b) <body>``  with b >= 1,
* Q classes:      ``Q/r^a <body>``.

Bodies are space-separated monomials in dataset symbols, e.g.
``h_0^2 h_3`` or ``P c_0``.  Exponent ``^1`` is omitted in canonical form
and factors are sorted by symbol name.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .degrees import TriDegree


class ParseError(Exception):
    def __init__(self, message: str, text: str, offset: int, expected: tuple[str, ...] = ()):
        self.text = text
        self.offset = offset
        self.expected = expected
        detail = f" at byte {offset}"
        if expected:
            detail += f" (expected one of: {', '.join(expected)})"
        super().__init__(message + detail + f" in {text!r}")


class UnknownSymbol(Exception):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown generator symbol {name!r}")


@dataclass(frozen=True)
class GeneratorSymbol:
    """A named multiplicative symbol with a fixed tri-degree.

    ``tau_torsion`` is None for τ-free symbols and the torsion exponent k
    (τ^k annihilates) for τ-torsion dataset generators.
    """

    name: str
    degree: TriDegree
    tau_torsion: Optional[int] = None


class SymbolTable:
    def __init__(self, symbols: Iterable[GeneratorSymbol] = ()):
        self._by_name: dict[str, GeneratorSymbol] = {}
        for sym in symbols:
            self.add(sym)

    def add(self, sym: GeneratorSymbol):
        if sym.name in self._by_name:
            raise ValueError(f"duplicate symbol {sym.name!r}")
        self._by_name[sym.name] = sym

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __getitem__(self, name: str) -> GeneratorSymbol:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownSymbol(name) from None

    def names(self) -> list[str]:
        return sorted(self._by_name)


@dataclass(frozen=True)
class Monomial:
    """A product of symbols with positive exponents, sorted by name."""

    factors: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        names = [n for n, _ in self.factors]
        if names != sorted(names) or len(set(names)) != len(names):
            raise ValueError("monomial factors must be sorted and unique")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be >= 1")

    @staticmethod
    def of(*pairs: tuple[str, int]) -> "Monomial":
        acc: dict[str, int] = {}
        for name, exp in pairs:
            acc[name] = acc.get(name, 0) + exp
        return Monomial(tuple(sorted((n, e) for n, e in acc.items() if e)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial.of(*(self.factors + other.factors))

    def degree(self, table: SymbolTable) -> TriDegree:
        d = TriDegree(0, 0, 0)
        for name, exp in self.factors:
            d = d + table[name].degree.scale(exp)
        return d

    def format(self) -> str:
        parts = []
        for name, exp in self.factors:
            parts.append(name if exp == 1 else f"{name}^{exp}")
        return " ".join(parts)

    @property
    def is_unit(self) -> bool:
        return not self.factors


@dataclass(frozen=True)
class Pos:
    """Positive-cone coefficient ρ^a τ^b."""

    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("positive-cone exponents must be >= 0")


@dataclass(frozen=True)
class Gamma:
    """Negative-cone coefficient γ/(ρ^a τ^b), b >= 1."""

    a: int = 0
    b: int = 1

    def __post_init__(self):
        if self.a < 0 or self.b < 1:
            raise ValueError("gamma labels require a >= 0 and b >= 1")


@dataclass(frozen=True)
class QCone:
    """Q-class coefficient Q/ρ^a."""

    a: int = 0

    def __post_init__(self):
        if self.a < 0:
            raise ValueError("Q labels require a >= 0")


Cone = Union[Pos, Gamma, QCone]


@dataclass(frozen=True)
class ClassLabel:
    cone: Cone
    body: Monomial = Monomial()

    def degree(self, table: SymbolTable) -> TriDegree:
        base = self.body.degree(table)
        c = self.cone
        if isinstance(c, Pos):
            return base + TriDegree(-c.a, 0, c.b)
        if isinstance(c, Gamma):
            return base + TriDegree(c.a, 0, -1 - c.b)
        return base + TriDegree(1 + c.a, -1, 0)

    def format(self) -> str:
        c = self.cone
        body = self.body.format()
        if isinstance(c, Pos):
            coef = _powers(c.a, c.b)
            if not coef and not body:
                return "1"
            return " ".join(x for x in (coef, body) if x)
        if isinstance(c, Gamma):
            inner = _powers(c.a, c.b) or "t"
            head = f"g/({inner})"
            return f"{head} {body}" if body else head
        head = "Q" if c.a == 0 else f"Q/r^{c.a}" if c.a > 1 else "Q/r"
        return f"{head} {body}" if body else head

    def __str__(self) -> str:
        return self.format()

    def sort_key(self) -> str:
        return self.format()


def _powers(a: int, b: int) -> str:
    parts = []
    if a == 1:
        parts.append("r")
    elif a > 1:
        parts.append(f"r^{a}")
    if b == 1:
        parts.append("t")
    elif b > 1:
        parts.append(f"t^{b}")
    return " ".join(parts)


def degree_of_label(label: ClassLabel, table: SymbolTable) -> TriDegree:
    return label.degree(table)


_UNICODE_MAP = str.maketrans({"γ": "g", "ρ": "r", "τ": "t", "·": " "})


class _Lexer:
    STRUCTURAL = "()/^+"

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens: list[tuple[str, str, int]] = []  # (kind, value, offset)
        self._scan()
        self.idx = 0

    def _scan(self):
        t = self.text
        i = 0
        while i < len(t):
            ch = t[i]
            if ch.isspace():
                i += 1
                continue
            if ch in self.STRUCTURAL:
                self.tokens.append(("punct", ch, i))
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(t) and t[j].isdigit():
                    j += 1
                self.tokens.append(("int", t[i:j], i))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < len(t) and (t[j].isalnum() or t[j] == "_"):
                    j += 1
                self.tokens.append(("word", t[i:j], i))
                i = j
                continue
            raise ParseError(f"unexpected character {ch!r}", t, i)

    def peek(self, k: int = 0):
        if self.idx + k < len(self.tokens):
            return self.tokens[self.idx + k]
        return ("eof", "", len(self.text))

    def next(self):
        tok = self.peek()
        self.idx += 1
        return tok

    def expect_punct(self, ch: str):
        kind, val, off = self.next()
        if kind != "punct" or val != ch:
            raise ParseError("unexpected token", self.text, off, expected=(ch,))


def _parse_exponent(lx: _Lexer) -> int:
    kind, val, off = lx.peek()
    if kind == "punct" and val == "^":
        lx.next()
        kind, val, off = lx.next()
        if kind != "int":
            raise ParseError("exponent must be an integer", lx.text, off, expected=("uint",))
        return int(val)
    return 1


def _parse_rt_powers(lx: _Lexer) -> tuple[int, int]:
    """Parse optional ``r[^a]`` then optional ``t[^b]``."""
    a = b = 0
    kind, val, _ = lx.peek()
    if kind == "word" and val == "r":
        lx.next()
        a = _parse_exponent(lx)
        kind, val, _ = lx.peek()
    if kind == "word" and val == "t":
        lx.next()
        b = _parse_exponent(lx)
    return a, b


def _parse_body(lx: _Lexer, table: Optional[SymbolTable]) -> Monomial:
    pairs: list[tuple[str, int]] = []
    while True:
        kind, val, off = lx.peek()
        if kind != "word":
            break
        if table is not None and val not in table:
            raise UnknownSymbol(val)
        lx.next()
        exp = _parse_exponent(lx)
        pairs.append((val, exp))
    return Monomial.of(*pairs)


def parse_label(text: str, table: Optional[SymbolTable] = None) -> ClassLabel:
    """Parse a single class label.

    When a symbol table is supplied, body factors are validated against it
    (UnknownSymbol otherwise).  Without a table any word token is accepted
    as a symbol, which is convenient for grammar-level round-trip tests.
    """
    clean = text.translate(_UNICODE_MAP)
    lx = _Lexer(clean)
    kind, val, off = lx.peek()
    if kind == "word" and val == "g" and lx.peek(1)[0:2] == ("punct", "/"):
        lx.next()
        lx.next()
        lx.expect_punct("(")
        a, b = _parse_rt_powers(lx)
        if b == 0:
            raise ParseError("gamma labels need a tau power >= 1", clean, lx.peek()[2],
                             expected=("t",))
        lx.expect_punct(")")
        body = _parse_body(lx, table)
        label = ClassLabel(Gamma(a, b), body)
    elif kind == "word" and val == "Q":
        lx.next()
        a = 0
        k2, v2, _ = lx.peek()
        if k2 == "punct" and v2 == "/":
            lx.next()
            k3, v3, off3 = lx.next()
            if (k3, v3) != ("word", "r"):
                raise ParseError("Q labels divide only by r powers", clean, off3,
                                 expected=("r",))
            a = _parse_exponent(lx)
        body = _parse_body(lx, table)
        label = ClassLabel(QCone(a), body)
    elif kind == "int" and val == "1" and lx.peek(1)[0] == "eof":
        lx.next()
        label = ClassLabel(Pos(0, 0))
    else:
        a, b = _parse_rt_powers(lx)
        body = _parse_body(lx, table)
        if a == 0 and b == 0 and body.is_unit:
            raise ParseError("empty label", clean, off,
                             expected=("g/", "Q", "r", "t", "symbol", "1"))
        label = ClassLabel(Pos(a, b), body)
    kind, val, off = lx.peek()
    if kind != "eof":
        raise ParseError("trailing input", clean, off, expected=("end of label",))
    return label


def format_label(label: ClassLabel) -> str:
    return label.format()


def parse_label_expr(text: str, table: Optional[SymbolTable] = None) -> list[ClassLabel]:
    """Parse a sum of labels separated by '+'; 'ZERO' parses to []."""
    clean = text.translate(_UNICODE_MAP).strip()
    if clean == "ZERO" or clean == "0":
        return []
    return [parse_label(part, table) for part in clean.split("+")]


def format_label_expr(labels: list[ClassLabel]) -> str:
    if not labels:
        return "ZERO"
    return " + ".join(sorted(lbl.format() for lbl in labels))


def nc_multiply(coef: ClassLabel, e: ClassLabel) -> Optional[ClassLabel]:
    """Multiply a pure ρ^a τ^b coefficient into a negative-cone class.

    Returns None when the product is zero (the fundamental relations
    τ^b · γ/τ^b = 0 and ρ^a · γ/ρ^{a-1}... = 0 at exponent exhaustion).
    """
    if not isinstance(coef.cone, Pos) or not coef.body.is_unit:
        raise ValueError("coefficient must be a pure r/t power")
    if not isinstance(e.cone, Gamma):
        raise ValueError("second factor must be a gamma-cone class")
    j = e.cone.a - coef.cone.a
    k = e.cone.b - coef.cone.b
    if j < 0 or k < 1:
        return None
    return ClassLabel(Gamma(j, k), e.body)

"""Text form of coefficients, M_q polynomials and free-algebra expressions.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := (coeff '*')? factor (('*')? factor)*
    factor  := 'D[' labels ';' labels ']' ('@' nat)?  |  't[' nat ',' nat ']' ('@' nat)?
    labels  := nat (',' nat)*
    coeff   := Laurent polynomial in q built from integers, 'q', '^' (exponent
               may be negative), '+', '-', '*' and parentheses

A leading sign is allowed on the first term. A term made only of a
coefficient stands for that scalar times the empty monomial, and ``0`` is the
zero expression. ``#`` starts a comment that runs to the end of the line.
"""

from __future__ import annotations

from pathlib import Path

from .identity import FreeExpr, MinorSymbol
from .laurent import ONE, LaurentInt, _render_unsigned, q_power
from .mq import NCPoly

__all__ = [
    "ParseError",
    "parse_expr",
    "parse_coeff",
    "read_expr_file",
    "render_expr",
    "render_coeff_factor",
    "render_ncpoly",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # -- low level -------------------------------------------------------
    def where(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, msg: str, pos: int | None = None) -> ParseError:
        return ParseError(msg, *self.where(pos))

    def skip(self) -> None:
        text = self.text
        while self.pos < len(text):
            ch = text[self.pos]
            if ch.isspace():
                self.pos += 1
            elif ch == "#":
                nl = text.find("\n", self.pos)
                self.pos = len(text) if nl < 0 else nl + 1
            else:
                break

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def startswith(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str) -> None:
        if not self.startswith(s):
            found = self.peek() or "end of input"
            raise self.error(f"expected {s!r}, found {found!r}")
        self.pos += len(s)

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.peek() or "end of input"
            raise self.error(f"expected a natural number, found {found!r}")
        return int(self.text[start : self.pos])

    def at_end(self) -> bool:
        return self.peek() == ""

    # -- coefficients ----------------------------------------------------
    def at_atom(self) -> bool:
        ch = self.peek()
        return ch.isdigit() or ch == "(" or (ch == "q" and not self.startswith("q["))

    def atom(self) -> LaurentInt:
        ch = self.peek()
        if ch.isdigit():
            return LaurentInt.coerce(self.nat())
        if ch == "(":
            self.pos += 1
            value = self.laurent_sum()
            self.expect(")")
            return value
        if ch == "q":
            self.pos += 1
            if self.peek() == "^":
                self.pos += 1
                sign = 1
                if self.peek() == "-":
                    self.pos += 1
                    sign = -1
                return q_power(sign * self.nat())
            return q_power(1)
        raise self.error(f"malformed coefficient at {ch or 'end of input'!r}")

    def laurent_product(self) -> LaurentInt:
        value = self.atom()
        while True:
            if self.peek() == "*":
                self.pos += 1
                value = value * self.atom()
            elif self.at_atom():
                value = value * self.atom()
            else:
                return value

    def laurent_sum(self) -> LaurentInt:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        value = self.laurent_product() * sign
        while self.peek() in ("+", "-"):
            neg = self.peek() == "-"
            self.pos += 1
            term = self.laurent_product()
            value = value - term if neg else value + term
        return value

    # -- expressions -----------------------------------------------------
    def labels(self) -> tuple[int, ...]:
        out = [self.nat()]
        while self.peek() == ",":
            self.pos += 1
            out.append(self.nat())
        return tuple(out)

    def decoration(self) -> int:
        if self.peek() == "@":
            self.pos += 1
            return self.nat()
        return 0

    def at_factor(self) -> bool:
        return self.startswith("D[") or self.startswith("t[")

    def factor(self) -> MinorSymbol:
        start = self.pos
        if self.startswith("D["):
            self.pos += 2
            rows = self.labels()
            self.expect(";")
            cols = self.labels()
            self.expect("]")
        elif self.startswith("t["):
            self.pos += 2
            rows = (self.nat(),)
            self.expect(",")
            cols = (self.nat(),)
            self.expect("]")
        else:
            raise self.error("expected a factor 'D[...]' or 't[...]'")
        dec = self.decoration()
        if len(rows) != len(cols):
            raise self.error(f"row and column label counts differ ({len(rows)} vs {len(cols)})", start)
        if 0 in rows or 0 in cols:
            raise self.error("labels must be positive", start)
        return MinorSymbol(rows, cols, dec)

    def term(self) -> tuple[tuple, LaurentInt]:
        coeff = ONE
        factors: list = []
        self.skip()
        start = self.pos
        # coefficient atoms come first, then factors
        while True:
            if self.at_factor():
                break
            if not self.at_atom():
                if factors or coeff is not ONE:
                    break
                found = self.peek() or "end of input"
                raise self.error(f"expected a term, found {found!r}")
            coeff = coeff * self.atom()
            if self.peek() == "*":
                self.pos += 1
                if not (self.at_atom() or self.at_factor()):
                    raise self.error("dangling '*'")
            elif not (self.at_atom() or self.at_factor()):
                break
        while self.at_factor():
            factors.append(self.factor())
            if self.peek() == "*":
                self.pos += 1
                if not self.at_factor():
                    if self.at_atom():
                        raise self.error("coefficients must precede the factors of a term")
                    raise self.error("dangling '*'")
        if self.at_atom():
            raise self.error("coefficients must precede the factors of a term")
        if not factors and coeff is ONE and self.pos == start:
            raise self.error("empty term")
        return tuple(factors), coeff

    def expr(self) -> FreeExpr:
        if self.at_end():
            raise self.error("empty expression")
        terms = []
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        m, c = self.term()
        terms.append((m, c * sign))
        while self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
            m, c = self.term()
            terms.append((m, c * sign))
        if not self.at_end():
            raise self.error(f"unexpected {self.peek()!r}")
        return FreeExpr(terms)


def parse_expr(text: str) -> FreeExpr:
    """Parse the text form of a (decorated) free-algebra expression."""
    return _Parser(text).expr()


def parse_coeff(text: str) -> LaurentInt:
    p = _Parser(text)
    value = p.laurent_sum()
    if not p.at_end():
        raise p.error(f"unexpected {p.peek()!r}")
    return value


def read_expr_file(path: str | Path) -> FreeExpr:
    return parse_expr(Path(path).read_text(encoding="utf-8"))


def render_coeff_factor(c: LaurentInt) -> tuple[str, str]:
    """Split a coefficient into a sign and a multiplier prefix.

    ``1`` gives ``("+", "")``, ``-q^2`` gives ``("-", "q^2*")`` and a
    multi-term coefficient is parenthesized.
    """
    if c.is_monomial():
        (e, k), = c.items()
        sign = "-" if k < 0 else "+"
        if abs(k) == 1 and e == 0:
            return sign, ""
        return sign, _render_unsigned(abs(k), e) + "*"
    return "+", f"({c.render()})*"


def _join_terms(pieces: list[tuple[str, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for i, (sign, body) in enumerate(pieces):
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def _scalar_piece(c: LaurentInt) -> tuple[str, str]:
    if c.is_monomial():
        (e, k), = c.items()
        return ("-" if k < 0 else "+"), _render_unsigned(abs(k), e)
    return "+", f"({c.render()})"


def render_expr(f: FreeExpr) -> str:
    """Deterministic text form; monomials sorted lexicographically by symbols."""
    pieces = []
    for m, c in f.sorted_items():
        if not m:
            pieces.append(_scalar_piece(c))
            continue
        sign, prefix = render_coeff_factor(c)
        pieces.append((sign, prefix + " ".join(s.render() for s in m)))
    return _join_terms(pieces)


def render_word(word) -> str:
    return "*".join(f"t[{r},{c}]" for r, c in word)


def render_ncpoly(p: NCPoly) -> str:
    pieces = []
    for w, c in p.sorted_items():
        if not w:
            pieces.append(_scalar_piece(c))
            continue
        sign, prefix = render_coeff_factor(c)
        pieces.append((sign, prefix + render_word(w)))
    return _join_terms(pieces)

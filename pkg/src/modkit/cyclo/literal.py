"""Text literals for cyclotomic numbers.

Grammar (whitespace insignificant)::

    expr     := sign? term (('+' | '-') term)*
    term     := rational ('*' zpow)? | zpow
    zpow     := 'z' ('^' integer)?
    rational := digits ('/' digits)?
    integer  := '-'? digits

``z`` stands for zeta_N, N being the conductor supplied by the caller.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .number import CycNum

_DIGITS = re.compile(r"\d+")


class LiteralError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at column {pos + 1} in {text!r}")
        self.pos = pos


def _tokens(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif "0" <= ch <= "9":
            m = _DIGITS.match(text, pos)
            out.append(("int", m.group(0), pos))
            pos = m.end()
        else:
            out.append(("op", ch, pos))
            pos += 1
    out.append(("end", "", len(text)))
    return out


def parse_literal(text: str, conductor: int) -> CycNum:
    toks = _tokens(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind=None, value=None):
        nonlocal i
        tok = toks[i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise LiteralError(f"expected {want!r}, got {got!r}", text, tok[2])
        i += 1
        return tok

    def zpow() -> int:
        take("op", "z")
        if peek()[1] == "^":
            take()
            sign = 1
            if peek()[1] == "-":
                take()
                sign = -1
            return sign * int(take("int")[1])
        return 1

    def term() -> tuple[Fraction, int]:
        tok = peek()
        if tok[0] == "int":
            num = int(take()[1])
            coeff = Fraction(num)
            if peek()[1] == "/":
                take()
                d = int(take("int")[1])
                if d == 0:
                    raise LiteralError("zero denominator", text, toks[i - 1][2])
                coeff = Fraction(num, d)
            if peek()[1] == "*":
                take()
                return coeff, zpow()
            return coeff, 0
        if tok[1] == "z":
            return Fraction(1), zpow()
        got = tok[1] or "end of input"
        raise LiteralError(f"expected a term, got {got!r}", text, tok[2])

    acc: dict[int, Fraction] = {}
    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take()[1] == "-" else 1
    while True:
        c, e = term()
        acc[e % conductor] = acc.get(e % conductor, Fraction(0)) + sign * c
        tok = peek()
        if tok[0] == "end":
            break
        if tok[1] not in ("+", "-"):
            raise LiteralError(f"unexpected {tok[1]!r}", text, tok[2])
        sign = -1 if take()[1] == "-" else 1
    return CycNum(conductor, acc)


def format_literal(x: CycNum) -> str:
    """Render ``x`` in the literal grammar, relative to its own conductor."""
    if x.is_zero():
        return "0"
    parts = []
    for e, c in x.terms:
        q = Fraction(c, x.den)
        mag = abs(q)
        if e == 0:
            body = str(mag)
        else:
            z = "z" if e == 1 else f"z^{e}"
            body = z if mag == 1 else f"{mag}*{z}"
        parts.append(("-" if q < 0 else "+", body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for s, body in parts[1:]:
        out += f" {s} {body}"
    return out

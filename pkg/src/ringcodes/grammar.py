"""A tiny infix expression parser shared by the element and polynomial grammars.

Expressions are sums/differences of products of powers of atoms.  Atoms are
integers, identifiers, parenthesised sub-expressions and ``{...}`` groups;
the caller decides what identifiers and brace groups mean.
"""

from __future__ import annotations

import re
from typing import Callable

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(\{)|([-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        num, ident, brace, op = m.groups()
        if brace:
            depth, k = 1, m.end()
            while k < len(text) and depth:
                depth += {"{": 1, "}": -1}.get(text[k], 0)
                k += 1
            if depth:
                raise ParseError(f"unbalanced braces in {text!r}")
            tokens.append(("brace", text[m.end() : k - 1]))
            pos = k
            continue
        if num is not None:
            tokens.append(("num", num))
        elif ident is not None:
            tokens.append(("ident", ident))
        else:
            tokens.append(("op", op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


def parse_expression(
    text: str,
    number: Callable[[int], object],
    ident: Callable[[str], object],
    brace: Callable[[str], object] | None = None,
):
    """Evaluate ``text`` with the given atom constructors.

    The values returned by the constructors must support ``+``, ``-``, ``*``,
    unary ``-`` and ``** int``.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        sign = None
        if peek() in (("op", "-"), ("op", "+")):
            sign = take()[1]
        val = term()
        if sign == "-":
            val = -val
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = factor()
        while peek() == ("op", "*"):
            take()
            val = val * factor()
        return val

    def factor():
        val = atom()
        if peek() == ("op", "^"):
            take()
            kind, e = take()
            if kind != "num":
                raise ParseError(f"exponent must be a non-negative integer in {text!r}")
            val = val ** int(e)
        return val

    def atom():
        kind, v = take()
        if kind == "num":
            return number(int(v))
        if kind == "ident":
            return ident(v)
        if kind == "brace":
            if brace is None:
                raise ParseError(f"braces are not allowed here: {text!r}")
            return brace(v)
        if (kind, v) == ("op", "("):
            val = expr()
            if take() != ("op", ")"):
                raise ParseError(f"missing ')' in {text!r}")
            return val
        raise ParseError(f"unexpected token {v!r} in {text!r}")

    result = expr()
    if pos != len(tokens):
        raise ParseError(f"trailing input {tokens[pos][1]!r} in {text!r}")
    return result

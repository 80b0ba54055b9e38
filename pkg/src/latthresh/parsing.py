"""Parsers for Boolean function inputs: packed truth tables and monotone
expressions (AND/OR over variables, no negation).
"""

from __future__ import annotations

import re
from .boolean_domain import MAX_ARITY
from .errors import ParseError
from .threshold import BooleanFunction


def parse_truth_table(s: str) -> BooleanFunction:
    """Table of 2^n characters 0/1; position k is the value at the point
    with word value k."""
    s = s.strip()
    length = len(s)
    if length == 0 or length & (length - 1):
        raise ParseError(f"table length {length} is not a power of two")
    n = length.bit_length() - 1
    if n < 1:
        raise ParseError("table must cover at least one variable (length >= 2)")
    truth = 0
    for k, c in enumerate(s):
        if c == "1":
            truth |= 1 << k
        elif c != "0":
            raise ParseError(f"invalid table character {c!r}", k)
    return BooleanFunction(n, truth)


_EXPR_TOKEN = re.compile(r"\s*(x\d+|[A-Za-z]|[&^|()]|\S)")
_NEGATION_TOKENS = {"!", "~", "-"}


class _ExprParser:
    """Recursive descent over: or_expr := and_expr (('|'|'v') and_expr)*;
    and_expr := atom (('&'|'^') atom)*; atom := var | '(' or_expr ')'.

    Variables are either all explicit (x1..xn) or bare letters numbered by
    first appearance; `v` is reserved for OR.
    """

    def __init__(self, s: str):
        self.s = s
        self.tokens: list[tuple[str, int]] = []
        pos = 0
        while pos < len(s):
            if s[pos].isspace():
                pos += 1
                continue
            m = _EXPR_TOKEN.match(s, pos)
            text = m.group(1)
            self.tokens.append((text, m.start(1)))
            pos = m.end()
        self.idx = 0
        self.letters: dict[str, int] = {}
        self.explicit = any(t.startswith("x") and len(t) > 1 for t, _ in self.tokens)

    def peek(self):
        return self.tokens[self.idx][0] if self.idx < len(self.tokens) else None

    def take(self):
        tok = self.tokens[self.idx]
        self.idx += 1
        return tok

    def var_index(self, text: str, at: int) -> int:
        if text.startswith("x") and len(text) > 1:
            i = int(text[1:])
            if i < 1:
                raise ParseError(f"variable index must be positive, got {text}", at)
            return i
        if self.explicit:
            raise ParseError(
                f"bare letter {text!r} mixed with indexed variables", at)
        if text not in self.letters:
            self.letters[text] = len(self.letters) + 1
        return self.letters[text]

    def atom(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", len(self.s))
        text, at = self.take()
        if text in _NEGATION_TOKENS:
            raise ParseError("negation is not supported (monotone fragment only)", at)
        if text == "(":
            node = self.or_expr()
            if self.peek() != ")":
                raise ParseError("expected ')'",
                                 self.tokens[self.idx][1] if self.idx < len(self.tokens) else len(self.s))
            self.take()
            return node
        if text == "v":
            raise ParseError("'v' is the OR operator, not a variable", at)
        if text.startswith("x") or (len(text) == 1 and text.isalpha()):
            return ("var", self.var_index(text, at))
        raise ParseError(f"unexpected token {text!r}", at)

    def and_expr(self):
        node = self.atom()
        while self.peek() in ("&", "^"):
            self.take()
            node = ("and", node, self.atom())
        return node

    def or_expr(self):
        node = self.and_expr()
        while self.peek() in ("|", "v"):
            self.take()
            node = ("or", node, self.and_expr())
        return node

    def parse(self):
        node = self.or_expr()
        if self.idx != len(self.tokens):
            text, at = self.tokens[self.idx]
            if text in _NEGATION_TOKENS:
                raise ParseError("negation is not supported (monotone fragment only)", at)
            raise ParseError(f"trailing input {text!r}", at)
        return node


def _max_var(node) -> int:
    if node[0] == "var":
        return node[1]
    return max(_max_var(node[1]), _max_var(node[2]))


def _eval(node, bits: int) -> int:
    if node[0] == "var":
        return (bits >> (node[1] - 1)) & 1
    a = _eval(node[1], bits)
    b = _eval(node[2], bits)
    return a & b if node[0] == "and" else a | b


def parse_expression(s: str) -> BooleanFunction:
    """Evaluate a monotone AND/OR expression into a truth table; arity is
    the highest variable index referenced."""
    node = _ExprParser(s).parse()
    n = _max_var(node)
    if n > MAX_ARITY:
        raise ParseError(f"arity {n} exceeds the cap of {MAX_ARITY}")
    truth = 0
    for k in range(1 << n):
        if _eval(node, k):
            truth |= 1 << k
    return BooleanFunction(n, truth)

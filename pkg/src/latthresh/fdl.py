"""Free distributive lattice on n generators w_1..w_n with adjoined bounds.

Elements are canonical antichain CNFs: a set of clauses, each clause a
bitmask J meaning the join of the generators w_j, j in J, the whole element
being the meet over its clauses.  Bottom is the single empty clause {0},
top is the empty clause set.  The order test is purely combinatorial: a <= b
iff every clause of b contains some clause of a.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .boolean_domain import MAX_ARITY, MAX_ENUM_ARITY, DEDEKIND, Point, UpSet
from .errors import ArityMismatchError, CapacityError, DomainError, ParseError


@dataclass(frozen=True, order=True)
class FdlElement:
    """Canonical CNF element; ``clauses`` is a sorted tuple of bitmasks
    forming a subset-antichain.  Use :func:`canonicalize` to build one from
    raw clauses."""

    n: int
    clauses: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ARITY:
            raise DomainError(f"arity must be between 1 and {MAX_ARITY}, got {self.n}")
        seen = sorted(set(self.clauses))
        if list(self.clauses) != seen:
            raise DomainError("clauses must be strictly sorted by bitmask")
        for c in self.clauses:
            if c < 0 or c >> self.n:
                raise DomainError(f"clause {c:#x} does not fit arity {self.n}")
        for c in self.clauses:
            for d in self.clauses:
                if c != d and d & ~c == 0:
                    raise DomainError("clauses are not an antichain")

    def is_top(self) -> bool:
        return not self.clauses

    def is_bottom(self) -> bool:
        return self.clauses == (0,)


def canonicalize(raw_clauses: Iterable[int], n: int) -> FdlElement:
    """Drop every clause that contains another; the empty clause absorbs
    everything (bottom).  Idempotent."""
    clauses = set(raw_clauses)
    for c in clauses:
        if c < 0 or c >> n:
            raise DomainError(f"clause {c:#x} does not fit arity {n}")
    minimal = [
        c
        for c in clauses
        if not any(d != c and d & ~c == 0 for d in clauses)
    ]
    return FdlElement(n, tuple(sorted(minimal)))


def top(n: int) -> FdlElement:
    return FdlElement(n, ())


def bottom(n: int) -> FdlElement:
    return FdlElement(n, (0,))


def generator(n: int, i: int) -> FdlElement:
    """The generator w_i, 1-based."""
    if not 1 <= i <= n:
        raise DomainError(f"generator index {i} out of range 1..{n}")
    return FdlElement(n, (1 << (i - 1),))


def generators(n: int) -> list[FdlElement]:
    return [generator(n, i) for i in range(1, n + 1)]


def _check_arity(a: FdlElement, b: FdlElement) -> None:
    if a.n != b.n:
        raise ArityMismatchError(f"arity mismatch: {a.n} vs {b.n}")


def leq(a: FdlElement, b: FdlElement) -> bool:
    """a <= b iff every clause of b contains some clause of a."""
    _check_arity(a, b)
    return all(any(i & ~j == 0 for i in a.clauses) for j in b.clauses)


def meet(a: FdlElement, b: FdlElement) -> FdlElement:
    _check_arity(a, b)
    return canonicalize(set(a.clauses) | set(b.clauses), a.n)


def join(a: FdlElement, b: FdlElement) -> FdlElement:
    _check_arity(a, b)
    return canonicalize({i | j for i in a.clauses for j in b.clauses}, a.n)


def eval_element(e: FdlElement, x: Point) -> int:
    """Interpret generators as coordinates: meet over clauses of the join
    of the selected coordinates."""
    if e.n != x.n:
        raise ArityMismatchError(f"arity mismatch: {e.n} vs {x.n}")
    # Top has no clauses (empty meet = 1); bottom's empty clause never
    # intersects x (empty join = 0).
    return int(all(c & x.bits for c in e.clauses))


def to_up_set(e: FdlElement) -> UpSet:
    """True-set of the element's evaluation; the standard bijection onto
    monotone functions."""
    mask = 0
    for k in range(1 << e.n):
        if all(c & k for c in e.clauses):
            mask |= 1 << k
    return UpSet(e.n, mask)


def enumerate_elements(n: int) -> list[FdlElement]:
    """All canonical elements, in sorted clause-tuple order; the count is
    the Dedekind number."""
    if not 1 <= n <= MAX_ENUM_ARITY:
        projected = DEDEKIND.get(n, "astronomically many")
        raise CapacityError(
            f"element enumeration is capped at n={MAX_ENUM_ARITY}; "
            f"n={n} would produce {projected} elements"
        )
    out: list[tuple[int, ...]] = []
    masks = list(range(1 << n))

    def extend(chosen: list[int], start: int) -> None:
        out.append(tuple(chosen))
        for m in masks[start:]:
            if all(not (c & ~m == 0 or m & ~c == 0) for c in chosen):
                chosen.append(m)
                extend(chosen, m + 1)
                chosen.pop()

    extend([], 0)
    return sorted(FdlElement(n, c) for c in out)


def format_element(e: FdlElement) -> str:
    """Canonical text: `0`, `1`, `w1`, or `(w1 v w2) ^ (w3 v w4)` with
    clauses in bitmask order."""
    if e.is_top():
        return "1"
    if e.is_bottom():
        return "0"
    parts = []
    for c in e.clauses:
        names = [f"w{i + 1}" for i in range(e.n) if (c >> i) & 1]
        if len(names) == 1:
            parts.append(names[0])
        else:
            parts.append("(" + " v ".join(names) + ")")
    return " ^ ".join(parts)


_TOKEN = re.compile(r"\s*(w\d+|[\^v()01])")


def parse_element(s: str, n: int) -> FdlElement:
    """Parse `^`/`v` expressions over generators w1..wn and literals 0/1
    into canonical form.  `^` binds tighter than `v`."""
    tokens: list[tuple[str, int]] = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            if s[pos:].strip():
                raise ParseError(f"unexpected character {s[pos]!r}", pos)
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    idx = 0

    def peek():
        return tokens[idx][0] if idx < len(tokens) else None

    def take():
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def atom() -> FdlElement:
        tok = peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(s))
        text, at = take()
        if text == "(":
            e = disjunction()
            if peek() != ")":
                raise ParseError("expected ')'", tokens[idx][1] if idx < len(tokens) else len(s))
            take()
            return e
        if text == "0":
            return bottom(n)
        if text == "1":
            return top(n)
        if text.startswith("w"):
            i = int(text[1:])
            if not 1 <= i <= n:
                raise ParseError(f"generator {text} out of range for n={n}", at)
            return generator(n, i)
        raise ParseError(f"unexpected token {text!r}", at)

    def conjunction() -> FdlElement:
        e = atom()
        while peek() == "^":
            take()
            e = meet(e, atom())
        return e

    def disjunction() -> FdlElement:
        e = conjunction()
        while peek() == "v":
            take()
            e = join(e, conjunction())
        return e

    e = disjunction()
    if idx != len(tokens):
        raise ParseError(f"trailing input {tokens[idx][0]!r}", tokens[idx][1])
    return e


class FreeDistributiveLattice:
    """Thin lattice-interface adapter over FdlElement values, so threshold
    machinery can treat L_D and explicit finite lattices uniformly."""

    def __init__(self, n: int):
        if not 1 <= n <= MAX_ARITY:
            raise DomainError(f"arity must be between 1 and {MAX_ARITY}, got {n}")
        self.n = n

    @property
    def bottom(self) -> FdlElement:
        return bottom(self.n)

    @property
    def top(self) -> FdlElement:
        return top(self.n)

    def leq(self, a: FdlElement, b: FdlElement) -> bool:
        return leq(a, b)

    def meet(self, a: FdlElement, b: FdlElement) -> FdlElement:
        return meet(a, b)

    def join(self, a: FdlElement, b: FdlElement) -> FdlElement:
        return join(a, b)

    def generators(self) -> list[FdlElement]:
        return generators(self.n)

    def __repr__(self):
        return f"FreeDistributiveLattice(n={self.n})"

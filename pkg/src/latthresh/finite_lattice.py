"""Explicit finite lattices: labelled elements, an order relation, and
precomputed meet/join tables.

The order is stored as one bitmask row per element (bit j of row i set iff
element i <= element j).  Construction verifies the lattice axioms; the
verification is also exposed standalone so callers can get a diagnostic
report with a witness pair instead of an exception.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DomainError


@dataclass(frozen=True)
class LatticeReport:
    """Outcome of verifying a candidate order: on failure, ``reason`` names
    the broken axiom and ``witness`` the offending element pair."""

    ok: bool
    reason: Optional[str] = None
    witness: Optional[tuple[str, str]] = None
    lattice: Optional["FiniteLattice"] = None


class FiniteLattice:
    """Immutable finite lattice over opaque string labels."""

    def __init__(self, elements: Sequence[str], leq_rows: Sequence[int],
                 meet_table: Sequence[Sequence[int]], join_table: Sequence[Sequence[int]],
                 bottom_index: int, top_index: int):
        self.elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise DomainError("duplicate element labels")
        self._leq_rows = tuple(leq_rows)
        self._meet = tuple(tuple(r) for r in meet_table)
        self._join = tuple(tuple(r) for r in join_table)
        self._bottom_index = bottom_index
        self._top_index = top_index

    # -- construction ------------------------------------------------------

    @classmethod
    def from_order(cls, elements: Sequence[str], pairs: Iterable[tuple[str, str]]) -> "FiniteLattice":
        """Build from covering or full order pairs (reflexive-transitive
        closure is applied); raises DomainError if not a lattice."""
        report = verify_lattice(elements, pairs)
        if not report.ok:
            raise DomainError(f"not a lattice: {report.reason} (witness {report.witness})")
        return report.lattice

    @classmethod
    def chain(cls, labels: Sequence[str]) -> "FiniteLattice":
        return cls.from_order(labels, [(labels[i], labels[i + 1]) for i in range(len(labels) - 1)])

    # -- queries -----------------------------------------------------------

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"unknown lattice element {label!r}") from None

    def __len__(self):
        return len(self.elements)

    def __contains__(self, label: str) -> bool:
        return label in self._index

    @property
    def bottom(self) -> str:
        return self.elements[self._bottom_index]

    @property
    def top(self) -> str:
        return self.elements[self._top_index]

    def leq(self, a: str, b: str) -> bool:
        return bool((self._leq_rows[self.index(a)] >> self.index(b)) & 1)

    def meet(self, a: str, b: str) -> str:
        return self.elements[self._meet[self.index(a)][self.index(b)]]

    def join(self, a: str, b: str) -> str:
        return self.elements[self._join[self.index(a)][self.index(b)]]

    def join_all(self, items: Iterable[str]) -> str:
        out = self._bottom_index
        for a in items:
            out = self._join[out][self.index(a)]
        return self.elements[out]

    def meet_all(self, items: Iterable[str]) -> str:
        out = self._top_index
        for a in items:
            out = self._meet[out][self.index(a)]
        return self.elements[out]

    def up_filter(self, p: str) -> frozenset[str]:
        """Principal filter {q : p <= q}."""
        row = self._leq_rows[self.index(p)]
        return frozenset(e for j, e in enumerate(self.elements) if (row >> j) & 1)

    def covers(self) -> list[tuple[str, str]]:
        """Covering pairs (a, b) with a < b and nothing strictly between."""
        n = len(self.elements)
        out = []
        for i in range(n):
            for j in range(n):
                if i == j or not (self._leq_rows[i] >> j) & 1:
                    continue
                between = any(
                    k != i and k != j
                    and (self._leq_rows[i] >> k) & 1 and (self._leq_rows[k] >> j) & 1
                    for k in range(n)
                )
                if not between:
                    out.append((self.elements[i], self.elements[j]))
        return out

    def is_isomorphic_to(self, other: "FiniteLattice") -> bool:
        """Brute-force order-isomorphism test; intended for small lattices."""
        from itertools import permutations

        n = len(self.elements)
        if n != len(other.elements):
            return False
        for perm in permutations(range(n)):
            if all(
                ((self._leq_rows[i] >> j) & 1) == ((other._leq_rows[perm[i]] >> perm[j]) & 1)
                for i in range(n)
                for j in range(n)
            ):
                return True
        return False

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        """Schema: elements plus the covering pairs as index pairs."""
        return {
            "elements": list(self.elements),
            "leq": [[self.index(a), self.index(b)] for a, b in self.covers()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiniteLattice":
        elements = [str(e) for e in data["elements"]]
        pairs = [(elements[i], elements[j]) for i, j in data["leq"]]
        return cls.from_order(elements, pairs)

    def to_dot(self, name: str = "hasse") -> str:
        """Graphviz digraph of the Hasse diagram, edges from lower to
        higher element."""
        lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;"]
        for e in self.elements:
            lines.append(f"  {json.dumps(e)};")
        for a, b in self.covers():
            lines.append(f"  {json.dumps(a)} -> {json.dumps(b)};")
        lines.append("}")
        return "\n".join(lines)

    def __repr__(self):
        return f"FiniteLattice({len(self.elements)} elements)"


def _transitive_closure(rows: list[int], n: int) -> list[int]:
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rows[k]
    return rows


def verify_lattice(elements: Sequence[str], pairs: Iterable[tuple[str, str]]) -> LatticeReport:
    """Check the order axioms and existence of all binary meets/joins and
    bounds; on success the report carries the constructed lattice."""
    elements = [str(e) for e in elements]
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        return LatticeReport(False, "duplicate element labels")
    n = len(elements)
    if n == 0:
        return LatticeReport(False, "empty element list")
    rows = [1 << i for i in range(n)]
    for a, b in pairs:
        if a not in index or b not in index:
            return LatticeReport(False, f"order pair references unknown element", (str(a), str(b)))
        rows[index[a]] |= 1 << index[b]
    rows = _transitive_closure(rows, n)

    for i in range(n):
        for j in range(i + 1, n):
            if (rows[i] >> j) & 1 and (rows[j] >> i) & 1:
                return LatticeReport(False, "antisymmetry fails", (elements[i], elements[j]))

    meet_table = [[0] * n for _ in range(n)]
    join_table = [[0] * n for _ in range(n)]
    # rows_below[k] = set of elements <= k
    rows_below = [0] * n
    for i in range(n):
        for j in range(n):
            if (rows[i] >> j) & 1:
                rows_below[j] |= 1 << i

    def greatest(mask: int) -> Optional[int]:
        for k in range(n):
            if (mask >> k) & 1 and mask & ~rows_below[k] == 0:
                return k
        return None

    def least(mask: int) -> Optional[int]:
        for k in range(n):
            if (mask >> k) & 1 and mask & ~rows[k] == 0:
                return k
        return None

    for i in range(n):
        for j in range(i, n):
            lower = rows_below[i] & rows_below[j]
            m = greatest(lower)
            if m is None:
                return LatticeReport(False, "no greatest lower bound", (elements[i], elements[j]))
            upper = rows[i] & rows[j]
            u = least(upper)
            if u is None:
                return LatticeReport(False, "no least upper bound", (elements[i], elements[j]))
            meet_table[i][j] = meet_table[j][i] = m
            join_table[i][j] = join_table[j][i] = u

    all_mask = (1 << n) - 1
    bottom = next((k for k in range(n) if rows[k] == all_mask), None)
    top = next((k for k in range(n) if rows_below[k] == all_mask), None)
    if bottom is None:
        return LatticeReport(False, "no bottom element")
    if top is None:
        return LatticeReport(False, "no top element")

    lattice = FiniteLattice(elements, rows, meet_table, join_table, bottom, top)
    return LatticeReport(True, lattice=lattice)

"""Shared oracles and random generators for the test suite.

Everything here is deliberately independent of the implementation paths it
checks: up-sets are enumerated by raw subset scanning, the free-lattice
order is checked by pointwise evaluation, and representability is decided
by exhaustive weight search.
"""

from __future__ import annotations

import random

from latthresh.boolean_domain import Point, UpSet
from latthresh.finite_lattice import FiniteLattice
from latthresh.lattice_valued import LValuedFunction, cube_domain


def brute_up_set_masks(n: int) -> list[int]:
    """All up-set membership masks of {0,1}^n by scanning every subset."""
    out = []
    for mask in range(1 << (1 << n)):
        ok = True
        for k in range(1 << n):
            if (mask >> k) & 1:
                for i in range(n):
                    if not (mask >> (k | (1 << i))) & 1:
                        ok = False
                        break
            if not ok:
                break
        if ok:
            out.append(mask)
    return out


def eval_clauses(clauses, bits: int) -> int:
    """Pointwise CNF evaluation, written independently of the package."""
    for c in clauses:
        if not (c & bits):
            return 0
    return 1


def pointwise_leq(a, b) -> bool:
    """Order of two clause-set elements by evaluation over the whole cube."""
    n = a.n
    return all(
        eval_clauses(a.clauses, k) <= eval_clauses(b.clauses, k)
        for k in range(1 << n)
    )


def lattice_pool() -> list[FiniteLattice]:
    """Small verified co-domain lattices of assorted shapes."""
    chain3 = FiniteLattice.chain(["0", "m", "1"])
    chain4 = FiniteLattice.chain(["0", "a", "b", "1"])
    diamond = FiniteLattice.from_order(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
    )
    pentagon = FiniteLattice.from_order(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )
    square = FiniteLattice.from_order(
        ["0", "a", "b", "1"],
        [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )
    fig1 = figure1_lattice()
    return [chain3, chain4, diamond, pentagon, square, fig1]


def figure1_lattice() -> FiniteLattice:
    """Five-element lattice: s below p and q, both below r, r below 1."""
    return FiniteLattice.from_order(
        ["s", "p", "q", "r", "1"],
        [("s", "p"), ("s", "q"), ("p", "r"), ("q", "r"), ("r", "1")],
    )


def figure1_function() -> LValuedFunction:
    return LValuedFunction(
        ("a", "b", "c", "d"),
        figure1_lattice(),
        {"a": "1", "b": "p", "c": "q", "d": "s"},
    )


def random_monotone_function(rng: random.Random, n: int, lattice: FiniteLattice) -> LValuedFunction:
    """Monotone cube -> lattice map: value at x is the join of random seeds
    over all points below x (every monotone map arises this way)."""
    seeds = {k: rng.choice(lattice.elements) for k in range(1 << n)}
    values = {}
    for k in range(1 << n):
        vals = [seeds[j] for j in range(1 << n) if j & ~k == 0]
        values[Point(n, k).label()] = lattice.join_all(vals)
    return LValuedFunction(cube_domain(n), lattice, values)


def random_up_set(rng: random.Random, n: int) -> UpSet:
    mask = 0
    for k in range(1 << n):
        if rng.random() < 0.5:
            for j in range(1 << n):
                if k & ~j == 0:
                    mask |= 1 << j
    return UpSet(n, mask)

"""Exact rational linear feasibility by Fourier-Motzkin elimination.

A constraint is (coeffs, const) meaning sum(coeffs[i] * v[i]) + const >= 0.
Intended for the small systems of the classical-threshold test (at most a
few dozen constraints, n+1 variables); rows are normalized and deduplicated
between eliminations to keep growth in check.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

Row = tuple[tuple[Fraction, ...], Fraction]


def _normalize(coeffs: Sequence[Fraction], const: Fraction) -> Row:
    dens = [c.denominator for c in coeffs] + [const.denominator]
    nums = [abs(c.numerator) for c in coeffs] + [abs(const.numerator)]
    lcm = 1
    for d in dens:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(c * lcm) for c in coeffs] + [int(const * lcm)]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(Fraction(v) for v in ints[:-1]), Fraction(ints[-1])


def _dedupe(rows: list[Row]) -> list[Row]:
    # For identical coefficient vectors keep only the tightest constant.
    best: dict[tuple[Fraction, ...], Fraction] = {}
    for coeffs, const in rows:
        if coeffs not in best or const < best[coeffs]:
            best[coeffs] = const
    return sorted(best.items())


def feasible_point(constraints: Sequence[tuple[Sequence, object]], nvars: int,
                   order: Optional[Sequence[int]] = None) -> Optional[list[Fraction]]:
    """A rational point satisfying all constraints, or None if infeasible.

    ``order`` optionally fixes the variable elimination order (first listed
    is eliminated first).
    """
    rows: list[Row] = [
        _normalize([Fraction(c) for c in coeffs], Fraction(const))
        for coeffs, const in constraints
    ]
    if order is None:
        order = list(range(nvars))
    stack: list[tuple[int, list[Row], list[Row]]] = []

    for var in order:
        rows = _dedupe(rows)
        lowers = [r for r in rows if r[0][var] > 0]   # v >= -(rest)/a
        uppers = [r for r in rows if r[0][var] < 0]   # v <= -(rest)/a
        others = [r for r in rows if r[0][var] == 0]
        stack.append((var, lowers, uppers))
        combined = []
        for lc, lk in lowers:
            for uc, uk in uppers:
                a, b = lc[var], -uc[var]
                coeffs = tuple(b * lc[i] + a * uc[i] for i in range(nvars))
                combined.append(_normalize(coeffs, b * lk + a * uk))
        rows = others + combined

    for coeffs, const in rows:
        if any(coeffs):
            raise AssertionError("variable survived elimination")
        if const < 0:
            return None

    values = [Fraction(0)] * nvars
    for var, lowers, uppers in reversed(stack):
        lo = None
        for coeffs, const in lowers:
            rest = sum(coeffs[i] * values[i] for i in range(nvars) if i != var) + const
            bound = -rest / coeffs[var]
            lo = bound if lo is None or bound > lo else lo
        hi = None
        for coeffs, const in uppers:
            rest = sum(coeffs[i] * values[i] for i in range(nvars) if i != var) + const
            bound = -rest / coeffs[var]
            hi = bound if hi is None or bound < hi else hi
        if lo is not None and hi is not None:
            values[var] = (lo + hi) / 2
        elif lo is not None:
            values[var] = lo
        elif hi is not None:
            values[var] = hi
    return values

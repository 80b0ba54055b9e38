"""Threshold functions induced by lattices: the select-or-bottom action
w.x, linear combinations, isotonicity, synthesis of a free-distributive
threshold representation for any monotone function, the universal function
whose cuts realize every up-set, and the classical real-weight test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import fdl
from .boolean_domain import MAX_ENUM_ARITY, Point, UpSet, is_up_set, minimal_elements
from .errors import ArityMismatchError, CapacityError, DomainError
from .fourier_motzkin import feasible_point
from .lattice_valued import LValuedFunction, cube_domain


@dataclass(frozen=True)
class BooleanFunction:
    """Truth table packed into an int: bit k holds f at the point with word
    value k (bit i-1 of k is coordinate x_i)."""

    n: int
    truth: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"arity must be positive, got {self.n}")
        if self.truth < 0 or self.truth >> (1 << self.n):
            raise DomainError("truth table does not fit the cube")

    def __call__(self, x: Point) -> int:
        if x.n != self.n:
            raise ArityMismatchError(f"arity mismatch: {x.n} vs {self.n}")
        return (self.truth >> x.bits) & 1

    def true_points(self) -> list[Point]:
        return [Point(self.n, k) for k in range(1 << self.n) if (self.truth >> k) & 1]

    def to_table(self) -> str:
        return "".join(str((self.truth >> k) & 1) for k in range(1 << self.n))

    @classmethod
    def from_up_set(cls, s: UpSet) -> "BooleanFunction":
        return cls(s.n, s.mask)

    @classmethod
    def from_callable(cls, n: int, fn) -> "BooleanFunction":
        truth = 0
        for k in range(1 << n):
            if fn(Point(n, k)):
                truth |= 1 << k
        return cls(n, truth)


@dataclass(frozen=True)
class ThresholdRepr:
    """Weights and threshold in a common lattice; ``lattice`` is any object
    with bottom/leq/join (an explicit FiniteLattice or the free
    distributive adapter)."""

    lattice: object
    weights: tuple
    t: object


def scalar_mult(lattice, w, x: int):
    """w if x = 1, lattice bottom if x = 0."""
    if x not in (0, 1):
        raise DomainError(f"{x!r} is not a bit")
    return w if x else lattice.bottom


def linear_combination(lattice, weights: Sequence, x: Point):
    """Join of the weights selected by the 1-coordinates of x; bottom for
    the all-zero point."""
    if len(weights) != x.n:
        raise ArityMismatchError(f"{len(weights)} weights for arity {x.n}")
    out = lattice.bottom
    for i, w in enumerate(weights):
        out = lattice.join(out, scalar_mult(lattice, w, (x.bits >> i) & 1))
    return out


def eval_threshold(repr_: ThresholdRepr, x: Point) -> int:
    """1 iff the linear combination dominates the threshold."""
    value = linear_combination(repr_.lattice, repr_.weights, x)
    return int(repr_.lattice.leq(repr_.t, value))


def induced_function(repr_: ThresholdRepr, n: int) -> BooleanFunction:
    return BooleanFunction.from_callable(n, lambda x: eval_threshold(repr_, x))


def isotonicity_witness(f: BooleanFunction) -> Optional[tuple[Point, Point]]:
    """A pair x <= y with f(x) > f(y), or None if f is monotone."""
    for k in range(1 << f.n):
        for i in range(f.n):
            up = k | (1 << i)
            if up != k and (f.truth >> k) & 1 and not (f.truth >> up) & 1:
                return Point(f.n, k), Point(f.n, up)
    return None


def is_isotone(f: BooleanFunction) -> bool:
    """Monotonicity, computed both by pairwise scan and via the true-set
    being an up-set; the two routes must agree."""
    direct = isotonicity_witness(f) is None
    via_up_set = is_up_set(f.true_points(), f.n)
    if direct != via_up_set:
        raise AssertionError("monotonicity characterizations disagree")
    return direct


def synthesize_threshold(f: BooleanFunction) -> ThresholdRepr:
    """Threshold representation over the free distributive lattice on n
    generators: weights are the generators, the threshold's clauses are the
    supports of the minimal true points (already an antichain)."""
    witness = isotonicity_witness(f)
    if witness is not None:
        raise DomainError(
            f"function is not isotone: f{witness[0].coords()} = 1 "
            f"but f{witness[1].coords()} = 0"
        )
    lattice = fdl.FreeDistributiveLattice(f.n)
    minimals = minimal_elements(UpSet(f.n, f.truth))
    t = fdl.FdlElement(f.n, tuple(sorted(m.bits for m in minimals)))
    return ThresholdRepr(lattice, tuple(lattice.generators()), t)


def beta_bar_value(n: int, x: Point) -> fdl.FdlElement:
    """Join of the generators selected by x: the single clause support(x),
    or bottom at the all-zero point.  Works symbolically for any arity."""
    if x.n != n:
        raise ArityMismatchError(f"arity mismatch: {x.n} vs {n}")
    return fdl.FdlElement(n, (x.bits,)) if x.bits else fdl.bottom(n)


def beta_bar(n: int) -> LValuedFunction:
    """The universal function, materialized over the full free distributive
    lattice (capped: the codomain has Dedekind-number size)."""
    if not 1 <= n <= MAX_ENUM_ARITY:
        raise CapacityError(f"materialized codomain is capped at n={MAX_ENUM_ARITY}")
    codomain = materialize_fdl(n)
    values = {
        Point(n, k).label(): fdl.format_element(beta_bar_value(n, Point(n, k)))
        for k in range(1 << n)
    }
    return LValuedFunction(cube_domain(n), codomain, values)


def materialize_fdl(n: int):
    """Explicit finite lattice snapshot of the free distributive lattice,
    with canonical text labels."""
    from .finite_lattice import FiniteLattice

    elems = fdl.enumerate_elements(n)
    labels = [fdl.format_element(e) for e in elems]
    pairs = [
        (labels[i], labels[j])
        for i, a in enumerate(elems)
        for j, b in enumerate(elems)
        if fdl.leq(a, b)
    ]
    return FiniteLattice.from_order(labels, pairs)


@dataclass(frozen=True)
class ClassicalWitness:
    """Exact rational weights and threshold separating the truth table with
    margin 1 on the false side."""

    weights: tuple[Fraction, ...]
    t: Fraction

    def check(self, f: BooleanFunction) -> bool:
        for k in range(1 << f.n):
            s = sum(self.weights[i] for i in range(f.n) if (k >> i) & 1)
            if ((f.truth >> k) & 1) != (s >= self.t):
                return False
        return True

    def format(self) -> str:
        ws = ", ".join(str(w) for w in self.weights)
        return f"weights = ({ws}), t = {self.t}"


def is_classical_threshold(f: BooleanFunction) -> Optional[ClassicalWitness]:
    """Exact feasibility of sum(w_i x_i) >= t on true points and
    <= t - 1 on false points; strictness is scale-normalized to margin 1."""
    if f.n > MAX_ENUM_ARITY:
        raise CapacityError(f"classical threshold test is capped at n={MAX_ENUM_ARITY}")
    n = f.n
    constraints = []
    for k in range(1 << n):
        coords = [(k >> i) & 1 for i in range(n)]
        if (f.truth >> k) & 1:
            # sum w_i x_i - t >= 0
            constraints.append((coords + [-1], 0))
        else:
            # t - sum w_i x_i - 1 >= 0
            constraints.append(([-c for c in coords] + [1], -1))
    # Eliminate t first: it appears in every row, pairing collapses fastest.
    point = feasible_point(constraints, n + 1, order=[n] + list(range(n)))
    if point is None:
        return None
    witness = ClassicalWitness(tuple(point[:n]), point[n])
    if not witness.check(f):
        raise AssertionError("feasibility witness fails verification")
    return witness

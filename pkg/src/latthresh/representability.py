"""Decision procedures for representing a closure system of up-sets on the
cube as the cuts of a lattice linear combination.

The two closure-operator conditions (comparable closures absorb joins;
closure of a join is the intersection of closures) are each checked over all
ordered point pairs, reporting the lexicographically least counterexample.
They are equivalent to representability; the synthesis path constructs the
witness function and verifies its cut collection against the input exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .boolean_domain import Point, is_up_set
from .errors import DomainError
from .finite_lattice import FiniteLattice
from .lattice_valued import (
    ClosureSystem,
    LValuedFunction,
    closure_system_violation,
    cube_domain,
    cut_collection,
    member_label,
    synthesize_from_closure_system,
)
from .threshold import linear_combination


@dataclass(frozen=True)
class RepresentabilityReport:
    """Outcomes of the two closure conditions plus, when they hold, the
    synthesized lattice and weights.  The three facts always agree."""

    condition_i: bool
    counterexample_i: Optional[tuple[Point, Point]]
    condition_ii: bool
    counterexample_ii: Optional[tuple[Point, Point]]
    lattice: Optional[FiniteLattice] = None
    weights: Optional[tuple[str, ...]] = None

    @property
    def representable(self) -> bool:
        return self.lattice is not None

    def to_json(self) -> dict:
        def pair(p):
            return [p[0].label(), p[1].label()] if p else None

        return {
            "condition_i": self.condition_i,
            "counterexample_i": pair(self.counterexample_i),
            "condition_ii": self.condition_ii,
            "counterexample_ii": pair(self.counterexample_ii),
            "representable": self.representable,
            "lattice": self.lattice.to_json() if self.lattice else None,
            "weights": list(self.weights) if self.weights else None,
        }


def cube_closure_system(n: int, members: Iterable[Iterable[str]]) -> ClosureSystem:
    """Closure system over {0,1}^n from bit-string member listings."""
    return ClosureSystem(
        cube_domain(n),
        frozenset(frozenset(str(x) for x in m) for m in members),
    )


def closure_system_to_json(system: ClosureSystem, n: int) -> dict:
    return {"n": n, "members": [sorted(m) for m in system.sorted_members()]}


def closure_system_from_json(data: dict) -> tuple[ClosureSystem, int]:
    n = int(data["n"])
    return cube_closure_system(n, data["members"]), n


def validate_closure_system_of_up_sets(members: Iterable[Iterable[str]], n: int) -> bool:
    """True iff every member is an up-set, the full cube is a member, and
    the family is intersection-closed."""
    return up_set_system_violation(members, n) is None


def up_set_system_violation(members: Iterable[Iterable[str]], n: int) -> Optional[str]:
    """None if valid, else a message naming the first violating member or
    pair."""
    sets = [frozenset(str(x) for x in m) for m in members]
    base = frozenset(cube_domain(n))
    for m in sorted(sets, key=sorted):
        if not m <= base:
            return f"member {member_label(m)} contains labels outside the cube"
        if not is_up_set((Point.from_label(x) for x in m), n):
            return f"member {member_label(m)} is not an up-set"
    return closure_system_violation(base, sets)


def _require_up_set_system(system: ClosureSystem, n: int) -> None:
    violation = up_set_system_violation(system.members, n)
    if violation is not None:
        raise DomainError(f"invalid closure system of up-sets: {violation}")


def closure_of_point(system: ClosureSystem, x: Point) -> frozenset[str]:
    """Least member containing x."""
    return system.closure_of(x.label())


def check_conditions(system: ClosureSystem, n: Optional[int] = None) -> RepresentabilityReport:
    """Evaluate both closure conditions over all ordered point pairs; the
    counterexamples are lexicographically least in (x.bits, y.bits)."""
    if n is None:
        n = _cube_arity(system)
    _require_up_set_system(system, n)
    points = [Point(n, k) for k in range(1 << n)]
    closures = {p: closure_of_point(system, p) for p in points}

    ce_i = None
    ce_ii = None
    for x in points:
        for y in points:
            joined = closures[x.join(y)]
            if ce_i is None and closures[x] <= closures[y] and joined != closures[x]:
                ce_i = (x, y)
            if ce_ii is None and joined != closures[x] & closures[y]:
                ce_ii = (x, y)
        if ce_i is not None and ce_ii is not None:
            break
    if (ce_i is None) != (ce_ii is None):
        raise AssertionError("the two closure conditions disagree")
    return RepresentabilityReport(ce_i is None, ce_i, ce_ii is None, ce_ii)


def _cube_arity(system: ClosureSystem) -> int:
    n = (len(system.base) - 1).bit_length()
    if len(system.base) != 1 << n or system.base != cube_domain(n):
        raise DomainError("base is not a Boolean cube in bit-string order")
    return n


def zero_join_hom_violation(mu: LValuedFunction) -> Optional[tuple[Point, ...]]:
    """An atom set witnessing failure of join preservation (the empty tuple
    marks a wrong bottom value), or None if mu is a bottom- and
    join-preserving map.  Checks mu(x) = join of atom images over all x,
    which is equivalent to quantifying over atom subsets."""
    n = mu.cube_arity()
    lat = mu.codomain
    if mu(Point(n, 0).label()) != lat.bottom:
        return ()
    atom_values = [mu(Point(n, 1 << i).label()) for i in range(n)]
    for k in range(1 << n):
        expected = lat.join_all(atom_values[i] for i in range(n) if (k >> i) & 1)
        if mu(Point(n, k).label()) != expected:
            return tuple(Point(n, 1 << i) for i in range(n) if (k >> i) & 1)
    return None


def is_zero_join_hom(mu: LValuedFunction) -> bool:
    """True iff mu sends the bottom point to the lattice bottom and
    preserves joins of atoms."""
    return zero_join_hom_violation(mu) is None


def extract_weights(mu: LValuedFunction) -> tuple[str, ...]:
    """Weights w_i = mu(atom i); the resulting linear combination
    reproduces mu pointwise."""
    violation = zero_join_hom_violation(mu)
    if violation is not None:
        if violation == ():
            raise DomainError("not a 0-join-homomorphism: bottom point maps above bottom")
        atoms = ", ".join(str(a.coords()) for a in violation)
        raise DomainError(f"not a 0-join-homomorphism: join of atoms {atoms} is not preserved")
    n = mu.cube_arity()
    return tuple(mu(Point(n, 1 << i).label()) for i in range(n))


def synthesize_linear_representation(system: ClosureSystem, n: Optional[int] = None) -> RepresentabilityReport:
    """Full decision: on success the report carries the member lattice and
    the weights (closures of the atoms) whose linear combination has exactly
    the given cut collection."""
    if n is None:
        n = _cube_arity(system)
    report = check_conditions(system, n)
    if not report.condition_i:
        return report

    mu = synthesize_from_closure_system(system)
    weights = extract_weights(mu)
    lattice = mu.codomain
    # Reconstruct from the weights alone and verify cuts match the input.
    values = {
        Point(n, k).label(): linear_combination(lattice, weights, Point(n, k))
        for k in range(1 << n)
    }
    nu = LValuedFunction(cube_domain(n), lattice, values)
    if cut_collection(nu).members != system.members:
        raise AssertionError("synthesized representation has wrong cut collection")
    return RepresentabilityReport(True, None, True, None, lattice, weights)

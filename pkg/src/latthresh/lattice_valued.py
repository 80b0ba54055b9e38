"""Lattice-valued functions, their cuts, the cut-equality equivalence on the
codomain, the quotient lattice, and the canonical representation.

Domains are ordered tuples of opaque string labels.  Boolean-cube domains use
the bit-string labels of :mod:`boolean_domain` in word-value order, which lets
the same machinery serve both the abstract four-point examples and {0,1}^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .boolean_domain import Point, is_up_set
from .errors import DomainError
from .finite_lattice import FiniteLattice


def member_label(member: Iterable[str]) -> str:
    """Deterministic label for a subset of the domain, e.g. ``{a,b}``."""
    return "{" + ",".join(sorted(member)) + "}"


def closure_system_violation(base: frozenset[str], members: Iterable[frozenset[str]]) -> Optional[str]:
    """None if the family is a closure system on the base, else a message
    naming the first violating member or pair."""
    members = sorted(members, key=sorted)
    for m in members:
        if not m <= base:
            return f"member {member_label(m)} is not a subset of the base"
    if base not in members:
        return "the base set is not a member"
    mset = set(members)
    for a in members:
        for b in members:
            if a & b not in mset:
                return (f"intersection of {member_label(a)} and {member_label(b)} "
                        f"= {member_label(a & b)} is not a member")
    return None


@dataclass(frozen=True)
class ClosureSystem:
    """Intersection-closed family of subsets of a base set, containing the
    base.  Invariants are checked at construction."""

    base: tuple[str, ...]
    members: frozenset[frozenset[str]]

    def __post_init__(self):
        if len(set(self.base)) != len(self.base):
            raise DomainError("duplicate base labels")
        violation = closure_system_violation(frozenset(self.base), self.members)
        if violation is not None:
            raise DomainError(f"not a closure system: {violation}")

    def sorted_members(self) -> list[frozenset[str]]:
        return sorted(self.members, key=lambda m: (len(m), sorted(m)))

    def closure_of(self, x: str) -> frozenset[str]:
        """Least member containing x (intersection of all members that do)."""
        if x not in self.base:
            raise DomainError(f"unknown base element {x!r}")
        out = frozenset(self.base)
        for m in self.members:
            if x in m:
                out &= m
        return out


def from_closure_system(system: ClosureSystem) -> FiniteLattice:
    """The member family as a lattice ordered dually to inclusion: f <= g
    iff g is a subset of f; join is set intersection, bottom is the base."""
    members = system.sorted_members()
    labels = [member_label(m) for m in members]
    pairs = [
        (labels[i], labels[j])
        for i, f in enumerate(members)
        for j, g in enumerate(members)
        if g <= f
    ]
    return FiniteLattice.from_order(labels, pairs)


@dataclass(frozen=True)
class LValuedFunction:
    """Total map from a finite labelled domain into a finite lattice."""

    domain: tuple[str, ...]
    codomain: FiniteLattice
    values: Mapping[str, str]

    def __post_init__(self):
        if len(set(self.domain)) != len(self.domain):
            raise DomainError("duplicate domain labels")
        for x in self.domain:
            if x not in self.values:
                raise DomainError(f"no value assigned to domain element {x!r}")
            self.codomain.index(self.values[x])

    def __call__(self, x: str) -> str:
        if x not in self.values:
            raise DomainError(f"unknown domain element {x!r}")
        return self.values[x]

    def image(self) -> frozenset[str]:
        return frozenset(self.values[x] for x in self.domain)

    def cube_arity(self) -> int:
        """Arity n if the domain is the full bit-string cube, else error."""
        n = (len(self.domain) - 1).bit_length()
        expected = tuple(Point(n, k).label() for k in range(1 << n)) if n >= 1 else ()
        if len(self.domain) != 1 << n or self.domain != expected:
            raise DomainError("domain is not a Boolean cube in bit-string order")
        return n

    def to_json(self) -> dict:
        return {
            "domain": list(self.domain),
            "lattice": self.codomain.to_json(),
            "values": {x: self.values[x] for x in self.domain},
        }

    @classmethod
    def from_json(cls, data: dict) -> "LValuedFunction":
        return cls(
            domain=tuple(str(x) for x in data["domain"]),
            codomain=FiniteLattice.from_json(data["lattice"]),
            values={str(k): str(v) for k, v in data["values"].items()},
        )


def cube_domain(n: int) -> tuple[str, ...]:
    """Bit-string labels of {0,1}^n in word-value order."""
    return tuple(Point(n, k).label() for k in range(1 << n))


def cube_function(n: int, value_at: Mapping[Point, str] | None, codomain: FiniteLattice,
                  values_by_label: Mapping[str, str] | None = None) -> LValuedFunction:
    """Convenience builder for functions on {0,1}^n."""
    if value_at is not None:
        values = {p.label(): v for p, v in value_at.items()}
    else:
        values = dict(values_by_label or {})
    return LValuedFunction(cube_domain(n), codomain, values)


def cut(mu: LValuedFunction, p: str) -> frozenset[str]:
    """The p-cut {x : mu(x) >= p}; antitone in p."""
    mu.codomain.index(p)
    return frozenset(x for x in mu.domain if mu.codomain.leq(p, mu.values[x]))


def cut_collection(mu: LValuedFunction) -> ClosureSystem:
    """All distinct cuts, as a closure system on the domain."""
    members = frozenset(cut(mu, p) for p in mu.codomain.elements)
    return ClosureSystem(mu.domain, members)


def is_l_valued_up_set(mu: LValuedFunction) -> bool:
    """Order preservation over a cube domain; computed directly and via
    the all-cuts-are-up-sets characterization, which must agree."""
    n = mu.cube_arity()
    direct = all(
        mu.codomain.leq(mu.values[Point(n, k).label()], mu.values[Point(n, k | (1 << i)).label()])
        for k in range(1 << n)
        for i in range(n)
    )
    via_cuts = all(
        is_up_set((Point.from_label(x) for x in cut(mu, p)), n)
        for p in mu.codomain.elements
    )
    if direct != via_cuts:
        raise AssertionError("monotonicity characterizations disagree")
    return direct


def theta_classes(mu: LValuedFunction) -> tuple[frozenset[str], ...]:
    """Partition of the codomain by cut equality, deterministically ordered.

    Cross-checked against the filter form: p and q are equivalent iff the
    principal filters of p and q meet the image in the same set.
    """
    image = mu.image()
    by_cut: dict[frozenset[str], set[str]] = {}
    for p in mu.codomain.elements:
        by_cut.setdefault(cut(mu, p), set()).add(p)
    by_filter: dict[frozenset[str], set[str]] = {}
    for p in mu.codomain.elements:
        by_filter.setdefault(mu.codomain.up_filter(p) & image, set()).add(p)
    if sorted(map(sorted, by_cut.values())) != sorted(map(sorted, by_filter.values())):
        raise AssertionError("cut-equality and filter-trace partitions disagree")
    return tuple(sorted((frozenset(v) for v in by_cut.values()), key=sorted))


def class_supremum(mu: LValuedFunction, cls: Iterable[str]) -> str:
    """Join of a cut-equality class; always a member of the class."""
    return mu.codomain.join_all(cls)


@dataclass(frozen=True)
class QuotientResult:
    """Quotient lattice together with the explicit isomorphism cut -> class
    (classes are labelled by their supremum)."""

    lattice: FiniteLattice
    class_of: Mapping[str, str]
    cut_to_class: Mapping[frozenset[str], str]


def quotient_lattice(mu: LValuedFunction) -> QuotientResult:
    """Classes of cut equality ordered by reverse inclusion of filter
    traces; isomorphic to the cut lattice under cut -> class."""
    image = mu.image()
    classes = theta_classes(mu)
    sups = [class_supremum(mu, c) for c in classes]
    traces = [mu.codomain.up_filter(s) & image for s in sups]
    pairs = [
        (sups[i], sups[j])
        for i in range(len(classes))
        for j in range(len(classes))
        if traces[j] <= traces[i]
    ]
    lattice = FiniteLattice.from_order(sups, pairs)
    class_of = {p: sups[i] for i, c in enumerate(classes) for p in c}
    cut_to_class = {cut(mu, sups[i]): sups[i] for i in range(len(classes))}
    return QuotientResult(lattice, class_of, cut_to_class)


def canonical_representation(mu: LValuedFunction) -> LValuedFunction:
    """Value at x is the intersection of all cuts containing x, taken in the
    cut lattice ordered dually to inclusion."""
    system = cut_collection(mu)
    codomain = from_closure_system(system)
    values = {x: member_label(system.closure_of(x)) for x in mu.domain}
    return LValuedFunction(mu.domain, codomain, values)


def synthesize_from_closure_system(system: ClosureSystem) -> LValuedFunction:
    """The function whose cuts are exactly the given closure system: x maps
    to the least member containing it (valued in the member lattice)."""
    codomain = from_closure_system(system)
    values = {x: member_label(system.closure_of(x)) for x in system.base}
    return LValuedFunction(system.base, codomain, values)

"""The Boolean cube {0,1}^n with componentwise order, up-sets, and the
exhaustive up-set enumeration.

Points are machine words: bit (i-1) of ``bits`` holds coordinate x_i, so the
componentwise order is a single submask test.  Up-sets are bitsets over the
2^n points, indexed by the point's word value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ArityMismatchError, CapacityError, DomainError

MAX_ARITY = 24
MAX_ENUM_ARITY = 5

# Number of up-sets of {0,1}^n (= monotone Boolean functions of n variables).
DEDEKIND = {
    0: 2,
    1: 3,
    2: 6,
    3: 20,
    4: 168,
    5: 7581,
    6: 7828354,
    7: 2414682040998,
    8: 56130437228687557907788,
}


@dataclass(frozen=True, order=True)
class Point:
    """A vertex of {0,1}^n; ``bits`` bit (i-1) stores coordinate x_i."""

    n: int
    bits: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ARITY:
            raise DomainError(f"arity must be between 1 and {MAX_ARITY}, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise DomainError(f"bits {self.bits:#x} do not fit arity {self.n}")

    def coord(self, i: int) -> int:
        """Coordinate x_i, 1-based."""
        if not 1 <= i <= self.n:
            raise DomainError(f"coordinate index {i} out of range 1..{self.n}")
        return (self.bits >> (i - 1)) & 1

    def coords(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.n))

    @classmethod
    def from_coords(cls, coords: Iterable[int]) -> "Point":
        coords = tuple(coords)
        bits = 0
        for i, c in enumerate(coords):
            if c not in (0, 1):
                raise DomainError(f"coordinate {c!r} is not a bit")
            bits |= c << i
        return cls(len(coords), bits)

    def label(self) -> str:
        """Bit-string label; character i-1 is coordinate x_i."""
        return "".join(str((self.bits >> i) & 1) for i in range(self.n))

    @classmethod
    def from_label(cls, s: str) -> "Point":
        return cls.from_coords(int(c) for c in s)

    def join(self, other: "Point") -> "Point":
        _check_arity(self, other)
        return Point(self.n, self.bits | other.bits)

    def meet(self, other: "Point") -> "Point":
        _check_arity(self, other)
        return Point(self.n, self.bits & other.bits)

    def __repr__(self):
        return f"Point({self.coords()})"


def _check_arity(x: Point, y: Point) -> None:
    if x.n != y.n:
        raise ArityMismatchError(f"arity mismatch: {x.n} vs {y.n}")


def leq_points(x: Point, y: Point) -> bool:
    """Componentwise order: x <= y iff x.bits is a submask of y.bits."""
    _check_arity(x, y)
    return x.bits & ~y.bits == 0


def is_up_set(points: Iterable[Point], n: int) -> bool:
    """True iff the set is upward closed in {0,1}^n (vacuously for the
    empty set and trivially for the full cube)."""
    mask = 0
    for p in points:
        if p.n != n:
            raise ArityMismatchError(f"point arity {p.n} does not match n={n}")
        mask |= 1 << p.bits
    return _mask_is_up_set(mask, n)


def _mask_is_up_set(mask: int, n: int) -> bool:
    for k in range(1 << n):
        if (mask >> k) & 1:
            for i in range(n):
                up = k | (1 << i)
                if not (mask >> up) & 1:
                    return False
    return True


@dataclass(frozen=True, order=True)
class UpSet:
    """Upward-closed subset of {0,1}^n; bit k of ``mask`` marks membership
    of the point with word value k.  Upward closure is enforced."""

    n: int
    mask: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ARITY:
            raise DomainError(f"arity must be between 1 and {MAX_ARITY}, got {self.n}")
        if self.mask < 0 or self.mask >> (1 << self.n):
            raise DomainError("membership mask does not fit the cube")
        if not _mask_is_up_set(self.mask, self.n):
            raise DomainError("set is not upward closed")

    @classmethod
    def from_points(cls, n: int, points: Iterable[Point]) -> "UpSet":
        mask = 0
        for p in points:
            if p.n != n:
                raise ArityMismatchError(f"point arity {p.n} does not match n={n}")
            mask |= 1 << p.bits
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "UpSet":
        return cls(n, (1 << (1 << n)) - 1)

    @classmethod
    def empty(cls, n: int) -> "UpSet":
        return cls(n, 0)

    @classmethod
    def principal_filter(cls, p: Point) -> "UpSet":
        """Up-filter of a single point."""
        mask = 0
        for k in range(1 << p.n):
            if p.bits & ~k == 0:
                mask |= 1 << k
        return cls(p.n, mask)

    def __contains__(self, p: Point) -> bool:
        if p.n != self.n:
            raise ArityMismatchError(f"arity mismatch: {p.n} vs {self.n}")
        return bool((self.mask >> p.bits) & 1)

    def members(self) -> Iterator[Point]:
        for k in range(1 << self.n):
            if (self.mask >> k) & 1:
                yield Point(self.n, k)

    def size(self) -> int:
        return self.mask.bit_count()

    def labels(self) -> list[str]:
        return [p.label() for p in self.members()]


def minimal_elements(s: UpSet) -> frozenset[Point]:
    """Minimal members of an up-set; always an antichain whose upward
    closure gives the set back."""
    out = []
    for k in range(1 << s.n):
        if not (s.mask >> k) & 1:
            continue
        # In an up-set a member is minimal iff removing any single 1-bit
        # leaves the set.
        if all(not (s.mask >> (k & ~(1 << i))) & 1 for i in range(s.n) if (k >> i) & 1):
            out.append(Point(s.n, k))
    return frozenset(out)


def _up_set_masks(n: int) -> list[int]:
    # Doubling recursion: an up-set of {0,1}^n is a pair (S0, S1) of up-sets
    # of {0,1}^(n-1) over the x_n = 0 / x_n = 1 half-cubes with S0 <= S1.
    if n == 0:
        return [0, 1]
    half = _up_set_masks(n - 1)
    shift = 1 << (n - 1)
    masks = [a | (b << shift) for b in half for a in half if a & ~b == 0]
    masks.sort()
    return masks


def enumerate_up_sets(n: int) -> list[UpSet]:
    """All up-sets of {0,1}^n, sorted by membership mask; the count is the
    Dedekind number."""
    if not 1 <= n <= MAX_ENUM_ARITY:
        projected = DEDEKIND.get(n, "astronomically many")
        raise CapacityError(
            f"up-set enumeration is capped at n={MAX_ENUM_ARITY}; "
            f"n={n} would produce {projected} up-sets"
        )
    return [UpSet(n, m) for m in _up_set_masks(n)]

import pytest

from latthresh.boolean_domain import (
    DEDEKIND,
    Point,
    UpSet,
    enumerate_up_sets,
    is_up_set,
    leq_points,
    minimal_elements,
)
from latthresh.errors import ArityMismatchError, CapacityError, DomainError

from helpers import brute_up_set_masks


def P(*coords):
    return Point.from_coords(coords)


class TestPointOrder:
    def test_basic_comparisons(self):
        assert leq_points(P(1, 0), P(1, 1))
        assert not leq_points(P(1, 0), P(0, 1))
        assert not leq_points(P(0, 1), P(1, 0))

    def test_reflexive_n4(self):
        for k in range(16):
            x = Point(4, k)
            assert leq_points(x, x)

    def test_partial_order_axioms_n4(self):
        pts = [Point(4, k) for k in range(16)]
        for x in pts:
            for y in pts:
                if leq_points(x, y) and leq_points(y, x):
                    assert x == y
                for z in pts:
                    if leq_points(x, y) and leq_points(y, z):
                        assert leq_points(x, z)

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatchError):
            leq_points(P(1, 0), P(1, 0, 1))

    def test_labels_roundtrip(self):
        p = P(1, 1, 0)
        assert p.label() == "110"
        assert Point.from_label("110") == p


class TestIsUpSet:
    def test_singleton_top(self):
        assert is_up_set([P(1, 1)], 2)

    def test_non_up_set(self):
        assert not is_up_set([P(1, 0)], 2)

    def test_empty_and_full(self):
        assert is_up_set([], 2)
        assert is_up_set([Point(3, k) for k in range(8)], 3)


class TestMinimalElements:
    def test_two_block_function(self):
        # True-set of x1 x2 or x3 x4, computed by scanning all 16 points.
        mask = 0
        for k in range(16):
            if (k & 0b0011) == 0b0011 or (k & 0b1100) == 0b1100:
                mask |= 1 << k
        s = UpSet(4, mask)
        assert minimal_elements(s) == {P(1, 1, 0, 0), P(0, 0, 1, 1)}

    def test_full_cube(self):
        assert minimal_elements(UpSet.full(3)) == {Point(3, 0)}

    def test_empty(self):
        assert minimal_elements(UpSet.empty(3)) == frozenset()

    def test_non_up_set_rejected(self):
        with pytest.raises(DomainError):
            UpSet.from_points(2, [P(1, 0)])

    def test_antichain_and_closure(self):
        for s in enumerate_up_sets(3):
            mins = minimal_elements(s)
            for a in mins:
                for b in mins:
                    if a != b:
                        assert not leq_points(a, b)
            rebuilt = 0
            for m in mins:
                for k in range(8):
                    if m.bits & ~k == 0:
                        rebuilt |= 1 << k
            assert rebuilt == s.mask


class TestEnumerateUpSets:
    @pytest.mark.parametrize("n,count", [(1, 3), (2, 6), (3, 20), (4, 168), (5, 7581)])
    def test_counts(self, n, count):
        assert len(enumerate_up_sets(n)) == count
        assert DEDEKIND[n] == count

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_brute_scan(self, n):
        assert [u.mask for u in enumerate_up_sets(n)] == brute_up_set_masks(n)

    def test_sorted_and_unique(self):
        masks = [u.mask for u in enumerate_up_sets(4)]
        assert masks == sorted(set(masks))

    def test_all_valid(self):
        for u in enumerate_up_sets(3):
            assert is_up_set(u.members(), 3)

    def test_capacity_error(self):
        with pytest.raises(CapacityError, match="7828354"):
            enumerate_up_sets(6)

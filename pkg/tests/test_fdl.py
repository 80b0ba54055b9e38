import itertools

import pytest

from latthresh import fdl
from latthresh.boolean_domain import Point, enumerate_up_sets
from latthresh.errors import ArityMismatchError, CapacityError, ParseError

from helpers import pointwise_leq


def C(*gens):
    mask = 0
    for g in gens:
        mask |= 1 << (g - 1)
    return mask


class TestCanonicalize:
    def test_absorption(self):
        e = fdl.canonicalize({C(1), C(1, 2)}, 2)
        assert e.clauses == (C(1),)

    def test_bottom_absorbs(self):
        e = fdl.canonicalize({0, C(2)}, 2)
        assert e == fdl.bottom(2)

    def test_triple(self):
        e = fdl.canonicalize({C(1, 2), C(2, 3), C(1, 2, 3)}, 3)
        assert set(e.clauses) == {C(1, 2), C(2, 3)}
        # The dropped clause changes nothing pointwise.
        for k in range(8):
            full = all(c & k for c in (C(1, 2), C(2, 3), C(1, 2, 3)))
            assert fdl.eval_element(e, Point(3, k)) == int(full)

    def test_idempotent(self):
        raw = {C(1, 2), C(2, 3), C(1, 2, 3), C(3)}
        e = fdl.canonicalize(raw, 3)
        assert fdl.canonicalize(e.clauses, 3) == e


class TestOrder:
    def test_generator_below_join(self):
        assert fdl.leq(fdl.generator(2, 1), fdl.parse_element("w1 v w2", 2))

    def test_bottom_below_everything(self):
        b = fdl.bottom(3)
        for e in fdl.enumerate_elements(3):
            assert fdl.leq(b, e)

    def test_meet_below_factor(self):
        a = fdl.parse_element("(w1 v w2) ^ (w3 v w4)", 4)
        b = fdl.parse_element("w1 v w2", 4)
        assert fdl.leq(a, b)
        assert not fdl.leq(b, a)
        assert pointwise_leq(a, b) and not pointwise_leq(b, a)

    def test_order_matches_eval_oracle_n3(self):
        elems = fdl.enumerate_elements(3)
        assert len(elems) == 20
        for a in elems:
            for b in elems:
                assert fdl.leq(a, b) == pointwise_leq(a, b)

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatchError):
            fdl.leq(fdl.top(2), fdl.top(3))


class TestMeetJoin:
    def test_distributivity_example(self):
        w1, w2, w3 = (fdl.generator(3, i) for i in (1, 2, 3))
        lhs = fdl.join(w1, fdl.meet(w2, w3))
        rhs = fdl.meet(fdl.join(w1, w2), fdl.join(w1, w3))
        assert lhs == rhs
        assert set(lhs.clauses) == {C(1, 2), C(1, 3)}

    def test_bound_laws(self):
        for e in fdl.enumerate_elements(2):
            assert fdl.meet(fdl.top(2), e) == e
            assert fdl.join(fdl.bottom(2), e) == e
            assert fdl.meet(fdl.bottom(2), e) == fdl.bottom(2)
            assert fdl.join(fdl.top(2), e) == fdl.top(2)

    def test_join_of_generators(self):
        assert fdl.join(fdl.generator(2, 1), fdl.generator(2, 2)).clauses == (C(1, 2),)

    def test_lattice_laws_exhaustive_n3(self):
        elems = fdl.enumerate_elements(3)
        for a in elems:
            assert fdl.meet(a, a) == a and fdl.join(a, a) == a
        for a, b in itertools.product(elems, repeat=2):
            assert fdl.meet(a, b) == fdl.meet(b, a)
            assert fdl.join(a, b) == fdl.join(b, a)
            assert fdl.meet(a, fdl.join(a, b)) == a
            assert fdl.join(a, fdl.meet(a, b)) == a
        for a, b, c in itertools.product(elems, repeat=3):
            assert fdl.meet(a, fdl.meet(b, c)) == fdl.meet(fdl.meet(a, b), c)
            assert fdl.join(a, fdl.join(b, c)) == fdl.join(fdl.join(a, b), c)
            assert fdl.meet(a, fdl.join(b, c)) == fdl.join(fdl.meet(a, b), fdl.meet(a, c))

    def test_results_are_canonical(self):
        elems = fdl.enumerate_elements(2)
        for a, b in itertools.product(elems, repeat=2):
            for r in (fdl.meet(a, b), fdl.join(a, b)):
                assert fdl.canonicalize(r.clauses, 2) == r

    def test_meet_join_are_bounds(self):
        elems = fdl.enumerate_elements(2)
        for a, b in itertools.product(elems, repeat=2):
            m, j = fdl.meet(a, b), fdl.join(a, b)
            assert fdl.leq(m, a) and fdl.leq(m, b)
            assert fdl.leq(a, j) and fdl.leq(b, j)
            for c in elems:
                if fdl.leq(c, a) and fdl.leq(c, b):
                    assert fdl.leq(c, m)
                if fdl.leq(a, c) and fdl.leq(b, c):
                    assert fdl.leq(j, c)


class TestEval:
    def test_clause_satisfied(self):
        e = fdl.FdlElement(2, (C(1, 2),))
        assert fdl.eval_element(e, Point.from_coords((1, 0))) == 1

    def test_bottom_is_zero(self):
        for k in range(4):
            assert fdl.eval_element(fdl.bottom(2), Point(2, k)) == 0

    def test_second_clause_unsatisfied(self):
        e = fdl.FdlElement(4, (C(1, 2), C(3, 4)))
        assert fdl.eval_element(e, Point.from_coords((1, 0, 0, 0))) == 0


class TestToUpSet:
    def test_top_full_cube(self):
        assert fdl.to_up_set(fdl.top(3)).size() == 8

    def test_generator_half_cube(self):
        u = fdl.to_up_set(fdl.generator(2, 1))
        assert sorted(u.labels()) == ["10", "11"]

    def test_two_clause_true_set(self):
        u = fdl.to_up_set(fdl.FdlElement(4, (C(1, 2), C(3, 4))))
        assert u.size() == 9
        assert Point.from_coords((1, 0, 1, 0)) in u
        assert Point.from_coords((1, 1, 0, 0)) not in u

    def test_order_embedding_n3(self):
        elems = fdl.enumerate_elements(3)
        for a in elems:
            for b in elems:
                subset = fdl.to_up_set(a).mask & ~fdl.to_up_set(b).mask == 0
                assert fdl.leq(a, b) == subset


class TestEnumeration:
    def test_n1(self):
        assert fdl.enumerate_elements(1) == sorted(
            [fdl.bottom(1), fdl.generator(1, 1), fdl.top(1)]
        )

    def test_n2_elements(self):
        elems = set(fdl.enumerate_elements(2))
        expected = {
            fdl.bottom(2),
            fdl.meet(fdl.generator(2, 1), fdl.generator(2, 2)),
            fdl.generator(2, 1),
            fdl.generator(2, 2),
            fdl.join(fdl.generator(2, 1), fdl.generator(2, 2)),
            fdl.top(2),
        }
        assert elems == expected

    @pytest.mark.parametrize("n,count", [(1, 3), (2, 6), (3, 20), (4, 168)])
    def test_bijection_with_up_sets(self, n, count):
        elems = fdl.enumerate_elements(n)
        assert len(elems) == count
        images = {fdl.to_up_set(e).mask for e in elems}
        assert images == {u.mask for u in enumerate_up_sets(n)}

    def test_canonical_uniqueness_n3(self):
        elems = fdl.enumerate_elements(3)
        for a in elems:
            for b in elems:
                assert (a == b) == (fdl.to_up_set(a) == fdl.to_up_set(b))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            fdl.enumerate_elements(6)


class TestText:
    def test_format(self):
        e = fdl.FdlElement(4, (C(1, 2), C(3, 4)))
        assert fdl.format_element(e) == "(w1 v w2) ^ (w3 v w4)"
        assert fdl.format_element(fdl.top(2)) == "1"
        assert fdl.format_element(fdl.bottom(2)) == "0"
        assert fdl.format_element(fdl.generator(3, 2)) == "w2"

    def test_parse_roundtrip_n3(self):
        for e in fdl.enumerate_elements(3):
            assert fdl.parse_element(fdl.format_element(e), 3) == e

    def test_parse_canonicalizes(self):
        assert fdl.parse_element("w1 ^ (w1 v w2)", 2) == fdl.generator(2, 1)

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            fdl.parse_element("w1 v", 2)
        with pytest.raises(ParseError):
            fdl.parse_element("w5", 2)
        with pytest.raises(ParseError):
            fdl.parse_element("(w1 v w2", 2)

"""Tests for monodromy data, Hurwitz counts and etale cover enumeration"""

from fractions import Fraction

import pytest

from covercrimp.curves import riemann_hurwitz
from covercrimp.errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    DomainError,
    SchemaError,
)
from covercrimp.monodromy import (
    BranchedMonodromy,
    connected_frobenius_count,
    content_sum,
    count_monodromies,
    cover_genus,
    dimension,
    enumerate_etale_covers,
    frobenius_count,
    hurwitz_count,
    is_connected,
    list_monodromies,
    orbinode_index,
    partitions,
    search_space_size,
    validate,
)
from covercrimp.monodromy.permutation import all_permutations, identity, product


@pytest.mark.lightweight
class TestBranchedMonodromy:
    def test_parse_mixed_notation(self):
        m = BranchedMonodromy.parse(3, [], [[2, 1, 3], "(1 2)"])
        assert validate(m)
        assert not is_connected(m)
        assert m.branch_degree == 2
        assert m.to_dict() == {
            "degree": 3,
            "genus": 0,
            "handles": [],
            "branches": ["(1 2)", "(1 2)"],
        }

    def test_relation_includes_handles(self):
        m = BranchedMonodromy.parse(3, [["(1 2)", "(1 2 3)"]], ["(1 2 3)"])
        assert not validate(m)

    def test_handle_count_must_match_genus(self):
        with pytest.raises(SchemaError):
            BranchedMonodromy(2, 1)

    def test_degree_must_be_positive(self):
        with pytest.raises(DomainError):
            BranchedMonodromy(0, 0)

    def test_genus_of_a_valid_connected_datum(self):
        m = BranchedMonodromy.parse(2, [], ["(1 2)"] * 6)
        assert cover_genus(m) == 2

    def test_genus_needs_a_valid_relation(self):
        with pytest.raises(DomainError):
            cover_genus(BranchedMonodromy.parse(2, [], ["(1 2)"]))

    def test_genus_needs_transitivity(self):
        with pytest.raises(DisconnectedGraphError):
            cover_genus(BranchedMonodromy.parse(3, [], ["(1 2)", "(1 2)"]))

    def test_canonical_is_conjugation_invariant(self):
        m = BranchedMonodromy.parse(3, [], ["(1 2)", "(2 3)", "(1 3)", "(1 2)"])
        canonical = m.canonical()
        for g in all_permutations(3):
            assert m.conjugate_by(g).canonical() == canonical


@pytest.mark.lightweight
class TestOrbinodeIndex:
    def test_order_is_the_smallest_admissible_index(self):
        for p in all_permutations(4):
            k = orbinode_index(p)
            assert product([p] * k, 4) == identity(4)
            assert all(product([p] * j, 4) != identity(4) for j in range(1, k))


@pytest.mark.lightweight
class TestCharacters:
    def test_partitions(self):
        assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert list(partitions(0)) == [()]

    @pytest.mark.parametrize("shape, f", [((2, 1), 2), ((2, 2), 2), ((3, 1), 3), ((3, 2), 5)])
    def test_dimension(self, shape, f):
        assert dimension(shape) == f

    def test_content_sum(self):
        assert content_sum((3,)) == 3
        assert content_sum((2, 1)) == 0
        assert content_sum((1, 1, 1)) == -3

    @pytest.mark.parametrize(
        "d, h, b, total, connected",
        [(3, 0, 4, 27, 24), (2, 1, 0, 4, 3), (2, 0, 6, 1, 1), (2, 0, 5, 0, 0), (1, 2, 0, 1, 1)],
    )
    def test_frobenius_counts(self, d, h, b, total, connected):
        assert frobenius_count(d, h, b) == total
        assert connected_frobenius_count(d, h, b) == connected

    def test_frobenius_needs_nonnegative_input(self):
        with pytest.raises(DomainError):
            frobenius_count(2, -1, 0)


class TestHurwitzCount:
    def test_double_cover_of_the_line(self):
        count = hurwitz_count(2, 0, 6)
        assert count.raw == 1
        assert count.weighted == Fraction(1, 2)

    def test_simply_branched_cubic(self):
        count = hurwitz_count(3, 0, 4)
        assert count.raw == 24
        assert count.to_dict() == {
            "d": 3,
            "h": 0,
            "b": 4,
            "raw": 24,
            "weighted": "4",
            "connected_only": True,
        }

    def test_disconnected_covers_included_on_request(self):
        assert hurwitz_count(3, 0, 4, include_disconnected=True).raw == 27

    def test_odd_branching_has_no_covers(self):
        assert hurwitz_count(2, 0, 5).raw == 0

    def test_trivial_degree(self):
        assert hurwitz_count(1, 0, 0).raw == 1
        assert hurwitz_count(1, 0, 2).raw == 0

    def test_agrees_with_characters(self):
        for d, h, b in [(2, 1, 2), (3, 0, 2), (3, 1, 0), (4, 0, 2)]:
            assert hurwitz_count(d, h, b).raw == connected_frobenius_count(d, h, b)
            raw = hurwitz_count(d, h, b, include_disconnected=True).raw
            assert raw == frobenius_count(d, h, b)

    def test_workers_do_not_change_the_count(self):
        assert hurwitz_count(3, 0, 4, workers=2).raw == 24

    def test_budget(self):
        with pytest.raises(BudgetExceededError) as exc_info:
            hurwitz_count(3, 0, 6, budget=100)
        assert exc_info.value.details == {"cardinality": 729, "budget": 100}

    def test_negative_branching(self):
        with pytest.raises(DomainError):
            hurwitz_count(2, 0, -2)

    @pytest.mark.parametrize(
        "d, h, types, size",
        [(2, 1, [[2], [2]], 4), (4, 0, [[2], [3]], 48), (3, 1, [], 36), (4, 0, [[2, 2]], 3)],
    )
    def test_search_space_size(self, d, h, types, size):
        assert search_space_size(d, h, types) == size


class TestCoverGenus:
    @pytest.mark.parametrize("d, h, b", [(2, 0, 6), (3, 0, 4), (2, 1, 2), (4, 0, 6)])
    def test_matches_riemann_hurwitz(self, d, h, b):
        expected = riemann_hurwitz(d, h, b=b).g
        monodromies = list_monodromies(d, h, [[2]] * b)
        assert monodromies
        for m in monodromies:
            assert cover_genus(m) == expected

    def test_prescribed_classes(self):
        tuples = list_monodromies(4, 0, [[3], [3], [2, 2]])
        assert count_monodromies(4, 0, [[3], [3], [2, 2]]) == len(tuples)
        for m in tuples:
            assert validate(m)
            # b = 2 + 2 + 2 over the line in degree 4
            assert cover_genus(m) == 0


class TestEtaleCovers:
    def test_double_covers_of_an_elliptic_curve(self):
        classes = enumerate_etale_covers(2, 1)
        assert len(classes) == 4
        assert sum(1 for c in classes if c.connected) == 3

    def test_two_punctures_with_involution(self):
        classes = enumerate_etale_covers(2, 0, [[2], [2]])
        assert len(classes) == 1
        assert classes[0].connected
        assert classes[0].orbinode_orders == [2, 2]
        assert classes[0].to_dict()["orbinode_orders"] == [2, 2]

    def test_trivial_cover(self):
        classes = enumerate_etale_covers(1, 0)
        assert len(classes) == 1
        assert classes[0].connected

    def test_classes_are_conjugation_invariant(self):
        classes = enumerate_etale_covers(3, 0, [[2], [2], [3]])
        representatives = [c.monodromy for c in classes]
        for m in representatives:
            assert m == m.canonical()
            for g in all_permutations(3):
                assert m.conjugate_by(g).canonical() in representatives

"""Tests for marked nodal curves, weighted stability and Riemann-Hurwitz"""

from fractions import Fraction

import pytest

from covercrimp.curves import (
    MarkedNodalCurve,
    Marking,
    StabilityParams,
    arithmetic_genus,
    hassett_nonempty,
    is_epsilon_stable,
    multiplicity_window,
    omega_epsilon_degrees,
    riemann_hurwitz,
    stability_chambers,
    stability_thresholds,
)
from covercrimp.errors import DisconnectedGraphError, DomainError, ParityError, SchemaError


def eps(text: str) -> StabilityParams:
    return StabilityParams.parse(text)


@pytest.fixture
def four_marked_line():
    """Genus-0 component with markings of multiplicity 2, 2, 1, 1"""
    return MarkedNodalCurve.smooth(0, [2, 2, 1, 1])


@pytest.mark.lightweight
class TestStabilityParams:
    def test_parse(self):
        assert eps("1/3").epsilon == Fraction(1, 3)
        assert str(eps(" 2/4 ")) == "1/2"

    @pytest.mark.parametrize("text", ["0", "-1/2", "3/2"])
    def test_out_of_range(self, text):
        with pytest.raises(DomainError):
            eps(text)

    def test_not_a_number(self):
        with pytest.raises(SchemaError):
            eps("a third")

    def test_plain_integer_is_promoted(self):
        assert StabilityParams(1).epsilon == Fraction(1)


@pytest.mark.lightweight
class TestMarkedNodalCurve:
    def test_arithmetic_genus(self):
        assert arithmetic_genus(MarkedNodalCurve.smooth(2)) == 2
        banana = MarkedNodalCurve((0, 0), ((0, 1), (0, 1), (0, 1)))
        assert arithmetic_genus(banana) == 2
        nodal_cubic = MarkedNodalCurve((0,), ((0, 0),))
        assert arithmetic_genus(nodal_cubic) == 1

    def test_disconnected(self):
        curve = MarkedNodalCurve((0, 1))
        assert not curve.is_connected()
        with pytest.raises(DisconnectedGraphError):
            arithmetic_genus(curve)

    def test_node_branches_count_loops_twice(self):
        curve = MarkedNodalCurve((0, 0), ((0, 0), (0, 1)))
        assert curve.node_branches() == [3, 1]

    def test_omega_degrees(self):
        curve = MarkedNodalCurve(
            (0, 1), ((0, 1),), (Marking(0, 1), Marking(0, 2), Marking(1, 1))
        )
        assert omega_epsilon_degrees(curve, eps("1/2")) == (Fraction(1, 2), Fraction(3, 2))

    @pytest.mark.parametrize(
        "components, edges, markings, points",
        [
            ((), (), (), ()),
            ((-1,), (), (), ()),
            ((0,), ((0, 1),), (), ()),
            ((0,), (), (Marking(1, 1),), ()),
            ((0,), (), (Marking(0, 0),), ()),
            ((0,), (), (), (2,)),
        ],
    )
    def test_invalid_graphs(self, components, edges, markings, points):
        with pytest.raises(DomainError):
            MarkedNodalCurve(components, edges, markings, points)

    def test_to_dict(self):
        curve = MarkedNodalCurve.smooth(1, [3], points=1)
        assert curve.to_dict() == {
            "components": [{"genus": 1}],
            "edges": [],
            "markings": [{"component": 0, "mult": 3}],
            "points": [{"component": 0}],
        }
        assert curve.total_multiplicity == 3


@pytest.mark.lightweight
class TestStability:
    def test_stable_exactly_between_a_third_and_a_half(self, four_marked_line):
        assert not is_epsilon_stable(four_marked_line, eps("1/3"))
        assert is_epsilon_stable(four_marked_line, eps("2/5"))
        assert is_epsilon_stable(four_marked_line, eps("1/2"))
        assert not is_epsilon_stable(four_marked_line, eps("3/5"))
        assert not is_epsilon_stable(four_marked_line, eps("1/10"))

    def test_reasons(self, four_marked_line):
        heavy = is_epsilon_stable(four_marked_line, eps("3/5"))
        assert "marking 0" in heavy.reason
        light = is_epsilon_stable(four_marked_line, eps("1/10"))
        assert "component 0" in light.reason
        assert light.to_dict()["degrees"] == ["-7/5"]

    def test_thresholds(self, four_marked_line):
        assert stability_thresholds(four_marked_line) == [
            Fraction(1, 3),
            Fraction(1, 2),
            Fraction(1),
        ]

    def test_chambers(self, four_marked_line):
        chambers = [
            (str(c.lower), str(c.upper), c.stable) for c in stability_chambers(four_marked_line)
        ]
        assert chambers == [
            ("0", "1/3", False),
            ("1/3", "1/3", False),
            ("1/3", "1/2", True),
            ("1/2", "1/2", True),
            ("1/2", "1", False),
            ("1", "1", False),
        ]

    def test_chambers_without_walls(self):
        chambers = stability_chambers(MarkedNodalCurve.smooth(2))
        assert [(c.lower, c.upper, c.stable) for c in chambers] == [
            (Fraction(0), Fraction(1), True),
            (Fraction(1), Fraction(1), True),
        ]
        assert chambers[1].is_wall

    def test_disconnected_is_never_stable(self):
        assert not is_epsilon_stable(MarkedNodalCurve((2, 2)), eps("1"))

    def test_rational_tail_needs_weight(self):
        # elliptic component with a rational tail carrying two simple markings
        curve = MarkedNodalCurve((1, 0), ((0, 1),), (Marking(1, 1), Marking(1, 1)))
        assert not is_epsilon_stable(curve, eps("1/2"))
        assert is_epsilon_stable(curve, eps("2/3"))
        assert Fraction(1, 2) in stability_thresholds(curve)


@pytest.mark.lightweight
class TestModuliAndRiemannHurwitz:
    def test_hassett_nonempty(self):
        assert not hassett_nonempty(0, 6, eps("1/6"))
        assert not hassett_nonempty(0, 6, eps("1/3"))
        assert hassett_nonempty(0, 6, eps("1/2"))
        assert hassett_nonempty(2, 0, eps("1/100"))
        with pytest.raises(DomainError):
            hassett_nonempty(-1, 3, eps("1"))

    def test_multiplicity_window(self):
        assert multiplicity_window(1) == (Fraction(1, 2), Fraction(1))
        assert multiplicity_window(2) == (Fraction(1, 3), Fraction(1, 2))
        with pytest.raises(DomainError):
            multiplicity_window(0)

    @pytest.mark.parametrize(
        "d, h, b, g", [(2, 0, 6, 2), (3, 0, 4, 0), (2, 1, 2, 2), (1, 3, 0, 3), (4, 0, 6, 0)]
    )
    def test_genus_from_branching(self, d, h, b, g):
        assert riemann_hurwitz(d, h, b=b).g == g
        assert riemann_hurwitz(d, h, g=g).b == b

    def test_odd_branching(self):
        with pytest.raises(ParityError):
            riemann_hurwitz(2, 0, b=5)

    def test_negative_solutions(self):
        with pytest.raises(DomainError):
            riemann_hurwitz(3, 1, g=0)
        with pytest.raises(DomainError):
            riemann_hurwitz(3, 0, b=2)

    def test_exactly_one_unknown(self):
        with pytest.raises(DomainError):
            riemann_hurwitz(2, 0)
        with pytest.raises(DomainError):
            riemann_hurwitz(2, 0, b=2, g=0)

    def test_to_dict(self):
        assert riemann_hurwitz(2, 0, b=6).to_dict() == {"d": 2, "h": 0, "b": 6, "g": 2}


@pytest.mark.parametrize(
    "curve",
    [
        MarkedNodalCurve.smooth(3, [1, 2, 5]),
        MarkedNodalCurve((0, 1, 2), ((0, 1), (1, 2), (2, 0), (1, 1)), (Marking(0, 3),)),
        MarkedNodalCurve((0, 0), ((0, 1),) * 4, (Marking(1, 1), Marking(0, 2))),
    ],
)
def test_degrees_add_up(curve):
    params = eps("2/7")
    total = sum(omega_epsilon_degrees(curve, params))
    expected = 2 * arithmetic_genus(curve) - 2 + params.epsilon * curve.total_multiplicity
    assert total == expected

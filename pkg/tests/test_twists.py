"""Dehn twists: fixtures, group identities, homology shadow."""

import pytest

from blfkit import (
    Anchor,
    Arc,
    ClosedCurve,
    TwistWord,
    arcs_isotopic,
    curves_isotopic,
    dehn_twist,
    hexagon_scheme,
    relabel_curve,
    square_torus_scheme,
)
from blfkit.curves import homology_class, intersection_form
from blfkit.errors import NotSimpleError
from blfkit.schemes import Relabeling
from blfkit.twists import transvection


@pytest.fixture(scope="module")
def hexagon():
    return hexagon_scheme().build()


def rotation(scheme, amount):
    m = {k: (k + amount) % 6 for k in range(6)}
    m.update({f"u{k}": f"u{(k + amount) % 6}" for k in range(6)})
    return Relabeling.from_dict(scheme, m)


class TestHexagonFixtures:
    def test_first_cycle_rotates_the_round_curve(self, hexagon):
        C = ClosedCurve(hexagon, (0,))
        C1 = ClosedCurve(hexagon, (3, 2))
        image = dehn_twist(C, C1)
        assert curves_isotopic(image, relabel_curve(rotation(hexagon, 2), C), oriented=True)

    def test_three_cycle_composite_fixes_round_curve(self, hexagon):
        C = ClosedCurve(hexagon, (0,))
        word = TwistWord(
            (
                (ClosedCurve(hexagon, (1, 0)), 1),
                (ClosedCurve(hexagon, (5, 4)), 1),
                (ClosedCurve(hexagon, (3, 2)), 1),
            )
        )
        assert curves_isotopic(word.apply(C), C, oriented=True)

    def test_composite_moves_transverse_arc(self, hexagon):
        A = Arc(hexagon, Anchor("u1"), (), Anchor("u2"))
        word = TwistWord(
            (
                (ClosedCurve(hexagon, (1, 0)), 1),
                (ClosedCurve(hexagon, (5, 4)), 1),
                (ClosedCurve(hexagon, (3, 2)), 1),
            )
        )
        image = word.apply(A)
        assert not arcs_isotopic(image, A)
        assert arcs_isotopic(
            image, Arc(hexagon, Anchor("u1"), (0, 1, 5, 1, 0, 4), Anchor("u2"))
        )

    def test_twist_along_disjoint_curve_is_inert(self, hexagon):
        C = ClosedCurve(hexagon, (0,))
        delta = ClosedCurve(hexagon, (1, 5))
        assert curves_isotopic(dehn_twist(C, delta), C, oriented=True)

    def test_twist_requires_simple_curve(self, hexagon):
        C = ClosedCurve(hexagon, (0,))
        with pytest.raises(NotSimpleError):
            dehn_twist(C, ClosedCurve(hexagon, (0, 0)))


class TestGroupIdentities:
    def test_inverse_law(self, hexagon):
        x = ClosedCurve(hexagon, (0, 1))
        c = ClosedCurve(hexagon, (3, 2))
        assert curves_isotopic(
            dehn_twist(dehn_twist(x, c, 1), c, -1), x, oriented=True
        )

    def test_disjoint_twists_commute(self):
        t = square_torus_scheme().build()
        x = ClosedCurve(t, (1,))
        a = ClosedCurve(t, (0,))
        # a is disjoint from itself in both orders with any bystander
        lhs = dehn_twist(dehn_twist(x, a, 1), a, 1)
        rhs = dehn_twist(x, a, 2)
        assert curves_isotopic(lhs, rhs, oriented=True)

    def test_braid_relation(self, hexagon):
        # for curves crossing once: T_a T_b T_a = T_b T_a T_b
        a = ClosedCurve(hexagon, (0,))
        b = ClosedCurve(hexagon, (3, 2))
        lhs = TwistWord(((a, 1), (b, 1), (a, 1)))
        rhs = TwistWord(((b, 1), (a, 1), (b, 1)))
        for probe in ((1,), (2,), (0, 1), (5, 4)):
            x = ClosedCurve(hexagon, probe)
            assert curves_isotopic(lhs.apply(x), rhs.apply(x), oriented=True)

    def test_conjugation_by_rotation(self, hexagon):
        # T_{r(c)} = r T_c r^{-1}
        r = rotation(hexagon, 2)
        c = ClosedCurve(hexagon, (3, 2))
        x = ClosedCurve(hexagon, (0, 1))
        lhs = dehn_twist(x, relabel_curve(r, c))
        rhs = relabel_curve(r, dehn_twist(relabel_curve(r.inverse(), x), c))
        assert curves_isotopic(lhs, rhs, oriented=True)


class TestHomologyShadow:
    def test_transvection_matrix(self, hexagon):
        F = intersection_form(hexagon)
        m = transvection(F, (1, 0, 0), 1)
        # columns are images of the basis classes
        assert m[0] == [1, 0, 0] or m[0][0] == 1

    def test_twist_word_action_matches_curve_level(self, hexagon):
        F = intersection_form(hexagon)
        word = TwistWord(
            (
                (ClosedCurve(hexagon, (1, 0)), 1),
                (ClosedCurve(hexagon, (5, 4)), 1),
                (ClosedCurve(hexagon, (3, 2)), 1),
            )
        )
        mat = word.act_on_homology(hexagon)
        for probe in ((0,), (1,), (2,), (0, 1)):
            x = ClosedCurve(hexagon, probe)
            v = homology_class(hexagon, probe)
            expected = tuple(
                sum(mat[i][j] * v[j] for j in range(3)) for i in range(3)
            )
            assert expected == tuple(homology_class(hexagon, word.apply(x).tokens))

    def test_inverse_word(self, hexagon):
        word = TwistWord(
            (
                (ClosedCurve(hexagon, (3, 2)), 1),
                (ClosedCurve(hexagon, (5, 4)), -2),
            )
        )
        both = word * word.inverse()
        x = ClosedCurve(hexagon, (0, 1))
        assert curves_isotopic(both.apply(x), x, oriented=True)

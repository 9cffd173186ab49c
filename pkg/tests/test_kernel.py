"""Kernel predicate tests: frozen examples plus exactness properties."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dynhull.kernel import (
    COLLINEAR,
    EXACT,
    INEXACT,
    LEFT_TURN,
    ON_OR_LEFT,
    RIGHT,
    RIGHT_TURN,
    HullEdge,
    Point,
    exact_coordinate,
    get_kernel,
)
from dynhull.errors import DegenerateSegment, ParallelLines

P = Point


def seg(a, b):
    return HullEdge(P(*a), P(*b))


class TestOrientation:
    def test_left_turn(self):
        assert EXACT.orientation(P(0, 0), P(1, 0), P(0, 1)) == LEFT_TURN

    def test_collinear(self):
        assert EXACT.orientation(P(0, 0), P(1, 1), P(2, 2)) == COLLINEAR

    def test_right_turn(self):
        assert EXACT.orientation(P(0, 0), P(0, 1), P(1, 0)) == RIGHT_TURN

    @given(st.tuples(*[st.integers(-50, 50) for _ in range(6)]))
    def test_matches_bigint_cross(self, coords):
        # reference: the exactly computed integer cross product
        px, py, qx, qy, rx, ry = coords
        cross = (qx - px) * (ry - py) - (qy - py) * (rx - px)
        want = (cross > 0) - (cross < 0)
        assert EXACT.orientation(P(px, py), P(qx, qy), P(rx, ry)) == want

    @given(st.tuples(*[st.fractions(-5, 5, max_denominator=16) for _ in range(6)]))
    def test_exact_on_rationals(self, coords):
        px, py, qx, qy, rx, ry = coords
        cross = (qx - px) * (ry - py) - (qy - py) * (rx - px)
        want = (cross > 0) - (cross < 0)
        assert EXACT.orientation(P(px, py), P(qx, qy), P(rx, ry)) == want


class TestSlopeCompare:
    def test_less(self):
        assert EXACT.slope_compare(seg((0, 0), (2, 2)), seg((0, 0), (1, 2))) == -1

    def test_equal(self):
        assert EXACT.slope_compare(seg((0, 0), (1, 1)), seg((5, 5), (6, 6))) == 0

    def test_negative_vs_zero(self):
        assert EXACT.slope_compare(seg((0, 4), (2, 2)), seg((0, 0), (1, 0))) == -1

    def test_vertical_is_plus_infinity(self):
        v = seg((3, 0), (3, 5))
        assert EXACT.slope_compare(v, seg((0, 0), (1, 100))) == 1
        assert EXACT.slope_compare(seg((0, 0), (1, 100)), v) == -1
        assert EXACT.slope_compare(v, seg((7, 1), (7, 2))) == 0

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateSegment):
            EXACT.slope_compare(seg((1, 1), (1, 1)), seg((0, 0), (1, 1)))

    @given(st.tuples(*[st.integers(-30, 30) for _ in range(5)]))
    def test_consistent_with_orientation(self, coords):
        # slope(pq) < slope(pr) iff r lies above the line through pq,
        # for q, r strictly right of p
        px, py, qy, ry, dq = coords
        qx = px + 1 + abs(dq) % 5
        rx = qx + 1
        p, q, r = P(px, py), P(qx, qy), P(rx, ry)
        cmp = EXACT.slope_compare((p, q), (p, r))
        turn = EXACT.orientation(p, q, r)
        assert cmp == -turn


class TestIntersectionSide:
    # expected values derived by solving the 2x2 line systems with Fractions
    def _gamma_x(self, a1, a2, b1, b2):
        sa = Fraction(a2[1] - a1[1], a2[0] - a1[0])
        sb = Fraction(b2[1] - b1[1], b2[0] - b1[0])
        # y = sa (x - a1x) + a1y  intersect  y = sb (x - b1x) + b1y
        return (sb * b1[0] - sa * a1[0] + a1[1] - b1[1]) / (sb - sa)

    def test_right_of_two(self):
        alpha = seg((0, 0), (1, 1))
        beta = seg((2, 4), (3, 2))
        assert self._gamma_x(alpha.left, alpha.right, beta.left, beta.right) == Fraction(8, 3)
        assert EXACT.intersection_side(alpha, beta, 2) == RIGHT

    def test_on_or_left_of_three(self):
        alpha = seg((0, 0), (1, 1))
        beta = seg((2, 4), (3, 2))
        assert EXACT.intersection_side(alpha, beta, 3) == ON_OR_LEFT

    def test_exact_tie_counts_as_on_or_left(self):
        alpha = seg((0, 2), (1, 1))
        beta = seg((1, 1), (2, -1))
        # the supporting lines meet at the shared point (1, 1), right on m
        assert EXACT.intersection_side(alpha, beta, 1) == ON_OR_LEFT

    def test_point_separator_breaks_tie_by_ordinate(self):
        alpha = seg((0, 0), (1, 1))
        beta = seg((2, 4), (3, 2))
        # gamma = (8/3, 8/3)
        g = Fraction(8, 3)
        assert EXACT.intersection_side(alpha, beta, P(g, g)) == ON_OR_LEFT
        assert EXACT.intersection_side(alpha, beta, P(g, g - 1)) == RIGHT
        assert EXACT.intersection_side(alpha, beta, P(g, g + 1)) == ON_OR_LEFT

    def test_parallel_rejected(self):
        with pytest.raises(ParallelLines):
            EXACT.intersection_side(seg((0, 0), (1, 1)), seg((0, 2), (1, 3)), 0)

    @given(st.tuples(*[st.integers(-20, 20) for _ in range(9)]))
    def test_mirror_antisymmetry(self, coords):
        # reflecting through a vertical axis and swapping the segments flips
        # strict OnOrLeft <-> Right (ties stay OnOrLeft on both sides, so
        # only strict outcomes are asserted)
        a1x, a1y, a2y, b1y, b2y, m, d1, d2, d3 = coords
        a1 = P(a1x, a1y)
        a2 = P(a1x + 1 + d1 % 4, a2y)
        b1 = P(a2[0] + 1 + d2 % 4, b1y)
        b2 = P(b1[0] + 1 + d3 % 4, b2y)
        alpha = HullEdge(a1, a2)
        beta = HullEdge(b1, b2)
        try:
            side = EXACT.intersection_side(alpha, beta, m)
        except ParallelLines:
            return
        def refl(p):
            return P(-p[0], p[1])
        r_alpha = HullEdge(refl(b2), refl(b1))
        r_beta = HullEdge(refl(a2), refl(a1))
        r_side = EXACT.intersection_side(r_alpha, r_beta, -m)
        gs = EXACT._gamma_side(alpha[0], alpha[1], beta[0], beta[1], m, None)
        if gs != 0:
            assert (side == ON_OR_LEFT) == (r_side == RIGHT)


class TestBelowOrOnLine:
    def test_below(self):
        assert EXACT.point_below_or_on_line(P(1, 1), seg((0, 2), (2, 2)))

    def test_above(self):
        assert not EXACT.point_below_or_on_line(P(1, 3), seg((0, 2), (2, 2)))

    def test_on_boundary_counts(self):
        assert EXACT.point_below_or_on_line(P(1, 2), seg((0, 2), (2, 2)))


class TestKernelPlumbing:
    def test_exact_coordinate_conversions(self):
        assert exact_coordinate(3) == 3 and isinstance(exact_coordinate(3), int)
        assert exact_coordinate(Fraction(4, 2)) == 2
        assert exact_coordinate(3.25) == Fraction(13, 4)
        with pytest.raises(ValueError):
            exact_coordinate(float("nan"))

    def test_prepare_point(self):
        p = EXACT.prepare_point((0.5, 2))
        assert p == P(Fraction(1, 2), 2)
        q = INEXACT.prepare_point((Fraction(1, 2), 2))
        assert q == P(0.5, 2.0) and isinstance(q.x, float)

    def test_get_kernel(self):
        assert get_kernel("exact") is EXACT
        assert get_kernel(INEXACT) is INEXACT
        with pytest.raises(ValueError):
            get_kernel("fuzzy")

    def test_inexact_is_floating_point(self):
        # a sign the exact kernel gets right and doubles cannot: the inputs
        # carry more than 53 significant bits
        big = (1 << 60) + 1
        p, q, r = P(0, 0), P(big, big), P(1 << 59, (1 << 59) + 1)
        assert EXACT.orientation(p, q, r) == LEFT_TURN
        fp = [INEXACT.prepare_point(x) for x in (p, q, r)]
        assert INEXACT.orientation(*fp) == COLLINEAR

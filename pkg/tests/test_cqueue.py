"""Concatenable queue tests: examples, list-model equivalence, balance."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynhull.cqueue import CQueue
from dynhull.errors import EdgeNotFound, NoChild, OrderViolation
from dynhull.kernel import HullEdge, Point
import dynhull.cqueue as cq


def chain_edges(k, start=0):
    """k consecutive chain edges over vertices (start+i, 0)."""
    pts = [Point(start + i, 0) for i in range(k + 1)]
    return [HullEdge(pts[i], pts[i + 1]) for i in range(k)]


E1, E2, E3 = chain_edges(3)


class TestSplit:
    def test_three_edges_at_middle(self):
        q = CQueue.from_edges([E1, E2, E3])
        l, r = q.split(E2)
        assert l.edges() == [E1]
        assert r.edges() == [E2, E3]

    def test_single_edge(self):
        q = CQueue.from_edges([E1])
        l, r = q.split(E1)
        assert l.edges() == []
        assert r.edges() == [E1]

    def test_hull_of_four_points(self):
        from dynhull.oracle import static_hull
        up, lo = static_hull([(0, 0), (1, 2), (2, 2), (3, 0)])
        assert up == [HullEdge(Point(0, 0), Point(1, 2)),
                      HullEdge(Point(1, 2), Point(2, 2)),
                      HullEdge(Point(2, 2), Point(3, 0))]
        q = CQueue.from_edges(up)
        l, r = q.split(HullEdge(Point(1, 2), Point(2, 2)))
        assert l.edges() == up[:1]
        assert r.edges() == up[1:]

    def test_absent_edge(self):
        q = CQueue.from_edges([E1, E3])
        with pytest.raises(EdgeNotFound):
            q.split(E2)


class TestJoin:
    def test_empty_left(self):
        assert CQueue().join(CQueue.from_edges([E1])).edges() == [E1]

    def test_basic(self):
        got = CQueue.from_edges([E1]).join(CQueue.from_edges([E2, E3]))
        assert got.edges() == [E1, E2, E3]

    def test_split_join_round_trip(self):
        edges = chain_edges(9)
        q = CQueue.from_edges(edges)
        l, r = q.split(edges[4])
        assert l.join(r).edges() == edges

    def test_debug_order_check(self):
        cq.DEBUG = True
        try:
            with pytest.raises(OrderViolation):
                CQueue.from_edges([E2]).join(CQueue.from_edges([E1]))
        finally:
            cq.DEBUG = False


class TestJoinAround:
    def test_singleton(self):
        b = HullEdge(Point(0, 0), Point(1, 0))
        assert CQueue().join_around(b, CQueue()).edges() == [b]

    def test_four_point_hull(self):
        from dynhull.oracle import static_hull
        up, _ = static_hull([(0, 0), (1, 2), (2, 2), (3, 0)])
        got = CQueue.from_edges(up[:1]).join_around(up[1], CQueue.from_edges(up[2:]))
        assert got.edges() == up

    def test_large_balanced(self):
        left = chain_edges(100)
        bridge = HullEdge(Point(101, 0), Point(200, 0))
        right = chain_edges(100, start=200)
        q = CQueue.from_edges(left).join_around(bridge, CQueue.from_edges(right))
        assert q.edges() == left + [bridge] + right
        q.validate()


class TestNavigate:
    def test_root_of_three_is_middle(self):
        q = CQueue.from_edges([E1, E2, E3])
        cur = q.cursor()
        assert cur.edge() == E2
        assert cur.left_child().edge() == E1

    def test_leaf_is_parent_endpoint(self):
        q = CQueue.from_edges([E1, E2, E3])
        below = q.cursor().left_child().left_child()
        assert below.is_leaf()
        assert below.endpoint() == E1.left

    def test_single_edge_children_are_leaves(self):
        q = CQueue.from_edges([E1])
        cur = q.cursor()
        assert not cur.is_leaf()
        assert cur.left_child().is_leaf() and cur.left_child().endpoint() == E1.left
        assert cur.right_child().is_leaf() and cur.right_child().endpoint() == E1.right

    def test_no_child_below_leaf(self):
        q = CQueue.from_edges([E1])
        leaf = q.cursor().left_child()
        with pytest.raises(NoChild):
            leaf.left_child()
        with pytest.raises(NoChild):
            leaf.edge()

    def test_empty_queue_has_no_cursor(self):
        with pytest.raises(NoChild):
            CQueue().cursor()


class TestVertexSplit:
    def test_split_at_breakpoint(self):
        edges = chain_edges(7)
        q = CQueue.from_edges(edges)
        l, r = q.split_at_vertex(Point(3, 0))
        assert l.edges() == edges[:3]
        assert r.edges() == edges[3:]

    def test_ends(self):
        edges = chain_edges(4)
        l, r = CQueue.from_edges(edges).split_at_vertex(Point(0, 0))
        assert l.edges() == [] and r.edges() == edges
        l, r = CQueue.from_edges(edges).split_at_vertex(Point(4, 0))
        assert l.edges() == edges and r.edges() == []

    def test_spanning_edge_is_corruption(self):
        q = CQueue.from_edges([HullEdge(Point(0, 0), Point(4, 0))])
        with pytest.raises(EdgeNotFound):
            q.split_at_vertex(Point(2, 0))


@st.composite
def _ops(draw):
    return draw(st.lists(st.tuples(st.sampled_from(["split", "pop", "join"]),
                                   st.integers(0, 10 ** 6)), max_size=24))


class TestListModelEquivalence:
    """Replaying split/join against plain list slicing."""

    @given(st.integers(1, 200), _ops())
    @settings(max_examples=120, deadline=None)
    def test_random_program(self, k, ops):
        edges = chain_edges(k)
        pool = [(CQueue.from_edges(edges), list(edges))]
        for kind, pick in ops:
            q, model = pool.pop(pick % len(pool))
            if kind == "split" and model:
                at = model[pick % len(model)]
                l, r = q.split(at)
                i = model.index(at)
                pool.append((l, model[:i]))
                pool.append((r, model[i:]))
            elif kind == "pop" and model:
                e, rest = q.pop_first()
                assert e == model[0]
                pool.append((rest, model[1:]))
            elif kind == "join" and pool:
                # join with the neighbouring piece when order allows
                q2, model2 = pool.pop(pick % len(pool))
                if model and model2 and model[-1].right > model2[0].left:
                    if model2[-1].right <= model[0].left:
                        q, model, q2, model2 = q2, model2, q, model
                    else:
                        pool.append((q, model))
                        pool.append((q2, model2))
                        continue
                pool.append((q.join(q2), model + model2))
            else:
                pool.append((q, model))
        for q, model in pool:
            assert q.edges() == model
            q.validate()

    @given(st.integers(0, 300))
    def test_height_bound(self, k):
        q = CQueue.from_edges(chain_edges(k)) if k else CQueue()
        q.validate()
        if q.root is not None:
            assert q.root.height <= 1.45 * math.log2(k + 2)

    def test_random_split_join_height_bound(self):
        rng = random.Random(5)
        edges = chain_edges(512)
        q = CQueue.from_edges(edges)
        model = list(edges)
        for _ in range(300):
            if model and rng.random() < 0.5:
                at = model[rng.randrange(len(model))]
                l, r = q.split(at)
                i = model.index(at)
                if rng.random() < 0.5:
                    q, model = l.join(r), model
                else:
                    q, model = r, model[i:]
            elif model:
                e, q = q.pop_first()
                assert e == model.pop(0)
            if not model:
                break
            q.validate()
            assert q.root.height <= 1.45 * math.log2(len(model) + 2)
            assert q.edges() == model


class TestWidthSums:
    def test_width_sum_tracks_ops(self):
        edges = chain_edges(20)
        widths = [i + 1 for i in range(20)]
        q = CQueue.from_edges(edges, widths)
        assert q.width_sum() == sum(widths)
        l, r = q.split(edges[7])
        assert l.width_sum() == sum(widths[:7])
        assert r.width_sum() == sum(widths[7:])
        q = l.join(r)
        assert q.width_sum() == sum(widths)
        q.validate()

    def test_join_around_width(self):
        b = HullEdge(Point(5, 0), Point(9, 0))
        q = CQueue.from_edges(chain_edges(5), [1] * 5).join_around(
            b, CQueue(), width=4)
        assert q.width_sum() == 9
        q.validate()

"""Convex hulls of rank-ordered data.

A dynamic set of values Y induces the planar set P_Y = {(rank, value)}.
One insertion or deletion in Y shifts the abscissa of linearly many points
of P_Y, so bridges cannot be stored with explicit coordinates.  Instead
each node keeps an *implicit* bridge: the two endpoint values plus their
rank distances (widths) to the node's median leaf.  A bridge of a node
whose subtree does not contain the updated value keeps connecting the same
two values at the same widths, so the stored tuple never changes; only the
root-to-leaf path (and any rotated nodes) is recomputed, giving
O(log^2 n) worst-case updates.

Given the current rank ``r`` of the median, the explicit bridge is
recovered in O(1): left endpoint (r - w1, y1), right endpoint (r + w2, y2).
Median ranks follow from subtree sizes while descending, so no rank lookup
is ever needed (the ``naive`` variant performs one deliberately, as the
slower reference).

Three variants share the public interface:

  ``cqueue``  chain queues over implicit edges, each queue node augmented
              with the rank extent of its edge and the subtree sum of
              extents, so queue descents can materialise edges in O(1);
  ``nav``     queue-free covered-bridge navigation with rank propagation;
  ``naive``   like ``nav``, but every materialisation binary-searches the
              endpoint ranks, the O(log n)-overhead reference.

Instances are single-writer: no reads may overlap a mutation.
"""

from bisect import bisect_left, insort
from typing import NamedTuple

from .errors import DuplicateValue, EdgeNotFound, ValueNotFound
from .kernel import HullEdge, Point, get_kernel
from ._pbt import PartialBridgeTree
from ._pht import PartialHullTree


class ImplicitBridge(NamedTuple):
    """A bridge stored as endpoint values plus rank widths to the median."""

    y1: object
    y2: object
    w1: int
    w2: int


def materialize_bridge(ib, r):
    """Explicit bridge of a node whose median currently has rank ``r``."""
    return HullEdge(Point(r - ib.w1, ib.y1), Point(r + ib.w2, ib.y2))


def implicitize_bridge(edge, r):
    """Inverse of materialize_bridge."""
    (x1, y1), (x2, y2) = edge
    return ImplicitBridge(y1, y2, r - x1, x2 - r)


def median_rank_child(r, v, which):
    """Median rank of a child, from the parent's median rank ``r``.

    The left child's median loses the right-of-median leaves of the child,
    the right child's gains the left ones: left -> r - size(x.right),
    right -> r + size(z.left).  O(1).
    """
    if which == "left":
        return r - v.left.right.size
    if which == "right":
        return r + v.right.left.size
    raise ValueError(f"which must be 'left' or 'right', not {which!r}")


class _RankCQCursor:
    """Cursor over a width-augmented queue of implicit edges.

    ``base`` is the rank of the first chain vertex of the subtree under the
    cursor; subtree width sums turn that into endpoint ranks in O(1).
    """

    __slots__ = ("node", "base", "pt", "ed")

    def __init__(self, node, base, pt=None):
        self.node = node
        self.base = base
        if node is None:
            self.pt = pt
            self.ed = None
        else:
            self.pt = None
            l = node.left
            lr = base + (l.width_sum if l is not None else 0)
            y1, y2 = node.edge
            self.ed = HullEdge(Point(lr, y1), Point(lr + node.width, y2))

    def left_child(self):
        n = self.node
        if n.left is not None:
            return _RankCQCursor(n.left, self.base)
        return _RankCQCursor(None, 0, self.ed[0])

    def right_child(self):
        n = self.node
        if n.right is not None:
            return _RankCQCursor(n.right, self.ed[1][0])
        return _RankCQCursor(None, 0, self.ed[1])


class _RankPHTAdapter:
    __slots__ = ()

    planar = False
    dup_exc = DuplicateValue
    missing_exc = ValueNotFound

    def make_leaf_edge(self, a, b, off, side):
        return (a, b), 1, ImplicitBridge(a, b, 1, 0)

    def sep_point(self, v, r_med):
        return r_med, v.right.min_key

    def cursor(self, child, q, base, side):
        if q is not None:
            return _RankCQCursor(q, base)
        if child.item is None:
            raise EdgeNotFound("internal subtree with empty chain queue")
        return _RankCQCursor(None, 0, Point(base, child.item))

    def store_bridge(self, edge, r_med, side):
        return implicitize_bridge(edge, r_med)

    def stored_left_key(self, stored):
        return stored.y1

    def stored_right_key(self, stored):
        return stored.y2

    def queue_elem(self, stored):
        return (stored.y1, stored.y2), stored.w1 + stored.w2


class _RankPBTAdapter:
    __slots__ = ("naive", "tree", "sorted_values")

    planar = False
    dup_exc = DuplicateValue
    missing_exc = ValueNotFound

    def __init__(self, naive=False):
        self.naive = naive
        self.tree = None
        # the naive reference variant looks ranks up per probe by binary
        # search over the sorted value sequence (kept current by the owner)
        self.sorted_values = []

    def _rank_of(self, y):
        return bisect_left(self.sorted_values, y)

    def edge_of(self, node, off, side):
        ib = node.bridge[side]
        if self.naive:
            return HullEdge(Point(self._rank_of(ib.y1), ib.y1),
                            Point(self._rank_of(ib.y2), ib.y2))
        r_med = off + node.left.size
        return HullEdge(Point(r_med - ib.w1, ib.y1), Point(r_med + ib.w2, ib.y2))

    def leaf_point(self, item, off):
        if self.naive:
            return Point(self._rank_of(item), item)
        return Point(off, item)

    def min_vertex(self, node, off):
        return Point(off, node.min_key)

    def max_vertex(self, node, off):
        return Point(off + node.size - 1, node.max_key)

    def sep_point(self, v, r_med):
        return r_med, v.right.min_key

    def store_bridge(self, edge, r_med, side):
        return implicitize_bridge(edge, r_med)


def _queue_edges_explicit(qroot, base, out):
    """Materialise a whole queue in order; returns the rank one past it."""
    if qroot is None:
        return base
    base = _queue_edges_explicit(qroot.left, base, out)
    y1, y2 = qroot.edge
    out.append(HullEdge(Point(base, y1), Point(base + qroot.width, y2)))
    return _queue_edges_explicit(qroot.right, base + qroot.width, out)


class RankHull:
    """Dynamic convex hull of {(rank, value)} under value updates."""

    VARIANTS = ("cqueue", "nav", "naive")

    def __init__(self, variant="cqueue", kernel="exact", debug=False):
        if variant not in self.VARIANTS:
            raise ValueError(f"unknown variant {variant!r}; expected one of {self.VARIANTS}")
        self.variant = variant
        self._kern = get_kernel(kernel)
        if variant == "cqueue":
            self._core = PartialHullTree(_RankPHTAdapter(), self._kern, debug=debug)
            self._adapter = None
        else:
            self._adapter = _RankPBTAdapter(naive=(variant == "naive"))
            self._core = PartialBridgeTree(self._adapter, self._kern, debug=debug)
            self._adapter.tree = self._core

    # -- bookkeeping -------------------------------------------------------

    @property
    def kernel(self):
        return self._kern

    @property
    def counters(self):
        return self._core.counters

    def __len__(self):
        return self._core.size

    def __contains__(self, y):
        return self._core.contains(self._kern.prepare_value(y))

    def values(self):
        """Stored values in sorted order."""
        out = []

        def rec(n):
            if n is None:
                return
            if n.item is not None:
                out.append(n.item)
                return
            rec(n.left)
            rec(n.right)

        rec(self._core.root)
        return out

    # -- updates -----------------------------------------------------------

    def insert_value(self, y):
        """Insert a value; raises DuplicateValue if present."""
        y = self._kern.prepare_value(y)
        if self.variant == "naive":
            if self._core.contains(y):
                raise DuplicateValue(f"{y!r} is already stored")
            insort(self._adapter.sorted_values, y)
        self._core.insert_item(y)

    def delete_value(self, y):
        """Delete a value; raises ValueNotFound if absent."""
        y = self._kern.prepare_value(y)
        if self.variant == "naive":
            if not self._core.contains(y):
                raise ValueNotFound(f"{y!r} is not stored")
            vals = self._adapter.sorted_values
            vals.pop(bisect_left(vals, y))
        self._core.delete_item(y)

    # -- hull access ---------------------------------------------------------

    def upper_hull_edges(self):
        return self._report_side(0)

    def lower_hull_edges(self):
        return self._report_side(1)

    def report_hull(self):
        """Hull edges of P_Y in (rank, value) coordinates, upper then lower."""
        return self._report_side(0) + self._report_side(1)

    hull_edges = report_hull

    def _report_side(self, side):
        root = self._core.root
        if root is None or root.item is not None:
            return []
        if self.variant == "cqueue":
            out = []
            _queue_edges_explicit(root.star[side], 0, out)
            return out
        return self._core.report_side(side)

    def hull_size(self):
        n = self._core.size
        if n <= 1:
            return n
        return len(self._report_side(0)) + len(self._report_side(1))

    # -- queries -------------------------------------------------------------

    def point_in_hull(self, q):
        """Membership of a query point in CH(P_Y); the query abscissa is a
        rank-space coordinate and need not be integral."""
        x, y = q
        q = Point(self._kern.prepare_value(x), self._kern.prepare_value(y))
        root = self._core.root
        if root is None:
            return False
        if root.item is not None:
            return q == Point(0, root.item)
        lo = Point(0, root.min_key)
        hi = Point(root.size - 1, root.max_key)
        if q < lo or q > hi:
            return False
        kern = self._kern
        for side in (0, 1):
            e, vertex = self._locate(side, q)
            if e is not None:
                turn = kern.orientation(e[0], e[1], q)
                if side == 0 and turn > 0:
                    return False
                if side == 1 and turn < 0:
                    return False
            elif vertex != q:
                return False
        return True

    def _locate(self, side, q):
        if self.variant != "cqueue":
            return self._core.locate_edge(side, q)
        node = self._core.root.star[side]
        base = 0
        while node is not None:
            l = node.left
            lr = base + (l.width_sum if l is not None else 0)
            y1, y2 = node.edge
            e = HullEdge(Point(lr, y1), Point(lr + node.width, y2))
            if q < e[0]:
                node = node.left
            elif q > e[1]:
                base = e[1][0]
                node = node.right
            else:
                return e, None
        return None, None

    # -- debug ---------------------------------------------------------------

    def all_bridges(self):
        """(node id -> (upper, lower) implicit bridges) for every internal
        node, plus the set of node ids touched by the last update."""
        snap = {}

        def rec(n):
            if n.item is not None:
                return
            snap[id(n)] = (n.bridge[0], n.bridge[1])
            rec(n.left)
            rec(n.right)

        if self._core.root is not None:
            rec(self._core.root)
        return snap

    def last_touched_ids(self):
        return {id(n) for n in self._core.touched}

    def audit_widths(self):
        """Check that every implicit bridge materialises to the true ranks
        of its endpoint values (full-tree audit, O(n^2))."""
        vals = self.values()
        rank = {v: i for i, v in enumerate(vals)}

        def rec(n, off):
            if n.item is not None:
                return
            r_med = off + n.left.size
            for s in (0, 1):
                ib = n.bridge[s]
                e = materialize_bridge(ib, r_med)
                assert e[0][0] == rank[ib.y1], "left width is stale"
                assert e[1][0] == rank[ib.y2], "right width is stale"
                assert ib.w1 >= 0 and ib.w2 >= 0
            rec(n.left, off)
            rec(n.right, off + n.left.size)

        if self._core.root is not None and self._core.root.item is None:
            rec(self._core.root, 0)
        return True

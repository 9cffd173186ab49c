"""Dynamic planar convex hull with per-node chain queues.

``DynamicHull`` maintains a point set under insertions and deletions in
O(log^2 n) worst-case time per update.  The full hull is available between
updates as two balanced edge queues at the root (upper chain, lower chain),
so hull reporting is output-linear and point / extreme-point queries run in
O(log h).

The structure is a leaf-based AVL tree over the points in lexicographic
order; each internal node stores the bridge between its children's partial
hulls for both hull sides, plus the queue of chain edges its own hull
contributes beyond its parent's (see ``_pht``).  Bridges are found by the
edge-based cursor walk in ``_search``.

Instances are single-writer: no reads may overlap a mutation.  Read-only
queries may run concurrently with each other between mutations.
"""

from .cqueue import CQueue, CQueueCursor, _count, _edges
from .errors import DuplicatePoint, EdgeNotFound, EmptyHull, EmptySide, PointNotFound, ZeroDirection
from .kernel import EXACT, HullEdge, as_point, get_kernel
from ._pht import PartialHullTree
from ._search import find_bridge_walk


class _PlanarAdapter:
    """Items are prepared Points; bridges are stored explicitly."""

    __slots__ = ()

    planar = True
    dup_exc = DuplicatePoint
    missing_exc = PointNotFound

    def make_leaf_edge(self, a, b, off, side):
        e = HullEdge(a, b)
        return e, 0, e

    def sep_point(self, v, r_med):
        m = v.right.min_key
        return m[0], m[1]

    def cursor(self, child, q, base, side):
        if q is not None:
            return CQueueCursor(q)
        if child.item is None:
            raise EdgeNotFound("internal subtree with empty chain queue")
        return CQueueCursor(None, child.item)

    def store_bridge(self, edge, r_med, side):
        return edge

    def stored_left_key(self, stored):
        return stored[0]

    def stored_right_key(self, stored):
        return stored[1]

    def queue_elem(self, stored):
        return stored, 0


_ADAPTER = _PlanarAdapter()


def split_hull(which, ev, bridge, star):
    """Recover a child's full chain from its parent's chain.

    ``ev`` is the parent's chain queue, ``bridge`` the parent's bridge and
    ``star`` the child's own queue of covered edges.  For the left child the
    chain is (edges before the bridge) ++ star and the remainder
    [bridge] ++ suffix is returned for the later inverse join; the right
    child is the mirror image.  O(log n); consumes ``ev`` and ``star``.
    """
    l, r = ev.split(bridge)
    if which == "left":
        return l.join(star), r
    b, sfx = r.pop_first()
    return star.join(sfx), l.join_around(b, CQueue())


def _side_cursor(side_obj, label):
    if isinstance(side_obj, CQueue):
        if side_obj.root is None:
            raise EmptySide(f"{label} side has no points")
        return CQueueCursor(side_obj.root)
    return CQueueCursor(None, as_point(side_obj))


def find_bridge(ex, ey, m, side="upper", kernel=EXACT, counters=None):
    """Maximal bridge between two x-separated hull chains.

    ``ex``/``ey`` are the chain queues of the two sides (a bare point stands
    in for a one-point side), ``m`` the separator: an x-coordinate or the
    separating point itself.  O(log n): the walk descends one queue level
    per iteration.
    """
    kern = get_kernel(kernel)
    ca = _side_cursor(ex, "left")
    cb = _side_cursor(ey, "right")
    if isinstance(m, tuple):
        sx, sy = m[0], m[1]
    else:
        sx, sy = m, None
    return find_bridge_walk(kern, side == "upper", ca, cb, sx, sy, counters)


class DynamicHull:
    """Dynamic 2-d convex hull (chain-queue variant).

    Points are (x, y) pairs; the exact kernel accepts int, Fraction and
    float coordinates and is error-free, the inexact kernel evaluates every
    predicate in double precision.
    """

    def __init__(self, kernel="exact", debug=False):
        self._kern = get_kernel(kernel)
        self._tree = PartialHullTree(_ADAPTER, self._kern, debug=debug)

    # -- bookkeeping -------------------------------------------------------

    @property
    def kernel(self):
        return self._kern

    @property
    def counters(self):
        return self._tree.counters

    def reset_counters(self):
        self._tree.counters.reset()

    def __len__(self):
        return self._tree.size

    def __contains__(self, p):
        return self._tree.contains(self._kern.prepare_point(as_point(p)))

    # -- updates -----------------------------------------------------------

    def insert(self, p):
        """Insert a point; raises DuplicatePoint if already stored."""
        self._tree.insert_item(self._kern.prepare_point(as_point(p)))

    def delete(self, p):
        """Delete a point; raises PointNotFound if absent."""
        self._tree.delete_item(self._kern.prepare_point(as_point(p)))

    # -- hull access ---------------------------------------------------------

    def upper_hull_edges(self):
        root = self._tree.root
        if root is None or root.item is not None:
            return []
        return _edges(root.star[0])

    def lower_hull_edges(self):
        root = self._tree.root
        if root is None or root.item is not None:
            return []
        return _edges(root.star[1])

    def hull_edges(self):
        """All hull edges, upper chain then lower chain, left to right."""
        return self.upper_hull_edges() + self.lower_hull_edges()

    def hull_size(self):
        """Number of distinct hull vertices."""
        n = self._tree.size
        if n <= 1:
            return n
        root = self._tree.root
        return _count(root.star[0]) + _count(root.star[1])

    # -- queries -------------------------------------------------------------

    @staticmethod
    def _locate(node, q):
        while node is not None:
            e = node.edge
            if q < e[0]:
                node = node.left
            elif q > e[1]:
                node = node.right
            else:
                return e
        return None

    def point_in_hull(self, q):
        """True iff q lies inside or on the hull (boundary counts)."""
        q = self._kern.prepare_point(as_point(q))
        root = self._tree.root
        if root is None:
            return False
        if root.item is not None:
            return q == root.item
        if q < root.min_key or q > root.max_key:
            return False
        kern = self._kern
        e = self._locate(root.star[0], q)
        if e is None or kern.orientation(e[0], e[1], q) > 0:
            return False
        e = self._locate(root.star[1], q)
        if e is None or kern.orientation(e[0], e[1], q) < 0:
            return False
        return True

    def extreme_point(self, direction):
        """A stored point maximising the dot product with ``direction``;
        ties go to the lexicographically smallest maximiser."""
        dx, dy = self._kern.prepare_point(as_point(direction))
        if dx == 0 and dy == 0:
            raise ZeroDirection("direction must be nonzero")
        root = self._tree.root
        if root is None:
            raise EmptyHull("no points stored")
        if root.item is not None:
            return root.item
        if dy > 0 or (dy == 0 and dx < 0):
            node = root.star[0]
        else:
            node = root.star[1]
        while True:
            e = node.edge
            l, r = e
            s = dx * (r[0] - l[0]) + dy * (r[1] - l[1])
            if s > 0:
                if node.right is None:
                    return r
                node = node.right
            else:
                if node.left is None:
                    return l
                node = node.left

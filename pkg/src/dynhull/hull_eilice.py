"""Dynamic planar convex hull without chain queues (the "eilice" variant).

``EiliceHull`` keeps only the leaf-based tree and one bridge pair per node.
Updates skip the queue splitting entirely: a plain descent plus a bottom-up
bridge recomputation, O(log^2 n) worst case with much smaller constants
than the chain-queue structure.  The trade-off is on the query side: the
hull is no longer one balanced tree, so reporting costs O(h log n) and
point queries O(log n) instead of O(log h), driven by covered-bridge
navigation over the tree (see ``_pbt``).

Instances are single-writer: no reads may overlap a mutation.
"""

from .errors import DuplicatePoint, EmptyHull, NoPredecessor, PointNotFound, ZeroDirection
from .kernel import as_point, get_kernel
from ._pbt import PartialBridgeTree


class _PlanarPBTAdapter:
    __slots__ = ()

    planar = True
    dup_exc = DuplicatePoint
    missing_exc = PointNotFound

    def edge_of(self, node, off, side):
        return node.bridge[side]

    def leaf_point(self, item, off):
        return item

    def min_vertex(self, node, off):
        return node.min_key

    def max_vertex(self, node, off):
        return node.max_key

    def sep_point(self, v, r_med):
        m = v.right.min_key
        return m[0], m[1]

    def store_bridge(self, edge, r_med, side):
        return edge


_ADAPTER = _PlanarPBTAdapter()


def find_bridge_pbt(tree, v, off=0):
    """Recompute both bridges of node ``v`` from its children's bridges by
    covered-bridge navigation; returns the upper bridge.  Test hook."""
    tree._rebridge(v, off)
    return v.bridge[0]


def left_child_on_hull(cursor):
    """The covered-bridge step: an edge preceding the cursor's edge on the
    same partial hull.  Raises NoPredecessor at the leftmost hull edge."""
    if cursor.pt is not None or cursor.lo == cursor.ed[0]:
        raise NoPredecessor("no hull edge precedes the leftmost one")
    return cursor.left_child()


def right_child_on_hull(cursor):
    """Mirror step: an edge succeeding the cursor's edge on the same hull."""
    if cursor.pt is not None or cursor.hi == cursor.ed[1]:
        raise NoPredecessor("no hull edge succeeds the rightmost one")
    return cursor.right_child()


class EiliceHull:
    """Dynamic 2-d convex hull, bridge-only variant.

    ``navigation`` selects the cursor strategy: ``resume`` (default)
    continues each covered-bridge descent below the previous stop, which is
    what gives O(log^2 n) updates; ``restart`` re-descends from the subtree
    root every step, the simpler O(log^3 n) reference used for differential
    testing.
    """

    def __init__(self, kernel="exact", debug=False, navigation="resume"):
        self._kern = get_kernel(kernel)
        self._tree = PartialBridgeTree(_ADAPTER, self._kern, debug=debug,
                                       navigation=navigation)

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
        self._tree.insert_item(self._kern.prepare_point(as_point(p)))

    def delete(self, p):
        self._tree.delete_item(self._kern.prepare_point(as_point(p)))

    # -- hull access ---------------------------------------------------------

    def upper_hull_edges(self):
        return self._tree.report_side(0)

    def lower_hull_edges(self):
        return self._tree.report_side(1)

    def report_hull(self):
        """All hull edges, upper chain then lower chain, O(h log n)."""
        return self._tree.report_side(0) + self._tree.report_side(1)

    # kept name-compatible with DynamicHull so tests can treat them alike
    hull_edges = report_hull

    def hull_size(self):
        n = self._tree.size
        if n <= 1:
            return n
        return len(self._tree.report_side(0)) + len(self._tree.report_side(1))

    def root_cursor(self, side="upper"):
        """Cursor at the root bridge, which is always a hull edge."""
        root = self._tree.root
        if root is None or root.item is not None:
            raise EmptyHull("hull has no edges")
        return self._tree.side_cursor(root, 0, 0 if side == "upper" else 1)

    # -- queries -------------------------------------------------------------

    def point_in_hull(self, q):
        """True iff q lies inside or on the hull, O(log n)."""
        q = self._kern.prepare_point(as_point(q))
        root = self._tree.root
        if root is None:
            return False
        if root.item is not None:
            return q == root.item
        if q < root.min_key or q > root.max_key:
            return False
        kern = self._kern
        e, vertex = self._tree.locate_edge(0, q)
        if e is not None and kern.orientation(e[0], e[1], q) > 0:
            return False
        if e is None and vertex != q:
            return False
        e, vertex = self._tree.locate_edge(1, q)
        if e is not None and kern.orientation(e[0], e[1], q) < 0:
            return False
        if e is None and vertex != q:
            return False
        return True

    def extreme_point(self, direction):
        """A stored point maximising the dot product with ``direction``;
        lexicographically smallest maximiser on ties.  O(log n)."""
        dx, dy = self._kern.prepare_point(as_point(direction))
        if dx == 0 and dy == 0:
            raise ZeroDirection("direction must be nonzero")
        root = self._tree.root
        if root is None:
            raise EmptyHull("no points stored")
        if dy > 0 or (dy == 0 and dx < 0):
            return self._tree.extreme_on_side(0, dx, dy)
        return self._tree.extreme_on_side(1, dx, dy)

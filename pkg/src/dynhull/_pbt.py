"""Partial bridge tree core: the queue-free hull structure, shared by the
planar variant and the rank-based variants.

Only the leaf-based AVL tree and the per-node bridges are stored; there are
no chain queues.  Chain navigation is recovered from the tree itself: the
bridge of a descendant node is either covered by an ancestor hull edge (its
span starts at or after that edge's left endpoint) or lies on the same
partial hull.  A cursor therefore carries the window of chain vertices it
is still allowed to visit, and stepping left or right descends the tree
skipping covered bridges until one inside the window appears -- that bridge
is a chain edge.  Consecutive cursor steps resume below the previous stop,
so one bridge search visits every tree node at most once per side and runs
in O(log n) total despite each individual step costing up to a root-to-leaf
path (the ``restart`` navigation mode disables the resume and re-descends
from the side's root every step, giving the O(log^3 n)-update reference
behaviour used in differential tests).

Updates are a single root-to-leaf descent (O(1) per node) followed by a
bottom-up pass recomputing the bridges of the path (and of rotated nodes)
with the cursor walk, O(log^2 n) worst case in total.
"""

from .kernel import HullEdge
from ._search import Counters, find_bridge_pbt_planar, find_bridge_walk


class PBNode:
    __slots__ = ("item", "left", "right", "height", "size",
                 "min_key", "max_key", "bridge")

    def __init__(self, item=None):
        self.item = item
        self.left = None
        self.right = None
        self.height = 1
        self.size = 1
        self.min_key = item
        self.max_key = item
        self.bridge = None

    def is_leaf(self):
        return self.item is not None

    def __repr__(self):
        if self.item is not None:
            return f"PBLeaf({self.item!r})"
        return f"PBNode(h={self.height}, n={self.size})"


class _NavCtx:
    """Per-search context for the covered-bridge cursors of one side."""

    __slots__ = ("ad", "side", "counters", "restart", "root", "root_off")

    def __init__(self, ad, side, counters, restart, root, root_off):
        self.ad = ad
        self.side = side
        self.counters = counters
        self.restart = restart
        self.root = root
        self.root_off = root_off


class PBTCursor:
    """A confirmed chain edge (or pinned endpoint) plus the window of chain
    vertices still reachable from it."""

    __slots__ = ("ctx", "node", "off", "ed", "pt", "lo", "hi")

    def __init__(self, ctx, node, off, ed, pt, lo, hi):
        self.ctx = ctx
        self.node = node
        self.off = off
        self.ed = ed
        self.pt = pt
        self.lo = lo
        self.hi = hi

    def left_child(self):
        e = self.ed
        if self.lo == e[0]:
            return PBTCursor(self.ctx, None, 0, None, e[0], None, None)
        ctx = self.ctx
        if ctx.restart:
            return _descend(ctx, ctx.root, ctx.root_off, self.lo, e[0])
        return _descend(ctx, self.node.left, self.off, self.lo, e[0])

    def right_child(self):
        e = self.ed
        if self.hi == e[1]:
            return PBTCursor(self.ctx, None, 0, None, e[1], None, None)
        ctx = self.ctx
        if ctx.restart:
            return _descend(ctx, ctx.root, ctx.root_off, e[1], self.hi)
        n = self.node
        return _descend(ctx, n.right, self.off + n.left.size, e[1], self.hi)


def _descend(ctx, node, off, lo, hi):
    """Find a chain edge strictly inside the window (lo, hi).

    Bridges whose span starts at or after ``hi`` are covered from the right,
    bridges ending at or before ``lo`` from the left; the first bridge that
    overlaps the open window lies on the chain and is returned.  A leaf can
    only be reached if predicates were inconsistent (inexact kernel); the
    cursor degrades to that leaf's point so the walk still terminates.
    """
    ad = ctx.ad
    side = ctx.side
    counters = ctx.counters
    while node.item is None:
        counters.nav_visits += 1
        e = ad.edge_of(node, off, side)
        if e[0] >= hi:
            node = node.left
        elif e[1] <= lo:
            off += node.left.size
            node = node.right
        else:
            return PBTCursor(ctx, node, off, e, None, lo, hi)
    return PBTCursor(ctx, None, 0, None, ad.leaf_point(node.item, off), None, None)


class PartialBridgeTree:
    """Generic queue-free core; specialised through ``adapter``."""

    def __init__(self, adapter, kernel, debug=False, navigation="resume"):
        if navigation not in ("resume", "restart"):
            raise ValueError(f"unknown navigation mode {navigation!r}")
        self.adapter = adapter
        self.kernel = kernel
        self.debug = debug
        self.navigation = navigation
        self.root = None
        self.size = 0
        self.counters = Counters()
        self.touched = []

    # -- lookups -----------------------------------------------------------

    def contains(self, item):
        n = self.root
        if n is None:
            return False
        while n.item is None:
            n = n.left if item < n.right.min_key else n.right
        return n.item == item

    # -- updates -----------------------------------------------------------

    def insert_item(self, item):
        if self.root is None:
            self.root = PBNode(item)
            self.size = 1
            return
        if self.contains(item):
            raise self.adapter.dup_exc(f"{item!r} is already stored")
        self.touched = []
        self.root = self._ins(self.root, item, 0)
        self.size += 1
        if self.debug:
            self._validate()

    def delete_item(self, item):
        if not self.contains(item):
            raise self.adapter.missing_exc(f"{item!r} is not stored")
        root = self.root
        if root.item is not None:
            self.root = None
            self.size = 0
            return
        self.touched = []
        self.root = self._del(root, item, 0)
        self.size -= 1
        if self.debug:
            self._validate()

    def _ins(self, v, item, off):
        if v.item is not None:
            a, b = (item, v.item) if item < v.item else (v.item, item)
            n = PBNode(None)
            n.item = None
            n.left = PBNode(a)
            n.right = PBNode(b)
            n.bridge = [None, None]
            self._rebridge(n, off)
            return n
        if item < v.right.min_key:
            v.left = self._ins(v.left, item, off)
        else:
            v.right = self._ins(v.right, item, off + v.left.size)
        self._rebridge(v, off)
        return self._rebalance(v, off)

    def _del(self, v, item, off):
        go_left = item < v.right.min_key
        child = v.left if go_left else v.right
        if child.item is not None:
            assert child.item == item
            return v.right if go_left else v.left
        if go_left:
            v.left = self._del(child, item, off)
        else:
            v.right = self._del(child, item, off + v.left.size)
        self._rebridge(v, off)
        return self._rebalance(v, off)

    # -- bridge maintenance ---------------------------------------------------

    def side_cursor(self, node, off, side, restart=None):
        """Initial cursor over the chain of ``node``'s subtree."""
        ad = self.adapter
        if node.item is not None:
            return PBTCursor(None, None, 0, None, ad.leaf_point(node.item, off), None, None)
        if restart is None:
            restart = self.navigation == "restart"
        ctx = _NavCtx(ad, side, self.counters, restart, node, off)
        e = ad.edge_of(node, off, side)
        lo = ad.min_vertex(node, off)
        hi = ad.max_vertex(node, off)
        return PBTCursor(ctx, node, off, e, None, lo, hi)

    def _rebridge(self, v, off):
        ad = self.adapter
        l = v.left
        r = v.right
        v.size = l.size + r.size
        v.height = (l.height if l.height > r.height else r.height) + 1
        v.min_key = l.min_key
        v.max_key = r.max_key
        r_med = off + l.size
        sx, sy = ad.sep_point(v, r_med)
        self.touched.append(v)
        if v.bridge is None:
            v.bridge = [None, None]
        counters = self.counters
        if ad.planar and self.navigation == "resume":
            for s in (0, 1):
                pa, pb, iters, visits = find_bridge_pbt_planar(s == 0, s, l, r, sx, sy)
                counters.bridge_iters += iters
                counters.nav_visits += visits
                v.bridge[s] = HullEdge(pa, pb)
            return
        kern = self.kernel
        for s in (0, 1):
            ca = self.side_cursor(l, off, s)
            cb = self.side_cursor(r, r_med, s)
            edge = find_bridge_walk(kern, s == 0, ca, cb, sx, sy, counters)
            v.bridge[s] = ad.store_bridge(edge, r_med, s)

    def _rebalance(self, v, off):
        bf = v.left.height - v.right.height
        if -1 <= bf <= 1:
            return v
        if bf > 1:
            x = v.left
            if x.left.height >= x.right.height:
                v.left = x.right
                self._rebridge(v, off + x.left.size)
                x.right = v
                self._rebridge(x, off)
                return x
            w = x.right
            x.right = w.left
            self._rebridge(x, off)
            v.left = w.right
            self._rebridge(v, off + x.size)
            w.left = x
            w.right = v
            self._rebridge(w, off)
            return w
        x = v.right
        if x.right.height >= x.left.height:
            v.right = x.left
            self._rebridge(v, off)
            x.left = v
            self._rebridge(x, off)
            return x
        w = x.left
        x.left = w.right
        self._rebridge(x, off + v.left.size + w.left.size)
        v.right = w.left
        self._rebridge(v, off)
        w.right = x
        w.left = v
        self._rebridge(w, off)
        return w

    # -- hull access ---------------------------------------------------------

    def report_side(self, side):
        """Chain edges of one hull side, left to right, O(h log n)."""
        root = self.root
        out = []
        if root is None or root.item is not None:
            return out
        ad = self.adapter
        counters = self.counters

        def rec(node, off, lo, hi):
            counters.report_visits += 1
            if node.item is not None:
                return
            e = ad.edge_of(node, off, side)
            if e[1] <= lo:
                rec(node.right, off + node.left.size, lo, hi)
            elif hi <= e[0]:
                rec(node.left, off, lo, hi)
            else:
                if lo < e[0]:
                    rec(node.left, off, lo, e[0])
                out.append(e)
                if e[1] < hi:
                    rec(node.right, off + node.left.size, e[1], hi)

        rec(root, 0, ad.min_vertex(root, 0), ad.max_vertex(root, 0))
        return out

    def locate_edge(self, side, q):
        """The chain edge whose span contains q, or the vertex q itself.

        Returns (edge, None) or (None, vertex) -- the latter when the search
        collapses onto a single chain vertex equal to q's abscissa position.
        Caller must ensure q is within the chain's span.
        """
        ad = self.adapter
        node = self.root
        off = 0
        while node.item is None:
            e = ad.edge_of(node, off, side)
            if q < e[0]:
                node = node.left
            elif q > e[1]:
                off += node.left.size
                node = node.right
            else:
                return e, None
        return None, ad.leaf_point(node.item, off)

    def extreme_on_side(self, side, dx, dy):
        """Chain vertex maximising dx*x + dy*y; leftmost on ties."""
        ad = self.adapter
        node = self.root
        off = 0
        if node.item is not None:
            return ad.leaf_point(node.item, 0)
        lo = ad.min_vertex(node, 0)
        hi = ad.max_vertex(node, 0)
        while node.item is None:
            e = ad.edge_of(node, off, side)
            if e[1] <= lo:
                off += node.left.size
                node = node.right
                continue
            if hi <= e[0]:
                node = node.left
                continue
            l, r = e
            s = dx * (r[0] - l[0]) + dy * (r[1] - l[1])
            if s > 0:
                lo = r
                if lo == hi:
                    return lo
                off += node.left.size
                node = node.right
            else:
                hi = l
                if lo == hi:
                    return lo
                node = node.left
        return ad.leaf_point(node.item, off)

    # -- debug ---------------------------------------------------------------

    def _validate(self):
        ad = self.adapter

        def rec(n, off):
            if n.item is not None:
                assert n.height == 1 and n.size == 1
                return
            l, r = n.left, n.right
            rec(l, off)
            rec(r, off + l.size)
            assert abs(l.height - r.height) <= 1, "AVL balance violated"
            assert n.height == max(l.height, r.height) + 1
            assert n.size == l.size + r.size
            assert n.min_key == l.min_key and n.max_key == r.max_key
            assert l.max_key < r.min_key, "leaf order violated"
            med = ad.leaf_point(r.min_key, off + l.size)
            for s in (0, 1):
                e = ad.edge_of(n, off, s)
                assert e[0] <= med <= e[1], "bridge does not straddle the median"

        if self.root is not None:
            rec(self.root, 0)
        return True

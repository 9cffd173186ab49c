"""Partial hull tree core: leaf-based AVL over items with per-node bridges
and concatenable queues, shared by the planar and the rank-based variants.

The tree stores the item set in its leaves (points in lexicographic order,
or plain values for rank-based data).  Every internal node ``v`` carries,
for each hull side (0 = upper, 1 = lower):

  ``bridge[side]``  the maximal non-separating segment between the hulls of
                    the two child subtrees (stored explicitly for points,
                    implicitly as values + rank widths for rank data),
  ``star[side]``    the queue of chain edges of v's hull that are covered by
                    the parent's bridge (the whole chain at the root),
  ``er[side]``      scratch storage holding, during an update only, the part
                    of v's chain contributed by the off-path child.

Queues are stored as bare ``CQueueNode`` roots (None when empty); the
public ``CQueue`` wrapper only appears at the API boundary.

An update walks root-to-leaf splitting each node's chain queue apart
(destroying it, keeping ``er``), edits the leaf, then walks back up: at each
node the off-path child's chain is reassembled from its star and ``er``, the
new bridge is found by the cursor walk, both child chains are split at the
bridge endpoints to form the new stars, and the node's chain is joined back
around the bridge.  AVL rebalancing happens during the same upward pass;
a rotation rebuilds the (two or three) restructured nodes by materialising
their grandchild chains the same way.

Everything item- or coordinate-specific is delegated to an adapter object;
the planar adapter runs an inlined bridge walk, the rank adapter adds the
median-rank bookkeeping through generic cursors.
"""

from .cqueue import (CQueueNode, _join, _join_mid, _split3, _split_at_vertex,
                     validate_queue)
from .errors import EdgeNotFound
from .kernel import HullEdge
from ._search import Counters, bridge_still_valid, find_bridge_planar, find_bridge_walk


class PHNode:
    __slots__ = ("item", "left", "right", "height", "size",
                 "min_key", "max_key", "bridge", "star", "er")

    def __init__(self, item=None):
        # leaf constructor; _make_internal turns one into an internal node
        self.item = item
        self.left = None
        self.right = None
        self.height = 1
        self.size = 1
        self.min_key = item
        self.max_key = item
        self.bridge = None
        self.star = None
        self.er = None

    def is_leaf(self):
        return self.item is not None

    def __repr__(self):
        if self.item is not None:
            return f"PHLeaf({self.item!r})"
        return f"PHNode(h={self.height}, n={self.size})"


def _make_internal(n):
    n.item = None
    n.bridge = [None, None]
    n.star = [None, None]
    n.er = [None, None]
    return n


def _take_star(node, side):
    if node.item is not None:
        return None
    q = node.star[side]
    node.star[side] = None
    return q


class PartialHullTree:
    """Generic core; behaviour is specialised through ``adapter``."""

    def __init__(self, adapter, kernel, debug=False):
        self.adapter = adapter
        self.kernel = kernel
        self.debug = debug
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
            self.root = PHNode(item)
            self.size = 1
            return
        if self.contains(item):
            raise self.adapter.dup_exc(f"{item!r} is already stored")
        self.touched = []
        root = self.root
        if root.item is not None:
            qs = [None, None]
        else:
            qs = [_take_star(root, 0), _take_star(root, 1)]
        root, qs = self._ins(root, item, qs, 0)
        self.root = root
        self.size += 1
        root.star[0] = qs[0]
        root.star[1] = qs[1]
        if self.debug:
            self._validate()

    def delete_item(self, item):
        if not self.contains(item):
            raise self.adapter.missing_exc(f"{item!r} is not stored")
        self.touched = []
        root = self.root
        if root.item is not None:
            self.root = None
            self.size = 0
            return
        qs = [_take_star(root, 0), _take_star(root, 1)]
        root, qs = self._del(root, item, qs, 0)
        self.root = root
        self.size -= 1
        if root.item is None:
            root.star[0] = qs[0]
            root.star[1] = qs[1]
        else:
            assert qs[0] is None and qs[1] is None
        if self.debug:
            self._validate()

    # -- update internals ---------------------------------------------------

    def _split_down(self, v, qs, go_left):
        """Traverse-down step at v: destroy E(v), keep er, return the
        on-path child's chain queues."""
        ad = self.adapter
        planar = ad.planar
        child_qs = [None, None]
        er = v.er
        bridge = v.bridge
        left = v.left
        right = v.right
        for s in (0, 1):
            stored = bridge[s]
            if planar:
                l, mid, r = _split3(qs[s], stored[0])
                if mid.edge != stored:
                    raise EdgeNotFound(f"stored bridge {stored!r} not on chain")
            else:
                l, mid, r = _split3(qs[s], ad.stored_left_key(stored))
                if mid.edge != ad.queue_elem(stored)[0]:
                    raise EdgeNotFound(f"stored bridge {stored!r} not on chain")
            if go_left:
                child_qs[s] = _join(l, _take_star(left, s))
                er[s] = r
            else:
                child_qs[s] = _join(_take_star(right, s), r)
                er[s] = l
        return child_qs

    def _ins(self, v, item, qs, off):
        if v.item is not None:
            return self._grow_leaf(v, item, qs, off)
        go_left = item < v.right.min_key
        child_qs = self._split_down(v, qs, go_left)
        if go_left:
            child, cqs = self._ins(v.left, item, child_qs, off)
            v.left = child
        else:
            child, cqs = self._ins(v.right, item, child_qs, off + v.left.size)
            v.right = child
        qs = self._rebridge(v, cqs, go_left, off)
        return self._rebalance(v, qs, off)

    def _grow_leaf(self, v, item, qs, off):
        assert qs[0] is None and qs[1] is None
        ad = self.adapter
        a, b = (item, v.item) if item < v.item else (v.item, item)
        n = _make_internal(PHNode(None))
        n.left = PHNode(a)
        n.right = PHNode(b)
        n.height = 2
        n.size = 2
        n.min_key = a
        n.max_key = b
        out = [None, None]
        self.touched.append(n)
        for s in (0, 1):
            elem, width, stored = ad.make_leaf_edge(a, b, off, s)
            n.bridge[s] = stored
            out[s] = CQueueNode(elem, width)
        return n, out

    def _del(self, v, item, qs, off):
        go_left = item < v.right.min_key
        child_qs = self._split_down(v, qs, go_left)
        child = v.left if go_left else v.right
        if child.item is not None:
            assert child.item == item
            sib = v.right if go_left else v.left
            out = [None, None]
            er = v.er
            for s in (0, 1):
                if go_left:
                    out[s] = _join(_take_star(sib, s), er[s])
                else:
                    out[s] = _join(er[s], _take_star(sib, s))
                er[s] = None
            return sib, out
        if go_left:
            child, cqs = self._del(child, item, child_qs, off)
            v.left = child
        else:
            child, cqs = self._del(child, item, child_qs, off + v.left.size)
            v.right = child
        qs = self._rebridge(v, cqs, go_left, off)
        return self._rebalance(v, qs, off)

    def _rebridge(self, v, cqs, went_left, off):
        """Reassemble the off-path child's chain and rebuild node v."""
        qx = [None, None]
        qy = [None, None]
        er = v.er
        for s in (0, 1):
            if went_left:
                qx[s] = cqs[s]
                qy[s] = _join(_take_star(v.right, s), er[s])
            else:
                qx[s] = _join(er[s], _take_star(v.left, s))
                qy[s] = cqs[s]
            er[s] = None
        return self._build_node(v, qx, qy, off)

    def _build_node(self, v, qx, qy, off):
        """Recompute bridges, stars and the chain queues of v from fully
        materialised child chains.  Children must already be attached."""
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
        counters = self.counters
        bridge = v.bridge
        out = [None, None]
        if ad.planar:
            l_leaf = l.item
            r_leaf = r.item
            iters_total = 0
            debug = self.debug
            for s in (0, 1):
                qxs = qx[s]
                qys = qy[s]
                xleaf = None if qxs is not None else l_leaf
                yleaf = None if qys is not None else r_leaf
                edge = None
                old = bridge[s]
                if old is not None:
                    # warm start: the previous bridge usually survives an
                    # update below; four neighbour lookups decide
                    ok, steps = bridge_still_valid(s == 0, qxs, xleaf,
                                                   qys, yleaf, old[0], old[1])
                    iters_total += steps
                    if ok:
                        edge = old
                        if debug:
                            pa, pb, _ = find_bridge_planar(
                                s == 0, qxs, xleaf, qys, yleaf, sx, sy)
                            assert (pa, pb) == (old[0], old[1]), \
                                "warm-start accepted a stale bridge"
                if edge is None:
                    pa, pb, iters = find_bridge_planar(
                        s == 0, qxs, xleaf, qys, yleaf, sx, sy)
                    iters_total += iters
                    edge = HullEdge(pa, pb)
                bridge[s] = edge
                pl, pr = _split_at_vertex(qxs, edge[0])
                sl, sr = _split_at_vertex(qys, edge[1])
                if l_leaf is None:
                    l.star[s] = pr
                if r_leaf is None:
                    r.star[s] = sl
                out[s] = _join_mid(pl, CQueueNode(edge, 0), sr)
            counters.bridge_iters += iters_total
            return out
        kern = self.kernel
        for s in (0, 1):
            ca = ad.cursor(l, qx[s], off, s)
            cb = ad.cursor(r, qy[s], r_med, s)
            edge = find_bridge_walk(kern, s == 0, ca, cb, sx, sy, counters)
            stored = ad.store_bridge(edge, r_med, s)
            bridge[s] = stored
            pl, pr = _split_at_vertex(qx[s], ad.stored_left_key(stored))
            sl, sr = _split_at_vertex(qy[s], ad.stored_right_key(stored))
            if l.item is None:
                l.star[s] = pr
            if r.item is None:
                r.star[s] = sl
            elem, width = ad.queue_elem(stored)
            out[s] = _join_mid(pl, CQueueNode(elem, width), sr)
        return out

    # -- rebalancing ---------------------------------------------------------

    def _rebalance(self, v, qs, off):
        bf = v.left.height - v.right.height
        if -1 <= bf <= 1:
            return v, qs
        if bf > 1:
            # the heavy child has height >= 3, hence is internal
            x = v.left
            if x.left.height >= x.right.height:
                return self._rotate_ll(v, qs, off)
            return self._rotate_lr(v, qs, off)
        x = v.right
        if x.right.height >= x.left.height:
            return self._rotate_rr(v, qs, off)
        return self._rotate_rl(v, qs, off)

    def _extract_children(self, v, qs):
        """Undo v's join: return the two child chain queue pairs."""
        ad = self.adapter
        qx = [None, None]
        qy = [None, None]
        for s in (0, 1):
            stored = v.bridge[s]
            key = stored[0] if ad.planar else ad.stored_left_key(stored)
            l, _mid, r = _split3(qs[s], key)
            qx[s] = _join(l, _take_star(v.left, s))
            qy[s] = _join(_take_star(v.right, s), r)
        return qx, qy

    def _rotate_ll(self, v, qs, off):
        x = v.left
        qx, qc = self._extract_children(v, qs)
        qa, qb = self._extract_children(x, qx)
        a, b = x.left, x.right
        c = v.right
        v.left = b
        v.right = c
        qv = self._build_node(v, qb, qc, off + a.size)
        x.left = a
        x.right = v
        return x, self._build_node(x, qa, qv, off)

    def _rotate_rr(self, v, qs, off):
        x = v.right
        qa, qx = self._extract_children(v, qs)
        qb, qc = self._extract_children(x, qx)
        a = v.left
        b, c = x.left, x.right
        v.left = a
        v.right = b
        qv = self._build_node(v, qa, qb, off)
        x.left = v
        x.right = c
        return x, self._build_node(x, qv, qc, off)

    def _rotate_lr(self, v, qs, off):
        x = v.left
        w = x.right
        qx, qd = self._extract_children(v, qs)
        qa, qw = self._extract_children(x, qx)
        qb, qc = self._extract_children(w, qw)
        a = x.left
        b, c = w.left, w.right
        d = v.right
        x.left = a
        x.right = b
        qx2 = self._build_node(x, qa, qb, off)
        v.left = c
        v.right = d
        qv2 = self._build_node(v, qc, qd, off + a.size + b.size)
        w.left = x
        w.right = v
        return w, self._build_node(w, qx2, qv2, off)

    def _rotate_rl(self, v, qs, off):
        x = v.right
        w = x.left
        qa, qx = self._extract_children(v, qs)
        qw, qd = self._extract_children(x, qx)
        qb, qc = self._extract_children(w, qw)
        a = v.left
        b, c = w.left, w.right
        d = x.right
        v.left = a
        v.right = b
        qv2 = self._build_node(v, qa, qb, off)
        x.left = c
        x.right = d
        qx2 = self._build_node(x, qc, qd, off + a.size + b.size)
        w.left = v
        w.right = x
        return w, self._build_node(w, qv2, qx2, off)

    # -- debug ---------------------------------------------------------------

    def _validate(self):
        """Structural audit: AVL balance, sizes, key ranges, queue health."""
        def rec(n):
            if n.item is not None:
                assert n.height == 1 and n.size == 1
                assert n.min_key == n.item == n.max_key
                return
            l, r = n.left, n.right
            rec(l)
            rec(r)
            assert abs(l.height - r.height) <= 1, "AVL balance violated"
            assert n.height == max(l.height, r.height) + 1
            assert n.size == l.size + r.size
            assert n.min_key == l.min_key and n.max_key == r.max_key
            assert l.max_key < r.min_key, "leaf order violated"
            assert n.er[0] is None and n.er[1] is None
            for s in (0, 1):
                assert n.bridge[s] is not None
                if n is not self.root:
                    validate_queue(n.star[s])

        if self.root is not None:
            rec(self.root)
            if self.root.item is None:
                for s in (0, 1):
                    validate_queue(self.root.star[s])
        return True

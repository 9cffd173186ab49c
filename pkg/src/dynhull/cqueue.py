"""Concatenable queue: an AVL tree over the edges of one hull chain.

The queue stores edges in chain order (left to right along an upper or lower
hull).  Internal nodes hold edges; the conceptual leaves between them are the
shared endpoints, which are not materialised -- a cursor that steps into a
missing child lands on the adjacent endpoint of the parent edge instead.
This realises the convention that a queue over k edges has k+1 point leaves
without paying for the extra nodes.

Split and join are the classic AVL sequence operations with node reuse, so a
split/join pair moves O(log n) pointers and performs O(log n) rotations.
Queue elements are (left, right) pairs ordered by their left key: explicit
hull edges for the planar structures, (value, value) pairs for the
rank-based ones.

Each node optionally carries a ``width`` (used by the rank-based hulls,
where it is the rank extent of the edge) and maintains ``width_sum`` over
its subtree; planar queues leave every width at 0.

The module-level underscore functions operate on bare nodes (or None for
the empty queue); the hull structures use them directly on their hot paths.
``CQueue`` is the public handle over a root node.
"""

from .errors import EdgeNotFound, NoChild, OrderViolation

#: When True, joins verify chain order at the boundary (costly; tests only).
DEBUG = False


class CQueueNode:
    __slots__ = ("edge", "left", "right", "height", "width", "width_sum")

    def __init__(self, edge, width=0):
        self.edge = edge
        self.left = None
        self.right = None
        self.height = 1
        self.width = width
        self.width_sum = width

    def __repr__(self):
        return f"CQueueNode({self.edge!r}, h={self.height})"


def _fix(n):
    l = n.left
    r = n.right
    if l is not None:
        hl = l.height
        wl = l.width_sum
    else:
        hl = wl = 0
    if r is not None:
        hr = r.height
        wr = r.width_sum
    else:
        hr = wr = 0
    n.height = (hl if hl > hr else hr) + 1
    n.width_sum = wl + wr + n.width


def _rot_right(n):
    x = n.left
    n.left = x.right
    _fix(n)
    x.right = n
    _fix(x)
    return x


def _rot_left(n):
    x = n.right
    n.right = x.left
    _fix(n)
    x.left = n
    _fix(x)
    return x


def _bal(n):
    """Fix n and restore the AVL invariant, assuming imbalance at most 2."""
    l = n.left
    r = n.right
    if l is not None:
        hl = l.height
        wl = l.width_sum
    else:
        hl = wl = 0
    if r is not None:
        hr = r.height
        wr = r.width_sum
    else:
        hr = wr = 0
    bf = hl - hr
    if bf > 1:
        if (l.left.height if l.left is not None else 0) < \
           (l.right.height if l.right is not None else 0):
            n.left = _rot_left(l)
        return _rot_right(n)
    if bf < -1:
        if (r.right.height if r.right is not None else 0) < \
           (r.left.height if r.left is not None else 0):
            n.right = _rot_right(r)
        return _rot_left(n)
    n.height = (hl if hl > hr else hr) + 1
    n.width_sum = wl + wr + n.width
    return n


def _join_mid(l, m, r):
    """Join l ++ [m] ++ r, reusing node m.  O(|height(l) - height(r)|)."""
    if l is not None:
        hl = l.height
        wl = l.width_sum
    else:
        hl = wl = 0
    if r is not None:
        hr = r.height
        wr = r.width_sum
    else:
        hr = wr = 0
    if -2 < hl - hr < 2:
        m.left = l
        m.right = r
        m.height = (hl if hl > hr else hr) + 1
        m.width_sum = wl + wr + m.width
        return m
    if hl > hr:
        l.right = _join_mid(l.right, m, r)
        return _bal(l)
    r.left = _join_mid(l, m, r.left)
    return _bal(r)


def _pop_min(n):
    if n.left is None:
        return n, n.right
    m, rest = _pop_min(n.left)
    n.left = rest
    return m, _bal(n)


def _pop_max(n):
    if n.right is None:
        return n, n.left
    m, rest = _pop_max(n.right)
    n.right = rest
    return m, _bal(n)


def _join(l, r):
    if l is None:
        return r
    if r is None:
        return l
    if l.height >= r.height:
        m, r2 = _pop_min(r)
        return _join_mid(l, m, r2)
    m, l2 = _pop_max(l)
    return _join_mid(l2, m, r)


def _min_node(n):
    while n.left is not None:
        n = n.left
    return n


def _max_node(n):
    while n.right is not None:
        n = n.right
    return n


def _count(n):
    if n is None:
        return 0
    return 1 + _count(n.left) + _count(n.right)


def _split3(root, key):
    """Split at the unique node whose edge's left key equals ``key``.

    Returns (left_part, pivot_node, right_part); the pivot node is detached.
    Raises EdgeNotFound when no node carries the key.  Iterative: pieces are
    peeled off along the search path and folded back with joins bottom-up.
    """
    lparts = []
    rparts = []
    n = root
    while n is not None:
        k = n.edge[0]
        if key > k:
            lparts.append(n)
            n = n.right
        elif key < k:
            rparts.append(n)
            n = n.left
        else:
            l = n.left
            r = n.right
            n.left = None
            n.right = None
            _fix(n)
            for piece in reversed(lparts):
                l = _join_mid(piece.left, piece, l)
            for piece in reversed(rparts):
                r = _join_mid(r, piece, piece.right)
            return l, n, r
    raise EdgeNotFound(f"edge with left key {key!r} not in queue")


def _split_at_vertex(root, key):
    """Split a chain queue at a vertex key.

    Edges whose right key is <= key go to the left part, edges whose left
    key is >= key go to the right part.  The vertex must be a chain
    breakpoint; an edge strictly spanning it means the queue is corrupt.
    """
    lparts = []
    rparts = []
    n = root
    while n is not None:
        e = n.edge
        if e[1] <= key:
            lparts.append(n)
            n = n.right
        elif e[0] >= key:
            rparts.append(n)
            n = n.left
        else:
            raise EdgeNotFound(f"queue edge {n.edge!r} spans split vertex {key!r}")
    l = None
    for piece in reversed(lparts):
        l = _join_mid(piece.left, piece, l)
    r = None
    for piece in reversed(rparts):
        r = _join_mid(r, piece, piece.right)
    return l, r


def _build(items):
    """Balanced queue from a list of (edge, width) pairs, O(n)."""
    def rec(lo, hi):
        if lo >= hi:
            return None
        mid = (lo + hi) // 2
        edge, width = items[mid]
        n = CQueueNode(edge, width)
        n.left = rec(lo, mid)
        n.right = rec(mid + 1, hi)
        _fix(n)
        return n

    return rec(0, len(items))


def _iter_nodes(n):
    stack = []
    while stack or n is not None:
        while n is not None:
            stack.append(n)
            n = n.left
        n = stack.pop()
        yield n
        n = n.right


def _edges(n):
    return [x.edge for x in _iter_nodes(n)]


class CQueueCursor:
    """Navigation handle over a queue: edge nodes plus conceptual point
    leaves.  Stepping into a missing child yields the adjacent endpoint of
    the current edge as a leaf cursor.

    ``pt`` is None on internal cursors and the leaf point on leaf cursors;
    ``ed`` is the edge on internal cursors (the bridge-search walk reads
    these attributes directly).
    """

    __slots__ = ("node", "pt", "ed")

    def __init__(self, node, pt=None):
        self.node = node
        if node is not None:
            self.ed = node.edge
            self.pt = None
        else:
            self.ed = None
            self.pt = pt

    def is_leaf(self):
        return self.node is None

    def edge(self):
        if self.node is None:
            raise NoChild("leaf cursor has no edge")
        return self.ed

    def endpoint(self):
        if self.node is not None:
            raise NoChild("internal cursor has no endpoint")
        return self.pt

    def left_child(self):
        n = self.node
        if n is None:
            raise NoChild("cannot step below a leaf")
        if n.left is not None:
            return CQueueCursor(n.left)
        return CQueueCursor(None, n.edge[0])

    def right_child(self):
        n = self.node
        if n is None:
            raise NoChild("cannot step below a leaf")
        if n.right is not None:
            return CQueueCursor(n.right)
        return CQueueCursor(None, n.edge[1])


class CQueue:
    """A (possibly empty) concatenable queue; thin handle around the root."""

    __slots__ = ("root",)

    def __init__(self, root=None):
        self.root = root

    # -- construction ----------------------------------------------------

    @classmethod
    def from_edges(cls, edges, widths=None):
        if widths is None:
            items = [(e, 0) for e in edges]
        else:
            items = list(zip(edges, widths))
        return cls(_build(items))

    # -- inspection ------------------------------------------------------

    def is_empty(self):
        return self.root is None

    def __len__(self):
        return _count(self.root)

    def __bool__(self):
        return self.root is not None

    def width_sum(self):
        return self.root.width_sum if self.root is not None else 0

    def edges(self):
        return _edges(self.root)

    def __iter__(self):
        return (n.edge for n in _iter_nodes(self.root))

    def first_edge(self):
        if self.root is None:
            return None
        return _min_node(self.root).edge

    def last_edge(self):
        if self.root is None:
            return None
        return _max_node(self.root).edge

    def cursor(self):
        if self.root is None:
            raise NoChild("empty queue has no cursor")
        return CQueueCursor(self.root)

    # -- queue operations --------------------------------------------------

    def split(self, at):
        """Split at edge ``at``: (edges before it, ``at`` and edges after).

        Consumes self.  Raises EdgeNotFound when ``at`` is absent.
        """
        l, mid, r = _split3(self.root, at[0])
        if mid.edge != at:
            raise EdgeNotFound(f"edge {at!r} not in queue (found {mid.edge!r})")
        self.root = None
        return CQueue(l), CQueue(_join_mid(None, mid, r))

    def split_at_vertex(self, key):
        """Split at a chain vertex: (edges ending at or before it, edges
        starting at or after it).  Consumes self."""
        l, r = _split_at_vertex(self.root, key)
        self.root = None
        return CQueue(l), CQueue(r)

    def pop_first(self):
        """Detach and return (first edge, queue of the rest); consumes self."""
        if self.root is None:
            raise EdgeNotFound("pop from empty queue")
        m, rest = _pop_min(self.root)
        self.root = None
        return m.edge, CQueue(rest)

    def join(self, other):
        """Concatenate self ++ other; consumes both."""
        if DEBUG and self.root is not None and other.root is not None:
            a = _max_node(self.root).edge
            b = _min_node(other.root).edge
            if not (a[0] < b[0] and a[1] <= b[0]):
                raise OrderViolation(f"join boundary out of order: {a!r} !< {b!r}")
        res = CQueue(_join(self.root, other.root))
        self.root = None
        other.root = None
        return res

    def join_around(self, bridge, other, width=0):
        """self ++ [bridge] ++ other; consumes both queues."""
        if DEBUG:
            a = _max_node(self.root).edge if self.root is not None else None
            b = _min_node(other.root).edge if other.root is not None else None
            if a is not None and not a[1] <= bridge[0]:
                raise OrderViolation(f"left part {a!r} overlaps bridge {bridge!r}")
            if b is not None and not bridge[1] <= b[0]:
                raise OrderViolation(f"right part {b!r} overlaps bridge {bridge!r}")
        res = CQueue(_join_mid(self.root, CQueueNode(bridge, width), other.root))
        self.root = None
        other.root = None
        return res

    # -- debug -------------------------------------------------------------

    def validate(self):
        """Check AVL balance, heights and width sums; raise AssertionError."""
        def rec(n):
            if n is None:
                return 0, 0
            hl, wl = rec(n.left)
            hr, wr = rec(n.right)
            assert abs(hl - hr) <= 1, "AVL balance violated"
            h = max(hl, hr) + 1
            w = wl + wr + n.width
            assert n.height == h, "stale height"
            assert n.width_sum == w, "stale width sum"
            return h, w

        rec(self.root)
        return True


def validate_queue(root):
    CQueue(root).validate()
    return True

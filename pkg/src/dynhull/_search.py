"""Shared bridge-search walk over a pair of hull-chain cursors.

One loop serves every structure in the library: the chain of each side is
exposed through a cursor (a balanced-queue node, a covered-bridge tree
position, or a rank-materialising wrapper) and the walk descends both sides
simultaneously until it pins the two bridge endpoints.

Cursor protocol (attributes read directly for speed):
  ``pt``            leaf point, or None while the cursor sits on an edge
  ``ed``            the current edge (HullEdge) when internal
  ``left_child()``  cursor over the chain part preceding the current edge
  ``right_child()`` cursor over the chain part succeeding it

Decision logic per loop iteration, for the upper bridge (lower is the same
with slope comparisons flipped); l and r are the midpoints of the current
edges (or the leaf points themselves):

  1. slope(alpha) <= slope(lr)  ->  the left endpoint precedes alpha; go left.
  2. slope(lr) <= slope(beta)   ->  the right endpoint succeeds beta; go right.
  3. otherwise the supporting lines of alpha and beta cross at a unique
     point gamma; strictly left of the separator (in the sheared order) the
     left endpoint succeeds alpha, on it or right of it the right endpoint
     precedes beta.  The boundary case must take the beta branch, or
     collinear maximal bridges get truncated.  When one side is already a
     leaf, the slope of the line from that pinned endpoint to the other
     side's midpoint decides directly (an exact slope tie means collinear,
     and maximality sends the search outward).

Both rules 1 and 2 may fire in one iteration (they are not exclusive); the
midpoints are snapshotted at the top of the iteration, so applying both is
sound.  Every iteration moves at least one cursor strictly downward, which
bounds the loop by the two cursor heights.

``find_bridge_walk`` is the cursor-generic form; ``find_bridge_planar`` is
the same decision procedure specialised to bare queue nodes with the sign
arithmetic inlined (it is what the planar chain-queue structure runs; the
arithmetic is identical for exact and floating coordinates because points
are already in their kernel-prepared form).
"""

from .kernel import HullEdge


class Counters:
    """Instrumentation counters; proxies for the asymptotic bounds."""

    __slots__ = ("bridge_iters", "nav_visits", "report_visits")

    def __init__(self):
        self.reset()

    def reset(self):
        self.bridge_iters = 0
        self.nav_visits = 0
        self.report_visits = 0

    def snapshot(self):
        return (self.bridge_iters, self.nav_visits, self.report_visits)


def find_bridge_walk(kern, upper, ca, cb, sx, sy, counters=None):
    """Run the bridge search; returns the bridge as an explicit HullEdge.

    ``ca``/``cb`` are cursors over the left and right chains, ``(sx, sy)``
    the separator point between the two sides (``sy`` may be None for a
    bare vertical separator).
    """
    slope_cmp = kern._slope_cmp_d
    gamma_side = kern._gamma_side
    iters = 0
    apt = ca.pt
    bpt = cb.pt
    while apt is None or bpt is None:
        iters += 1
        if apt is None:
            ae = ca.ed
            al = ae[0]
            ar = ae[1]
            lx = al[0] + ar[0]
            ly = al[1] + ar[1]
        else:
            lx = apt[0] + apt[0]
            ly = apt[1] + apt[1]
        if bpt is None:
            be = cb.ed
            bl = be[0]
            br = be[1]
            rx = bl[0] + br[0]
            ry = bl[1] + br[1]
        else:
            rx = bpt[0] + bpt[0]
            ry = bpt[1] + bpt[1]
        # midpoints kept doubled; slope comparisons are scale invariant
        dlx = rx - lx
        dly = ry - ly
        if apt is None:
            s = slope_cmp(ar[0] - al[0], ar[1] - al[1], dlx, dly)
            move_a = s <= 0 if upper else s >= 0
        else:
            move_a = False
        if bpt is None:
            s = slope_cmp(dlx, dly, br[0] - bl[0], br[1] - bl[1])
            move_b = s <= 0 if upper else s >= 0
        else:
            move_b = False
        if move_a:
            ca = ca.left_child()
            apt = ca.pt
        if move_b:
            cb = cb.right_child()
            bpt = cb.pt
        if not move_a and not move_b:
            if bpt is not None:
                ca = ca.right_child()
                apt = ca.pt
            elif apt is not None:
                cb = cb.left_child()
                bpt = cb.pt
            elif gamma_side(ae[0], ae[1], be[0], be[1], sx, sy) < 0:
                ca = ca.right_child()
                apt = ca.pt
            else:
                cb = cb.left_child()
                bpt = cb.pt
    if counters is not None:
        counters.bridge_iters += iters
    return HullEdge(apt, bpt)


def find_bridge_planar(upper, anode, apt, bnode, bpt, sx, sy):
    """The same walk over bare queue nodes, arithmetic inlined.

    One side is either a queue root (``anode``) or a pinned single point
    (``apt``); likewise for b.  Returns (left point, right point, iters).
    Per-side state (edge endpoints, deltas, doubled midpoint) is cached and
    refreshed only when that side's cursor moves.
    """
    iters = 0
    if apt is None:
        ae = anode.edge
        al = ae[0]
        ar = ae[1]
        dax = ar[0] - al[0]
        day = ar[1] - al[1]
        lx = al[0] + ar[0]
        ly = al[1] + ar[1]
    else:
        al = ar = None
        lx = apt[0] + apt[0]
        ly = apt[1] + apt[1]
    if bpt is None:
        be = bnode.edge
        bl = be[0]
        br = be[1]
        dbx = br[0] - bl[0]
        dby = br[1] - bl[1]
        rx = bl[0] + br[0]
        ry = bl[1] + br[1]
    else:
        bl = br = None
        rx = bpt[0] + bpt[0]
        ry = bpt[1] + bpt[1]
    while apt is None or bpt is None:
        iters += 1
        dlx = rx - lx
        dly = ry - ly
        move_a = move_b = 0
        if apt is None:
            # direct form of slope(alpha) <=/>= slope(lr), verticals +inf
            if dax == 0:
                cond = dlx == 0 if upper else True
            elif dlx == 0:
                cond = upper
            else:
                cond = (day * dlx <= dly * dax) if upper else (day * dlx >= dly * dax)
            if cond:
                move_a = 1
        if bpt is None:
            if dlx == 0:
                cond = dbx == 0 if upper else True
            elif dbx == 0:
                cond = upper
            else:
                cond = (dly * dbx <= dby * dlx) if upper else (dly * dbx >= dby * dlx)
            if cond:
                move_b = 1
        if not (move_a or move_b):
            if bpt is not None:
                move_a = 2
            elif apt is not None:
                move_b = 2
            else:
                d = dax * dby - day * dbx
                c = (bl[0] - al[0]) * dby - (bl[1] - al[1]) * dbx
                nx = (al[0] - sx) * d + dax * c
                t = nx if d > 0 else -nx
                if t == 0:
                    ny = (al[1] - sy) * d + day * c
                    t = ny if d > 0 else -ny
                if t < 0:
                    move_a = 2
                else:
                    move_b = 2
        if move_a:
            n = anode.left if move_a == 1 else anode.right
            if n is not None:
                anode = n
                ae = n.edge
                al = ae[0]
                ar = ae[1]
                dax = ar[0] - al[0]
                day = ar[1] - al[1]
                lx = al[0] + ar[0]
                ly = al[1] + ar[1]
            else:
                apt = al if move_a == 1 else ar
                lx = apt[0] + apt[0]
                ly = apt[1] + apt[1]
        if move_b:
            n = bnode.right if move_b == 1 else bnode.left
            if n is not None:
                bnode = n
                be = n.edge
                bl = be[0]
                br = be[1]
                dbx = br[0] - bl[0]
                dby = br[1] - bl[1]
                rx = bl[0] + br[0]
                ry = bl[1] + br[1]
            else:
                bpt = br if move_b == 1 else bl
                rx = bpt[0] + bpt[0]
                ry = bpt[1] + bpt[1]
    return apt, bpt, iters


def find_bridge_pbt_planar(upper, side, aroot, broot, sx, sy):
    """Bridge walk over two bridge-tree subtrees, covered-bridge navigation
    and sign arithmetic inlined.

    Each side's cursor is a confirmed chain edge plus the window of chain
    vertices still reachable; stepping left/right descends the tree from
    the current node, skipping bridges covered by the window bounds, so one
    call visits each tree node at most once per side.  Returns
    (left point, right point, iterations, nodes visited).
    """
    iters = 0
    visits = 0
    if aroot.item is not None:
        apt = aroot.item
        anode = al = ar = alo = ahi = None
        lx = apt[0] + apt[0]
        ly = apt[1] + apt[1]
    else:
        apt = None
        anode = aroot
        alo = aroot.min_key
        ahi = aroot.max_key
        ae = aroot.bridge[side]
        al = ae[0]
        ar = ae[1]
        dax = ar[0] - al[0]
        day = ar[1] - al[1]
        lx = al[0] + ar[0]
        ly = al[1] + ar[1]
    if broot.item is not None:
        bpt = broot.item
        bnode = bl = br = blo = bhi = None
        rx = bpt[0] + bpt[0]
        ry = bpt[1] + bpt[1]
    else:
        bpt = None
        bnode = broot
        blo = broot.min_key
        bhi = broot.max_key
        be = broot.bridge[side]
        bl = be[0]
        br = be[1]
        dbx = br[0] - bl[0]
        dby = br[1] - bl[1]
        rx = bl[0] + br[0]
        ry = bl[1] + br[1]
    while apt is None or bpt is None:
        iters += 1
        dlx = rx - lx
        dly = ry - ly
        move_a = move_b = 0
        if apt is None:
            # direct form of slope(alpha) <=/>= slope(lr), verticals +inf
            if dax == 0:
                cond = dlx == 0 if upper else True
            elif dlx == 0:
                cond = upper
            else:
                cond = (day * dlx <= dly * dax) if upper else (day * dlx >= dly * dax)
            if cond:
                move_a = 1
        if bpt is None:
            if dlx == 0:
                cond = dbx == 0 if upper else True
            elif dbx == 0:
                cond = upper
            else:
                cond = (dly * dbx <= dby * dlx) if upper else (dly * dbx >= dby * dlx)
            if cond:
                move_b = 1
        if not (move_a or move_b):
            if bpt is not None:
                move_a = 2
            elif apt is not None:
                move_b = 2
            else:
                d = dax * dby - day * dbx
                c = (bl[0] - al[0]) * dby - (bl[1] - al[1]) * dbx
                nx = (al[0] - sx) * d + dax * c
                t = nx if d > 0 else -nx
                if t == 0:
                    ny = (al[1] - sy) * d + day * c
                    t = ny if d > 0 else -ny
                if t < 0:
                    move_a = 2
                else:
                    move_b = 2
        if move_a:
            if move_a == 1:
                lo = alo
                hi = al
            else:
                lo = ar
                hi = ahi
            if lo == hi:
                apt = lo
                lx = apt[0] + apt[0]
                ly = apt[1] + apt[1]
            else:
                n = anode.left if move_a == 1 else anode.right
                while True:
                    if n.item is not None:
                        # unreachable with consistent predicates; degrade
                        apt = n.item
                        lx = apt[0] + apt[0]
                        ly = apt[1] + apt[1]
                        break
                    visits += 1
                    e = n.bridge[side]
                    if e[0] >= hi:
                        n = n.left
                    elif e[1] <= lo:
                        n = n.right
                    else:
                        anode = n
                        alo = lo
                        ahi = hi
                        al = e[0]
                        ar = e[1]
                        dax = ar[0] - al[0]
                        day = ar[1] - al[1]
                        lx = al[0] + ar[0]
                        ly = al[1] + ar[1]
                        break
        if move_b:
            if move_b == 1:
                lo = br
                hi = bhi
            else:
                lo = blo
                hi = bl
            if lo == hi:
                bpt = lo
                rx = bpt[0] + bpt[0]
                ry = bpt[1] + bpt[1]
            else:
                n = bnode.right if move_b == 1 else bnode.left
                while True:
                    if n.item is not None:
                        bpt = n.item
                        rx = bpt[0] + bpt[0]
                        ry = bpt[1] + bpt[1]
                        break
                    visits += 1
                    e = n.bridge[side]
                    if e[0] >= hi:
                        n = n.left
                    elif e[1] <= lo:
                        n = n.right
                    else:
                        bnode = n
                        blo = lo
                        bhi = hi
                        bl = e[0]
                        br = e[1]
                        dbx = br[0] - bl[0]
                        dby = br[1] - bl[1]
                        rx = bl[0] + br[0]
                        ry = bl[1] + br[1]
                        break
    return apt, bpt, iters, visits


def _scmp(d1x, d1y, d2x, d2y):
    # slope comparison with verticals as +infinity (chain deltas: dx >= 0)
    if d1x == 0:
        return 0 if d2x == 0 else 1
    if d2x == 0:
        return -1
    t1 = d1y * d2x
    t2 = d2y * d1x
    return (t1 > t2) - (t1 < t2)


def _edge_by_left(n, a, steps):
    while n is not None:
        steps += 1
        k = n.edge[0]
        if a < k:
            n = n.left
        elif a > k:
            n = n.right
        else:
            return n.edge, steps
    return None, steps


def _edge_by_right(n, a, steps):
    while n is not None:
        steps += 1
        k = n.edge[1]
        if a < k:
            n = n.left
        elif a > k:
            n = n.right
        else:
            return n.edge, steps
    return None, steps


def bridge_still_valid(upper, qx, xleaf, qy, yleaf, a, b):
    """Warm-start test: is the previously stored bridge (a, b) still the
    maximal bridge of the two chains?

    Local support with maximality tie rules, checked against the (up to
    four) chain edges incident to a and b: on the left side the edge ending
    at a must be strictly steeper than ab and the edge leaving a at most as
    steep (ties extend the bridge leftward, so a strict tie at the
    predecessor disqualifies); mirrored on the right side, and slopes
    reversed for the lower hull.  Convexity makes these local conditions
    equivalent to global support.  Returns (valid, lookup steps); a False
    just sends the caller into the full walk.
    """
    steps = 0
    dabx = b[0] - a[0]
    daby = b[1] - a[1]
    if xleaf is not None:
        if a != xleaf:
            return False, steps
    else:
        prev_e, steps = _edge_by_right(qx, a, steps)
        next_e, steps = _edge_by_left(qx, a, steps)
        if prev_e is None and next_e is None:
            return False, steps
        if prev_e is not None:
            s = _scmp(prev_e[1][0] - prev_e[0][0], prev_e[1][1] - prev_e[0][1],
                      dabx, daby)
            if (s <= 0) if upper else (s >= 0):
                return False, steps
        if next_e is not None:
            s = _scmp(dabx, daby,
                      next_e[1][0] - next_e[0][0], next_e[1][1] - next_e[0][1])
            if (s < 0) if upper else (s > 0):
                return False, steps
    if yleaf is not None:
        if b != yleaf:
            return False, steps
    else:
        prev_e, steps = _edge_by_right(qy, b, steps)
        next_e, steps = _edge_by_left(qy, b, steps)
        if prev_e is None and next_e is None:
            return False, steps
        if prev_e is not None:
            s = _scmp(prev_e[1][0] - prev_e[0][0], prev_e[1][1] - prev_e[0][1],
                      dabx, daby)
            if (s < 0) if upper else (s > 0):
                return False, steps
        if next_e is not None:
            s = _scmp(dabx, daby,
                      next_e[1][0] - next_e[0][0], next_e[1][1] - next_e[0][1])
            if (s <= 0) if upper else (s >= 0):
                return False, steps
    return True, steps


def center2(cursor):
    """Doubled midpoint of a cursor position (kept integral)."""
    if cursor.pt is not None:
        p = cursor.pt
        return p[0] + p[0], p[1] + p[1]
    l, r = cursor.ed
    return l[0] + r[0], l[1] + r[1]

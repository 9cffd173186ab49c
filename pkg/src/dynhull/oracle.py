"""Static reference implementations used as ground truth in tests.

Everything here is deliberately simple and exact: monotone-chain hull
construction, O(n^3) brute-force bridge finding, gift wrapping as a second
independent hull, and a linear-scan membership test.  These are correctness
oracles, not production code paths.
"""

from .kernel import HullEdge, as_point


def _cross(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def upper_chain(points):
    """Vertices of the upper chain, lexicographic order, collinear interior
    vertices removed.  Input points must be distinct; order is irrelevant."""
    pts = sorted(points)
    chain = []
    for p in pts:
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) >= 0:
            chain.pop()
        chain.append(p)
    return chain


def lower_chain(points):
    pts = sorted(points)
    chain = []
    for p in pts:
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    return chain


def _chain_edges(chain):
    return [HullEdge(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]


def static_hull(points):
    """Monotone-chain hull: (upper edge list, lower edge list), vertex form.

    Both chains run from the lexicographically smallest point to the largest;
    the upper chain may start with a vertical edge and the lower chain may
    end with one.  A set of fewer than two points has no edges.
    """
    pts = sorted(set(as_point(p) for p in points))
    if len(pts) < 2:
        return [], []
    up = []
    lo = []
    for p in pts:
        while len(up) >= 2 and _cross(up[-2], up[-1], p) >= 0:
            up.pop()
        up.append(p)
        while len(lo) >= 2 and _cross(lo[-2], lo[-1], p) <= 0:
            lo.pop()
        lo.append(p)
    return _chain_edges(up), _chain_edges(lo)


def hull_vertex_cycle(points):
    """Hull vertices as one counter-clockwise cycle starting at the
    lexicographic minimum (lower chain first, then upper chain reversed)."""
    up, lo = static_hull(points)
    if not up:
        pts = sorted(set(as_point(p) for p in points))
        return pts
    lo_verts = [lo[0].left] + [e.right for e in lo]
    up_verts = [up[0].left] + [e.right for e in up]
    return lo_verts + up_verts[-2:0:-1]


def hull_size(points):
    """Number of distinct hull vertices."""
    pts = set(as_point(p) for p in points)
    if len(pts) <= 2:
        return len(pts)
    return len(hull_vertex_cycle(pts))


def gift_wrap(points):
    """Jarvis-march hull cycle (counter-clockwise from the lexicographic
    minimum), farthest point taken on collinear ties.  Second independent
    oracle used to cross-check static_hull."""
    pts = sorted(set(as_point(p) for p in points))
    if len(pts) <= 2:
        return pts
    start = pts[0]
    cycle = [start]
    cur = start
    while True:
        best = None
        for cand in pts:
            if cand == cur:
                continue
            if best is None:
                best = cand
                continue
            turn = _cross(cur, best, cand)
            if turn < 0:
                best = cand
            elif turn == 0:
                # keep the farther collinear candidate
                dcb = (best[0] - cur[0], best[1] - cur[1])
                dcc = (cand[0] - cur[0], cand[1] - cur[1])
                if abs(dcc[0]) + abs(dcc[1]) > abs(dcb[0]) + abs(dcb[1]):
                    best = cand
        if best == start:
            break
        cycle.append(best)
        cur = best
    return cycle


def brute_bridge(left, right, side="upper"):
    """The maximal non-separating segment between two x-separated sets.

    Literal transcription of the definition: over all pairs (a, b) in
    left x right whose supporting line keeps every point of the union on the
    hull side (below for the upper bridge, above for the lower), take the
    lexicographically smallest a; among those the largest b.  O(n^3).
    """
    assert left and right, "both sides need at least one point"
    lpts = [as_point(p) for p in left]
    rpts = [as_point(p) for p in right]
    allpts = lpts + rpts
    want = 1 if side == "upper" else -1
    best = None
    for a in lpts:
        for b in rpts:
            ok = True
            for p in allpts:
                if _cross(a, b, p) * want > 0:
                    ok = False
                    break
            if ok:
                if best is None or a < best.left or (a == best.left and b > best.right):
                    best = HullEdge(a, b)
    assert best is not None, "no valid bridge found"
    return best


def naive_point_in_hull(points, q):
    """True iff q is inside or on the hull of ``points`` (linear scan)."""
    pts = sorted(set(as_point(p) for p in points))
    q = as_point(q)
    if not pts:
        return False
    if len(pts) == 1:
        return q == pts[0]
    if q < pts[0] or q > pts[-1]:
        return False
    up, lo = static_hull(pts)
    for e in up:
        if e.left <= q <= e.right:
            if _cross(e.left, e.right, q) > 0:
                return False
            break
    for e in lo:
        if e.left <= q <= e.right:
            if _cross(e.left, e.right, q) < 0:
                return False
            break
    return True

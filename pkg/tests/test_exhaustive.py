"""Exhaustive small-universe checks.

Random workloads miss thin corner cases; over a tiny grid every subset can
be enumerated outright, so these tests sweep all of them against the
oracles: builds in two orders, stepwise deletion sweeps, every membership
query on a surrounding grid, and every small extreme direction.  The grid
is chosen so collinear rows, columns and diagonals are dense.
"""

from dynhull import DynamicHull, EiliceHull, RankHull
from dynhull.kernel import Point
from dynhull.oracle import naive_point_in_hull, static_hull

GRID3 = [Point(x, y) for x in range(3) for y in range(3)]


def oracle_edges(points):
    up, lo = static_hull(points)
    return up + lo


def all_subsets(universe, min_size=1, max_size=None):
    n = len(universe)
    for mask in range(1, 1 << n):
        sub = [p for i, p in enumerate(universe) if mask >> i & 1]
        if len(sub) >= min_size and (max_size is None or len(sub) <= max_size):
            yield sub


class TestAllSubsets3x3:
    def test_builds_and_hulls(self):
        for sub in all_subsets(GRID3):
            want = oracle_edges(sub)
            for order in (sub, sub[::-1]):
                h = DynamicHull()
                e = EiliceHull()
                for p in order:
                    h.insert(p)
                    e.insert(p)
                assert h.hull_edges() == want
                assert e.report_hull() == want

    def test_deletion_sweeps(self):
        for sub in all_subsets(GRID3, min_size=2, max_size=6):
            h = DynamicHull()
            e = EiliceHull()
            for p in sub:
                h.insert(p)
                e.insert(p)
            live = list(sub)
            # delete lexicographically from the front, checking every state
            while live:
                p = live.pop(0)
                h.delete(p)
                e.delete(p)
                want = oracle_edges(live)
                assert h.hull_edges() == want
                assert e.report_hull() == want

    def test_all_membership_queries(self):
        queries = [Point(x, y) for x in range(-1, 4) for y in range(-1, 4)]
        for sub in all_subsets(GRID3):
            h = DynamicHull()
            e = EiliceHull()
            for p in sub:
                h.insert(p)
                e.insert(p)
            for q in queries:
                want = naive_point_in_hull(sub, q)
                assert h.point_in_hull(q) == want, (sub, q)
                assert e.point_in_hull(q) == want, (sub, q)

    def test_all_extreme_directions(self):
        dirs = [(dx, dy) for dx in (-2, -1, 0, 1, 2) for dy in (-2, -1, 0, 1, 2)
                if (dx, dy) != (0, 0)]
        for sub in all_subsets(GRID3):
            h = DynamicHull()
            e = EiliceHull()
            for p in sub:
                h.insert(p)
                e.insert(p)
            for d in dirs:
                best = max(d[0] * p.x + d[1] * p.y for p in sub)
                want = min(p for p in sub if d[0] * p.x + d[1] * p.y == best)
                assert h.extreme_point(d) == want, (sub, d)
                assert e.extreme_point(d) == want, (sub, d)


class TestAllValueSubsets:
    def test_rank_hulls_exhaustive(self):
        universe = [0, 1, 2, 3, 5, 8, 13, 21]
        for mask in range(1, 1 << len(universe)):
            vals = [v for i, v in enumerate(universe) if mask >> i & 1]
            want = oracle_edges([Point(i, v) for i, v in enumerate(sorted(vals))])
            hulls = [RankHull(variant=v) for v in ("cqueue", "nav")]
            for h in hulls:
                for v in vals:
                    h.insert_value(v)
                assert h.report_hull() == want
            # delete half and recheck
            kill = vals[::2]
            rest = [v for v in vals if v not in kill]
            want = oracle_edges([Point(i, v) for i, v in enumerate(sorted(rest))])
            for h in hulls:
                for v in kill:
                    h.delete_value(v)
                assert h.report_hull() == want


class TestAllSubsets4x3:
    def test_builds(self):
        universe = [Point(x, y) for x in range(4) for y in range(3)]
        for sub in all_subsets(universe):
            want = oracle_edges(sub)
            h = DynamicHull()
            e = EiliceHull()
            for p in sub:
                h.insert(p)
                e.insert(p)
            assert h.hull_edges() == want
            assert e.report_hull() == want

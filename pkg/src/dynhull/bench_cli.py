"""Benchmark and verification command line.

Three subcommands:

  generate   write a .pts file for one of the named distributions
  bench      time one experiment mode on one structure, appending CSV rows
  verify     replay an ops script against a structure and the static oracle
             simultaneously, failing at the first divergence

CSV schema (stable): mode,structure,kernel,dist,n,batch,wall_nanos,
ops_counter,hull_size -- one row per measurement.  ``ops_counter`` is the
instrumented bridge-search iteration total (plus covered-bridge node visits
for the queue-free structures); wall times are recorded but never asserted
anywhere, counters are what the tests bound.

Full-scale defaults (2^20 points, 50,000-point extensions, 1000-update
batches, 2^20 queries) are scaled down by the --scale divisor; --scale 64
is the continuous-integration size.

Ops script grammar: one op per line, whitespace separated:
  ins x y | del x y | q x y        (planar structures)
  ins v   | del v   | q x y        (rank structures; q is in rank space)
"""

import argparse
import csv
import sys
import time
from bisect import bisect_left

from . import oracle
from .datagen import Distribution, SplitMix64, generate, read_points, to_grid_ints, write_points
from .errors import (DuplicateValue, DynHullError, ScriptParseError,
                     UnknownMode, UnknownStructure, ValueNotFound)
from .hull_eilice import EiliceHull
from .hull_ovl import DynamicHull
from .kernel import Point
from .rank_hull import RankHull
from .datagen import parse_coordinate

CSV_FIELDS = ["mode", "structure", "kernel", "dist", "n", "batch",
              "wall_nanos", "ops_counter", "hull_size"]

STRUCTURES = ("ovl", "eilice", "rank-ovl", "rank-eilice", "static-oracle")
MODES = ("construct", "extend", "update", "query")

FULL_SCALE_DEFAULTS = {"n": 2 ** 20, "extend": 50_000, "updates": 1000,
                  "queries": 2 ** 20, "construct_batch": 500}


# -- structure drivers --------------------------------------------------------


class _DynamicDriver:
    rank = False

    def __init__(self, hull):
        self.hull = hull

    def insert(self, p):
        self.hull.insert(p)

    def delete(self, p):
        self.hull.delete(p)

    def refresh(self):
        pass

    def query(self, q):
        return self.hull.point_in_hull(q)

    def hull_size(self):
        return self.hull.hull_size()

    def hull_edges(self):
        return self.hull.hull_edges()

    def ops_counter(self):
        c = self.hull.counters
        return c.bridge_iters + c.nav_visits


class _RankDriver(_DynamicDriver):
    """Feeds the y-coordinate of each point to a rank hull.

    Distinct points can share a y-value, and the value set rejects
    duplicates, so colliding inserts (and deletes of values another point
    already removed) are skipped; at full scale a 2^20-point file carries a
    few hundred such collisions.
    """

    rank = True

    def insert(self, p):
        try:
            self.hull.insert_value(p[1])
        except DuplicateValue:
            pass

    def delete(self, p):
        try:
            self.hull.delete_value(p[1])
        except ValueNotFound:
            pass


class _StaticOracleDriver:
    """Rebuild-from-scratch baseline: updates only touch a point list; the
    hull exists after refresh(), which reruns the static construction."""

    rank = False

    def __init__(self):
        self.points = []
        self.upper = []
        self.lower = []

    def insert(self, p):
        self.points.append(p)

    def delete(self, p):
        self.points.remove(p)

    def refresh(self):
        self.upper, self.lower = oracle.static_hull(self.points)

    def query(self, q):
        return _chain_membership(self.upper, self.lower, q)

    def hull_size(self):
        if not self.upper:
            return min(len(set(self.points)), 2)
        return len(self.upper) + len(self.lower)

    def hull_edges(self):
        return self.upper + self.lower

    def ops_counter(self):
        return 0


def _chain_membership(upper, lower, q):
    """Binary-search membership on prebuilt chains."""
    if not upper:
        return False
    if q < upper[0].left or q > upper[-1].right:
        return False
    for chain, sign in ((upper, 1), (lower, -1)):
        lefts = [e.left for e in chain]
        i = bisect_left(lefts, q)
        if i == len(chain) or chain[i].left > q:
            i -= 1
        e = chain[i]
        o = oracle._cross(e.left, e.right, q)
        if o * sign > 0:
            return False
    return True


def make_structure(name, kernel):
    if name == "ovl":
        return _DynamicDriver(DynamicHull(kernel=kernel))
    if name == "eilice":
        return _DynamicDriver(EiliceHull(kernel=kernel))
    if name == "rank-ovl":
        return _RankDriver(RankHull(variant="cqueue", kernel=kernel))
    if name == "rank-eilice":
        return _RankDriver(RankHull(variant="nav", kernel=kernel))
    if name == "static-oracle":
        return _StaticOracleDriver()
    raise UnknownStructure(f"unknown structure {name!r}; expected one of {STRUCTURES}")


# -- csv ----------------------------------------------------------------------


def _open_csv(path):
    try:
        new = not path.exists() or path.stat().st_size == 0
    except AttributeError:
        import os
        new = not os.path.exists(path) or os.path.getsize(path) == 0
    fh = open(path, "a", newline="")
    writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS, lineterminator="\n")
    if new:
        writer.writeheader()
    return fh, writer


# -- bench modes --------------------------------------------------------------


def _bbox(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), max(xs), min(ys), max(ys)


def _query_points(driver, points, count, seed):
    rng = SplitMix64(seed)
    if driver.rank:
        n = len(points)
        ys = sorted(p[1] for p in points)
        x0, x1 = 0.0, float(max(n - 1, 0))
        y0, y1 = float(ys[0]), float(ys[-1])
    else:
        bx0, bx1, by0, by1 = _bbox(points)
        x0, x1, y0, y1 = float(bx0), float(bx1), float(by0), float(by1)
    out = []
    for _ in range(count):
        out.append(Point(x0 + rng.next_float() * (x1 - x0),
                         y0 + rng.next_float() * (y1 - y0)))
    return out


def _naive_member(driver, built_points, q):
    if driver.rank:
        ranked = [Point(i, v) for i, v in enumerate(sorted(p[1] for p in built_points))]
        return oracle.naive_point_in_hull(ranked, q)
    return oracle.naive_point_in_hull(built_points, q)


def run_bench(args, out_rows):
    points = read_points(args.input)
    if args.grid_ints:
        points = to_grid_ints(points)
    if args.structure not in STRUCTURES:
        raise UnknownStructure(f"unknown structure {args.structure!r}; expected one of {STRUCTURES}")
    if args.mode not in MODES:
        raise UnknownMode(f"unknown mode {args.mode!r}; expected one of {MODES}")
    driver = make_structure(args.structure, args.kernel)
    dist = args.dist_label or _stem(args.input)
    scale = max(1, args.scale)
    audit_failures = 0

    def row(n, batch, nanos, size):
        out_rows.append({"mode": args.mode, "structure": args.structure,
                         "kernel": args.kernel, "dist": dist, "n": n,
                         "batch": batch, "wall_nanos": nanos,
                         "ops_counter": driver.ops_counter(), "hull_size": size})

    if args.mode == "construct":
        batch = args.batch or max(1, FULL_SCALE_DEFAULTS["construct_batch"] // scale)
        i = 0
        while i < len(points):
            chunk = points[i:i + batch]
            t0 = time.perf_counter_ns()
            for p in chunk:
                driver.insert(p)
            driver.refresh()
            t1 = time.perf_counter_ns()
            i += len(chunk)
            row(i, len(chunk), t1 - t0, driver.hull_size())

    elif args.mode == "extend":
        ext = args.batch or max(1, FULL_SCALE_DEFAULTS["extend"] // scale)
        ext = min(ext, max(1, len(points) // 2))
        base = points[:-ext] if ext < len(points) else []
        for p in base:
            driver.insert(p)
        driver.refresh()
        tail = points[len(base):]
        t0 = time.perf_counter_ns()
        for p in tail:
            driver.insert(p)
        driver.refresh()
        t1 = time.perf_counter_ns()
        row(len(points), len(tail), t1 - t0, driver.hull_size())

    elif args.mode == "update":
        batch = args.batch or max(2, FULL_SCALE_DEFAULTS["updates"] // scale)
        half = max(1, batch // 2)
        half = min(half, len(points) // 3 or 1)
        built = points[:len(points) - half]
        pool = points[len(points) - half:]
        for p in built:
            driver.insert(p)
        driver.refresh()
        rng = SplitMix64(args.seed)
        picks = []
        avail = list(built)
        for _ in range(half):
            picks.append(avail.pop(rng.next_u64() % len(avail)))
        ops = [("ins", p) for p in pool] + [("del", p) for p in picks]
        for i in range(len(ops) - 1, 0, -1):
            j = rng.next_u64() % (i + 1)
            ops[i], ops[j] = ops[j], ops[i]
        t0 = time.perf_counter_ns()
        for kind, p in ops:
            if kind == "ins":
                driver.insert(p)
            else:
                driver.delete(p)
        driver.refresh()
        t1 = time.perf_counter_ns()
        row(len(points) - half + len(pool) - half, len(ops), t1 - t0, driver.hull_size())

    else:  # query
        count = args.batch or max(1, FULL_SCALE_DEFAULTS["queries"] // scale)
        for p in points:
            driver.insert(p)
        driver.refresh()
        queries = _query_points(driver, points, count, args.seed)
        t0 = time.perf_counter_ns()
        answers = [driver.query(q) for q in queries]
        t1 = time.perf_counter_ns()
        stride = max(1, count // max(1, count // 100))
        for i in range(0, count, stride):
            if answers[i] != _naive_member(driver, points, queries[i]):
                audit_failures += 1
        if audit_failures:
            print(f"warning: query audit found {audit_failures} divergences "
                  f"from the naive oracle", file=sys.stderr)
        row(len(points), count, t1 - t0, driver.hull_size())

    return audit_failures


# -- verify -------------------------------------------------------------------


def _parse_script(path, rank):
    ops = []
    with open(path) as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            kind = parts[0]
            try:
                if kind in ("ins", "del"):
                    want = 2 if rank else 3
                    if len(parts) != want:
                        raise ValueError(f"expected {want - 1} coordinates")
                    coords = [parse_coordinate(t) for t in parts[1:]]
                elif kind == "q":
                    if len(parts) != 3:
                        raise ValueError("expected 2 coordinates")
                    coords = [parse_coordinate(t) for t in parts[1:]]
                else:
                    raise ValueError(f"unknown op {kind!r}")
            except (ValueError, ZeroDivisionError) as exc:
                raise ScriptParseError(str(exc), line_no) from None
            ops.append((line_no, kind, coords))
    return ops


def run_verify(args):
    """Replay the script on the structure and the oracle together.

    Prints PASS/FAIL; returns 0 on agreement, 1 with the op index on the
    first divergence (structure errors count as divergences).
    """
    if args.structure not in STRUCTURES:
        raise UnknownStructure(f"unknown structure {args.structure!r}")
    rank = args.structure.startswith("rank-")
    driver = make_structure(args.structure, args.kernel)
    points = read_points(args.input) if args.input else []
    if args.grid_ints:
        points = to_grid_ints(points)
    ops = _parse_script(args.script, rank)
    mirror = []
    for p in points:
        driver.insert(p)
        mirror.append(p[1] if rank else p)
    driver.refresh()

    def mirror_points():
        if rank:
            return [Point(i, v) for i, v in enumerate(sorted(mirror))]
        return mirror

    def fail(idx, line_no, reason):
        print(f"FAIL at op {idx} (line {line_no}): {reason}")
        return 1

    for idx, (line_no, kind, coords) in enumerate(ops):
        item = coords[0] if rank else Point(coords[0], coords[1])
        try:
            if kind == "ins":
                if item in mirror:
                    return fail(idx, line_no, f"insert of already-present {item!r}")
                driver.insert(Point(0, item) if rank else item)
            elif kind == "del":
                if item not in mirror:
                    return fail(idx, line_no, f"delete of absent {item!r}")
                driver.delete(Point(0, item) if rank else item)
            else:
                q = Point(coords[0], coords[1])
                got = driver.query(q)
                want = oracle.naive_point_in_hull(mirror_points(), q)
                if got != want:
                    return fail(idx, line_no, f"query {q} -> {got}, oracle says {want}")
                continue
        except DynHullError as exc:
            return fail(idx, line_no, f"structure error: {exc}")
        if kind == "ins":
            mirror.append(item)
        else:
            mirror.remove(item)
        driver.refresh()
        up, lo = oracle.static_hull(mirror_points())
        if driver.hull_edges() != up + lo:
            return fail(idx, line_no, "hull diverges from the static oracle")
    print(f"PASS: {len(ops)} ops verified against the oracle")
    return 0


# -- entry points -------------------------------------------------------------


def _stem(path):
    name = str(path).rsplit("/", 1)[-1]
    return name.rsplit(".", 1)[0]


def cmd_generate(args):
    dist = Distribution(kind=args.dist, seed=args.seed, side=args.side,
                        radius=args.radius, sigma=args.sigma)
    write_points(args.out, generate(dist, args.n))
    return 0


def cmd_bench(args):
    rows = []
    audit_failures = run_bench(args, rows)
    if args.out:
        fh, writer = _open_csv(args.out)
        with fh:
            for r in rows:
                writer.writerow(r)
    else:
        w = csv.DictWriter(sys.stdout, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow(r)
    if audit_failures and args.strict_audit:
        return 2
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="dynhull-bench", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a .pts point file")
    g.add_argument("--dist", required=True, choices=Distribution.KINDS)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)
    g.add_argument("--side", type=float, default=2000.0)
    g.add_argument("--radius", type=float, default=1000.0)
    g.add_argument("--sigma", type=float, default=1000.0 / 3.0)
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("bench", help="run one benchmark mode, emit CSV rows")
    b.add_argument("--mode", required=True, choices=MODES)
    b.add_argument("--structure", required=True, choices=STRUCTURES)
    b.add_argument("--kernel", default="exact", choices=("exact", "inexact"))
    b.add_argument("--input", required=True, help="a .pts file")
    b.add_argument("--out", default=None, help="CSV path (appended); stdout if omitted")
    b.add_argument("--batch", type=int, default=None,
                   help="batch size / extension size / query count (mode dependent)")
    b.add_argument("--scale", type=int, default=1,
                   help="divide the full-scale defaults by this factor")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--dist-label", default=None)
    b.add_argument("--grid-ints", action="store_true",
                   help="scale dyadic inputs to integers (exact homothety; faster)")
    b.add_argument("--strict-audit", action="store_true",
                   help="exit 2 when the query audit diverges from the oracle")
    b.set_defaults(func=cmd_bench)

    v = sub.add_parser("verify", help="replay an ops script against the oracle")
    v.add_argument("--structure", required=True, choices=STRUCTURES)
    v.add_argument("--kernel", default="exact", choices=("exact", "inexact"))
    v.add_argument("--input", default=None, help="initial .pts file (optional)")
    v.add_argument("--script", required=True, help="ops script path")
    v.add_argument("--grid-ints", action="store_true")
    v.set_defaults(func=run_verify)

    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DynHullError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

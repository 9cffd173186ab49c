"""Deterministic generators for the four benchmark point distributions,
plus the plain-text point file format.

PRNG: splitmix64.  State update and output, on 64-bit unsigned integers:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9   mod 2^64
    z = (z XOR (z >> 27)) * 0x94D049BB133111EB   mod 2^64
    output = z XOR (z >> 31)

Uniform doubles in [0, 1) take the top 53 bits: output >> 11, times 2^-53.
Any implementation of these equations reproduces the same point streams.

Coordinates are generated in floating point, snapped to the dyadic grid of
resolution 2^-20 (round half to even), and stored as exact rationals, so
the exact and the floating-point kernels consume identical inputs.
Distributions:

  uniform   both coordinates uniform over a square (default side 2000,
            centred on the origin)
  disk      uniform over the bounding square, rejected unless the snapped
            point satisfies x^2 + y^2 <= radius^2 (default radius 1000)
  bell      independent normal coordinates (Box-Muller; default
            sigma = 1000/3)
  circle    points on the circle of the given radius; after snapping they
            satisfy |x^2 + y^2 - radius^2| <= 1.5 * radius * 2^-20

Duplicate points are regenerated, so a sample of size n has n distinct
points and identical (kind, params, seed, n) always yields the identical
list.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .kernel import Point

GRID_BITS = 20
GRID = 1 << GRID_BITS

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator; see the module docstring for equations."""

    __slots__ = ("state",)

    def __init__(self, seed):
        self.state = seed & _MASK64

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self):
        return (self.next_u64() >> 11) * (2.0 ** -53)


def snap(v):
    """Snap a float to the dyadic grid, returned as an exact Fraction."""
    return Fraction(round(v * GRID), GRID)


@dataclass(frozen=True)
class Distribution:
    """A named point distribution with its parameters and seed."""

    kind: str  # uniform | disk | bell | circle
    seed: int = 0
    side: float = 2000.0
    radius: float = 1000.0
    sigma: float = 1000.0 / 3.0

    KINDS = ("uniform", "disk", "bell", "circle")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown distribution {self.kind!r}; expected one of {self.KINDS}")


def _gauss_pairs(rng):
    while True:
        u1 = rng.next_float()
        u2 = rng.next_float()
        if u1 <= 0.0:
            continue
        r = math.sqrt(-2.0 * math.log(u1))
        yield r * math.cos(2.0 * math.pi * u2)
        yield r * math.sin(2.0 * math.pi * u2)


def _generate_snapped(dist, n, to_grid):
    """Shared generator body; ``to_grid`` maps a raw float to its snapped
    representation (Fraction for generate, scaled int for generate_ints).
    Both representations are in exact bijection, so the accept/dedup
    decisions and hence the emitted sequences correspond one to one."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = SplitMix64(dist.seed)
    out = []
    seen = set()
    kind = dist.kind
    if kind == "disk":
        # radius test on the snapped values, exact in either representation
        r2 = Fraction(dist.radius) ** 2 * (GRID * GRID if to_grid is not snap else 1)
    gauss = _gauss_pairs(rng) if kind == "bell" else None
    while len(out) < n:
        if kind == "uniform":
            side = dist.side
            p = Point(to_grid((rng.next_float() - 0.5) * side),
                      to_grid((rng.next_float() - 0.5) * side))
        elif kind == "disk":
            r = dist.radius
            p = Point(to_grid((rng.next_float() * 2.0 - 1.0) * r),
                      to_grid((rng.next_float() * 2.0 - 1.0) * r))
            if p.x * p.x + p.y * p.y > r2:
                continue
        elif kind == "bell":
            p = Point(to_grid(next(gauss) * dist.sigma),
                      to_grid(next(gauss) * dist.sigma))
        else:  # circle
            theta = rng.next_float() * 2.0 * math.pi
            r = dist.radius
            p = Point(to_grid(r * math.cos(theta)), to_grid(r * math.sin(theta)))
        if p in seen:
            continue
        seen.add(p)
        out.append(p)
    return out


def generate(dist, n):
    """n distinct snapped points drawn from ``dist``; deterministic."""
    return _generate_snapped(dist, n, snap)


def _snap_int(v):
    return round(v * GRID)


def generate_ints(dist, n):
    """The identical point sequence as generate, pre-scaled by 2^GRID_BITS
    into integer coordinates (generate_ints(d, n) == to_grid_ints(
    generate(d, n)), computed without Fraction overhead)."""
    return _generate_snapped(dist, n, _snap_int)


def to_grid_ints(points, bits=GRID_BITS):
    """Scale grid-snapped points by 2^bits into integer coordinates.

    An exact homothety: hulls, bridges and membership answers of the scaled
    set correspond one-to-one to the original.  The integer form is what the
    heavy test and benchmark runs feed the exact kernel, since Python
    integer arithmetic is much faster than Fraction arithmetic.
    """
    scale = 1 << bits
    out = []
    for p in points:
        x = p.x * scale
        y = p.y * scale
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{p!r} is not on the 2^-{bits} grid")
            x = x.numerator
        if isinstance(y, Fraction):
            if y.denominator != 1:
                raise ValueError(f"{p!r} is not on the 2^-{bits} grid")
            y = y.numerator
        out.append(Point(int(x), int(y)))
    return out


# -- point file format -------------------------------------------------------
#
# One point per line: "x y", whitespace separated.  Coordinates are exact
# decimal strings (every dyadic rational has a finite decimal expansion);
# non-dyadic rationals are written as "p/q".  Blank lines are ignored.


def _format_coord(c):
    if isinstance(c, int):
        return str(c)
    if isinstance(c, float):
        c = Fraction(c)
    if not isinstance(c, Fraction):
        c = Fraction(c)
    den = c.denominator
    if den == 1:
        return str(c.numerator)
    k = den.bit_length() - 1
    if den == 1 << k:
        # dyadic: n / 2^k == n * 5^k / 10^k, an exact k-digit decimal
        digits = abs(c.numerator) * 5 ** k
        s = str(digits).rjust(k + 1, "0")
        whole, frac = s[:-k], s[-k:]
        frac = frac.rstrip("0") or "0"
        sign = "-" if c.numerator < 0 else ""
        return f"{sign}{whole}.{frac}"
    return f"{c.numerator}/{c.denominator}"


def parse_coordinate(tok):
    """Exact inverse of the coordinate format (also accepts plain floats)."""
    if "/" in tok:
        num, den = tok.split("/", 1)
        return Fraction(int(num), int(den))
    if "." in tok or "e" in tok or "E" in tok:
        f = Fraction(tok)
        return f.numerator if f.denominator == 1 else f
    return int(tok)


def write_points(path, points):
    """Write points one per line; lossless round trip with read_points."""
    with open(path, "w") as fh:
        for p in points:
            fh.write(f"{_format_coord(p[0])} {_format_coord(p[1])}\n")


def read_points(path):
    """Read a point file; ParseError carries the 1-based line number."""
    out = []
    with open(path) as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"expected 'x y', got {line!r}", line_no)
            try:
                x = parse_coordinate(parts[0])
                y = parse_coordinate(parts[1])
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad coordinate in {line!r}: {exc}", line_no) from None
            out.append(Point(x, y))
    return out

"""Numeric kernels and exact geometric sign predicates.

Every comparison made by the hull structures goes through a kernel object, so
exact (arbitrary-precision rational) and inexact (hardware floating point)
arithmetic are interchangeable.  The exact kernel accepts ``int``,
``fractions.Fraction`` and ``float`` coordinates; floats are converted to
their exact binary value once, at the structure boundary, and all predicates
are then evaluated with ring operations only (no division).

Degeneracy convention
---------------------
Points are ordered lexicographically by ``(x, y)``.  Geometrically this is
the limit of shearing the plane by ``x -> x + eps*y`` for an infinitesimal
``eps > 0``: no two distinct points share an abscissa, a vertical segment
behaves like a segment of slope "+infinity", and orientation signs are
unchanged (a shear preserves cross products).  Under this convention the
upper chain of a point set may start with a vertical edge and the lower
chain may end with one, exactly as a monotone-chain sweep over
lexicographically sorted points produces, and slope ties that the shear
would break cancel out of the cross-multiplied comparisons, so no epsilon
ever needs to be represented.

Kernel predicates are pure functions and safe to call from any number of
threads.
"""

from fractions import Fraction
from math import isfinite
from typing import NamedTuple

from .errors import DegenerateSegment, ParallelLines

LEFT_TURN = 1
COLLINEAR = 0
RIGHT_TURN = -1

ON_OR_LEFT = "on_or_left"
RIGHT = "right"


class Point(NamedTuple):
    """A planar point.  Tuples compare lexicographically, which is exactly
    the (x, y) order the structures need."""

    x: object
    y: object


class HullEdge(NamedTuple):
    """A directed hull segment with ``left`` lexicographically before
    ``right``.  The degenerate edge (p, p) only appears as a leaf bridge."""

    left: Point
    right: Point

    def reversed(self):
        return HullEdge(self.right, self.left)


def as_point(p):
    """Coerce a Point or (x, y) pair to a Point."""
    if type(p) is Point:
        return p
    x, y = p
    return Point(x, y)


def _sign(v):
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def exact_coordinate(c):
    """Return ``c`` as an exact rational (int where possible).

    Floats are converted to their exact binary value, so a dyadic input like
    ``3.25`` round-trips with no error.  Non-finite floats are rejected.
    """
    if isinstance(c, int):
        return c
    if isinstance(c, float):
        if not isfinite(c):
            raise ValueError(f"non-finite coordinate: {c!r}")
        c = Fraction(c)
    elif not isinstance(c, Fraction):
        c = Fraction(c)
    if c.denominator == 1:
        return c.numerator
    return c


class _KernelBase:
    """Shared predicate formulas.  Subclasses fix the coordinate type by
    overriding :meth:`prepare_point`; the formulas themselves are plain
    ``+ - *`` and comparisons on whatever the prepared coordinates are."""

    name = "abstract"

    def prepare_point(self, p):
        raise NotImplementedError

    def prepare_value(self, c):
        raise NotImplementedError

    # -- sign predicates -------------------------------------------------

    def orientation(self, p, q, r):
        """Sign of the cross product (q - p) x (r - p).

        LEFT_TURN (+1) when p->q->r turns counter-clockwise, COLLINEAR (0),
        RIGHT_TURN (-1) when it turns clockwise.
        """
        return _sign((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]))

    def slope_compare(self, s1, s2):
        """Compare the slopes of two segments: -1, 0 or +1.

        Segments are (left, right) pairs with left lexicographically before
        right.  A vertical segment (equal x, rising y) compares as slope
        +infinity, per the shear convention.  A zero-extent segment raises
        DegenerateSegment.
        """
        l1, r1 = s1
        l2, r2 = s2
        return self._slope_cmp_d(r1[0] - l1[0], r1[1] - l1[1], r2[0] - l2[0], r2[1] - l2[1])

    def _slope_cmp_d(self, dx1, dy1, dx2, dy2):
        # dx >= 0 for lexicographically oriented segments.
        if dx1 == 0:
            if dy1 == 0:
                raise DegenerateSegment("zero-extent segment in slope comparison")
            if dx2 == 0:
                if dy2 == 0:
                    raise DegenerateSegment("zero-extent segment in slope comparison")
                return 0
            return 1
        if dx2 == 0:
            if dy2 == 0:
                raise DegenerateSegment("zero-extent segment in slope comparison")
            return -1
        return _sign(dy1 * dx2 - dy2 * dx1)

    def intersection_side(self, alpha, beta, m):
        """Locate the supporting-line intersection of ``alpha`` and ``beta``
        relative to the vertical separator through ``m``.

        ``m`` may be a bare x-coordinate or a Point; with a Point the
        exact-tie case (intersection abscissa equal to ``m.x``) is broken by
        the sheared order, i.e. by comparing ordinates.  An exact tie counts
        as ON_OR_LEFT.  Note that the bridge search branches on the *strict*
        form of this test: the boundary case belongs to the other branch,
        which is what keeps maximal bridges maximal when the intersection
        lands exactly on the separator.  Raises ParallelLines when the
        slopes are equal.
        """
        if isinstance(m, (Point, tuple)):
            s = self._gamma_side(alpha[0], alpha[1], beta[0], beta[1], m[0], m[1])
        else:
            s = self._gamma_side(alpha[0], alpha[1], beta[0], beta[1], m, None)
        return ON_OR_LEFT if s <= 0 else RIGHT

    def _gamma_side(self, a1, a2, b1, b2, mx, my):
        """Sign of the sheared abscissa of gamma minus that of m, where
        gamma is the supporting-line intersection of segments a1a2, b1b2.

        Division-free: gamma.x - mx has the sign of Nx * D; an exact
        abscissa tie falls through to the ordinate comparison (the sheared
        order), and 0 is returned only when gamma coincides with m (always,
        if ``my`` is None and the abscissae tie).
        """
        dax = a2[0] - a1[0]
        day = a2[1] - a1[1]
        dbx = b2[0] - b1[0]
        dby = b2[1] - b1[1]
        d = dax * dby - day * dbx
        if d == 0:
            raise ParallelLines("supporting lines are parallel")
        c = (b1[0] - a1[0]) * dby - (b1[1] - a1[1]) * dbx
        nx = (a1[0] - mx) * d + dax * c
        t = nx if d > 0 else -nx
        if t < 0:
            return -1
        if t > 0:
            return 1
        if my is None:
            return 0
        ny = (a1[1] - my) * d + day * c
        t = ny if d > 0 else -ny
        if t < 0:
            return -1
        if t > 0:
            return 1
        return 0

    def point_below_or_on_line(self, q, e):
        """True iff ``q`` lies on or below the supporting line of edge ``e``
        (``below`` in the sheared sense: not a left turn)."""
        return self.orientation(e[0], e[1], q) <= 0

    def point_above_or_on_line(self, q, e):
        return self.orientation(e[0], e[1], q) >= 0


class ExactKernel(_KernelBase):
    """Error-free predicates over arbitrary-precision rationals."""

    name = "exact"

    def prepare_point(self, p):
        x, y = p
        return Point(exact_coordinate(x), exact_coordinate(y))

    def prepare_value(self, c):
        return exact_coordinate(c)


class InexactKernel(_KernelBase):
    """Direct floating-point evaluation; fast, with no correctness guarantee.

    Points are stored as floats, so every predicate is evaluated in double
    precision.  Near-degenerate inputs (long thin triangles, almost-equal
    slopes) can and do produce wrong signs; see the robustness tests.
    """

    name = "inexact"

    def prepare_point(self, p):
        x, y = p
        return Point(float(x), float(y))

    def prepare_value(self, c):
        return float(c)


EXACT = ExactKernel()
INEXACT = InexactKernel()

_KERNELS = {"exact": EXACT, "inexact": INEXACT}


def get_kernel(spec):
    """Resolve a kernel object from an instance or the names 'exact'/'inexact'."""
    if isinstance(spec, _KernelBase):
        return spec
    try:
        return _KERNELS[spec]
    except KeyError:
        raise ValueError(f"unknown kernel {spec!r}; expected 'exact' or 'inexact'") from None

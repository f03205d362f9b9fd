"""Exact convex lattice polygons.

Points are plain integer pairs; polygons store their extreme points in
counter-clockwise order.  Nothing here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, NamedTuple

from .errors import (
    CoordinateRangeError,
    EmptyInput,
    InvalidShoeParameters,
    LatticeOverflow,
    NotUnimodular,
)

COORD_BOUND = 10**6
_INT64_MAX = 2**63 - 1


class Point(NamedTuple):
    x: int
    y: int


def checked(value: int) -> int:
    """Return ``value`` unchanged if it fits in a signed 64-bit integer."""
    if -_INT64_MAX - 1 <= value <= _INT64_MAX:
        return value
    raise LatticeOverflow(f"intermediate value {value} exceeds 64-bit range")


def cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _as_point(p) -> Point:
    if type(p) is Point and type(p.x) is int and type(p.y) is int \
            and abs(p.x) <= COORD_BOUND and abs(p.y) <= COORD_BOUND:
        return p
    x, y = p
    if isinstance(x, bool) or isinstance(y, bool) or int(x) != x or int(y) != y:
        raise TypeError(f"lattice point needs integer coordinates, got {p!r}")
    x, y = int(x), int(y)
    if abs(x) > COORD_BOUND or abs(y) > COORD_BOUND:
        raise CoordinateRangeError(f"point {(x, y)} outside |coord| <= {COORD_BOUND}")
    return Point(x, y)


@dataclass(frozen=True)
class LatticePolygon:
    """Convex hull of finitely many lattice points.

    ``vertices`` holds the extreme points, counter-clockwise.  One vertex
    means a point polygon, two a segment.  Use :func:`convex_hull` to build
    one from arbitrary points; the constructor only validates.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple(_as_point(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise EmptyInput("polygon needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise ValueError("vertices must be pairwise distinct")
        k = len(verts)
        if k >= 3:
            for i in range(k):
                if cross(verts[i - 1], verts[i], verts[(i + 1) % k]) <= 0:
                    raise ValueError("vertices are not in strict convex CCW position")

    @property
    def dim(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def bbox(self):
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def edges(self):
        """Consecutive vertex pairs (CCW); empty for points and segments."""
        if self.dim < 2:
            return []
        k = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)]

    def translate(self, dx: int, dy: int) -> "LatticePolygon":
        return LatticePolygon(tuple(Point(v.x + dx, v.y + dy) for v in self.vertices))

    def as_lists(self):
        return [[v.x, v.y] for v in self.vertices]


def convex_hull(points: Iterable) -> LatticePolygon:
    """Extreme points of a finite point set, CCW, starting at the lexicographic minimum."""
    pts = sorted({_as_point(p) for p in points})
    if not pts:
        raise EmptyInput("convex hull of an empty point set")
    if len(pts) <= 2:
        return LatticePolygon(tuple(pts))
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return LatticePolygon(tuple(hull))


def double_area(poly: LatticePolygon) -> int:
    """Twice the Euclidean area (shoelace); an integer for lattice polygons."""
    if poly.dim < 2:
        return 0
    return sum(v.x * w.y - w.x * v.y for v, w in poly.edges())


def boundary_count(poly: LatticePolygon) -> int:
    if poly.dim == 0:
        return 1
    if poly.dim == 1:
        v, w = poly.vertices
        return gcd(w.x - v.x, w.y - v.y) + 1
    return sum(gcd(w.x - v.x, w.y - v.y) for v, w in poly.edges())


def _floor_div(p: int, q: int) -> int:
    return p // q


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def _row_range(poly: LatticePolygon, y: int, strict: bool):
    """Integer x-range [lo, hi] of points at height ``y`` inside ``poly``.

    Each CCW edge v->w gives a half-plane cross(w-v, p-v) > 0 (or >= 0),
    which is linear in x at fixed y.
    """
    lo, hi = None, None
    for v, w in poly.edges():
        dx, dy = w.x - v.x, w.y - v.y
        a = -dy
        c = dx * (y - v.y) + dy * v.x
        if a == 0:
            if (c > 0) if strict else (c >= 0):
                continue
            return None
        if a > 0:
            bound = _floor_div(-c, a) + 1 if strict else _ceil_div(-c, a)
            lo = bound if lo is None else max(lo, bound)
        else:
            bound = _ceil_div(c, -a) - 1 if strict else _floor_div(c, -a)
            hi = bound if hi is None else min(hi, bound)
    if lo is None or hi is None or lo > hi:
        return None
    return lo, hi


def _segment_points(v: Point, w: Point) -> list[Point]:
    g = gcd(w.x - v.x, w.y - v.y)
    if g == 0:
        return [v]
    sx, sy = (w.x - v.x) // g, (w.y - v.y) // g
    return [Point(v.x + k * sx, v.y + k * sy) for k in range(g + 1)]


def lattice_points(poly: LatticePolygon) -> set[Point]:
    """All lattice points of ``poly``, boundary included."""
    if poly.dim == 0:
        return {poly.vertices[0]}
    if poly.dim == 1:
        return set(_segment_points(*poly.vertices))
    _, y0, _, y1 = poly.bbox()
    out = set()
    for y in range(y0, y1 + 1):
        r = _row_range(poly, y, strict=False)
        if r:
            out.update(Point(x, y) for x in range(r[0], r[1] + 1))
    return out


@lru_cache(maxsize=8192)
def _interior_rows(poly: LatticePolygon) -> tuple[tuple[int, int, int], ...]:
    if poly.dim < 2:
        return ()
    _, y0, _, y1 = poly.bbox()
    rows = []
    for y in range(y0 + 1, y1):
        r = _row_range(poly, y, strict=True)
        if r:
            rows.append((y, r[0], r[1]))
    return tuple(rows)


def interior_points(poly: LatticePolygon) -> set[Point]:
    """Lattice points strictly inside ``poly``; empty unless dim == 2."""
    return {Point(x, y) for y, lo, hi in _interior_rows(poly) for x in range(lo, hi + 1)}


def interior_count(poly: LatticePolygon) -> int:
    return sum(hi - lo + 1 for _, lo, hi in _interior_rows(poly))


@lru_cache(maxsize=8192)
def adjoint(poly: LatticePolygon) -> LatticePolygon | None:
    """Hull of the interior lattice points, or None if there are none."""
    rows = _interior_rows(poly)
    if not rows:
        return None
    # row endpoints carry every extreme point
    return convex_hull([Point(lo, y) for y, lo, _ in rows] + [Point(hi, y) for y, _, hi in rows])


# ---------------------------------------------------------------------------
# lattice equivalence


@dataclass(frozen=True)
class UnimodularAffineMap:
    """x -> A x + t with A = [[a, b], [c, d]] in GL2(Z)."""

    a: int
    b: int
    c: int
    d: int
    tx: int = 0
    ty: int = 0

    def __post_init__(self):
        if abs(self.det) != 1:
            raise NotUnimodular(f"det {self.det} is not +-1")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def __call__(self, p) -> Point:
        x, y = p
        return Point(
            checked(self.a * x + self.b * y + self.tx),
            checked(self.c * x + self.d * y + self.ty),
        )

    def apply(self, poly: LatticePolygon) -> LatticePolygon:
        return convex_hull(self(v) for v in poly.vertices)

    def compose(self, other: "UnimodularAffineMap") -> "UnimodularAffineMap":
        """self ∘ other."""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        tx, ty = self(Point(other.tx, other.ty))
        return UnimodularAffineMap(a, b, c, d, tx, ty)

    def inverse(self) -> "UnimodularAffineMap":
        det = self.det
        a, b, c, d = self.d * det, -self.b * det, -self.c * det, self.a * det
        tx = -(a * self.tx + b * self.ty)
        ty = -(c * self.tx + d * self.ty)
        return UnimodularAffineMap(a, b, c, d, tx, ty)

    def transform_covector(self, h):
        """Pull a covector back along the linear part: h ∘ A^-1."""
        m, n = h
        inv = self.inverse()
        return (m * inv.a + n * inv.c, m * inv.b + n * inv.d)


def ext_gcd(a: int, b: int):
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _frame(origin: Point, toward: Point, other: Point | None) -> UnimodularAffineMap:
    """Map sending origin to 0, the edge origin->toward onto the positive x-axis,
    and ``other`` into the strip 0 <= x < y."""
    ex, ey = toward.x - origin.x, toward.y - origin.y
    g = gcd(ex, ey)
    p, q = ex // g, ey // g
    _, s, t = ext_gcd(p, q)
    a, b, c, d = s, t, -q, p
    if other is not None:
        ox, oy = other.x - origin.x, other.y - origin.y
        ux, uy = a * ox + b * oy, c * ox + d * oy
        if uy < 0:
            c, d, uy = -c, -d, -uy
        k = -(ux // uy)
        a, b = a + k * c, b + k * d
    tx = -(a * origin.x + b * origin.y)
    ty = -(c * origin.x + d * origin.y)
    return UnimodularAffineMap(a, b, c, d, tx, ty)


def normalize(poly: LatticePolygon) -> tuple[LatticePolygon, UnimodularAffineMap]:
    """Canonical representative of the lattice-equivalence class of ``poly``.

    Returns ``(canon, phi)`` with ``phi.apply(poly) == canon``.  Every
    (vertex, incident edge) pair defines a frame; the frame giving the
    lexicographically smallest sorted vertex list wins.
    """
    verts = poly.vertices
    if poly.dim == 0:
        v = verts[0]
        phi = UnimodularAffineMap(1, 0, 0, 1, -v.x, -v.y)
        return phi.apply(poly), phi
    if poly.dim == 1:
        phi = _frame(verts[0], verts[1], None)
        return phi.apply(poly), phi
    best_key, best_phi = None, None
    k = len(verts)
    for i in range(k):
        for step in (1, -1):
            phi = _frame(verts[i], verts[(i + step) % k], verts[(i - step) % k])
            key = tuple(sorted(phi(v) for v in verts))
            if best_key is None or key < best_key:
                best_key, best_phi = key, phi
    return convex_hull(best_key), best_phi


def equivalent(p: LatticePolygon, q: LatticePolygon) -> bool:
    return normalize(p)[0] == normalize(q)[0]


# ---------------------------------------------------------------------------
# shapes


def shoe(l: int, m: int, n: int) -> LatticePolygon:
    """ConvexHull((0,0), (0,l), (m,l), (m+n,0))."""
    if min(l, m, n) < 0 or (l, m, n) == (0, 0, 0):
        raise InvalidShoeParameters(f"shoe parameters {(l, m, n)} must be >= 0, not all zero")
    return convex_hull([(0, 0), (0, l), (m, l), (m + n, 0)])


def is_standard_triangle(poly: LatticePolygon) -> int | None:
    """Side length l if poly is equivalent to shoe(l, 0, l), else None."""
    if len(poly.vertices) != 3:
        return None
    b = boundary_count(poly)
    if b % 3:
        return None
    l = b // 3
    return l if equivalent(poly, shoe(l, 0, l)) else None


def is_thin_triangle(poly: LatticePolygon) -> int | None:
    """l > 1 if poly is equivalent to shoe(1, 0, l), else None."""
    if len(poly.vertices) != 3:
        return None
    l = double_area(poly)
    if l <= 1:
        return None
    return l if equivalent(poly, shoe(1, 0, l)) else None


def is_minimal(poly: LatticePolygon) -> bool:
    """Not a point, and at most one interior lattice point."""
    if poly.dim == 0:
        return False
    return interior_count(poly) <= 1


def from_unit_triangle(l: int) -> LatticePolygon:
    """The standard triangle of side ``l`` (l times the unit simplex)."""
    return shoe(l, 0, l)

"""Lattice width and optimal directions of convex lattice polygons.

Two independent routes produce a :class:`WidthReport`:

* :func:`solve_bruteforce` enumerates every primitive direction inside a
  box that provably contains all optimal ones;
* :func:`solve` walks down the chain of adjoint polygons and only calls
  the enumeration on the final, minimal polygon.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd

import numpy as np

from .errors import DegeneratePolygon, NoAdjoint, ZeroDirection
from .polygon import (
    LatticePolygon,
    Point,
    adjoint,
    checked,
    is_minimal,
    is_standard_triangle,
    is_thin_triangle,
)


class Viewangle(tuple):
    """Sign-canonical covector (m, n): m > 0, or m == 0 and n > 0."""

    __slots__ = ()

    def __new__(cls, m: int, n: int):
        m, n = int(m), int(n)
        if m == 0 and n == 0:
            raise ZeroDirection("viewangle must be nonzero")
        if m < 0 or (m == 0 and n < 0):
            m, n = -m, -n
        return super().__new__(cls, (m, n))

    @property
    def m(self) -> int:
        return self[0]

    @property
    def n(self) -> int:
        return self[1]

    @property
    def primitive(self) -> bool:
        return gcd(self[0], self[1]) == 1

    def __repr__(self):
        return f"Viewangle({self[0]}, {self[1]})"


def annihilator(v, w) -> Viewangle:
    """Primitive direction constant along the segment v -> w."""
    dx, dy = w[0] - v[0], w[1] - v[1]
    g = gcd(dx, dy)
    return Viewangle(-dy // g, dx // g)


class CaseLabel(str, enum.Enum):
    A0 = "A0"
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    A4 = "A4"


@dataclass(frozen=True)
class WidthReport:
    width: int
    optimal: tuple[Viewangle, ...]
    trace: tuple[tuple[LatticePolygon, CaseLabel], ...] = field(default=(), compare=False)
    finite: bool = True

    def __post_init__(self):
        object.__setattr__(self, "optimal", tuple(sorted(Viewangle(*h) for h in self.optimal)))


def _values(poly: LatticePolygon, h) -> list[int]:
    m, n = h
    if m == 0 and n == 0:
        raise ZeroDirection("viewangle must be nonzero")
    return [checked(m * v.x + n * v.y) for v in poly.vertices]


def width_of(poly: LatticePolygon, h) -> int:
    """max h - min h over the polygon (the vertices suffice)."""
    vals = _values(poly, h)
    return checked(max(vals) - min(vals))


def _adjoint_or_raise(poly):
    inner = adjoint(poly)
    if inner is None:
        raise NoAdjoint("polygon has no interior lattice points")
    return inner


def is_max_tight(poly, h, inner=None) -> bool:
    inner = inner or _adjoint_or_raise(poly)
    return max(_values(poly, h)) == max(_values(inner, h)) + 1


def is_min_tight(poly, h, inner=None) -> bool:
    inner = inner or _adjoint_or_raise(poly)
    return min(_values(poly, h)) == min(_values(inner, h)) - 1


def is_tight(poly, h, inner=None) -> bool:
    inner = inner or _adjoint_or_raise(poly)
    return is_max_tight(poly, h, inner) and is_min_tight(poly, h, inner)


def is_max_edge(poly, h) -> bool:
    vals = _values(poly, h)
    return vals.count(max(vals)) >= 2


def is_min_edge(poly, h) -> bool:
    vals = _values(poly, h)
    return vals.count(min(vals)) >= 2


def is_edge(poly, h) -> bool:
    return is_max_edge(poly, h) and is_min_edge(poly, h)


def classify_case(poly: LatticePolygon) -> CaseLabel:
    """Case label of ``poly`` relative to its adjoint.

    Points (which have no adjoint and are not minimal) are labelled A0 too.
    """
    if poly.dim == 0 or is_minimal(poly):
        return CaseLabel.A0
    inner = adjoint(poly)
    if is_standard_triangle(inner):
        return CaseLabel.A1 if is_standard_triangle(poly) else CaseLabel.A2
    return CaseLabel.A3 if is_minimal(inner) else CaseLabel.A4


# ---------------------------------------------------------------------------
# brute-force oracle


def _widest_pair(verts):
    """Two vertex differences with maximal |det|; fixes one endpoint for large inputs."""
    if len(verts) <= 40:
        triples = combinations(verts, 3)
    else:
        triples = ((verts[0], b, c) for b, c in combinations(verts[1:], 2))
    best = None
    for a, b, c in triples:
        d1 = (b[0] - a[0], b[1] - a[1])
        d2 = (c[0] - a[0], c[1] - a[1])
        det = abs(d1[0] * d2[1] - d1[1] * d2[0])
        if best is None or det > best[0]:
            best = (det, d1, d2)
    return best


def direction_bounds(poly: LatticePolygon) -> tuple[int, int]:
    """(M, N) with |m| <= M and |n| <= N for every optimal direction (m, n).

    For any vertex difference d, |h.d| <= width(h); an optimal h has
    width <= W0 = min(width(1,0), width(0,1)).  Inverting the 2x2 system
    for two independent differences bounds each coordinate.
    """
    w0 = min(width_of(poly, (1, 0)), width_of(poly, (0, 1)))
    det, d1, d2 = _widest_pair(poly.vertices)
    mb = w0 * (abs(d1[1]) + abs(d2[1])) // det
    nb = w0 * (abs(d1[0]) + abs(d2[0])) // det
    return mb, nb


def _degenerate_report(poly: LatticePolygon) -> WidthReport:
    if poly.dim == 0:
        raise DegeneratePolygon("a point has width 0 in every direction")
    h = annihilator(*poly.vertices)
    return WidthReport(0, (h,), ((poly, CaseLabel.A0),), finite=False)


def solve_bruteforce(poly: LatticePolygon) -> WidthReport:
    """Width and all optimal directions by exhaustive enumeration."""
    if poly.dim < 2:
        return _degenerate_report(poly)
    mb, nb = direction_bounds(poly)
    ms, ns = np.meshgrid(np.arange(0, mb + 1), np.arange(-nb, nb + 1), indexing="ij")
    ms, ns = ms.ravel(), ns.ravel()
    keep = ((ms > 0) | ((ms == 0) & (ns > 0))) & (np.gcd(ms, ns) == 1)
    H = np.stack([ms[keep], ns[keep]], axis=1).astype(np.int64)
    V = np.array(poly.vertices, dtype=np.int64)
    vals = H @ V.T
    widths = vals.max(axis=1) - vals.min(axis=1)
    best = int(widths.min())
    opt = tuple(Viewangle(int(m), int(n)) for m, n in H[widths == best])
    return WidthReport(best, opt, ((poly, CaseLabel.A0),))


# ---------------------------------------------------------------------------
# adjoint recursion


def _solve_chain(poly: LatticePolygon):
    if poly.dim < 2:
        rep = _degenerate_report(poly)
        return rep.width, set(rep.optimal), [(poly, CaseLabel.A0)], False
    label = classify_case(poly)
    if label is CaseLabel.A0:
        rep = solve_bruteforce(poly)
        return rep.width, set(rep.optimal), [(poly, label)], True

    inner = adjoint(poly)
    v_in, s_in, trace, _ = _solve_chain(inner)
    if label is CaseLabel.A1:
        opt = {annihilator(v, w) for v, w in poly.edges()}
        v = v_in + 3
    elif label is CaseLabel.A2:
        opt = {h for h in s_in if is_tight(poly, h, inner)}
        v = v_in + 2
    else:
        opt = set(s_in)
        v = v_in + 2
        if label is CaseLabel.A3 and is_thin_triangle(inner):
            assert all(is_tight(poly, h, inner) for h in opt)
    return v, opt, [(poly, label)] + trace, True


def solve(poly: LatticePolygon) -> WidthReport:
    """Width and optimal directions via the adjoint-polygon case recursion."""
    if poly.dim < 2:
        return _degenerate_report(poly)
    v, opt, trace, _ = _solve_chain(poly)
    return WidthReport(v, tuple(opt), tuple(trace))


def lattice_width(poly: LatticePolygon) -> int:
    return solve(poly).width

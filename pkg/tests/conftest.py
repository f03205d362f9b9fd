"""Shared strategies and naive reference implementations for the test suite.

The reference functions here are deliberately slow and written without
touching the package internals, so they can serve as independent oracles.
"""
import random
from itertools import combinations
from math import gcd

import pytest
from hypothesis import strategies as st

from latticewidth.polygon import convex_hull


def naive_cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def naive_inside(vertices, p, strict=False):
    """Point-in-convex-polygon by sign of every edge cross product (CCW order)."""
    k = len(vertices)
    for i in range(k):
        c = naive_cross(vertices[i], vertices[(i + 1) % k], p)
        if c < 0 or (strict and c == 0):
            return False
    return True


def naive_lattice_points(vertices, strict=False):
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    return {
        (x, y)
        for x in range(min(xs), max(xs) + 1)
        for y in range(min(ys), max(ys) + 1)
        if naive_inside(vertices, (x, y), strict)
    }


def naive_extreme_points(points):
    """Extreme points by the O(n^4) test: p is extreme iff it lies in no triangle of others
    and is not strictly between two others on a segment."""
    pts = sorted(set(map(tuple, points)))
    out = []
    for p in pts:
        others = [q for q in pts if q != p]
        covered = False
        for a, b, c in combinations(others, 3):
            d1, d2, d3 = naive_cross(a, b, p), naive_cross(b, c, p), naive_cross(c, a, p)
            neg = d1 < 0 or d2 < 0 or d3 < 0
            pos = d1 > 0 or d2 > 0 or d3 > 0
            if not (neg and pos) and naive_cross(a, b, c) != 0:
                covered = True
                break
        if not covered:
            for a, b in combinations(others, 2):
                if naive_cross(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]):
                    covered = True
                    break
        if not covered:
            out.append(p)
    return set(out)


def naive_width(vertices, bound=12):
    """(width, sign-canonical optimal set) by scanning a fixed box of directions."""
    best, opt = None, set()
    for m in range(0, bound + 1):
        for n in range(-bound, bound + 1):
            if (m, n) == (0, 0) or (m == 0 and n < 0) or gcd(m, n) != 1:
                continue
            vals = [m * x + n * y for x, y in vertices]
            w = max(vals) - min(vals)
            if best is None or w < best:
                best, opt = w, {(m, n)}
            elif w == best:
                opt.add((m, n))
    return best, opt


def random_points(rng, lo=0, hi=15, k=None):
    k = k or rng.randint(3, 9)
    return [(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(k)]


def random_polygon(rng, lo=0, hi=15):
    """A random two-dimensional polygon; box size and offset vary so small shapes appear."""
    while True:
        size = rng.randint(1, hi - lo)
        ox = rng.randint(lo, hi - size)
        oy = rng.randint(lo, hi - size)
        pts = random_points(rng, 0, size)
        poly = convex_hull([(x + ox, y + oy) for x, y in pts])
        if poly.dim == 2:
            return poly


coords = st.integers(min_value=-12, max_value=12)
point_lists = st.lists(st.tuples(coords, coords), min_size=3, max_size=10)


@st.composite
def polygons(draw, min_interior=0):
    pts = draw(point_lists)
    poly = convex_hull(pts)
    from hypothesis import assume

    from latticewidth.polygon import interior_count

    assume(poly.dim == 2)
    assume(interior_count(poly) >= min_interior)
    return poly


@st.composite
def unimodular(draw):
    """A random GL2(Z) matrix as a product of elementary moves, plus a translation."""
    from latticewidth.polygon import UnimodularAffineMap

    a, b, c, d = 1, 0, 0, 1
    for op, k in draw(st.lists(st.tuples(st.integers(0, 2), st.integers(-2, 2)), max_size=5)):
        if op == 0:
            a, b = a + k * c, b + k * d
        elif op == 1:
            c, d = c + k * a, d + k * b
        else:
            a, b, c, d = c, d, a, b
    tx, ty = draw(st.integers(-20, 20)), draw(st.integers(-20, 20))
    return UnimodularAffineMap(a, b, c, d, tx, ty)


@pytest.fixture
def rng():
    return random.Random(20240611)

"""Directions on a lattice polygon as fibrations of the associated toric surface.

A monomial embedding ``(s, t) -> (s^a_i t^b_i)_i`` and a primitive
direction ``(m, n)`` determine the fibration ``x -> prod x_i^e_i`` with

    sum e_i = 0,   sum a_i e_i = -n,   sum b_i e_i = m,

whose fibres are curves of degree ``max(a_i m + b_i n) - min(a_i m + b_i n)``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    DegenerateEmbedding,
    NonPrimitiveDirection,
    UnsolvableExponentSystem,
    ZeroDirection,
    ZeroSample,
    ZeroScale,
)
from .intlin import solve_integer
from .polygon import LatticePolygon, convex_hull
from .width import solve

# level size * point count above which the exact minimal search stops
_SEARCH_BUDGET = 2_000_000


@dataclass(frozen=True)
class MonomialEmbedding:
    exponents: tuple[tuple[int, int], ...]

    def __post_init__(self):
        exps = tuple((int(a), int(b)) for a, b in self.exponents)
        if not exps:
            raise DegenerateEmbedding("embedding needs at least one monomial")
        if len(set(exps)) != len(exps):
            raise ValueError("exponent pairs must be pairwise distinct")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of_polygon(cls, poly: LatticePolygon) -> "MonomialEmbedding":
        """Embedding by all lattice points of ``poly``, in sorted order."""
        from .polygon import lattice_points

        return cls(tuple(sorted(lattice_points(poly))))

    @property
    def r(self) -> int:
        return len(self.exponents) - 1


@dataclass(frozen=True)
class FibrationDescriptor:
    # h keeps the caller's sign; negating it inverts the map
    h: tuple[int, int]
    e: tuple[int, ...]
    degree: int

    def violations(self, emb: MonomialEmbedding) -> list[str]:
        """Identities the descriptor fails on ``emb`` (empty when sound)."""
        m, n = self.h
        a = [p[0] for p in emb.exponents]
        b = [p[1] for p in emb.exponents]
        e = self.e
        out = []
        if len(e) != len(a):
            return ["length mismatch"]
        if sum(e) != 0:
            out.append("sum e != 0")
        if sum(x * y for x, y in zip(a, e)) != -n:
            out.append("sum a e != -n")
        if sum(x * y for x, y in zip(b, e)) != m:
            out.append("sum b e != m")
        lin = [x * m + y * n for x, y in zip(a, b)]
        if sum(ei * li for ei, li in zip(e, lin)) != 0:
            out.append("sum e (a m + b n) != 0")
        if self.degree != max(lin) - min(lin):
            out.append("degree != max - min")
        return out

    def monomial_map(self) -> str:
        """Readable form ``(numerator : denominator)`` in variables x0..xr."""

        def mono(items):
            parts = [f"x{i}" + (f"^{k}" if k > 1 else "") for i, k in items]
            return "*".join(parts) or "1"

        num = [(i, k) for i, k in enumerate(self.e) if k > 0]
        den = [(i, -k) for i, k in enumerate(self.e) if k < 0]
        return f"({mono(num)} : {mono(den)})"


def polygon_of(emb: MonomialEmbedding) -> LatticePolygon:
    poly = convex_hull(emb.exponents)
    if poly.dim < 2:
        raise DegenerateEmbedding("exponents do not span a 2-dimensional polygon")
    return poly


def family_degree(emb: MonomialEmbedding, h) -> int:
    m, n = h
    if m == 0 and n == 0:
        raise ZeroDirection("direction must be nonzero")
    lin = [a * m + b * n for a, b in emb.exponents]
    return max(lin) - min(lin)


def _minimal_weight_exponents(points, target, upper):
    """Exponent vector of least L1 norm with sum e_i p_i = target, sum e_i = 0.

    A solution of L1 norm 2w is a pair of w-element multisets whose sums
    differ by ``target``.  Levels of w-fold sums are grown until such a pair
    shows up; ``upper`` (a known solution) caps the search.
    """
    k = len(points)
    tx, ty = target
    level = {(0, 0): ()}
    w = 0
    while w < upper:
        w += 1
        if len(level) * k > _SEARCH_BUDGET:
            return None
        nxt = {}
        for (sx, sy), rep in level.items():
            for i, (px, py) in enumerate(points):
                key = (sx + px, sy + py)
                cand = tuple(sorted(rep + (i,)))
                old = nxt.get(key)
                if old is None or cand < old:
                    nxt[key] = cand
        level = nxt
        best = None
        for (sx, sy), rep in level.items():
            pos = level.get((sx + tx, sy + ty))
            if pos is None:
                continue
            cnt = Counter(pos)
            cnt.subtract(rep)
            e = tuple(cnt.get(i, 0) for i in range(k))
            if best is None or e < best:
                best = e
        if best is not None:
            return best
    return None


def fibration_exponents(emb: MonomialEmbedding, h) -> FibrationDescriptor:
    """A minimal-norm integer exponent vector for the fibration in direction h."""
    m, n = h
    if m == 0 and n == 0:
        raise ZeroDirection("direction must be nonzero")
    if gcd(m, n) != 1:
        raise NonPrimitiveDirection(f"direction {(m, n)} is not primitive")
    polygon_of(emb)
    pts = emb.exponents
    rows = [[1] * len(pts), [a for a, _ in pts], [b for _, b in pts]]
    res = solve_integer(rows, [0, -n, m])
    if res is None:
        raise UnsolvableExponentSystem(
            f"direction {(m, n)} is not reachable from the exponent differences"
        )
    e, kernel = res
    e = _reduce(e, kernel)
    upper = sum(abs(x) for x in e) // 2
    best = _minimal_weight_exponents(pts, (-n, m), upper)
    if best is not None and sum(abs(x) for x in best) <= 2 * upper:
        e = list(best)
    desc = FibrationDescriptor((m, n), tuple(e), family_degree(emb, (m, n)))
    bad = desc.violations(emb)
    if bad:
        raise AssertionError(f"exponent vector failed {bad}")
    return desc


def _reduce(e, kernel):
    """Greedy L1 descent of e along +-kernel vectors."""
    e = list(e)
    norm = sum(abs(x) for x in e)
    improved = True
    while improved:
        improved = False
        for v in kernel:
            for sgn in (1, -1):
                cand = [x + sgn * y for x, y in zip(e, v)]
                cn = sum(abs(x) for x in cand)
                if cn < norm:
                    e, norm, improved = cand, cn, True
    return e


def _reduce_projective(coords):
    """Scale a tuple of nonzero Fractions to coprime integers, first entry positive."""
    den = lcm(*(c.denominator for c in coords))
    ints = [int(c * den) for c in coords]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def fiber_parametrization(emb: MonomialEmbedding, h, q, samples):
    """Points ``(k^a_i l^b_i u^(a_i m + b_i n))_i`` of one fibre, for each sample u.

    ``q`` is ``(k_num, k_den, l_num, l_den)``.  Every point is checked to
    satisfy ``prod x_i^e_i == l^m / k^n`` exactly before it is returned.
    Output tuples are projectively reduced to coprime integers.
    """
    m, n = h
    k = Fraction(q[0], q[1])
    l = Fraction(q[2], q[3])
    if k == 0 or l == 0:
        raise ZeroScale("fibre scales k and l must be nonzero")
    desc = fibration_exponents(emb, h)
    expected = l**m / k**n
    out = []
    for u in samples:
        u = Fraction(u)
        if u == 0:
            raise ZeroSample("sample parameter must be nonzero")
        coords = [k**a * l**b * u ** (a * m + b * n) for a, b in emb.exponents]
        value = Fraction(1)
        for c, ei in zip(coords, desc.e):
            value *= c**ei
        if value != expected:
            raise AssertionError("fibre point violates the monomial relation")
        out.append(_reduce_projective(coords))
    return out


def relation_value(point, e) -> Fraction:
    """prod x_i^e_i for an integer projective point (scale-invariant as sum e = 0)."""
    value = Fraction(1)
    for c, ei in zip(point, e):
        value *= Fraction(c) ** ei
    return value


def optimal_toric_families(emb: MonomialEmbedding):
    """(v, descriptors) for every optimal direction of the exponent polygon."""
    report = solve(polygon_of(emb))
    return report.width, [fibration_exponents(emb, h) for h in report.optimal]

"""Rational surfaces as blown-up planes, modelled on their class lattice.

A surface is the plane blown up in ``n`` points.  Its classes are integer
vectors over the basis ``L, E_1, ..., E_n`` with ``L^2 = 1``,
``E_i E_j = -delta_ij`` and ``L E_i = 0``; the canonical class is
``-3L + E_1 + ... + E_n``.  A polarization given by a parametric degree ``d``
and base point multiplicities ``m_i`` is ``D = dL - sum m_i E_i``.

The adjoint chain repeatedly replaces ``(X, D)`` by ``(X', D + K)`` with
every exceptional class orthogonal to ``D + K`` blown down.  Minimal
rational degrees accumulate along the chain (+3 between two planes, +2
otherwise) on top of a table lookup for the final, minimal pair.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd

from .errors import (
    AlreadyMinimal,
    BasisMismatch,
    ChainError,
    MinimalityUndecidable,
    NonBasisContractionNeeded,
    NotMprs,
    UnrecognizedMinimalModel,
)


@dataclass(frozen=True)
class DivisorClass:
    """``l*L + sum e[i]*E_{i+1}``.  Note: multiplicities enter ``e`` negated."""

    l: int
    e: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "l", int(self.l))
        object.__setattr__(self, "e", tuple(int(x) for x in self.e))

    @classmethod
    def _of(cls, l, e):
        # arithmetic results are already int tuples; skip re-validation
        obj = object.__new__(cls)
        object.__setattr__(obj, "l", l)
        object.__setattr__(obj, "e", e)
        return obj

    @property
    def n(self) -> int:
        return len(self.e)

    @classmethod
    def line(cls, n: int) -> "DivisorClass":
        return cls(1, (0,) * n)

    @classmethod
    def exceptional(cls, n: int, i: int) -> "DivisorClass":
        """E_{i+1} (0-based slot i)."""
        return cls(0, tuple(int(j == i) for j in range(n)))

    def _check(self, other):
        if len(self.e) != len(other.e):
            raise BasisMismatch(f"classes live on bases of size {self.n} and {other.n}")

    def __add__(self, other):
        self._check(other)
        return DivisorClass._of(self.l + other.l, tuple(map(int.__add__, self.e, other.e)))

    def __sub__(self, other):
        self._check(other)
        return DivisorClass._of(self.l - other.l, tuple(map(int.__sub__, self.e, other.e)))

    def __neg__(self):
        return DivisorClass._of(-self.l, tuple(-a for a in self.e))

    def __mul__(self, k: int):
        k = int(k)
        return DivisorClass._of(k * self.l, tuple(k * a for a in self.e))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.l == 0 and not any(self.e)

    def content(self) -> int:
        return gcd(self.l, *self.e)

    def multiplicities(self) -> tuple[int, ...]:
        return tuple(-a for a in self.e)

    def restrict(self, keep) -> "DivisorClass":
        return DivisorClass._of(self.l, tuple(self.e[i] for i in keep))

    def __str__(self):
        parts = [f"{self.l}L"]
        for i, a in enumerate(self.e, 1):
            if a:
                sign = "+" if a > 0 else "-"
                parts.append(f"{sign}{abs(a) if abs(a) != 1 else ''}E{i}")
        return "".join(parts)


def intersect(c: DivisorClass, d: DivisorClass) -> int:
    c._check(d)
    return c.l * d.l - sum(map(int.__mul__, c.e, d.e))


def canonical_class(n: int) -> DivisorClass:
    return DivisorClass(-3, (1,) * n)


@dataclass(frozen=True)
class SurfaceModel:
    """A polarized blown-up plane.

    ``slots`` records which exceptional classes of the original surface the
    current basis entries are (0-based), so classes can be carried back.
    """

    D: DivisorClass
    labels: tuple[str, ...] = None
    slots: tuple[int, ...] = None

    def __post_init__(self):
        n = self.D.n
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(f"E{i}" for i in range(1, n + 1)))
        if self.slots is None:
            object.__setattr__(self, "slots", tuple(range(n)))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "slots", tuple(self.slots))
        if len(self.labels) != n or len(self.slots) != n:
            raise BasisMismatch("labels/slots must match the number of exceptional classes")

    @property
    def n(self) -> int:
        return self.D.n

    @property
    def K(self) -> DivisorClass:
        return canonical_class(self.n)

    @property
    def is_plane(self) -> bool:
        return self.n == 0

    @property
    def degree(self) -> int:
        return intersect(self.D, self.D)

    def lift(self, c: DivisorClass, n0: int) -> DivisorClass:
        """Embed a class of this model into the original basis of size ``n0``."""
        e = [0] * n0
        for slot, a in zip(self.slots, c.e):
            e[slot] = a
        return DivisorClass(c.l, tuple(e))


# ---------------------------------------------------------------------------
# (-1)-classes and the mprs gate


def _find_subset(values, size, target):
    """Indices of ``size`` entries of ``values`` summing to ``target``, or None.

    Entries are scanned in descending order, so the ``k`` largest and ``k``
    smallest remaining values bound every partial sum; equal values at the
    same depth are tried once.
    """
    order = sorted(range(len(values)), key=lambda i: -values[i])
    vals = [values[i] for i in order]
    count = len(vals)

    def go(start, k, t):
        if k == 0:
            return () if t == 0 else None
        if count - start < k:
            return None
        if t > sum(vals[start:start + k]) or t < sum(vals[count - k:]):
            return None
        tried = None
        for i in range(start, count - k + 1):
            if vals[i] == tried:
                continue
            tried = vals[i]
            rest = go(i + 1, k - 1, t - vals[i])
            if rest is not None:
                return (order[i],) + rest
        return None

    found = go(0, size, target)
    return None if found is None else tuple(sorted(found))


def minus_one_candidates(n: int):
    """Shapes of the candidate (-1)-classes: (L-coefficient, number of E's)."""
    out = [(0, 1)]
    if n >= 2:
        out.append((1, 2))
    if n >= 5:
        out.append((2, 5))
    return out


def _candidate_class(n, l, idx):
    e = [0] * n
    for i in idx:
        e[i] = -1
    if l == 0:
        return DivisorClass.exceptional(n, idx[0])
    return DivisorClass(l, tuple(e))


def orthogonal_minus_one(D: DivisorClass):
    """A candidate (-1)-class C with D.C == 0, or None."""
    n = D.n
    mult = D.multiplicities()
    for i in range(n):
        if mult[i] == 0:
            return DivisorClass.exceptional(n, i)
    for l, k in minus_one_candidates(n)[1:]:
        idx = _find_subset(mult, k, l * D.l)
        if idx is not None:
            return _candidate_class(n, l, idx)
    return None


def mprs_violation(model: SurfaceModel, orthogonal_checked=False) -> str | None:
    """First failed necessary condition for (X, D) to be an mprs, or None.

    Nefness is only probed against classes that are effective for any
    position of the points: L, E_i, L-E_i-E_j and conics through five points.
    ``orthogonal_checked`` skips the search for D-orthogonal (-1)-classes
    when the caller has already done it.
    """
    D = model.D
    n = model.n
    mult = sorted(D.multiplicities(), reverse=True)
    if intersect(D, D) < 0:
        return "D^2 < 0"
    if D.l < 0:
        return "D.L < 0"
    if D.is_zero():
        return "D = 0"
    if mult and mult[-1] < 0:
        return "D.E_i < 0"
    if n >= 2 and D.l - mult[0] - mult[1] < 0:
        return "D.(L-E_i-E_j) < 0"
    if n >= 5 and 2 * D.l - sum(mult[:5]) < 0:
        return "D.(2L-E_i-...-E_m) < 0"
    if not orthogonal_checked:
        c = orthogonal_minus_one(D)
        if c is not None:
            return f"(-1)-class {c} has D.C = 0"
    return None


def surface_from_basepoints(parametric_degree: int, multiplicities, labels=None) -> SurfaceModel:
    """Model of the resolution of a degree-``d`` parametrization with the given base points."""
    d = int(parametric_degree)
    mult = [int(m) for m in multiplicities]
    # non-positive degrees and negative multiplicities fail D.L >= 0 or D.E_i >= 0
    model = SurfaceModel(DivisorClass(d, tuple(-m for m in mult)), labels)
    bad = mprs_violation(model)
    if bad:
        raise NotMprs(f"not a minimally polarized surface: {bad}")
    return model


# ---------------------------------------------------------------------------
# adjoint relation


def is_minimal_mprs(model: SurfaceModel) -> tuple[bool, str]:
    """Decide ``dim|D+K| <= 0 or D^2 = 0``.

    With D nef and nonzero, Riemann-Roch gives
    ``dim|D+K| >= (D+K).D / 2``, and ``(D+K).D = 0`` leaves only a rigid
    member (a moving part would be D-orthogonal with nonnegative square).
    """
    D, K = model.D, model.K
    d2 = intersect(D, D)
    if d2 == 0:
        return True, "D^2=0"
    if d2 < 0:
        raise MinimalityUndecidable("D^2 < 0: polarization is not nef")
    genus_term = intersect(D + K, D)
    if genus_term % 2:
        raise MinimalityUndecidable("odd (D+K).D violates adjunction parity")
    if genus_term < 0:
        return True, "adjoint-empty"
    if genus_term == 0:
        return True, "adjoint-rigid"
    return False, "adjoint-moves"


def adjoint_step(model: SurfaceModel) -> tuple[SurfaceModel, tuple[str, ...]]:
    """One adjoint relation: ``D' = D + K`` with orthogonal exceptional classes blown down."""
    minimal, reason = is_minimal_mprs(model)
    if minimal:
        raise AlreadyMinimal(f"model is already minimal ({reason})")
    return _adjoint(model)


def _adjoint(model: SurfaceModel):
    A = model.D + model.K
    keep = [i for i in range(model.n) if A.e[i] != 0]
    dropped = tuple(model.labels[i] for i in range(model.n) if A.e[i] == 0)
    new = SurfaceModel(
        A.restrict(keep),
        tuple(model.labels[i] for i in keep),
        tuple(model.slots[i] for i in keep),
    )
    leftover = orthogonal_minus_one(new.D)
    if leftover is not None:
        raise NonBasisContractionNeeded(
            f"(-1)-class {leftover} is orthogonal to D+K but is not an exceptional basis class"
        )
    bad = mprs_violation(new, orthogonal_checked=True)
    if bad:
        raise NotMprs(f"adjoint polarization fails the mprs gate: {bad}")
    return new, dropped


class CaseB(str, enum.Enum):
    B0 = "B0"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"


def classify_case_B(model: SurfaceModel, nxt: SurfaceModel | None, nxt_minimal=None) -> CaseB:
    """Case of the step ``model -> nxt``; ``nxt_minimal`` saves a recomputation."""
    if nxt is None:
        return CaseB.B0
    if nxt.is_plane:
        return CaseB.B1 if model.is_plane else CaseB.B2
    if nxt_minimal is None:
        nxt_minimal = is_minimal_mprs(nxt)[0]
    return CaseB.B3 if nxt_minimal else CaseB.B4


# ---------------------------------------------------------------------------
# minimal pairs


@dataclass(frozen=True)
class MinimalFamilies:
    v: int
    families: tuple[DivisorClass, ...]
    kind: str
    tight: bool
    exhaustive: bool


def _primitive(c: DivisorClass) -> DivisorClass:
    g = c.content()
    return DivisorClass(c.l // g, tuple(a // g for a in c.e))


def recognize_minimal(model: SurfaceModel) -> MinimalFamilies:
    """Minimal rational degree and optimal family classes of a minimal pair."""
    D, K = model.D, model.K
    d2 = intersect(D, D)
    if d2 == 0:
        c = D.l // 3 if D.l % 3 == 0 else 0
        if c > 0 and (D + c * K).is_zero():
            return MinimalFamilies(2 * c, (), "halphen", True, False)
        P = _primitive(D)
        if intersect(P, K) != -2:
            raise UnrecognizedMinimalModel(f"D^2 = 0 but P = {P} has P.K = {intersect(P, K)}")
        return MinimalFamilies(0, (P,), "ruled", True, True)
    if model.is_plane:
        if D.l in (1, 2, 3):
            return MinimalFamilies(D.l, (DivisorClass.line(0),), "plane", False, True)
        raise UnrecognizedMinimalModel(f"plane polarization {D} is not minimal")
    if (D + K).is_zero():
        if 1 <= d2 <= 8:
            return MinimalFamilies(2, (), "conic-fibration", True, False)
        raise UnrecognizedMinimalModel(f"anticanonical D with D^2 = {d2}")
    B = 2 * D + K
    if not B.is_zero() and intersect(B, B) == 0:
        P = _primitive(B)
        if intersect(D, P) == 1 and intersect(P, K) == -2:
            return MinimalFamilies(1, (P,), "linear-fibration", True, True)
    raise UnrecognizedMinimalModel(f"minimal pair D = {D} matches no known row")


# ---------------------------------------------------------------------------
# the chain


@dataclass(frozen=True)
class ChainReport:
    steps: tuple[tuple[SurfaceModel, CaseB], ...]
    v: int
    optimal_families: tuple[DivisorClass, ...]
    terminal_kind: str
    tight: bool = True
    exhaustive: bool = True
    dropped: tuple[tuple[str, ...], ...] = field(default=(), compare=False)

    @property
    def origin(self) -> SurfaceModel:
        return self.steps[0][0]

    def table(self):
        """Rows ``(l, [m_1 or None, ..., m_n0 or None])`` per chain model."""
        n0 = self.origin.n
        rows = []
        for model, _ in self.steps:
            mult = [None] * n0
            for slot, m in zip(model.slots, model.D.multiplicities()):
                mult[slot] = m
            rows.append((model.D.l, mult))
        return rows


def adjoint_chain(model: SurfaceModel):
    """All models of the chain and the labels dropped at each step."""
    models, dropped = [model], []
    while True:
        try:
            minimal, _ = is_minimal_mprs(models[-1])
            if minimal:
                return models, dropped
            nxt, gone = _adjoint(models[-1])
        except ChainError as exc:
            exc.partial = list(models)
            raise
        models.append(nxt)
        dropped.append(gone)


def solve_min_degree(model: SurfaceModel) -> ChainReport:
    """Minimal rational degree and optimal family classes of (X, D)."""
    models, dropped = adjoint_chain(model)
    last = len(models) - 1
    cases = [classify_case_B(models[i], models[i + 1], i + 1 == last) for i in range(last)]
    cases.append(CaseB.B0)
    try:
        base = recognize_minimal(models[-1])
    except ChainError as exc:
        exc.partial = list(models)
        raise
    v = base.v
    fams = list(base.families)
    tight, exhaustive, kind = base.tight, base.exhaustive, base.kind
    for i in range(len(models) - 2, -1, -1):
        here, nxt = models[i], models[i + 1]
        if cases[i] is CaseB.B1:
            v += 3
            fams = [DivisorClass.line(0)]
            tight, exhaustive = False, True
        elif cases[i] is CaseB.B2:
            v += 2
            gone = set(dropped[i])
            fams = [
                DivisorClass.line(here.n) - DivisorClass.exceptional(here.n, j)
                for j in range(here.n)
                if here.labels[j] in gone
            ]
            tight, exhaustive = True, True
        else:
            v += 2
            # tight families pull back with unchanged coefficients
            pos = {s: j for j, s in enumerate(here.slots)}
            lifted = []
            for f in fams:
                e = [0] * here.n
                for s, a in zip(nxt.slots, f.e):
                    e[pos[s]] = a
                lifted.append(DivisorClass(f.l, tuple(e)))
            fams = lifted
    return ChainReport(
        steps=tuple(zip(models, cases)),
        v=v,
        optimal_families=tuple(fams),
        terminal_kind=kind,
        tight=tight,
        exhaustive=exhaustive,
        dropped=tuple(dropped),
    )

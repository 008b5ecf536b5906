"""Finite geometric simplicial complexes over an indexed vertex list."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from ..frames.poset import Poset
from .convex import max_over_intersection
from .linalg import Point, affinely_independent, as_point, format_point, parse_point
from .simplices import Barycentric, NotInAffineHull, Simplex, barycentric_coords

Face = frozenset[int]


def face_key(face: Iterable[int]) -> str:
    return ",".join(str(i) for i in sorted(face))


def parse_face_key(key: str) -> Face:
    try:
        return frozenset(int(t) for t in key.split(","))
    except ValueError:
        raise ValueError(f"bad simplex key {key!r}") from None


def _closure(faces: Iterable[Face]) -> set[Face]:
    out: set[Face] = set()
    for f in faces:
        if f in out:
            continue
        items = sorted(f)
        for k in range(1, len(items) + 1):
            out.update(frozenset(c) for c in combinations(items, k))
    return out


class SimplicialComplex:
    """Simplices are stored as sets of vertex indices; ``close=False`` keeps the
    given family as is (so :func:`check_complex` can reject it)."""

    def __init__(self, vertices: Sequence[Sequence], simplices: Iterable[Iterable[int]], close: bool = True):
        self.vertices: tuple[Point, ...] = tuple(as_point(v) for v in vertices)
        fam = {frozenset(s) for s in simplices}
        for s in fam:
            if not s or any(not 0 <= i < len(self.vertices) for i in s):
                raise ValueError(f"simplex {sorted(s)} refers to unknown vertices")
        self.simplices: frozenset[Face] = frozenset(_closure(fam) if close else fam)

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0]) if self.vertices else 0

    def points(self, face: Iterable[int]) -> list[Point]:
        return [self.vertices[i] for i in sorted(face)]

    def simplex(self, face: Iterable[int]) -> Simplex:
        return Simplex(self.points(face))

    def maximal(self) -> list[Face]:
        return sorted((s for s in self.simplices if not any(s < t for t in self.simplices)),
                      key=lambda s: sorted(s))

    def sorted_simplices(self) -> list[Face]:
        return sorted(self.simplices, key=lambda s: (len(s), sorted(s)))

    def __contains__(self, face) -> bool:
        return frozenset(face) in self.simplices

    def __len__(self):
        return len(self.simplices)

    def to_dict(self) -> dict:
        return {"vertices": [format_point(v) for v in self.vertices],
                "simplices": [sorted(s) for s in self.maximal()]}

    @classmethod
    def from_dict(cls, data) -> "SimplicialComplex":
        return cls([parse_point(v) for v in data["vertices"]], data["simplices"])


def dimension(cx: SimplicialComplex) -> int:
    """Largest simplex dimension; -1 for the empty complex."""
    return max((len(s) - 1 for s in cx.simplices), default=-1)


@dataclass(frozen=True)
class ComplexCheck:
    ok: bool
    reason: str | None = None
    pair: tuple[Face, Face] | None = None
    witness: Point | None = None

    def __bool__(self):
        return self.ok


def check_complex(cx: SimplicialComplex) -> ComplexCheck:
    """Face closure, affine independence, and proper pairwise intersections.

    Checking maximal simplices is enough: if two of them meet in the hull of
    their shared vertices, any faces of them do as well.  For each pair we
    maximise the total weight on non-shared vertices over the intersection;
    a positive optimum exhibits an illegal overlap.
    """
    for s in cx.simplices:
        for k in range(1, len(s)):
            for sub in combinations(sorted(s), k):
                if frozenset(sub) not in cx.simplices:
                    return ComplexCheck(False, "not face-closed", (s, frozenset(sub)))
        if not affinely_independent(cx.points(s)):
            return ComplexCheck(False, "affinely dependent simplex", (s, s))
    tops = cx.maximal()
    for s, t in combinations(tops, 2):
        P, Q = cx.points(s), cx.points(t)
        shared = s & t
        wp = [Fraction(int(i not in shared)) for i in sorted(s)]
        wq = [Fraction(int(i not in shared)) for i in sorted(t)]
        value, x = max_over_intersection(P, Q, wp, wq)
        if value is not None and value > 0:
            return ComplexCheck(False, "simplices overlap outside a common face", (s, t), x)
    return ComplexCheck(True)


def carrier(cx: SimplicialComplex, x: Sequence) -> Face:
    """The unique simplex whose relative interior contains ``x`` (full scan)."""
    x = as_point(x)
    hits = []
    for s in cx.simplices:
        try:
            bc = barycentric_coords(cx.simplex(s), x)
        except NotInAffineHull:
            continue
        if bc.interior:
            hits.append(s)
    if not hits:
        raise ValueError(f"point {tuple(map(str, x))} is not in the complex")
    if len(hits) > 1:
        raise AssertionError(f"relative interiors overlap at {tuple(map(str, x))}: {hits}")
    return hits[0]


def locate(cx: SimplicialComplex, x: Sequence, tops: Sequence[Face] | None = None) -> Face | None:
    """Carrier via maximal simplices only: the support of the barycentric
    coordinates in any maximal simplex containing ``x``.  ``None`` if outside."""
    x = as_point(x)
    for s in tops if tops is not None else cx.maximal():
        order = sorted(s, key=lambda i: cx.vertices[i])
        try:
            bc: Barycentric = barycentric_coords(Simplex(cx.points(s)), x)
        except NotInAffineHull:
            continue
        if bc.inside:
            # Simplex sorts vertices by coordinates; map back to indices
            return frozenset(order[j] for j in bc.support)
    return None


def open_star(cx: SimplicialComplex, face: Iterable[int]) -> set[Face]:
    f = frozenset(face)
    if f not in cx.simplices:
        raise KeyError(f"{sorted(f)} is not a simplex of the complex")
    return {t for t in cx.simplices if f <= t}


def face_poset(cx: SimplicialComplex) -> Poset:
    names = {s: face_key(s) for s in cx.simplices}
    pairs = [(names[s], names[s | {i}]) for s in cx.simplices
             for i in range(len(cx.vertices)) if i not in s and (s | {i}) in cx.simplices]
    return Poset(sorted(names.values()), pairs)


@dataclass(frozen=True)
class FacetCheck:
    ok: bool
    facet: Face | None = None
    count: int = 0

    def __bool__(self):
        return self.ok


def facet_incidence_check(cx: SimplicialComplex) -> FacetCheck:
    """Each (n-1)-simplex must be a face of one or two n-simplices, n = dim."""
    n = dimension(cx)
    tops = [s for s in cx.simplices if len(s) == n + 1]
    for f in sorted((s for s in cx.simplices if len(s) == n), key=sorted):
        count = sum(1 for t in tops if f < t)
        if count not in (1, 2):
            return FacetCheck(False, f, count)
    return FacetCheck(True)

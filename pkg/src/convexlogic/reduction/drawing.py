"""Crossing-free drawings of plane trees and sawed trees, y = height."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from ..frames.poset import Poset
from .sawed import PlaneTree, SawedTree, SawedTreeError

Coord = tuple[Fraction, int]


class DrawingError(ValueError):
    pass


@dataclass(frozen=True)
class PlaneDrawing:
    poset: Poset
    coords: Mapping[str, Coord]

    def x(self, e: str) -> Fraction:
        return self.coords[e][0]

    def __getitem__(self, e: str) -> Coord:
        return self.coords[e]

    def to_dict(self) -> dict[str, list]:
        return {e: [f"{x.numerator}/{x.denominator}", y] for e, (x, y) in sorted(self.coords.items())}


def _orient(p, q, r) -> int:
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _on_segment(p, q, r) -> bool:
    """r on the closed segment pq, given the three are collinear."""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_cross(a, b, c, d) -> bool:
    """Do closed segments ab and cd meet anywhere except at a shared endpoint?"""
    shared = {a, b} & {c, d}
    if len(shared) == 2:
        return True  # the same segment twice
    if len(shared) == 1:
        p = shared.pop()
        q = b if a == p else a
        r = d if c == p else c
        # only an overlap along a common ray is a problem
        if _orient(p, q, r) != 0:
            return False
        return (q[0] - p[0]) * (r[0] - p[0]) + (q[1] - p[1]) * (r[1] - p[1]) > 0
    o1, o2 = _orient(a, b, c), _orient(a, b, d)
    o3, o4 = _orient(c, d, a), _orient(c, d, b)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    return ((o1 == 0 and _on_segment(a, b, c)) or (o2 == 0 and _on_segment(a, b, d))
            or (o3 == 0 and _on_segment(c, d, a)) or (o4 == 0 and _on_segment(c, d, b)))


def check_drawing(d: PlaneDrawing, tops_order: tuple[str, ...] | None = None) -> None:
    """Raise :class:`DrawingError` unless ``d`` is injective, has y = height,
    crossing-free Hasse edges, and (optionally) tops left to right."""
    P = d.poset
    pts = {e: d.coords[e] for e in P}
    if len(set(pts.values())) != len(pts):
        raise DrawingError("drawing is not injective")
    for e in P:
        if pts[e][1] != P.height_of(e):
            raise DrawingError(f"{e!r} is not drawn at its height")
    edges = sorted(P.covers)
    for (a, b), (c, e) in combinations(edges, 2):
        if segments_cross(pts[a], pts[b], pts[c], pts[e]):
            raise DrawingError(f"edges {a}-{b} and {c}-{e} cross")
    if tops_order is not None:
        xs = [pts[t][0] for t in tops_order]
        if any(x >= y for x, y in zip(xs, xs[1:])):
            raise DrawingError("tops are not drawn left to right in plane order")


def plane_drawing(F: PlaneTree | SawedTree) -> PlaneDrawing:
    """Tops at x = 0..k-1, inner nodes at the midpoint of their children's span,
    saw nodes midway between their two tops on the top row."""
    pt = F.plane if isinstance(F, SawedTree) else F
    T = pt.tree
    xs: dict[str, Fraction] = {t: Fraction(i) for i, t in enumerate(pt.tops_order)}
    for x in T.by_height(reverse=True):
        if x in xs:
            continue
        kids = [xs[c] for c in T.successors(x)]
        if not kids:
            raise SawedTreeError(f"{x!r} is maximal but not a listed top")
        xs[x] = (min(kids) + max(kids)) / 2
    coords: dict[str, Coord] = {x: (xs[x], T.height_of(x)) for x in T}
    poset = T
    if isinstance(F, SawedTree):
        n = F.height()
        tops = pt.tops_order
        for i, s in enumerate(F.saws):
            coords[s] = ((xs[tops[i]] + xs[tops[i + 1]]) / 2, n)
        poset = F.poset
    d = PlaneDrawing(poset, coords)
    check_drawing(d, pt.tops_order)
    return d

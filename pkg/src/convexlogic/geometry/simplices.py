"""Simplices with exact vertices and barycentric coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import Point, affinely_independent, as_point, combine, solve, unit


class NotInAffineHull(ValueError):
    pass


class DegenerateSimplex(ValueError):
    pass


@dataclass(frozen=True)
class Barycentric:
    coords: tuple[Fraction, ...]

    @property
    def inside(self) -> bool:
        return all(r >= 0 for r in self.coords)

    @property
    def interior(self) -> bool:
        """In the relative interior: every coordinate strictly positive."""
        return all(r > 0 for r in self.coords)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, r in enumerate(self.coords) if r != 0)


class Simplex:
    """Convex hull of affinely independent points; equal iff same vertex set."""

    def __init__(self, vertices: Iterable[Sequence]):
        verts = sorted({as_point(v) for v in vertices})
        if not verts:
            raise DegenerateSimplex("a simplex needs at least one vertex")
        if len({len(v) for v in verts}) != 1:
            raise ValueError("vertices live in different ambient dimensions")
        if not affinely_independent(verts):
            raise DegenerateSimplex("vertices are affinely dependent")
        self.vertices: tuple[Point, ...] = tuple(verts)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    def __eq__(self, other):
        return isinstance(other, Simplex) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"Simplex(dim={self.dim}, vertices={[tuple(map(str, v)) for v in self.vertices]})"

    def faces(self) -> list["Simplex"]:
        return [Simplex(sub) for k in range(1, len(self.vertices) + 1)
                for sub in combinations(self.vertices, k)]

    def is_face_of(self, other: "Simplex") -> bool:
        return set(self.vertices) <= set(other.vertices)

    def barycentre(self) -> Point:
        w = Fraction(1, len(self.vertices))
        return combine([w] * len(self.vertices), self.vertices)

    def point(self, weights: Sequence) -> Point:
        return combine([Fraction(w) for w in weights], self.vertices)


def barycentric_coords(simplex: Simplex, x: Sequence) -> Barycentric:
    """Unique affine weights of ``x`` w.r.t. the simplex vertices (sorted order)."""
    x = as_point(x)
    if len(x) != simplex.ambient_dim:
        raise ValueError("ambient dimensions differ")
    verts = simplex.vertices
    A = [[v[k] for v in verts] for k in range(len(x))] + [[Fraction(1)] * len(verts)]
    sol = solve(A, list(x) + [Fraction(1)])
    if sol is None:
        raise NotInAffineHull(f"point {tuple(map(str, x))} is outside the affine hull")
    return Barycentric(sol)


def standard_simplex(n: int) -> Simplex:
    """``Conv{e_0, ..., e_n}`` in ambient dimension ``n + 1``."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    return Simplex([unit(i, n + 1) for i in range(n + 1)])

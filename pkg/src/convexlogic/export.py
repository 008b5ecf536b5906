"""Presentation exports: OFF meshes of realised polytopes and DOT diagrams.

OFF coordinates are decimals and only meant for viewing; every decision is
made on the exact data before anything is written.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .frames.io import to_dot
from .geometry.linalg import Point, affine_basis, dot, rank, row_echelon, sub
from .realization.core import ConvexRealization, cell_poset, induced_cell_map

WATERMARK = "# approximate coordinates for display only; exact data lives in the JSON realisation"


def project(points: Sequence[Point]) -> tuple[list[Point], list[float]]:
    """Exact affine coordinates w.r.t. an orthogonal basis of the affine hull,
    plus the basis lengths needed to turn them into Euclidean coordinates."""
    origin, basis = affine_basis(points)
    coords = [tuple(dot(sub(p, origin), u) / dot(u, u) for u in basis) for p in points]
    return coords, [math.sqrt(dot(u, u)) for u in basis]


def hull_facets(pts: Sequence[Point]) -> list[list[int]]:
    """Facets of a full-dimensional point set, as vertex-index lists (exact)."""
    d = len(pts[0])
    facets: set[frozenset[int]] = set()
    for sub_idx in combinations(range(len(pts)), d):
        base = pts[sub_idx[0]]
        diffs = [sub(pts[i], base) for i in sub_idx[1:]]
        if d > 1 and rank(diffs) < d - 1:
            continue
        normal = _normal(diffs, d)
        c = dot(normal, base)
        side = {(dot(normal, p) > c) - (dot(normal, p) < c) for p in pts}
        if side <= {0, 1} or side <= {0, -1}:
            facets.add(frozenset(i for i, p in enumerate(pts) if dot(normal, p) == c))
    return [sorted(f) for f in sorted(facets, key=sorted)]


def _normal(diffs: Sequence[Point], d: int) -> Point:
    """A non-zero vector orthogonal to ``diffs`` (rank d-1), by cofactors."""
    if d == 1:
        return (Fraction(1),)
    red, piv = row_echelon(diffs)
    free = next(c for c in range(d) if c not in piv)
    v = [Fraction(0)] * d
    v[free] = Fraction(1)
    for row, c in zip(red, piv):
        v[c] = -row[free]
    return tuple(v)


def _cyclic(face: list[int], coords3: Sequence[Sequence[float]]) -> list[int]:
    pts = [coords3[i] for i in face]
    cx = [sum(p[k] for p in pts) / len(pts) for k in range(3)]
    a = [pts[0][k] - cx[k] for k in range(3)]
    # normal from any two non-parallel spokes
    n = None
    for p in pts[1:]:
        b = [p[k] - cx[k] for k in range(3)]
        cr = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
        if sum(v * v for v in cr) > 1e-18:
            n = cr
            break
    if n is None:
        return face
    bvec = [n[1] * a[2] - n[2] * a[1], n[2] * a[0] - n[0] * a[2], n[0] * a[1] - n[1] * a[0]]

    def angle(i):
        p = [coords3[i][k] - cx[k] for k in range(3)]
        return math.atan2(sum(p[k] * bvec[k] for k in range(3)), sum(p[k] * a[k] for k in range(3)))
    return sorted(face, key=angle)


def to_off(r: ConvexRealization, precision: int = 6) -> str:
    """OFF mesh of the polytope (hull facets), for realisations of dimension <= 3."""
    if r.n > 3:
        raise ValueError("OFF export needs dimension at most 3")
    verts = list(r.vertices)
    exact, lengths = project(verts)
    dim = len(lengths)
    faces: list[list[int]] = []
    real = [[float(c) * l for c, l in zip(p, lengths)] + [0.0] * (3 - dim) for p in exact]
    if dim == 2:
        boundary = sorted({i for edge in hull_facets(exact) for i in edge})
        faces = [_order_polygon(boundary, real)]
    elif dim == 3:
        faces = [_cyclic(f, real) for f in hull_facets(exact)]
    lines = ["OFF", WATERMARK, f"{len(verts)} {len(faces)} 0"]
    lines += [" ".join(f"{c:.{precision}f}" for c in p) for p in real]
    lines += [f"{len(f)} " + " ".join(map(str, f)) for f in faces]
    return "\n".join(lines) + "\n"


def _order_polygon(face: list[int], real) -> list[int]:
    cx = sum(real[i][0] for i in face) / len(face)
    cy = sum(real[i][1] for i in face) / len(face)
    return sorted(face, key=lambda i: math.atan2(real[i][1] - cy, real[i][0] - cx))


def cells_dot(r: ConvexRealization) -> str:
    """Incidence poset of cells, each node annotated with its frame label."""
    f = induced_cell_map(r)
    body = to_dot(cell_poset(r), "cells")
    extra = [f'  "{c}" [label="{c}\\n{f(c)}"];' for c in f.source.elements]
    head, tail = body.rsplit("}", 1)
    return head + "\n".join(extra) + "\n}" + tail


def to_polytope_dict(r: ConvexRealization) -> dict:
    """Exact coordinates in an orthogonal frame of the affine hull, plus the hull facets.

    For a height-2 realisation this is a polygon in the plane.  Coordinates
    are w.r.t. the (unnormalised) basis, so they stay rational.
    """
    exact, _ = project(list(r.vertices))
    dim = len(exact[0]) if exact else 0
    facets = hull_facets(exact) if dim >= 1 else []
    out = {"dimension": dim,
           "vertices": [[f"{c.numerator}/{c.denominator}" for c in p] for p in exact],
           "facets": facets,
           "cells": [{"vertices": sorted(c.vertices), "label": c.label} for c in r.saw_cells]}
    if dim == 2:
        real = [[float(c) for c in p] for p in exact]
        boundary = sorted({i for edge in facets for i in edge})
        out["polygon"] = _order_polygon(boundary, real)
    return out

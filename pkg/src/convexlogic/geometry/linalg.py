"""Exact Gaussian elimination helpers and rational point utilities."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Point = tuple[Fraction, ...]


def as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("floats are not accepted as exact coordinates")
    return Fraction(v)


def as_point(coords: Iterable) -> Point:
    return tuple(as_fraction(c) for c in coords)


def unit(i: int, dim: int) -> Point:
    return tuple(Fraction(int(j == i)) for j in range(dim))


def add(p: Sequence[Fraction], q: Sequence[Fraction]) -> Point:
    return tuple(a + b for a, b in zip(p, q))


def sub(p: Sequence[Fraction], q: Sequence[Fraction]) -> Point:
    return tuple(a - b for a, b in zip(p, q))


def scale(k, p: Sequence[Fraction]) -> Point:
    return tuple(k * a for a in p)


def dot(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(p, q)), Fraction(0))


def combine(weights: Sequence[Fraction], points: Sequence[Sequence[Fraction]]) -> Point:
    dim = len(points[0])
    out = [Fraction(0)] * dim
    for w, p in zip(weights, points):
        if w:
            for k in range(dim):
                out[k] += w * p[k]
    return tuple(out)


def row_echelon(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = [list(map(as_fraction, r)) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncol = len(m[0])
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(row_echelon(rows)[1])


def solve(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
    """Unique solution of ``A x = b``; ``None`` if inconsistent.

    Raises ``ValueError`` when the system is consistent but underdetermined.
    """
    ncol = len(A[0])
    aug = [list(r) + [as_fraction(v)] for r, v in zip(A, b)]
    red, piv = row_echelon(aug)
    if ncol in piv:
        return None
    if len(piv) < ncol:
        raise ValueError("system has no unique solution")
    x = [Fraction(0)] * ncol
    for row, c in zip(red, piv):
        x[c] = row[-1]
    return tuple(x)


def affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull of ``points``."""
    if not points:
        raise ValueError("affine rank of an empty point set")
    base = points[0]
    return rank([sub(p, base) for p in points[1:]]) if len(points) > 1 else 0


def affinely_independent(points: Sequence[Sequence[Fraction]]) -> bool:
    return affine_rank(points) == len(points) - 1


def affine_basis(points: Sequence[Sequence[Fraction]]) -> tuple[Point, list[Point]]:
    """Origin plus an orthogonal (unnormalised) basis of the affine hull,
    chosen by exact elimination and Gram-Schmidt."""
    origin = tuple(points[0])
    basis: list[Point] = []
    for p in points[1:]:
        v = sub(p, origin)
        for u in basis:
            v = sub(v, scale(dot(v, u) / dot(u, u), u))
        if any(v):
            basis.append(v)
    return origin, basis


def format_point(p: Sequence[Fraction]) -> list[str]:
    return [f"{c.numerator}/{c.denominator}" for c in p]


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise ValueError(f"bad rational {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"bad rational {text!r}")
    s = text.strip()
    num, _, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if den else 1
    except ValueError:
        raise ValueError(f"bad rational {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def parse_point(values) -> Point:
    if not isinstance(values, list):
        raise ValueError(f"point must be a list, got {values!r}")
    return tuple(parse_rational(v) for v in values)

"""Convex-hull questions answered by exact LPs: membership with certificates,
exposing functionals for faces, and (strict) intersection tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import Point, as_point, combine, dot
from .lp import linprog_max


@dataclass(frozen=True)
class Membership:
    inside: bool
    weights: tuple[Fraction, ...] | None = None
    separator: tuple[Point, Fraction] | None = None  # (a, c): a.v <= c on V, a.x >= c + 1

    def __bool__(self):
        return self.inside


def _hull_rows(points: Sequence[Point], offset: int, nvar: int, sign: int = 1):
    """Equality rows expressing ``sum w_i p_i`` on variables offset..offset+len."""
    dim = len(points[0])
    rows = []
    for k in range(dim):
        row = [Fraction(0)] * nvar
        for i, p in enumerate(points):
            row[offset + i] = sign * p[k]
        rows.append(row)
    return rows


def convex_membership(V: Sequence[Sequence], x: Sequence) -> Membership:
    """Is ``x`` in Conv(V)?  Returns convex weights, or a separating functional."""
    if not V:
        raise ValueError("empty point set")
    pts = [as_point(v) for v in V]
    x = as_point(x)
    dim = len(x)
    if any(len(p) != dim for p in pts):
        raise ValueError("dimension mismatch")
    m = len(pts)
    A_eq = _hull_rows(pts, 0, m) + [[Fraction(1)] * m]
    res = linprog_max([0] * m, A_eq=A_eq, b_eq=list(x) + [1])
    if res.status == "optimal":
        return Membership(True, weights=res.x)
    # variables (a_1..a_dim, c), all free:  a.v - c <= 0,  c - a.x <= -1
    A_ub = [list(p) + [Fraction(-1)] for p in pts] + [[-v for v in x] + [Fraction(1)]]
    b_ub = [0] * m + [-1]
    sep = linprog_max([0] * (dim + 1), A_ub, b_ub, free=range(dim + 1))
    assert sep.x is not None, "Farkas alternative must be feasible"
    return Membership(False, separator=(sep.x[:dim], sep.x[dim]))


def check_membership_certificate(V: Sequence[Sequence], x: Sequence, m: Membership) -> bool:
    pts = [as_point(v) for v in V]
    x = as_point(x)
    if m.inside:
        w = m.weights
        return (w is not None and all(t >= 0 for t in w) and sum(w) == 1
                and combine(w, pts) == x)
    a, c = m.separator
    return all(dot(a, p) <= c for p in pts) and dot(a, x) > c


def face_functional(V: Sequence[Sequence], face: Sequence[int]) -> tuple[Point, Fraction] | None:
    """``(h, c)`` with ``h.v = c`` on ``V[face]`` and ``h.v <= c - 1`` elsewhere,
    or ``None`` when Conv(V[face]) is not a face of Conv(V) cut out that way."""
    pts = [as_point(v) for v in V]
    dim = len(pts[0])
    inside = set(face)
    A_eq, A_ub, b_ub = [], [], []
    for i, p in enumerate(pts):
        row = list(p) + [Fraction(-1)]
        if i in inside:
            A_eq.append(row)
        else:
            A_ub.append(row)
            b_ub.append(-1)
    res = linprog_max([0] * (dim + 1), A_ub, b_ub, A_eq, [0] * len(A_eq), free=range(dim + 1))
    if res.status != "optimal":
        return None
    return res.x[:dim], res.x[dim]


def hulls_meet(P: Sequence[Point], Q: Sequence[Point]) -> Point | None:
    """A common point of Conv(P) and Conv(Q), or ``None``."""
    p, q = len(P), len(Q)
    nvar = p + q
    A_eq = [a + b[p:] for a, b in zip(_hull_rows(P, 0, p), _hull_rows(Q, p, nvar, -1))]
    A_eq.append([Fraction(1)] * p + [Fraction(0)] * q)
    A_eq.append([Fraction(0)] * p + [Fraction(1)] * q)
    res = linprog_max([0] * nvar, A_eq=A_eq, b_eq=[0] * len(P[0]) + [1, 1])
    if res.status != "optimal":
        return None
    return combine(res.x[:p], P)


def max_over_intersection(P: Sequence[Point], Q: Sequence[Point],
                          weight_p: Sequence[Fraction] | None = None,
                          weight_q: Sequence[Fraction] | None = None,
                          linear: tuple[Sequence[Fraction], Fraction] | None = None,
                          strict: Sequence[tuple[Sequence[Fraction], Fraction]] = ()):
    """Maximise an objective over ``x`` in Conv(P) ∩ Conv(Q).

    The objective is ``weight_p.lam + weight_q.mu`` (convex weights of the two
    representations) plus ``lin_c - lin_h.x`` when ``linear = (lin_h, lin_c)``.
    Each ``(h, c)`` in ``strict`` adds ``h.x <= c - eps`` with ``0 <= eps <= 1``;
    when ``strict`` is given the objective is ``eps`` alone.
    Returns ``(value, x)``; ``value`` is ``None`` for an empty intersection.
    """
    p, q = len(P), len(Q)
    nvar = p + q + (1 if strict else 0)
    A_eq = [a[:p + q] + [Fraction(0)] * (nvar - p - q)
            for a in (
                [x + y[p:] for x, y in zip(_hull_rows(P, 0, p), _hull_rows(Q, p, p + q, -1))])]
    A_eq.append([Fraction(1)] * p + [Fraction(0)] * (nvar - p))
    A_eq.append([Fraction(0)] * p + [Fraction(1)] * q + [Fraction(0)] * (nvar - p - q))
    b_eq = [0] * len(P[0]) + [1, 1]
    A_ub, b_ub = [], []
    c = [Fraction(0)] * nvar
    const = Fraction(0)
    if strict:
        for h, cc in strict:
            # h.(sum lam_i p_i) + eps <= cc
            A_ub.append([dot(h, pt) for pt in P] + [Fraction(0)] * q + [Fraction(1)])
            b_ub.append(cc)
        A_ub.append([Fraction(0)] * (nvar - 1) + [Fraction(1)])
        b_ub.append(1)
        c[-1] = Fraction(1)
    else:
        if weight_p is not None:
            c[:p] = list(weight_p)
        if weight_q is not None:
            c[p:p + q] = list(weight_q)
        if linear is not None:
            h, cc = linear
            const = cc
            for i, pt in enumerate(P):
                c[i] -= dot(h, pt)
    res = linprog_max(c, A_ub, b_ub, A_eq, b_eq)
    if res.status == "infeasible":
        return None, None
    if res.status == "unbounded":  # cannot happen over a compact set
        raise ArithmeticError("unbounded LP over a polytope")
    return res.value + const, combine(res.x[:p], P)

"""Exact linear programming over ``Fraction``: a two-phase tableau simplex with
Bland's rule, so it always terminates and never rounds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Number = int | Fraction


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


def _pivot(rows: list[list[Fraction]], obj: list[Fraction], r: int, c: int) -> None:
    prow = rows[r]
    p = prow[c]
    if p != 1:
        rows[r] = prow = [v / p for v in prow]
    for i, row in enumerate(rows):
        if i != r and row[c]:
            f = row[c]
            rows[i] = [a - f * b for a, b in zip(row, prow)]
    if obj[c]:
        f = obj[c]
        obj[:] = [a - f * b for a, b in zip(obj, prow)]


def _run(rows, obj, basis, allowed: Sequence[bool]) -> str:
    """Maximise; ``obj`` holds reduced costs with ``-value`` in the last slot."""
    while True:
        enter = next((j for j, ok in enumerate(allowed) if ok and obj[j] > 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        _pivot(rows, obj, best[1], enter)
        basis[best[1]] = enter


def _standard(c, A_ub, b_ub, A_eq, b_eq, nvar):
    """Rows ``[A | slacks]`` with non-negative right-hand sides."""
    n_ub = len(A_ub)
    width = nvar + n_ub
    rows = []
    for k, (a, b) in enumerate(zip(A_ub, b_ub)):
        row = [Fraction(v) for v in a] + [Fraction(0)] * n_ub + [Fraction(b)]
        row[nvar + k] = Fraction(1)
        rows.append(row)
    for a, b in zip(A_eq, b_eq):
        rows.append([Fraction(v) for v in a] + [Fraction(0)] * n_ub + [Fraction(b)])
    for row in rows:
        if row[-1] < 0:
            row[:] = [-v for v in row]
    cost = [Fraction(v) for v in c] + [Fraction(0)] * n_ub
    return rows, cost, width


def linprog_max(c: Sequence[Number], A_ub: Sequence[Sequence[Number]] = (), b_ub: Sequence[Number] = (),
                A_eq: Sequence[Sequence[Number]] = (), b_eq: Sequence[Number] = (),
                free: Iterable[int] = ()) -> LPResult:
    """Maximise ``c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq`` and
    ``x >= 0`` except for the indices in ``free``."""
    nvar = len(c)
    for a in (*A_ub, *A_eq):
        if len(a) != nvar:
            raise ValueError("constraint row length does not match the objective")
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ValueError("constraint matrix and right-hand side differ in length")
    free = sorted(set(free))
    if free:
        # x_f = x_f^+ - x_f^-, the negative parts appended as extra columns
        ext = lambda row: list(row) + [-row[f] for f in free]
        sol = linprog_max(ext(c), [ext(a) for a in A_ub], b_ub, [ext(a) for a in A_eq], b_eq)
        if sol.x is None:
            return sol
        x = list(sol.x[:nvar])
        for k, f in enumerate(free):
            x[f] -= sol.x[nvar + k]
        return LPResult(sol.status, tuple(x), sol.value)

    rows, cost, width = _standard(c, A_ub, b_ub, A_eq, b_eq, nvar)
    m = len(rows)
    # phase 1: one artificial per row, maximise minus their sum
    for i, row in enumerate(rows):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows[i] = row[:-1] + art + [row[-1]]
    total = width + m
    basis = list(range(width, total))
    obj = [Fraction(0)] * (total + 1)
    for row in rows:
        for j in range(width):
            obj[j] += row[j]
        obj[-1] += row[-1]
    # obj[-1] is currently +sum(b); as "-value" of maximising -sum(art) it is right
    _run(rows, obj, basis, [True] * width + [False] * m)
    if obj[-1] != 0:
        return LPResult("infeasible")
    # drive remaining artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(rows):
        if basis[i] >= width:
            j = next((j for j in range(width) if rows[i][j] != 0), None)
            if j is None:
                del rows[i], basis[i]
                continue
            _pivot(rows, [Fraction(0)] * (total + 1), i, j)
            basis[i] = j
        i += 1
    rows = [row[:width] + [row[-1]] for row in rows]
    obj = cost + [Fraction(0)]
    for i, b in enumerate(basis):
        if obj[b]:
            f = obj[b]
            obj = [a - f * v for a, v in zip(obj, rows[i])]
    status = _run(rows, obj, basis, [True] * width)
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * width
    for i, b in enumerate(basis):
        x[b] = rows[i][-1]
    return LPResult("optimal", tuple(x[:nvar]), -obj[-1])


def feasible_point(A_ub=(), b_ub=(), A_eq=(), b_eq=(), nvar: int | None = None,
                   free: Iterable[int] = ()) -> tuple[Fraction, ...] | None:
    if nvar is None:
        nvar = len((A_ub or A_eq)[0])
    res = linprog_max([0] * nvar, A_ub, b_ub, A_eq, b_eq, free)
    return res.x if res.status == "optimal" else None

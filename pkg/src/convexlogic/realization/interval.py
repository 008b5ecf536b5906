"""A piecewise-affine fold of [a', b'] onto [x, y], identity on [x, y].

The map is continuous, affine between consecutive knots, and its restriction
to the open interval (a', b') is an open surjection onto [x, y].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    lo_closed: bool
    hi_closed: bool

    def __str__(self):
        return f"{'[' if self.lo_closed else '('}{self.lo}, {self.hi}{']' if self.hi_closed else ')'}"

    def contains(self, t) -> bool:
        above = t > self.lo or (self.lo_closed and t == self.lo)
        below = t < self.hi or (self.hi_closed and t == self.hi)
        return above and below


def open_interval(lo, hi) -> Interval:
    return Interval(Fraction(lo), Fraction(hi), False, False)


class PiecewiseAffineIntervalMap:
    def __init__(self, a_, x, a, b, y, b_):
        vals = [Fraction(v) for v in (a_, x, a, b, y, b_)]
        if any(p >= q for p, q in zip(vals, vals[1:])):
            raise ValueError("need a' < x < a < b < y < b'")
        self.a_, self.x, self.a, self.b, self.y, self.b_ = vals
        self.knots = (self.a_, self.x, self.a, self.b, self.y, self.b_)
        self.values = (self.a, self.x, self.a, self.b, self.y, self.b)

    @property
    def domain(self) -> Interval:
        return Interval(self.a_, self.b_, True, True)

    @property
    def codomain(self) -> Interval:
        return Interval(self.x, self.y, True, True)

    def pieces(self) -> Iterator[tuple[Fraction, Fraction, Fraction, Fraction]]:
        """``(t0, t1, f(t0), f(t1))`` for each affine piece."""
        for i in range(len(self.knots) - 1):
            yield self.knots[i], self.knots[i + 1], self.values[i], self.values[i + 1]

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        if not self.a_ <= t <= self.b_:
            raise ValueError(f"{t} is outside [a', b']")
        for t0, t1, v0, v1 in self.pieces():
            if t <= t1:
                return v0 + (v1 - v0) * (t - t0) / (t1 - t0)
        raise AssertionError("unreachable")

    def image(self, iv: Interval) -> Interval:
        """Exact image of a sub-interval (min and max are at knots or ends)."""
        if not (self.a_ <= iv.lo <= iv.hi <= self.b_):
            raise ValueError("interval must lie inside [a', b']")
        if iv.lo == iv.hi:
            v = self(iv.lo)
            return Interval(v, v, True, True)
        # (value, attained?) candidates
        cands = [(self(iv.lo), iv.lo_closed), (self(iv.hi), iv.hi_closed)]
        cands += [(v, True) for k, v in zip(self.knots, self.values) if iv.lo < k < iv.hi]
        # interior points of the interval near the ends are attained too, but
        # their values lie strictly between, so only the list above matters
        lo = min(v for v, _ in cands)
        hi = max(v for v, _ in cands)
        return Interval(lo, hi, any(v == lo and att for v, att in cands),
                        any(v == hi and att for v, att in cands))

    def is_relatively_open(self, iv: Interval) -> bool:
        """Open in [x, y]: each end is open unless it is the matching end of [x, y]."""
        lo_ok = not iv.lo_closed or iv.lo == self.x
        hi_ok = not iv.hi_closed or iv.hi == self.y
        return lo_ok and hi_ok


def build_interval_surjection(a_, x, a, b, y, b_) -> PiecewiseAffineIntervalMap:
    return PiecewiseAffineIntervalMap(a_, x, a, b, y, b_)


def stated_cases(f: PiecewiseAffineIntervalMap, alpha, beta) -> list[tuple[int, Interval]]:
    """Closed-form image claims for the open interval ``(alpha, beta)``, one per
    case whose hypotheses hold, as ``(case number, predicted image)``.  They are
    kept verbatim so they can be compared with :meth:`image`."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    out = []
    if f.x <= alpha and beta <= f.y:
        out.append((1, Interval(alpha, beta, False, False)))
    if alpha <= f.x and f.y <= beta:
        out.append((2, Interval(f.x, f.y, True, True)))
    if alpha <= f.x and beta <= f.y:
        out.append((3, Interval(f.x, beta, True, False)))
    return out

"""Frame validity, up-reductions, Jankov-Fine validity, and the BD_n / PL_n tests."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

from ..formula import Formula, atoms, bd_formula, evaluate
from .algebra import DEFAULT_CAP, up_algebra
from .morphism import PosetMap
from .poset import Poset, PosetError


@dataclass(frozen=True)
class Validity:
    """Result of :func:`frame_validates`; truthy when the formula is valid."""
    valid: bool
    valuation: dict[str, frozenset[str]] | None = None
    point: str | None = None

    def __bool__(self):
        return self.valid


def frame_validates(poset: Poset, phi: Formula, cap: int = DEFAULT_CAP) -> Validity:
    """Check ``poset |= phi`` by brute force over valuations of the atoms of ``phi``.

    Truth is upward persistent, so a formula fails somewhere iff it fails at a
    minimal point, and what happens at ``m`` only depends on ``up(m)``.  We
    therefore enumerate valuations into ``Up(up(m))`` for each minimal ``m``;
    those are also upsets of the whole frame, so a refuting valuation is a
    genuine countermodel on ``poset``.
    """
    names = atoms(phi)
    for m in poset.minimal():
        alg = up_algebra(poset.restrict(poset.up(m)), cap)
        for values in product(alg.carrier, repeat=len(names)):
            val = dict(zip(names, values))
            if m not in evaluate(phi, alg, val):
                return Validity(False, val, m)
    return Validity(True)


def satisfies_bd(poset: Poset, n: int) -> bool:
    """``poset |= BD_n``, i.e. height at most ``n``."""
    return len(poset) == 0 or poset.height() <= n


def satisfies_bd_schema(poset: Poset, n: int, cap: int = DEFAULT_CAP) -> bool:
    """Formula-level cross-check of :func:`satisfies_bd` (``bd_{n+1}`` counts points)."""
    return frame_validates(poset, bd_formula(n + 1), cap).valid


@dataclass(frozen=True)
class PLVerdict:
    """Pass/fail for PL_n; ``clause`` is ``"i"`` (height), ``"ii"`` (a depth-1
    point with more than two strict successors) or ``"iii"`` (a deeper point
    whose strict upset is disconnected)."""
    ok: bool
    clause: str | None = None
    witness: str | None = None

    def __bool__(self):
        return self.ok


def satisfies_pl(poset: Poset, n: int | float | None = None) -> PLVerdict:
    """Structural PL_n test; ``n=None`` (or ``math.inf``) skips the height clause."""
    if len(poset) == 0:
        return PLVerdict(True)
    if n is not None and n != math.inf and poset.height() > n:
        worst = max(poset.height_of(x) for x in poset)
        return PLVerdict(False, "i", min(x for x in poset if poset.height_of(x) == worst))
    for x in poset.by_height():
        d = poset.depth_of(x)
        above = poset.strict_up(x)
        if d == 1 and len(above) > 2:
            return PLVerdict(False, "ii", x)
        if d > 1 and len(poset.connected_components(above)) > 1:
            return PLVerdict(False, "iii", x)
    return PLVerdict(True)


# ---------------------------------------------------------------------------
# up-reductions

@dataclass(frozen=True)
class UpReduction:
    domain: frozenset[str]
    map: PosetMap = field(repr=False)


def _extend(poset: Poset, target: Poset, order: list[str], i: int,
            assign: dict[str, str], root: str) -> bool:
    if i == len(order):
        return True
    x = order[i]
    image_above = frozenset(assign[y] for y in poset.strict_up(x))
    last = i == len(order) - 1
    for y in target.by_height():
        if last and y != root:
            continue
        if target.up(y) != image_above | {y}:
            continue
        if target.depth_of(y) > poset.depth_of(x):
            continue
        assign[x] = y
        if _extend(poset, target, order, i + 1, assign, root):
            return True
        del assign[x]
    return False


def find_up_reduction(poset: Poset, target: Poset) -> UpReduction | None:
    """Find an upward-closed ``U`` and a surjective p-morphism ``U -> target``.

    ``target`` must be rooted.  Any up-reduction restricts to one defined on
    ``up(x)`` for a preimage ``x`` of the root, so only principal upsets are
    tried (largest first).  Inside ``U`` points are assigned in decreasing
    height, so the whole of ``f(strict_up(x))`` is known when ``x`` is reached
    and the p-morphism condition fixes the candidates for ``f(x)``:
    ``{f(x)} | f(strict_up(x))`` must be exactly ``up(f(x))``.  Sending the
    bottom of ``U`` to the root makes the map onto.
    """
    root = target.root()
    if root is None:
        raise PosetError("up-reduction target must be rooted")
    need = target.height()
    starts = sorted(poset, key=lambda x: (-len(poset.up(x)), x))
    for x0 in starts:
        dom = poset.up(x0)
        if poset.depth_of(x0) < need or len(dom) < len(target):
            continue
        order = sorted(dom, key=lambda z: (-poset.height_of(z), z))
        assign: dict[str, str] = {}
        if _extend(poset, target, order, 0, assign, root):
            sub = poset.restrict(dom)
            return UpReduction(dom, PosetMap(sub, target, dict(assign)))
    return None


def validates_jankov_fine(poset: Poset, target: Poset) -> bool:
    """``poset |= chi(target)``: no up-reduction of ``poset`` onto ``target``."""
    if not target.is_rooted():
        raise PosetError("Jankov-Fine formulas are defined for rooted frames")
    return find_up_reduction(poset, target) is None

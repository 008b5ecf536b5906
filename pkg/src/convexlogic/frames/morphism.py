"""Order maps between frames and the p-morphism test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .poset import Poset, PosetError


@dataclass(frozen=True)
class PosetMap:
    source: Poset
    target: Poset
    assignment: Mapping[str, str]

    def __post_init__(self):
        missing = [x for x in self.source if x not in self.assignment]
        if missing:
            raise PosetError(f"map is not total; unassigned {missing[:5]}")
        stray = [y for y in self.assignment.values() if y not in self.target]
        if stray:
            raise PosetError(f"map hits unknown target elements {sorted(set(stray))[:5]}")

    def __call__(self, x: str) -> str:
        return self.assignment[x]

    def image(self, xs=None) -> frozenset[str]:
        xs = self.source.elements if xs is None else xs
        return frozenset(self.assignment[x] for x in xs)

    def is_surjective(self) -> bool:
        return self.image() == frozenset(self.target.elements)

    def then(self, other: "PosetMap") -> "PosetMap":
        """Composite ``other ∘ self``."""
        return PosetMap(self.source, other.target,
                        {x: other(self(x)) for x in self.source})


@dataclass(frozen=True)
class MorphismCheck:
    """Outcome of :func:`is_p_morphism`; truthy on success.

    On failure ``kind`` is ``"monotone"`` (witness ``(x, y)`` with ``x <= y`` but
    ``f(x) </= f(y)``) or ``"back"`` (witness ``(x, y)`` with ``y >= f(x)`` but no
    ``x' >= x`` mapping to ``y``).
    """
    ok: bool
    kind: str | None = None
    witness: tuple[str, str] | None = None

    def __bool__(self):
        return self.ok


def is_p_morphism(f: PosetMap) -> MorphismCheck:
    src, tgt = f.source, f.target
    for x in src.by_height():
        fx = f(x)
        for y in sorted(src.up(x)):
            if not tgt.leq(fx, f(y)):
                return MorphismCheck(False, "monotone", (x, y))
        reached = f.image(src.up(x))
        for y in sorted(tgt.up(fx)):
            if y not in reached:
                return MorphismCheck(False, "back", (x, y))
    return MorphismCheck(True)


def is_order_isomorphism(f: PosetMap) -> bool:
    src, tgt = f.source, f.target
    if len(src) != len(tgt) or not f.is_surjective():
        return False
    return all(src.leq(a, b) == tgt.leq(f(a), f(b)) for a in src for b in src)


def identity(poset: Poset) -> PosetMap:
    return PosetMap(poset, poset, {x: x for x in poset})

"""Nerves of posets, their standard-basis realisation, and the chain-hull test
for arbitrary vertex assignments."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Mapping, Sequence

from ..frames.morphism import PosetMap
from ..frames.poset import Poset
from .convex import hulls_meet
from .complex import SimplicialComplex
from .linalg import Point, affinely_independent, as_point, unit

CHAIN_SEP = "<"


def chain_name(poset: Poset, chain) -> str:
    return CHAIN_SEP.join(poset.sort_chain(chain))


def nerve(poset: Poset) -> tuple[Poset, PosetMap]:
    """Poset of non-empty chains under inclusion, with the ``max`` p-morphism."""
    chains = poset.chains()
    names = {c: chain_name(poset, c) for c in chains}
    pairs = []
    for c in chains:
        for x in poset:
            if x not in c:
                d = c | {x}
                if d in names:
                    pairs.append((names[c], names[d]))
    N = Poset(sorted(names.values()), pairs)
    top = {names[c]: poset.sort_chain(c)[-1] for c in chains}
    return N, PosetMap(N, poset, top)


def nabla(poset: Poset) -> SimplicialComplex:
    """Chains spanned by standard basis vectors, ``e_i`` for the i-th element."""
    m = len(poset)
    index = {x: i for i, x in enumerate(poset.elements)}
    verts = [unit(i, m) for i in range(m)]
    return SimplicialComplex(verts, [[index[x] for x in c] for c in poset.maximal_chains()])


@dataclass(frozen=True)
class HullCheck:
    ok: bool
    pair: tuple[tuple[str, ...], tuple[str, ...]] | None = None
    witness: Point | None = None

    def __bool__(self):
        return self.ok


def chain_hull_disjointness(poset: Poset, alpha: Mapping[str, Sequence]) -> HullCheck:
    """Conv alpha[X] and Conv alpha[Y] must be disjoint for disjoint chains X, Y.

    Disjoint chains sit inside maximal chains M1, M2 and can be enlarged to
    ``(M1 - M2) | S`` and ``(M2 - M1) | (common - S)`` for some split S of the
    common part, so only those enlarged pairs are tested.
    """
    pts = {x: as_point(alpha[x]) for x in poset}
    for c in poset.maximal_chains():
        if not affinely_independent([pts[x] for x in c]):
            raise ValueError(f"alpha maps chain {c} to affinely dependent points")
    maxi = [frozenset(c) for c in poset.maximal_chains()]
    seen = set()
    for m1, m2 in combinations_with_replacement(maxi, 2):
        common = sorted(m1 & m2)
        for mask in range(1 << len(common)):
            s = {common[i] for i in range(len(common)) if mask >> i & 1}
            X = frozenset((m1 - m2) | s)
            Y = frozenset((m2 - m1) | (set(common) - s))
            if not X or not Y or (X, Y) in seen or (Y, X) in seen:
                continue
            seen.add((X, Y))
            hit = hulls_meet([pts[x] for x in sorted(X)], [pts[y] for y in sorted(Y)])
            if hit is not None:
                return HullCheck(False, (tuple(poset.sort_chain(X)), tuple(poset.sort_chain(Y))), hit)
    return HullCheck(True)

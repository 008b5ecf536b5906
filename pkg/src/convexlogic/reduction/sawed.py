"""Plane trees and sawed trees."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from ..frames.poset import Poset, PosetError


class SawedTreeError(ValueError):
    pass


@dataclass(frozen=True)
class PlaneTree:
    """A rooted tree whose tops all have the same height, with a plane ordering
    ``tops_order`` (every ``up(x) & tops`` is an interval of it)."""
    tree: Poset
    tops_order: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "tops_order", tuple(self.tops_order))
        T = self.tree
        if len(T) == 0 or not T.is_rooted():
            raise SawedTreeError("plane tree must be non-empty and rooted")
        for x in T:
            if len(T.predecessors(x)) > 1:
                raise SawedTreeError(f"{x!r} has more than one immediate predecessor")
        if sorted(self.tops_order) != sorted(T.tops()):
            raise SawedTreeError("tops_order must list every top exactly once")
        if len({T.height_of(t) for t in self.tops_order}) != 1:
            raise SawedTreeError("all tops must have the same height")
        pos = {t: i for i, t in enumerate(self.tops_order)}
        for x in T:
            idx = sorted(pos[t] for t in T.up(x) if t in pos)
            if idx[-1] - idx[0] + 1 != len(idx):
                raise SawedTreeError(f"tops above {x!r} are not an interval of the plane order")

    @property
    def root(self) -> str:
        return self.tree.root()

    def children(self, x: str) -> tuple[str, ...]:
        """Immediate successors, left to right."""
        pos = {t: i for i, t in enumerate(self.tops_order)}
        leftmost = lambda y: min(pos[t] for t in self.tree.up(y) if t in pos)
        return tuple(sorted(self.tree.successors(x), key=leftmost))


@dataclass(frozen=True)
class SawedTree:
    """A plane tree plus saw nodes ``saws[i]`` above ``tops[i]`` and ``tops[i+1]``."""
    plane: PlaneTree
    saws: tuple[str, ...]
    poset: Poset = field(repr=False)

    @property
    def tree(self) -> Poset:
        return self.plane.tree

    @property
    def tops_order(self) -> tuple[str, ...]:
        return self.plane.tops_order

    @property
    def root(self) -> str:
        return self.plane.root

    def height(self) -> int:
        return self.poset.height()

    def to_dict(self) -> dict[str, Any]:
        return {"elements": list(self.poset.elements),
                "covers": [list(c) for c in sorted(self.poset.covers)],
                "tops_order": list(self.tops_order),
                "saw_nodes": list(self.saws)}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "SawedTree":
        from ..frames.io import poset_from_dict
        if "tops_order" not in data or "saw_nodes" not in data:
            raise SawedTreeError("sawed tree JSON needs 'tops_order' and 'saw_nodes'")
        return from_poset(poset_from_dict(data), data["tops_order"], data["saw_nodes"])


def _fresh(prefix: str, taken: set[str]) -> str:
    i = 1
    while f"{prefix}{i}" in taken:
        i += 1
    return f"{prefix}{i}"


def build_sawed_tree(pt: PlaneTree, saw_names: Sequence[str] | None = None) -> SawedTree:
    """Add a saw node over each adjacent pair of tops."""
    T = pt.tree
    k = len(pt.tops_order)
    if T.height() == 0:
        raise SawedTreeError("base tree must have positive height")
    if k < 2:
        raise SawedTreeError("a sawed tree needs at least two tops")
    if saw_names is None:
        taken = set(T.elements)
        saw_names = []
        for _ in range(k - 1):
            # s1, s2, ... unless clashing with the tree's names
            name = f"s{len(saw_names) + 1}"
            if name in taken:
                name = _fresh(f"s{len(saw_names) + 1}_", taken)
            taken.add(name)
            saw_names.append(name)
    saw_names = tuple(saw_names)
    if len(saw_names) != k - 1 or len(set(saw_names)) != k - 1 or set(saw_names) & set(T.elements):
        raise SawedTreeError("need k-1 distinct fresh saw names")
    tops = pt.tops_order
    rel = list(T.covers)
    for i, s in enumerate(saw_names):
        rel += [(tops[i], s), (tops[i + 1], s)]
    F = Poset([*T.elements, *saw_names], rel)
    return SawedTree(pt, saw_names, F)


def from_poset(F: Poset, tops_order: Sequence[str], saws: Sequence[str]) -> SawedTree:
    """Recover the sawed-tree structure of ``F`` and check it matches exactly."""
    saws = tuple(saws)
    if not set(saws) <= set(F.elements):
        raise SawedTreeError("saw nodes must be elements of the frame")
    try:
        T = F.restrict([x for x in F.elements if x not in set(saws)])
    except PosetError as exc:
        raise SawedTreeError(str(exc)) from None
    st = build_sawed_tree(PlaneTree(T, tuple(tops_order)), saws)
    if st.poset != F:
        raise SawedTreeError("frame does not match the sawed tree on its plane tree")
    return st


def random_plane_tree(rng: random.Random, height: int, max_tops: int = 8,
                      branching: Sequence[float] = (0.45, 0.4, 0.15)) -> PlaneTree:
    """Random plane tree of the given height with 2..max_tops tops.

    Every node below the top level gets 1, 2 or 3 children with the given
    probabilities; children are ordered as created, tops in depth-first order.
    """
    if height < 1:
        raise ValueError("height must be at least 1")
    for _ in range(1000):
        names = ["n0"]
        rel: list[tuple[str, str]] = []
        kids: dict[str, list[str]] = {"n0": []}
        layer = ["n0"]
        for _h in range(height):
            nxt = []
            for p in layer:
                r = rng.random()
                c = 1 if r < branching[0] else 2 if r < branching[0] + branching[1] else 3
                for _ in range(c):
                    name = f"n{len(names)}"
                    names.append(name)
                    rel.append((p, name))
                    kids[p].append(name)
                    kids[name] = []
                    nxt.append(name)
            layer = nxt
        if 2 <= len(layer) <= max_tops:
            order: list[str] = []

            def dfs(x):
                if not kids[x]:
                    order.append(x)
                for y in kids[x]:
                    dfs(y)
            dfs("n0")
            return PlaneTree(Poset(names, rel), tuple(order))
    raise RuntimeError("could not draw a plane tree with the requested number of tops")


def random_sawed_tree(rng: random.Random, height: int, max_tops: int = 8) -> SawedTree:
    """Random sawed tree of the given height (at least 2)."""
    if height < 2:
        raise ValueError("sawed trees have height at least 2")
    return build_sawed_tree(random_plane_tree(rng, height - 1, max_tops))


def detect_sawed_tree(F: Poset) -> SawedTree | None:
    """Recognise ``F`` as a sawed tree: its tops are the saws, each covering two
    tree tops, and the saws chain the tree tops into a single path."""
    if len(F) < 4 or not F.is_rooted():
        return None
    saws = set(F.tops())
    T_elems = [x for x in F.elements if x not in saws]
    T = F.restrict(T_elems)
    adj: dict[str, list[tuple[str, str]]] = {t: [] for t in T.tops()}
    for s in saws:
        below = F.predecessors(s)
        if len(below) != 2 or any(b not in adj for b in below):
            return None
        adj[below[0]].append((below[1], s))
        adj[below[1]].append((below[0], s))
    ends = sorted(t for t, nb in adj.items() if len(nb) == 1)
    if len(ends) != 2 or any(len(nb) > 2 for nb in adj.values()):
        return None
    order, saw_order = [ends[0]], []
    while len(order) < len(adj):
        nxt = [(t, s) for t, s in adj[order[-1]] if s not in saw_order]
        if not nxt:
            return None
        order.append(nxt[0][0])
        saw_order.append(nxt[0][1])
    try:
        return from_poset(F, order, saw_order)
    except (SawedTreeError, PosetError):
        return None

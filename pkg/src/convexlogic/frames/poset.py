"""Finite posets used as Kripke frames."""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator


class PosetError(ValueError):
    pass


class Poset:
    """A finite strict partial order over named elements.

    ``relations`` may hold any pairs ``(a, b)`` meaning ``a < b``; the order is
    their transitive closure and only the Hasse diagram is kept.  Cycles
    (including ``(a, a)``) are rejected.
    """

    def __init__(self, elements: Iterable[str], relations: Iterable[tuple[str, str]] = ()):
        elems = tuple(elements)
        if len(set(elems)) != len(elems):
            raise PosetError("duplicate element names")
        index = {x: i for i, x in enumerate(elems)}
        succ: dict[str, set[str]] = {x: set() for x in elems}
        for a, b in relations:
            for z in (a, b):
                if z not in index:
                    raise PosetError(f"unknown element {z!r}")
            if a == b:
                raise PosetError(f"cycle through {a!r}")
            succ[a].add(b)

        up: dict[str, frozenset[str]] = {}
        for x in elems:
            seen: set[str] = set()
            stack = list(succ[x])
            while stack:
                y = stack.pop()
                if y == x:
                    raise PosetError(f"cycle through {x!r}")
                if y not in seen:
                    seen.add(y)
                    stack.extend(succ[y])
            up[x] = frozenset(seen | {x})

        down: dict[str, set[str]] = {x: set() for x in elems}
        for x in elems:
            for y in up[x]:
                down[y].add(x)

        covers = set()
        for x in elems:
            strict = up[x] - {x}
            for y in strict:
                if not any(y in up[z] for z in strict if z != y):
                    covers.add((x, y))

        self.elements = elems
        self.covers = frozenset(covers)
        self._up = up
        self._down = {x: frozenset(v) for x, v in down.items()}
        self._index = index

    # -- basic protocol -----------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return set(self.elements) == set(other.elements) and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((frozenset(self.elements), self.covers))

    def __repr__(self) -> str:
        cov = ", ".join(f"{a}<{b}" for a, b in sorted(self.covers))
        return f"Poset([{', '.join(self.elements)}]; {cov})"

    def _check(self, xs: Iterable[str]) -> frozenset[str]:
        xs = frozenset(xs)
        bad = [x for x in xs if x not in self._index]
        if bad:
            raise PosetError(f"unknown element(s) {sorted(bad)}")
        return xs

    # -- order ---------------------------------------------------------------

    def leq(self, x: str, y: str) -> bool:
        return y in self._up[x]

    def lt(self, x: str, y: str) -> bool:
        return x != y and y in self._up[x]

    def comparable(self, x: str, y: str) -> bool:
        return y in self._up[x] or x in self._up[y]

    def up(self, x: str) -> frozenset[str]:
        return self._up[x]

    def down(self, x: str) -> frozenset[str]:
        return self._down[x]

    def strict_up(self, x: str) -> frozenset[str]:
        return self._up[x] - {x}

    def strict_down(self, x: str) -> frozenset[str]:
        return self._down[x] - {x}

    def upset(self, xs: Iterable[str]) -> frozenset[str]:
        out: set[str] = set()
        for x in self._check(xs):
            out |= self._up[x]
        return frozenset(out)

    def downset(self, xs: Iterable[str]) -> frozenset[str]:
        out: set[str] = set()
        for x in self._check(xs):
            out |= self._down[x]
        return frozenset(out)

    def is_upset(self, xs: Iterable[str]) -> bool:
        xs = self._check(xs)
        return all(self._up[x] <= xs for x in xs)

    @cached_property
    def _succ(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {x: [] for x in self.elements}
        for a, b in self.covers:
            out[a].append(b)
        return {x: tuple(sorted(v)) for x, v in out.items()}

    @cached_property
    def _pred(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {x: [] for x in self.elements}
        for a, b in self.covers:
            out[b].append(a)
        return {x: tuple(sorted(v)) for x, v in out.items()}

    def successors(self, x: str) -> tuple[str, ...]:
        """Immediate successors of ``x``, sorted by name."""
        return self._succ[x]

    def predecessors(self, x: str) -> tuple[str, ...]:
        return self._pred[x]

    # -- height and depth ----------------------------------------------------

    @cached_property
    def _heights(self) -> dict[str, int]:
        h: dict[str, int] = {}
        for x in sorted(self.elements, key=lambda z: len(self._down[z])):
            preds = self._pred[x]
            h[x] = 1 + max(h[p] for p in preds) if preds else 0
        return h

    @cached_property
    def _depths(self) -> dict[str, int]:
        d: dict[str, int] = {}
        for x in sorted(self.elements, key=lambda z: len(self._up[z])):
            succ = self._succ[x]
            d[x] = 1 + max(d[s] for s in succ) if succ else 0
        return d

    def height(self) -> int:
        """Length (number of points minus one) of the longest chain."""
        if not self.elements:
            raise PosetError("height of the empty poset is undefined")
        return max(self._heights.values())

    def height_of(self, x: str) -> int:
        return self._heights[x]

    def depth_of(self, x: str) -> int:
        return self._depths[x]

    def tops(self) -> tuple[str, ...]:
        return tuple(sorted(x for x in self.elements if not self._succ[x]))

    def minimal(self) -> tuple[str, ...]:
        return tuple(sorted(x for x in self.elements if not self._pred[x]))

    def root(self) -> str | None:
        mins = self.minimal()
        if len(mins) == 1 and len(self._up[mins[0]]) == len(self.elements):
            return mins[0]
        return None

    def is_rooted(self) -> bool:
        return self.root() is not None

    def by_height(self, reverse: bool = False) -> list[str]:
        """Elements sorted by (height, name); ``reverse`` puts the highest first."""
        if reverse:
            return sorted(self.elements, key=lambda z: (-self._heights[z], z))
        return sorted(self.elements, key=lambda z: (self._heights[z], z))

    # -- chains, components, subposets ---------------------------------------

    def is_chain(self, xs: Iterable[str]) -> bool:
        xs = list(xs)
        return all(self.comparable(a, b) for a, b in combinations(xs, 2))

    def sort_chain(self, xs: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(xs, key=lambda z: self._heights[z]))

    def chains(self) -> list[frozenset[str]]:
        """All non-empty chains, each once."""
        out: list[frozenset[str]] = []

        def extend(chain: tuple[str, ...], candidates: list[str]):
            for i, y in enumerate(candidates):
                new = chain + (y,)
                out.append(frozenset(new))
                extend(new, [z for z in candidates[i + 1:] if self.lt(y, z)])

        extend((), self.by_height())
        return out

    def maximal_chains(self) -> list[tuple[str, ...]]:
        """Maximal chains listed bottom-up; built from covers of minimal elements."""
        out: list[tuple[str, ...]] = []

        def walk(path: tuple[str, ...]):
            succ = self._succ[path[-1]]
            if not succ:
                out.append(path)
            for y in succ:
                walk(path + (y,))

        for m in self.minimal():
            walk((m,))
        return out

    def connected_components(self, subset: Iterable[str] | None = None) -> list[frozenset[str]]:
        """Zigzag-connected classes of ``subset`` (default: everything)."""
        pool = sorted(self._check(self.elements if subset is None else subset))
        parent = {x: x for x in pool}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in combinations(pool, 2):
            if self.comparable(a, b):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        groups: dict[str, set[str]] = {}
        for x in pool:
            groups.setdefault(find(x), set()).add(x)
        return sorted((frozenset(g) for g in groups.values()), key=min)

    def restrict(self, subset: Iterable[str]) -> "Poset":
        keep = self._check(subset)
        elems = [x for x in self.elements if x in keep]
        rel = [(a, b) for a in elems for b in self._up[a] if b != a and b in keep]
        return Poset(elems, rel)

    def relabel(self, mapping: dict[str, str]) -> "Poset":
        return Poset([mapping[x] for x in self.elements],
                     [(mapping[a], mapping[b]) for a, b in self.covers])

    def order_pairs(self) -> list[tuple[str, str]]:
        """All strict pairs ``(a, b)`` with ``a < b``."""
        return sorted((a, b) for a in self.elements for b in self._up[a] if a != b)

"""Poset generators for property tests: exhaustive (up to isomorphism) and random."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations, product

from .poset import Poset


def _signature(n: int, pairs: frozenset[tuple[int, int]]):
    ups = [sum(1 for a, b in pairs if a == i) for i in range(n)]
    downs = [sum(1 for a, b in pairs if b == i) for i in range(n)]
    return [(downs[i], ups[i]) for i in range(n)]


def _canonical(n: int, pairs: frozenset[tuple[int, int]]) -> tuple:
    sig = _signature(n, pairs)
    order = sorted(range(n), key=lambda i: sig[i])
    groups: list[list[int]] = []
    for i in order:
        if groups and sig[groups[-1][0]] == sig[i]:
            groups[-1].append(i)
        else:
            groups.append([i])
    best = None
    for choice in product(*(permutations(g) for g in groups)):
        flat = [i for g in choice for i in g]
        pos = {old: new for new, old in enumerate(flat)}
        key = tuple(sorted((pos[a], pos[b]) for a, b in pairs))
        if best is None or key < best:
            best = key
    return (tuple(sorted(sig)), best)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[frozenset[tuple[int, int]], ...]:
    """Strict orders on ``range(n)`` up to isomorphism, as sets of pairs."""
    if n == 0:
        return (frozenset(),)
    out: dict[tuple, frozenset[tuple[int, int]]] = {}
    new = n - 1
    for pairs in _classes(n - 1):
        below = {i: {a for a, b in pairs if b == i} for i in range(n - 1)}
        # the new maximal point sits above a down-closed set D
        for mask in range(1 << (n - 1)):
            d = {i for i in range(n - 1) if mask >> i & 1}
            if any(not below[i] <= d for i in d):
                continue
            grown = frozenset(pairs | {(i, new) for i in d})
            key = _canonical(n, grown)
            out.setdefault(key, grown)
    return tuple(out[k] for k in sorted(out))


def all_posets(n: int, prefix: str = "x") -> list[Poset]:
    """One poset per isomorphism class on ``n`` points."""
    names = [f"{prefix}{i}" for i in range(n)]
    return [Poset(names, [(names[a], names[b]) for a, b in pairs]) for pairs in _classes(n)]


def all_rooted_posets(n: int, prefix: str = "x") -> list[Poset]:
    """Rooted posets on ``n`` points up to isomorphism (root named ``r``)."""
    if n < 1:
        return []
    out = []
    for p in all_posets(n - 1, prefix):
        out.append(Poset(["r", *p.elements], [("r", x) for x in p] + list(p.covers)))
    return out


def random_poset(n: int, rng: random.Random, density: float | None = None,
                 prefix: str = "x") -> Poset:
    """Random order on ``n`` points: each pair ``i < j`` of a random linear
    extension is related independently with probability ``density``."""
    if density is None:
        density = rng.uniform(0.15, 0.6)
    names = [f"{prefix}{i}" for i in range(n)]
    rel = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return Poset(names, rel)


def random_rooted_poset(n: int, rng: random.Random, density: float | None = None) -> Poset:
    body = random_poset(n - 1, rng, density)
    return Poset(["r", *body.elements], [("r", x) for x in body] + list(body.covers))


def random_layered_rooted_poset(rng: random.Random, height: int, size: int) -> Poset:
    """Random rooted poset of exactly ``size`` points, ``height`` layers above the root.

    Each point picks one or two covers in the layer below, now and then one
    from further down, which keeps the frames tree-like enough for PL to
    hold reasonably often.
    """
    if size < height + 1:
        raise ValueError("need at least one point per layer")
    widths = [1] * height
    for _ in range(size - 1 - height):
        widths[rng.randrange(height)] += 1
    layers: list[list[str]] = [["r"]]
    rel: list[tuple[str, str]] = []
    count = 0
    for w in widths:
        row = []
        for _ in range(w):
            name = f"x{count}"
            count += 1
            row.append(name)
            below = layers[-1]
            k = 1 if len(below) == 1 or rng.random() < 0.6 else 2
            for b in rng.sample(below, k):
                rel.append((b, name))
            if len(layers) > 2 and rng.random() < 0.15:
                rel.append((rng.choice(rng.choice(layers[1:-1])), name))
        layers.append(row)
    return Poset([x for layer in layers for x in layer], rel)


def random_pl_frame(rng: random.Random, height: int, max_size: int, tries: int = 20000) -> Poset:
    """Rejection sampler for rooted PL frames of exactly the given height.

    The size is drawn uniformly first and kept while sampling, so large frames
    are not crowded out by the much higher acceptance rate of small ones.
    """
    from .logic import satisfies_pl
    while True:
        size = rng.randint(height + 1, max_size)
        for _ in range(tries):
            P = random_layered_rooted_poset(rng, height, size)
            if P.height() == height and satisfies_pl(P, height):
                return P

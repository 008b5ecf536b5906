"""The Heyting algebra of upsets of a finite frame, and its prime-filter spectrum."""

from __future__ import annotations

from .morphism import PosetMap
from .poset import Poset

DEFAULT_CAP = 2 ** 20


class CarrierTooLarge(RuntimeError):
    pass


def enumerate_upsets(poset: Poset, cap: int = DEFAULT_CAP) -> list[frozenset[str]]:
    """All upward-closed subsets, ordered by size then sorted names.

    Elements are decided top-down, so including ``x`` only needs every strict
    successor of ``x`` to be in already.
    """
    order = poset.by_height(reverse=True)
    found: list[frozenset[str]] = []

    def grow(i: int, chosen: frozenset[str]):
        if i == len(order):
            found.append(chosen)
            if len(found) > cap:
                raise CarrierTooLarge(
                    f"upset algebra of a {len(poset)}-element frame exceeds the cap of {cap}")
            return
        x = order[i]
        grow(i + 1, chosen)
        if poset.strict_up(x) <= chosen:
            grow(i + 1, chosen | {x})

    grow(0, frozenset())
    found.sort(key=lambda u: (len(u), sorted(u)))
    return found


class UpsetAlgebra:
    """``Up(P)``: meet is intersection, join is union, and
    ``implies(U, V) = {x : up(x) & U <= V}``."""

    def __init__(self, poset: Poset, cap: int = DEFAULT_CAP):
        self.poset = poset
        self.carrier: tuple[frozenset[str], ...] = tuple(enumerate_upsets(poset, cap))
        self.top = frozenset(poset.elements)
        self.bottom = frozenset()
        self._impl: dict[tuple[frozenset[str], frozenset[str]], frozenset[str]] = {}

    def __len__(self):
        return len(self.carrier)

    def __contains__(self, u) -> bool:
        return self.poset.is_upset(u) if u <= self.top else False

    def meet(self, a: frozenset[str], b: frozenset[str]) -> frozenset[str]:
        return a & b

    def join(self, a: frozenset[str], b: frozenset[str]) -> frozenset[str]:
        return a | b

    def implies(self, a: frozenset[str], b: frozenset[str]) -> frozenset[str]:
        key = (a, b)
        hit = self._impl.get(key)
        if hit is None:
            up = self.poset.up
            hit = frozenset(x for x in self.poset.elements if (up(x) & a) <= b)
            self._impl[key] = hit
        return hit

    def leq(self, a, b) -> bool:
        return a <= b


def up_algebra(poset: Poset, cap: int = DEFAULT_CAP) -> UpsetAlgebra:
    return UpsetAlgebra(poset, cap)


def _is_prime_generator(alg: UpsetAlgebra, gen: frozenset[str]) -> bool:
    # up(gen) is prime iff gen != 0 and gen <= b | c forces gen <= b or gen <= c.
    # In a finite lattice that is the same as gen not lying below the join of
    # every b with gen </= b (a prime gen below that join would sit below one of them).
    if not gen:
        return False
    rest = frozenset().union(*(b for b in alg.carrier if not gen <= b))
    return not gen <= rest


def prime_filters(alg: UpsetAlgebra) -> list[frozenset[frozenset[str]]]:
    """Prime filters of the (finite, hence principal-filtered) lattice."""
    out = []
    for gen in alg.carrier:
        if _is_prime_generator(alg, gen):
            out.append(frozenset(u for u in alg.carrier if gen <= u))
    return out


def _filter_name(members: frozenset[frozenset[str]]) -> str:
    gen = frozenset.intersection(*members)
    return "^{" + ",".join(sorted(gen)) + "}"


def named_prime_filters(alg: UpsetAlgebra) -> dict[str, frozenset[frozenset[str]]]:
    """Prime filters keyed by the name their spectrum point gets (``^{generator}``)."""
    return {_filter_name(f): f for f in prime_filters(alg)}


def prime_filter_spectrum(alg: UpsetAlgebra) -> Poset:
    """The prime filters of ``alg`` ordered by inclusion."""
    names = named_prime_filters(alg)
    rel = [(a, b) for a, fa in names.items() for b, fb in names.items() if a != b and fa < fb]
    return Poset(sorted(names), rel)


def canonical_embedding(poset: Poset, alg: UpsetAlgebra | None = None) -> PosetMap:
    """``x -> {U : x in U}``, as a map into the prime-filter spectrum."""
    if alg is None:
        alg = up_algebra(poset)
    named = named_prime_filters(alg)
    lookup = {f: name for name, f in named.items()}
    assignment = {}
    for x in poset:
        filt = frozenset(u for u in alg.carrier if x in u)
        if filt not in lookup:
            raise ValueError(f"{{U : {x} in U}} is not a prime filter")
        assignment[x] = lookup[filt]
    return PosetMap(poset, prime_filter_spectrum(alg), assignment)

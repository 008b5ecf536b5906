"""Named frames used throughout: forks, chains, the three-fork and the Scott frame.

The two forbidden frames of PL are pinned down by the configurations they
detect: the three-fork is a root with three pairwise incomparable maximal
points (a point whose strict upset has three components), and the Scott frame
is a root below a 2-chain ``u1 < u2`` and a separate point ``v1`` (two
components, one of positive height).
"""

from __future__ import annotations

import re

from .poset import Poset

ROOT = "bot"


def fork(k: int) -> Poset:
    if k < 1:
        raise ValueError("a fork needs at least one prong")
    tops = [f"t{i}" for i in range(1, k + 1)]
    return Poset([ROOT, *tops], [(ROOT, t) for t in tops])


def chain(k: int) -> Poset:
    if k < 1:
        raise ValueError("a chain needs at least one point")
    names = [f"c{i}" for i in range(k)]
    return Poset(names, list(zip(names, names[1:])))


def point() -> Poset:
    return Poset(["r"])


def scott() -> Poset:
    return Poset([ROOT, "u1", "u2", "v1"], [(ROOT, "u1"), ("u1", "u2"), (ROOT, "v1")])


def three_fork() -> Poset:
    return fork(3)


def two_fork() -> Poset:
    return fork(2)


def fig3_frame() -> Poset:
    """The height-3 sawed tree realised in a square pyramid (tops c, d, e; saws s, t)."""
    rel = [(ROOT, "a"), (ROOT, "b"), ("a", "c"), ("a", "d"), ("b", "e"),
           ("c", "s"), ("d", "s"), ("d", "t"), ("e", "t")]
    return Poset([ROOT, "a", "b", "c", "d", "e", "s", "t"], rel)


_FIXED = {
    "point": point,
    "three_fork": three_fork,
    "scott": scott,
    "two_fork": two_fork,
    "fig3": fig3_frame,
}

BUILTIN_NAMES = (*_FIXED, "<k>-fork", "<k>-chain")


def builtin_frame(name: str) -> Poset:
    if name in _FIXED:
        return _FIXED[name]()
    m = re.fullmatch(r"(\d+)-(fork|chain)", name)
    if m:
        k = int(m.group(1))
        return fork(k) if m.group(2) == "fork" else chain(k)
    raise KeyError(f"unknown builtin frame {name!r}; known: {', '.join(BUILTIN_NAMES)}")


def is_builtin(name: str) -> bool:
    return name in _FIXED or re.fullmatch(r"\d+-(fork|chain)", name) is not None

"""Zigzag paths between tops of a PL frame.

A zigzag path ``a_0 ... a_m`` runs inside the strict upset of the root,
alternating between tops (even positions) and points ``a_i`` whose strict
upset is exactly ``{a_{i-1}, a_{i+1}}`` (odd positions).
"""

from __future__ import annotations

from collections import deque

from ..frames.logic import satisfies_pl
from ..frames.poset import Poset


class ZigzagError(ValueError):
    pass


def is_zigzag(F: Poset, path: list[str]) -> bool:
    """Both clauses, literally, at every index (plus adjacency to the root's upset)."""
    root = F.root()
    if not path or len(path) % 2 == 0:
        return False
    for i, a in enumerate(path):
        if a == root:
            return False
        above = F.strict_up(a)
        if i % 2 == 0 and above:
            return False
        if i % 2 == 1 and set(above) != {path[i - 1], path[i + 1]}:
            return False
    return True


def zigzag_path(F: Poset, s: str, t: str, check_pl: bool = True) -> list[str]:
    """Shortest zigzag path from top ``s`` to top ``t``.

    The path lives in the bipartite graph joining each top to the depth-1
    points below it; a shortest walk never revisits a top, so every odd point
    sits below two distinct path neighbours, which by PL are all it has above.
    Ties are broken by element name.
    """
    root = F.root()
    if root is None:
        raise ZigzagError("frame must be rooted")
    if F.height() <= 1:
        raise ZigzagError("frame must have height at least 2")
    if check_pl:
        verdict = satisfies_pl(F, F.height())
        if not verdict:
            raise ZigzagError(f"frame fails PL (clause {verdict.clause} at {verdict.witness!r})")
    tops = set(F.tops())
    if s not in tops or t not in tops:
        raise ZigzagError("endpoints must be top elements")
    if s == t:
        return [s]
    below: dict[str, list[str]] = {u: [] for u in tops}
    for x in F:
        if x != root and F.depth_of(x) == 1:
            for u in F.strict_up(x):
                below[u].append(x)
    for u in below:
        below[u].sort()
    prev: dict[str, tuple[str, str] | None] = {s: None}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u == t:
            break
        for x in below[u]:
            for v in sorted(F.strict_up(x)):
                if v not in prev:
                    prev[v] = (x, u)
                    queue.append(v)
    if t not in prev:
        raise ZigzagError(f"no zigzag path from {s!r} to {t!r}")
    path = [t]
    while prev[path[-1]] is not None:
        x, u = prev[path[-1]]
        path += [x, u]
    path.reverse()
    if not is_zigzag(F, path):
        raise ZigzagError(f"constructed path {path} violates the zigzag clauses")
    return path

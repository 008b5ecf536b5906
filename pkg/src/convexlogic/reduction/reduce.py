"""Reduce a rooted PL frame to a sawed tree of the same height, together with a
surjective p-morphism from the sawed tree onto the frame."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..frames.logic import satisfies_pl
from ..frames.morphism import PosetMap, is_p_morphism
from ..frames.poset import Poset
from .sawed import PlaneTree, SawedTree, build_sawed_tree
from .zigzag import zigzag_path


class ReductionError(ValueError):
    pass


@dataclass
class _Piece:
    """A sawed tree under construction: tree covers, ordered tops, saws, map."""
    root: str
    covers: list[tuple[str, str]] = field(default_factory=list)
    tops: list[str] = field(default_factory=list)
    saws: list[str] = field(default_factory=list)
    image: dict[str, str] = field(default_factory=dict)
    height: int = 0  # height of the sawed tree (tree height + 1)


class _Names:
    def __init__(self, taken):
        self.taken = set(taken)
        self.count = 0

    def __call__(self, image: str) -> str:
        while True:
            self.count += 1
            name = f"{image}.{self.count}"
            if name not in self.taken:
                self.taken.add(name)
                return name


def _visit_all(F: Poset, root: str, path: list[str]) -> list[str]:
    """Extend a zigzag path so that it visits every depth-1 non-root point."""
    path = list(path)
    for x in sorted(F):
        if x == root or F.depth_of(x) != 1 or x in path:
            continue
        above = sorted(F.strict_up(x))
        s, t = (above[0], above[-1])
        at = path.index(s)
        path[at + 1:at + 1] = [x, t, x, s]
    return path


def _ladder(F: Poset, names: _Names) -> _Piece:
    """Height-2 sawed tree onto a rooted frame of height at most 2."""
    root = F.root()
    tops = sorted(F.tops())
    h = F.height()
    if h == 0:
        path = [root]
    elif h == 1:
        # the root itself plays the odd point; it has at most two tops above
        path = [tops[0], root, tops[-1]]
    else:
        path = [tops[0]]
        for a, b in zip(tops, tops[1:]):
            path += zigzag_path(F, a, b, check_pl=False)[1:]
        path = _visit_all(F, root, path)
    m = len(path) - 1
    piece = _Piece(names(root), height=2)
    piece.image[piece.root] = root
    # w_{-1}, w_1, w_3, ..., w_{m+1} are tops; w_0, w_2, ..., w_m are saws
    top_images = [path[0]] + [path[j] for j in range(1, m, 2)] + [path[m]]
    for a in top_images:
        w = names(a)
        piece.tops.append(w)
        piece.covers.append((piece.root, w))
        piece.image[w] = a
    for j in range(0, m + 1, 2):
        w = names(path[j])
        piece.saws.append(w)
        piece.image[w] = path[j]
    return piece


def _pad(piece: _Piece, height: int, names: _Names) -> _Piece:
    """Hang a chain under the root, mapped to the root's image, to reach ``height``."""
    while piece.height < height:
        img = piece.image[piece.root]
        new = names(img)
        piece.covers.append((new, piece.root))
        piece.image[new] = img
        piece.root = new
        piece.height += 1
    return piece


def _build(F: Poset, height: int, names: _Names) -> _Piece:
    n = F.height()
    if n <= 2:
        return _pad(_ladder(F, names), height, names)
    root = F.root()
    subs = []
    for z in F.successors(root):
        sub = F.restrict(F.up(z))
        subs.append(_build(sub, n - 1, names))
    piece = _Piece(names(root), height=n)
    piece.image[piece.root] = root
    for i, g in enumerate(subs):
        piece.covers += g.covers + [(piece.root, g.root)]
        piece.image.update(g.image)
        if i:
            prev = subs[i - 1]
            t_prev = prev.image[prev.saws[-1]]
            s_next = g.image[g.saws[0]]
            path = zigzag_path(F, t_prev, s_next, check_pl=False)
            ws = []
            for j, a in enumerate(path):
                w = names(a)
                piece.image[w] = a
                ws.append(w)
                if j % 2 == 1:
                    # rope ladder of n-2 points under each odd w
                    below = piece.root
                    for _ in range(n - 2):
                        r = names(a)
                        piece.image[r] = a
                        piece.covers.append((below, r))
                        below = r
                    piece.covers.append((below, w))
            piece.tops += ws[1::2]
            piece.saws += ws[0::2]
        piece.tops += g.tops
        piece.saws += g.saws
    # saws run between consecutive tops: check the interleaving is consistent
    assert len(piece.saws) == len(piece.tops) - 1
    return _pad(piece, height, names)


@dataclass(frozen=True)
class Reduction:
    tree: SawedTree
    map: PosetMap


def reduce_to_sawed_tree(F: Poset) -> Reduction:
    """Sawed tree ``F'`` of height ``height(F)`` and a surjective p-morphism ``F' -> F``."""
    if F.root() is None:
        raise ReductionError("frame must be rooted")
    n = F.height()
    if n < 2:
        raise ReductionError("reduction needs height at least 2 (use the low-height realisers)")
    verdict = satisfies_pl(F, n)
    if not verdict:
        raise ReductionError(f"frame fails PL_{n}: clause ({verdict.clause}) at {verdict.witness!r}")
    names = _Names(F.elements)
    piece = _build(F, n, names)
    T = Poset([piece.root, *(b for _, b in piece.covers)], piece.covers)
    st = build_sawed_tree(PlaneTree(T, tuple(piece.tops)), piece.saws)
    f = PosetMap(st.poset, F, dict(piece.image))
    check = is_p_morphism(f)
    if not check:
        raise ReductionError(f"constructed map is not a p-morphism ({check.kind} at {check.witness})")
    if not f.is_surjective():
        raise ReductionError("constructed map is not surjective")
    if st.height() != n:
        raise ReductionError("constructed sawed tree has the wrong height")
    return Reduction(st, f)

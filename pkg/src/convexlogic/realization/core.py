"""Geometric realisations of frames and their verifier.

A realisation is a simplicial complex ``Sigma`` with a label on every simplex,
plus (for sawed trees) convex "saw cells": a vertex set whose hull, minus its
removed facets, is sent to a saw node.  Openness of the induced map is checked
on the incidence poset of cells: a simplex lies below a saw cell when it sits
inside one of the cell's removed facets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterable, Mapping, Sequence

from ..frames.io import FrameFormatError, poset_from_dict, poset_to_dict
from ..frames.morphism import PosetMap, is_p_morphism
from ..frames.poset import Poset
from ..geometry.complex import (
    Face, SimplicialComplex, check_complex, dimension, face_key, locate, parse_face_key,
)
from ..geometry.convex import convex_membership, face_functional, hulls_meet, max_over_intersection
from ..geometry.linalg import Point, add, affine_rank, combine, dot, format_point, parse_point, scale, unit
from ..geometry.nerve import chain_hull_disjointness, nabla
from ..reduction.drawing import plane_drawing
from ..reduction.sawed import SawedTree, from_poset


class RealizationError(ValueError):
    pass


class RealizationFormatError(ValueError):
    pass


@dataclass(frozen=True)
class SawCell:
    vertices: frozenset[int]
    removed_facets: tuple[frozenset[int], ...]
    label: str


@dataclass
class ConvexRealization:
    frame: Poset
    n: int
    complex: SimplicialComplex
    labels: dict[Face, str]
    saw_cells: list[SawCell] = field(default_factory=list)
    alpha: dict[str, int] | None = None
    sawed: SawedTree | None = None

    @property
    def vertices(self) -> tuple[Point, ...]:
        return self.complex.vertices

    def cell_points(self, cell: SawCell) -> list[Point]:
        return [self.vertices[i] for i in sorted(cell.vertices)]

    def chain_poset(self) -> Poset | None:
        """The poset whose chains index the simplices (via ``alpha``)."""
        if self.alpha is None:
            return None
        return self.frame.restrict(self.alpha)

    def to_dict(self) -> dict[str, Any]:
        frame = self.sawed.to_dict() if self.sawed is not None else poset_to_dict(self.frame)
        out = {
            "frame": frame,
            "n": self.n,
            "vertices": [format_point(v) for v in self.vertices],
            "simplices": [sorted(s) for s in self.complex.maximal()],
            "saw_cells": [{"vertices": sorted(c.vertices),
                           "removed_facets": [sorted(f) for f in c.removed_facets],
                           "label": c.label} for c in self.saw_cells],
            "labels": {face_key(s): self.labels[s] for s in self.complex.sorted_simplices()},
        }
        if self.alpha is not None:
            out["alpha"] = dict(sorted(self.alpha.items()))
        return out

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ConvexRealization":
        try:
            fd = data["frame"]
            sawed = None
            if "tops_order" in fd and "saw_nodes" in fd:
                frame = poset_from_dict(fd)
                sawed = from_poset(frame, fd["tops_order"], fd["saw_nodes"])
            else:
                frame = poset_from_dict(fd)
            verts = [parse_point(v) for v in data["vertices"]]
            if len({len(v) for v in verts}) > 1:
                raise RealizationFormatError("vertices have different dimensions")
            cx = SimplicialComplex(verts, data["simplices"])
            labels = {parse_face_key(k): v for k, v in data["labels"].items()}
            cells = [SawCell(frozenset(c["vertices"]), tuple(frozenset(f) for f in c["removed_facets"]),
                             c["label"]) for c in data.get("saw_cells", [])]
            alpha = data.get("alpha")
            n = data["n"]
        except RealizationFormatError:
            raise
        except (KeyError, TypeError, ValueError, FrameFormatError) as exc:
            raise RealizationFormatError(f"malformed realisation: {exc}") from None
        if not isinstance(n, int):
            raise RealizationFormatError("'n' must be an integer")
        if set(labels) != set(cx.simplices):
            raise RealizationFormatError("labels must cover exactly the simplices")
        for lab in [*labels.values(), *(c.label for c in cells)]:
            if lab not in frame:
                raise RealizationFormatError(f"label {lab!r} is not a frame element")
        for c in cells:
            if any(not 0 <= i < len(verts) for i in c.vertices) or any(not f <= c.vertices for f in c.removed_facets):
                raise RealizationFormatError("saw cell refers to unknown vertices")
        if alpha is not None:
            if any(x not in frame or not 0 <= i < len(verts) for x, i in alpha.items()):
                raise RealizationFormatError("bad alpha entry")
        return cls(frame, n, cx, labels, cells, alpha, sawed)


# ---------------------------------------------------------------------------
# constructions

def realize_sawed_tree(F: SawedTree, verify: bool = True, samples: int = 100, seed: int = 0) -> ConvexRealization:
    """Vertices ``alpha(x) = e_{height(x)} + d_1(x) e_n`` in dimension ``n + 1``."""
    n = F.height()
    k = len(F.tops_order)
    if n < 2:
        raise RealizationError("sawed tree realisation needs height at least 2")
    if k < 2:
        raise RealizationError("sawed tree needs at least two tops")
    d = plane_drawing(F)
    T = F.tree
    order = T.by_height()
    alpha = {x: i for i, x in enumerate(order)}
    verts = [add(unit(T.height_of(x), n + 1), scale(d.x(x), unit(n, n + 1))) for x in order]
    chains = [[alpha[x] for x in c] for c in T.maximal_chains()]
    cx = SimplicialComplex(verts, chains)
    labels = {s: T.sort_chain(order[i] for i in s)[-1] for s in cx.simplices}
    tau = [frozenset(alpha[x] for x in T.down(t)) for t in F.tops_order]
    cells = [SawCell(tau[i] | tau[i + 1], (tau[i], tau[i + 1]), s) for i, s in enumerate(F.saws)]
    r = ConvexRealization(F.poset, n, cx, labels, cells, alpha, F)
    if verify:
        report = verify_realization(r, samples=samples, seed=seed)
        if not report.ok:
            raise RealizationError("realisation failed verification:\n" + report.text())
    return r


def realize_nerve(F: Poset, verify: bool = True, samples: int = 100, seed: int = 0) -> ConvexRealization:
    """``nabla F`` with every simplex labelled by the top of its chain."""
    cx = nabla(F)
    elems = F.elements
    labels = {s: F.sort_chain(elems[i] for i in s)[-1] for s in cx.simplices}
    n = F.height() if len(F) else -1
    r = ConvexRealization(F, n, cx, labels, [], {x: i for i, x in enumerate(elems)})
    if verify:
        report = verify_realization(r, samples=samples, seed=seed)
        if not report.ok:
            raise RealizationError("nerve realisation failed verification:\n" + report.text())
    return r


def realize_low_height(F: Poset) -> ConvexRealization:
    """Point, 1-fork and 2-fork as labelled cells of [0, 1] (or a single point)."""
    root = F.root()
    if root is None or F.height() > 1 or len(F.tops()) > 2:
        raise RealizationError("low-height realiser handles the point, the 1-fork and the 2-fork")
    h = Fraction(1, 2)
    if len(F) == 1:
        cx = SimplicialComplex([(0,)], [[0]])
        return ConvexRealization(F, 0, cx, {frozenset({0}): root})
    tops = F.tops()
    if len(tops) == 1:
        cx = SimplicialComplex([(0,), (1,)], [[0]])
        cells = [SawCell(frozenset({0, 1}), (frozenset({0}),), tops[0])]
    else:
        cx = SimplicialComplex([(0,), (h,), (1,)], [[1]])
        cells = [SawCell(frozenset({0, 1}), (frozenset({1}),), tops[0]),
                 SawCell(frozenset({1, 2}), (frozenset({1}),), tops[1])]
    return ConvexRealization(F, 1, cx, {s: root for s in cx.simplices}, cells)


# ---------------------------------------------------------------------------
# cells and labels

def cell_name(i: int) -> str:
    return f"xi{i + 1}"


def cell_poset(r: ConvexRealization) -> Poset:
    cx = r.complex
    names = {s: face_key(s) for s in cx.simplices}
    pairs = [(names[s], names[s | {i}]) for s in cx.simplices
             for i in range(len(cx.vertices)) if i not in s and (s | {i}) in cx.simplices]
    for j, cell in enumerate(r.saw_cells):
        pts = r.cell_points(cell)
        for s in cx.simplices:
            if any(s <= f for f in cell.removed_facets):
                bary = combine([Fraction(1, len(s))] * len(s), cx.points(s))
                if not convex_membership(pts, bary):
                    raise RealizationError(f"simplex {sorted(s)} is not inside saw cell {j + 1}")
                pairs.append((names[s], cell_name(j)))
    return Poset([*sorted(names.values()), *(cell_name(j) for j in range(len(r.saw_cells)))], pairs)


def induced_cell_map(r: ConvexRealization) -> PosetMap:
    """Label map from the incidence poset of cells onto the frame."""
    C = cell_poset(r)
    assign = {face_key(s): lab for s, lab in r.labels.items()}
    assign.update({cell_name(j): c.label for j, c in enumerate(r.saw_cells)})
    return PosetMap(C, r.frame, assign)


def _functionals(r: ConvexRealization, cell: SawCell):
    pts = r.cell_points(cell)
    order = sorted(cell.vertices)
    out = []
    for f in cell.removed_facets:
        hf = face_functional(pts, [order.index(i) for i in f])
        if hf is None:
            return None
        out.append(hf)
    return out


def _in_region(r: ConvexRealization, cell: SawCell, funcs, x: Point) -> bool:
    if any(dot(h, x) >= c for h, c in funcs):
        return False
    return convex_membership(r.cell_points(cell), x).inside


def eval_point(r: ConvexRealization, x: Sequence) -> str:
    """Frame element that the realisation map sends ``x`` to."""
    x = tuple(Fraction(v) for v in x)
    if len(x) != len(r.vertices[0]):
        raise ValueError("point has the wrong dimension")
    if not convex_membership(list(r.vertices), x):
        raise ValueError("point lies outside the polytope")
    s = locate(r.complex, x)
    if s is not None:
        return r.labels[s]
    hits = []
    for cell in r.saw_cells:
        funcs = _functionals(r, cell)
        if funcs is None:
            raise RealizationError("a removed facet is not a facet of its cell")
        if _in_region(r, cell, funcs, x):
            hits.append(cell.label)
    if len(hits) != 1:
        raise RealizationError(f"point is claimed by {len(hits)} saw cells")
    return hits[0]


# ---------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class Report:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __getitem__(self, i: int) -> CheckResult:
        return self.checks[i - 1]

    def text(self) -> str:
        return "\n".join(f"({i}) {c.name}: {'PASS' if c.ok else 'FAIL'}"
                         + (f" - {c.detail}" if c.detail else "")
                         for i, c in enumerate(self.checks, 1))


def _sample_hull(rng: random.Random, pts: Sequence[Point]) -> Point:
    w = [rng.randint(0, 12) for _ in pts]
    if not any(w):
        w[rng.randrange(len(w))] = 1
    tot = sum(w)
    return combine([Fraction(v, tot) for v in w], pts)


def _check_complex(r: ConvexRealization) -> CheckResult:
    cc = check_complex(r.complex)
    if not cc:
        return CheckResult("complex", False, f"{cc.reason} at {cc.pair}")
    P = r.chain_poset()
    if P is None:
        return CheckResult("complex", True, "no vertex embedding; chain hulls not applicable")
    try:
        hc = chain_hull_disjointness(P, {x: r.vertices[i] for x, i in r.alpha.items()})
    except ValueError as exc:
        return CheckResult("complex", False, str(exc))
    if not hc:
        return CheckResult("complex", False, f"chain hulls {hc.pair} meet")
    return CheckResult("complex", True)


def _check_dimension(r: ConvexRealization) -> CheckResult:
    if r.saw_cells:
        rk = affine_rank(list(r.vertices))
        if rk != r.n:
            return CheckResult("dimension", False, f"polytope has dimension {rk}, expected {r.n}")
        for j, cell in enumerate(r.saw_cells):
            if affine_rank(r.cell_points(cell)) != r.n:
                return CheckResult("dimension", False, f"saw cell {j + 1} is not full-dimensional")
        return CheckResult("dimension", True, f"dim {rk}")
    d = dimension(r.complex)
    return CheckResult("dimension", d == r.n, f"dim {d}, expected {r.n}")


def _check_cells(r: ConvexRealization) -> CheckResult:
    cells = r.saw_cells
    if not cells:
        return CheckResult("cell intersections", True, "vacuous (no saw cells)")
    for j, cell in enumerate(cells):
        if _functionals(r, cell) is None:
            return CheckResult("cell intersections", False, f"cell {j + 1}: a removed facet is not a facet")
    for i, j in combinations(range(len(cells)), 2):
        a, b = cells[i], cells[j]
        shared = a.vertices & b.vertices
        if j == i + 1 and not (shared in a.removed_facets and shared in b.removed_facets):
            return CheckResult("cell intersections", False,
                               f"cells {i + 1},{j + 1} do not share exactly a removed facet")
        if j > i + 1 and not any(shared <= f for f in a.removed_facets):
            return CheckResult("cell intersections", False, f"cells {i + 1},{j + 1} share too much")
        P, Q = r.cell_points(a), r.cell_points(b)
        if not shared:
            if hulls_meet(P, Q) is not None:
                return CheckResult("cell intersections", False, f"cells {i + 1},{j + 1} meet")
            continue
        order = sorted(a.vertices)
        hf = face_functional(P, [order.index(v) for v in shared])
        if hf is None:
            return CheckResult("cell intersections", False,
                               f"shared vertices of cells {i + 1},{j + 1} do not span a face")
        value, x = max_over_intersection(P, Q, linear=hf)
        if value is not None and value > 0:
            return CheckResult("cell intersections", False,
                               f"cells {i + 1},{j + 1} overlap at {tuple(map(str, x))}")
    return CheckResult("cell intersections", True, f"{len(cells)} cells, exact")


def _check_hull(r: ConvexRealization, rng: random.Random, samples: int) -> CheckResult:
    if not r.saw_cells:
        return CheckResult("hull coverage", True, "vacuous (no saw cells)")
    verts = list(r.vertices)
    extreme = [i for i in range(len(verts))
               if not convex_membership(verts[:i] + verts[i + 1:], verts[i]).inside] if len(verts) > 1 else [0]
    in_cells = set().union(*(c.vertices for c in r.saw_cells))
    if not set(extreme) <= in_cells:
        return CheckResult("hull coverage", False, "a hull vertex belongs to no saw cell")
    for _ in range(samples):
        x = _sample_hull(rng, verts)
        if not any(convex_membership(r.cell_points(c), x) for c in r.saw_cells):
            return CheckResult("hull coverage", False, f"sample {tuple(map(str, x))} is in no cell")
    return CheckResult("hull coverage", True, f"{len(extreme)} hull vertices, {samples} samples (sampled)")


def _check_map(r: ConvexRealization) -> CheckResult:
    try:
        f = induced_cell_map(r)
    except (RealizationError, ValueError) as exc:
        return CheckResult("open surjective map", False, str(exc))
    pm = is_p_morphism(f)
    if not pm:
        return CheckResult("open surjective map", False, f"{pm.kind} condition fails at {pm.witness}")
    if not f.is_surjective():
        return CheckResult("open surjective map", False, "label map is not onto the frame")
    return CheckResult("open surjective map", True, f"{len(f.source)} cells")


def _check_partition(r: ConvexRealization, rng: random.Random, samples: int) -> CheckResult:
    cx = r.complex
    tops = cx.maximal()
    funcs = [_functionals(r, c) for c in r.saw_cells]
    if any(f is None for f in funcs):
        return CheckResult("cell partition", False, "a removed facet is not a facet of its cell")
    # exact: regions miss Sigma and each other
    for j, cell in enumerate(r.saw_cells):
        P = r.cell_points(cell)
        for s in tops:
            eps, x = max_over_intersection(P, cx.points(s), strict=funcs[j])
            if eps is not None and eps > 0:
                return CheckResult("cell partition", False, f"cell {j + 1} meets simplex {sorted(s)}")
        for i in range(j):
            eps, x = max_over_intersection(P, r.cell_points(r.saw_cells[i]), strict=funcs[j] + funcs[i])
            if eps is not None and eps > 0:
                return CheckResult("cell partition", False, f"cells {i + 1},{j + 1} overlap")
    # sampled: each point is in exactly one cell
    for _ in range(samples):
        if r.saw_cells:
            x = _sample_hull(rng, list(r.vertices))
        else:
            s = tops[rng.randrange(len(tops))]
            x = _sample_hull(rng, cx.points(s))
        count = 1 if locate(cx, x, tops) is not None else 0
        count += sum(1 for c, f in zip(r.saw_cells, funcs) if _in_region(r, c, f, x))
        if count != 1:
            return CheckResult("cell partition", False, f"sample {tuple(map(str, x))} lies in {count} cells")
    return CheckResult("cell partition", True, f"exact disjointness, {samples} samples")


def verify_realization(r: ConvexRealization, samples: int = 100, seed: int = 0) -> Report:
    rng = random.Random(seed)
    return Report((
        _check_complex(r),
        _check_dimension(r),
        _check_cells(r),
        _check_hull(r, rng, samples),
        _check_map(r),
        _check_partition(r, rng, samples),
    ))

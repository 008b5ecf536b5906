import json
import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from convexlogic.frames import Poset, fig3_frame, fork, is_p_morphism, satisfies_pl, scott
from convexlogic.frames.generate import all_rooted_posets, random_pl_frame
from convexlogic.reduction import (
    DrawingError, PlaneDrawing, PlaneTree, ReductionError, SawedTree, SawedTreeError,
    ZigzagError, build_sawed_tree, check_drawing, detect_sawed_tree, from_poset, is_zigzag,
    plane_drawing, random_plane_tree, random_sawed_tree, reduce_to_sawed_tree, segments_cross,
    zigzag_path,
)


def fig3_tree() -> PlaneTree:
    F = fig3_frame()
    return PlaneTree(F.restrict(["bot", "a", "b", "c", "d", "e"]), ("c", "d", "e"))


# -- sawed trees -----------------------------------------------------------------

def test_build_fig3():
    st_ = build_sawed_tree(fig3_tree(), ["s", "t"])
    assert st_.poset == fig3_frame()
    assert st_.height() == 3 and st_.root == "bot"
    assert fig3_tree().children("bot") == ("a", "b")


def test_default_saw_names():
    st_ = build_sawed_tree(PlaneTree(fork(3), ("t1", "t2", "t3")))
    assert st_.saws == ("s1", "s2")


def test_plane_tree_rejections():
    with pytest.raises(SawedTreeError, match="interval"):
        PlaneTree(fig3_tree().tree, ("c", "e", "d"))
    with pytest.raises(SawedTreeError, match="same height"):
        PlaneTree(Poset("rabc", [("r", "a"), ("r", "b"), ("b", "c")]), ("a", "c"))
    with pytest.raises(SawedTreeError, match="predecessor"):
        PlaneTree(Poset("rabc", [("r", "a"), ("r", "b"), ("a", "c"), ("b", "c")]), ("c",))
    with pytest.raises(SawedTreeError):
        build_sawed_tree(PlaneTree(fork(1), ("t1",)))


def test_from_poset_and_detection():
    st_ = from_poset(fig3_frame(), ("c", "d", "e"), ("s", "t"))
    found = detect_sawed_tree(fig3_frame())
    assert found is not None and found.tops_order == st_.tops_order and found.saws == st_.saws
    assert detect_sawed_tree(scott()) is None
    assert detect_sawed_tree(fork(2)) is None
    with pytest.raises(SawedTreeError):
        from_poset(fig3_frame(), ("c", "d", "e"), ("t", "s"))


@given(st.integers(0, 10_000), st.integers(2, 4))
def test_random_sawed_trees_are_pl_and_detectable(seed, h):
    st_ = random_sawed_tree(random.Random(seed), h, max_tops=6)
    assert st_.height() == h
    assert satisfies_pl(st_.poset, h)
    found = detect_sawed_tree(st_.poset)
    assert found is not None and found.poset == st_.poset
    again = SawedTree.from_dict(json.loads(json.dumps(st_.to_dict())))
    assert again.poset == st_.poset and again.tops_order == st_.tops_order


# -- drawings ----------------------------------------------------------------------

def test_fig3_drawing_coordinates():
    d = plane_drawing(from_poset(fig3_frame(), ("c", "d", "e"), ("s", "t")))
    assert d["bot"] == (Fr(5, 4), 0)
    assert d["a"] == (Fr(1, 2), 1) and d["b"] == (Fr(2), 1)
    assert [d.x(t) for t in "cde"] == [0, 1, 2]
    assert d["s"] == (Fr(1, 2), 3) and d["t"] == (Fr(3, 2), 3)


@given(st.integers(0, 10_000), st.integers(1, 4))
def test_random_plane_drawings_are_planar(seed, h):
    pt = random_plane_tree(random.Random(seed), h, max_tops=7)
    check_drawing(plane_drawing(pt), pt.tops_order)
    check_drawing(plane_drawing(build_sawed_tree(pt)))


def test_segments_cross():
    o, a, b, c = (0, 0), (2, 2), (0, 2), (2, 0)
    assert segments_cross(o, a, b, c)
    assert not segments_cross(o, a, o, b)
    assert segments_cross(o, a, o, (1, 1))           # overlap along a common ray
    assert segments_cross(o, (2, 0), (1, 0), (3, 0))  # collinear overlap
    assert not segments_cross(o, (1, 0), (2, 0), (3, 0))


def test_bad_drawings_rejected():
    P = fork(2)
    with pytest.raises(DrawingError, match="height"):
        check_drawing(PlaneDrawing(P, {"bot": (0, 1), "t1": (-1, 1), "t2": (1, 1)}))
    with pytest.raises(DrawingError, match="injective"):
        check_drawing(PlaneDrawing(P, {"bot": (0, 0), "t1": (0, 1), "t2": (0, 1)}))
    with pytest.raises(DrawingError, match="left to right"):
        check_drawing(PlaneDrawing(P, {"bot": (0, 0), "t1": (1, 1), "t2": (0, 1)}), ("t1", "t2"))


# -- zigzag paths ----------------------------------------------------------------------

def test_zigzag_on_fig3():
    F = fig3_frame()
    assert zigzag_path(F, "s", "t") == ["s", "d", "t"]
    assert zigzag_path(F, "s", "s") == ["s"]
    assert is_zigzag(F, ["s", "d", "t"])
    assert not is_zigzag(F, ["s", "c", "t"])
    assert not is_zigzag(F, ["s", "d"])
    with pytest.raises(ZigzagError):
        zigzag_path(F, "s", "c")
    with pytest.raises(ZigzagError):
        zigzag_path(scott(), "u2", "v1")


@given(st.integers(0, 10_000), st.integers(2, 4))
def test_zigzag_between_all_tops(seed, h):
    F = random_pl_frame(random.Random(seed), h, 10)
    tops = F.tops()
    for s in tops:
        for t in tops:
            path = zigzag_path(F, s, t)
            assert path[0] == s and path[-1] == t and is_zigzag(F, path)


# -- reduction ------------------------------------------------------------------------

def _check(F):
    red = reduce_to_sawed_tree(F)
    assert red.tree.height() == F.height()
    assert is_p_morphism(red.map) and red.map.is_surjective()
    assert red.map.source == red.tree.poset and red.map.target == F
    plane_drawing(red.tree)
    return red


def test_reduce_fig3_and_scott():
    red = _check(fig3_frame())
    assert red.tree.height() == 3
    with pytest.raises(ReductionError, match="PL"):
        reduce_to_sawed_tree(scott())
    with pytest.raises(ReductionError, match="height"):
        reduce_to_sawed_tree(fork(2))
    with pytest.raises(ReductionError, match="rooted"):
        reduce_to_sawed_tree(Poset("ab"))


def test_reduce_every_small_pl_frame():
    count = 0
    for k in range(3, 8):
        for F in all_rooted_posets(k):
            if F.height() >= 2 and satisfies_pl(F, F.height()):
                _check(F)
                count += 1
    assert count > 100


@given(st.integers(0, 10_000), st.integers(2, 4))
def test_reduce_random_pl_frames(seed, h):
    _check(random_pl_frame(random.Random(seed), h, 11))

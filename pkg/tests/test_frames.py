import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from convexlogic.formula import parse
from convexlogic.frames import (
    CarrierTooLarge, Poset, PosetError, PosetMap, builtin_frame, canonical_embedding, chain,
    enumerate_upsets, fig3_frame, find_up_reduction, fork, frame_validates, identity,
    is_order_isomorphism, is_p_morphism, prime_filter_spectrum, satisfies_bd, satisfies_bd_schema,
    satisfies_pl, scott, three_fork, two_fork, up_algebra, validates_jankov_fine,
)
from convexlogic.frames.catalog import is_builtin
from convexlogic.frames.generate import (
    all_posets, all_rooted_posets, random_layered_rooted_poset, random_pl_frame, random_poset,
)
from convexlogic.frames.io import (
    FrameFormatError, map_from_dict, map_to_dict, poset_from_dict, poset_to_dict, to_dot,
)
from oracles import brute_pl, brute_up_reduction, brute_upsets
from strategies import posets


# -- posets -----------------------------------------------------------------

def test_transitive_reduction_of_input():
    P = Poset("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert P.covers == {("a", "b"), ("b", "c")}
    assert P.leq("a", "c") and not P.leq("c", "a")


@pytest.mark.parametrize("rel", [[("a", "a")], [("a", "b"), ("b", "a")], [("a", "b"), ("b", "c"), ("c", "a")]])
def test_cycles_rejected(rel):
    with pytest.raises(PosetError, match="cycle"):
        Poset("abc", rel)


def test_unknown_and_duplicate_elements():
    with pytest.raises(PosetError):
        Poset("ab", [("a", "z")])
    with pytest.raises(PosetError):
        Poset(["a", "a"])


def test_heights_depths_tops_root():
    F = fig3_frame()
    assert F.height() == 3 and len(F) == 8
    assert F.root() == "bot" and F.tops() == ("s", "t")
    assert F.height_of("d") == 2 and F.depth_of("d") == 1 and F.depth_of("bot") == 3
    assert F.strict_up("d") == {"s", "t"}
    assert not Poset("ab").is_rooted()


@given(posets())
def test_order_axioms_and_hasse(P):
    for x in P:
        assert P.leq(x, x)
        for y in P:
            if P.leq(x, y) and P.leq(y, x):
                assert x == y
            for z in P:
                if P.leq(x, y) and P.leq(y, z):
                    assert P.leq(x, z)
    for a, b in P.covers:
        assert not any(P.lt(a, z) and P.lt(z, b) for z in P)


@given(posets())
def test_up_down_duality_and_chains(P):
    for x in P:
        assert all(x in P.down(y) for y in P.up(x))
        assert P.is_upset(P.up(x))
    for c in P.maximal_chains():
        assert P.is_chain(c)
        assert len(c) - 1 <= P.height()
    if len(P):
        assert max(len(c) for c in P.maximal_chains()) - 1 == P.height()


@given(posets())
def test_restrict_keeps_order(P):
    sub = [x for i, x in enumerate(P.elements) if i % 2 == 0]
    Q = P.restrict(sub)
    assert all(Q.leq(a, b) == P.leq(a, b) for a in sub for b in sub)


# -- morphisms ----------------------------------------------------------------

def test_fork_collapse_is_p_morphism():
    f = PosetMap(fork(3), fork(2), {"bot": "bot", "t1": "t1", "t2": "t2", "t3": "t2"})
    assert is_p_morphism(f) and f.is_surjective()


def test_failure_kinds():
    f = PosetMap(chain(2), chain(2), {"c0": "c1", "c1": "c0"})
    check = is_p_morphism(f)
    assert not check and check.kind == "monotone"
    f = PosetMap(two_fork(), chain(2), {"bot": "c0", "t1": "c1", "t2": "c0"})
    check = is_p_morphism(f)
    assert not check and check.kind == "back" and check.witness == ("t2", "c1")
    g = PosetMap(chain(2), chain(3), {"c0": "c0", "c1": "c2"})
    check = is_p_morphism(g)
    assert not check and check.kind == "back"


def test_partial_map_rejected():
    with pytest.raises(PosetError):
        PosetMap(chain(2), chain(2), {"c0": "c0"})


@given(posets())
def test_identity_is_isomorphism(P):
    assert is_p_morphism(identity(P))
    assert is_order_isomorphism(identity(P))


# -- algebra and duality --------------------------------------------------------

@given(posets(max_size=5))
def test_upsets_match_brute_force(P):
    assert set(enumerate_upsets(P)) == set(brute_upsets(P))


@given(posets(max_size=5), st.data())
def test_heyting_laws(P, data):
    alg = up_algebra(P)
    a, b, c = (data.draw(st.sampled_from(alg.carrier)) for _ in range(3))
    # residuation: c <= a -> b  iff  c & a <= b
    assert alg.leq(c, alg.implies(a, b)) == alg.leq(alg.meet(c, a), b)
    assert alg.implies(a, b) in alg
    assert alg.join(a, b) in alg and alg.meet(a, b) in alg
    assert alg.meet(a, alg.join(b, c)) == alg.join(alg.meet(a, b), alg.meet(a, c))


def test_carrier_cap():
    with pytest.raises(CarrierTooLarge):
        enumerate_upsets(Poset([f"x{i}" for i in range(12)]), cap=100)


@given(posets(max_size=5))
def test_esakia_round_trip(P):
    alg = up_algebra(P)
    f = canonical_embedding(P, alg)
    assert is_order_isomorphism(f)
    assert len(prime_filter_spectrum(alg)) == len(P)


# -- logic ------------------------------------------------------------------

def test_two_chain_refutes_classical_laws():
    for text in ["~~p -> p", "((p -> q) -> p) -> p", "p | ~p"]:
        v = frame_validates(chain(2), parse(text))
        assert not v and v.point == "c0" and v.valuation is not None


def test_countermodel_is_upset_valuation():
    v = frame_validates(fig3_frame(), parse("~p | ~~p"))
    assert not v
    assert all(fig3_frame().is_upset(u) for u in v.valuation.values())


@given(posets(max_size=5), st.integers(0, 3))
def test_bd_schema_agrees_with_height(P, n):
    assert satisfies_bd_schema(P, n) == satisfies_bd(P, n)


def test_pl_witnesses():
    v = satisfies_pl(scott(), 2)
    assert not v and (v.clause, v.witness) == ("iii", "bot")
    v = satisfies_pl(three_fork(), 1)
    assert not v and (v.clause, v.witness) == ("ii", "bot")
    v = satisfies_pl(fig3_frame(), 2)
    assert not v and v.clause == "i"
    assert satisfies_pl(fig3_frame(), 3)
    assert satisfies_pl(fig3_frame(), float("inf"))


@given(posets(max_size=6), st.sampled_from([1, 2, 3, None]))
def test_pl_matches_definition(P, n):
    assert bool(satisfies_pl(P, n)) == brute_pl(P, n)


@given(posets(max_size=6), st.sampled_from(["three_fork", "scott", "2-fork", "2-chain", "point"]))
def test_up_reduction_matches_brute_force(P, name):
    Q = builtin_frame(name)
    found = find_up_reduction(P, Q)
    assert (found is None) == (brute_up_reduction(P, Q) is None)
    if found is not None:
        assert P.is_upset(found.domain)
        assert is_p_morphism(found.map) and found.map.is_surjective()


def test_jankov_fine_examples():
    assert not validates_jankov_fine(scott(), scott())
    assert validates_jankov_fine(fig3_frame(), three_fork())
    assert validates_jankov_fine(fig3_frame(), scott())
    assert not validates_jankov_fine(fork(4), three_fork())
    with pytest.raises(PosetError):
        validates_jankov_fine(fork(2), Poset("ab"))


# -- catalog, generators, io -------------------------------------------------------

def test_builtins():
    assert is_builtin("5-fork") and is_builtin("scott") and not is_builtin("nope")
    assert len(builtin_frame("4-fork")) == 5 and builtin_frame("3-chain").height() == 2
    with pytest.raises(KeyError):
        builtin_frame("nope")


def test_poset_counts_up_to_isomorphism():
    # numbers of unlabelled posets on 0..6 points
    assert [len(all_posets(n)) for n in range(7)] == [1, 1, 2, 5, 16, 63, 318]
    assert sum(len(all_rooted_posets(n)) for n in range(1, 7)) == 88


def test_generated_classes_pairwise_non_isomorphic():
    import itertools
    sigs = set()
    for P in all_posets(4):
        # brute canonical form over all relabellings
        best = min(tuple(sorted((perm.index(a), perm.index(b)) for a, b in P.order_pairs()))
                   for perm in (list(p) for p in itertools.permutations(P.elements)))
        sigs.add(best)
    assert len(sigs) == 16


def test_random_generators_are_seeded():
    a = random_poset(6, random.Random(3))
    b = random_poset(6, random.Random(3))
    assert a == b
    P = random_layered_rooted_poset(random.Random(1), 3, 9)
    assert len(P) == 9 and P.is_rooted() and P.height() == 3
    F = random_pl_frame(random.Random(2), 3, 10)
    assert F.height() == 3 and satisfies_pl(F, 3)


@given(posets())
def test_json_round_trip(P):
    assert poset_from_dict(json.loads(json.dumps(poset_to_dict(P)))) == P


def test_map_round_trip():
    f = PosetMap(fork(3), fork(2), {"bot": "bot", "t1": "t1", "t2": "t2", "t3": "t2"})
    g = map_from_dict(json.loads(json.dumps(map_to_dict(f))))
    assert g.assignment == f.assignment and g.source == f.source


@pytest.mark.parametrize("bad", [{}, {"elements": "abc"}, {"elements": ["a", 1]},
                                 {"elements": ["a"], "covers": [["a"]]},
                                 {"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]}])
def test_bad_frame_json(bad):
    with pytest.raises(FrameFormatError):
        poset_from_dict(bad)


def test_dot_export():
    text = to_dot(fig3_frame(), "fig3")
    assert text.startswith('digraph "fig3"') and "rankdir=BT" in text
    assert text.count("->") == len(fig3_frame().covers)

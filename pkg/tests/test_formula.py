import pytest
from hypothesis import given

from convexlogic.formula import (
    BOT, TOP, And, Atom, Implies, Not, Or, ParseError, UnboundAtomError, atoms, bd_formula,
    evaluate, parse, subformulas, to_text,
)
from convexlogic.frames import chain, fork, up_algebra
from convexlogic.frames.generate import all_posets
from oracles import brute_valid
from strategies import formulas, posets


def test_negation_is_implication_to_bottom():
    assert parse("~p") == Implies(Atom("p"), BOT)
    assert Not(Atom("p")) == parse("~p")


def test_precedence_and_associativity():
    assert parse("p & q | r") == Or(And(Atom("p"), Atom("q")), Atom("r"))
    assert parse("p -> q -> r") == Implies(Atom("p"), Implies(Atom("q"), Atom("r")))
    assert parse("p | q | r") == Or(Or(Atom("p"), Atom("q")), Atom("r"))
    assert parse("~p & q") == And(Not(Atom("p")), Atom("q"))
    assert parse("true -> false") == Implies(TOP, BOT)


@pytest.mark.parametrize("text", ["", "p &", "(p", "p q", "->", "p -> -> q", "p ^ q", "~"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse("p & ) q")
    assert info.value.position == 4


def test_printer_minimal_parentheses():
    assert to_text(parse("((p -> q) -> p) -> p")) == "((p -> q) -> p) -> p"
    assert to_text(parse("~~p -> p")) == "~~p -> p"
    assert to_text(parse("(p & q) | r")) == "p & q | r"
    assert to_text(parse("p & (q | r)")) == "p & (q | r)"


@given(formulas())
def test_print_parse_round_trip(phi):
    assert parse(to_text(phi)) == phi


@given(formulas())
def test_atoms_sorted_and_complete(phi):
    names = atoms(phi)
    assert names == sorted(names)
    assert set(names) == {s.name for s in subformulas(phi) if isinstance(s, Atom)}


@given(formulas(8), posets(max_size=4))
def test_algebra_evaluation_matches_forcing(phi, P):
    from oracles import forces
    import itertools
    alg = up_algebra(P)
    names = atoms(phi)
    for values in itertools.islice(itertools.product(alg.carrier, repeat=len(names)), 40):
        val = dict(zip(names, values))
        got = evaluate(phi, alg, val)
        assert got == frozenset(w for w in P if forces(P, val, w, phi))


def test_unbound_atom():
    alg = up_algebra(chain(2))
    with pytest.raises(UnboundAtomError):
        evaluate(parse("p & q"), alg, {"p": alg.top})


def test_bd_schema_shape():
    assert bd_formula(1) == parse("p1 | ~p1")
    assert bd_formula(2) == parse("p2 | (p2 -> p1 | ~p1)")
    with pytest.raises(ValueError):
        bd_formula(0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_bd_schema_against_forcing(k):
    phi = bd_formula(k)
    for n in range(1, 4):
        for P in all_posets(n):
            assert brute_valid(P, phi, atoms(phi)) == (P.height() <= k - 1)


def test_excluded_middle_fails_on_fork_only_through_root():
    from convexlogic.frames import frame_validates
    v = frame_validates(fork(2), parse("p | ~p"))
    assert not v and v.point == "bot"

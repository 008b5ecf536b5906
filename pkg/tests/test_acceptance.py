"""Acceptance criteria 1-9, each at its stated scale and tolerance.

Run with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per
criterion is printed in the terminal summary.  ``python tests/test_acceptance.py``
runs the same checks without pytest.
"""

import random
import time
from fractions import Fraction as Fr

from acceptance_log import record
from oracles import brute_up_reduction
from convexlogic.formula import parse
from convexlogic.frames import (
    canonical_embedding, chain, fig3_frame, find_up_reduction, frame_validates,
    is_order_isomorphism, is_p_morphism, satisfies_bd, satisfies_bd_schema, satisfies_pl, scott,
    three_fork, up_algebra,
)
from convexlogic.frames.generate import all_posets, all_rooted_posets, random_pl_frame, random_poset
from convexlogic.geometry import affine_rank, check_complex, dimension, nabla, nerve
from convexlogic.realization import (
    build_interval_surjection, open_interval, realize_sawed_tree, stated_cases, verify_realization,
)
from convexlogic.reduction import detect_sawed_tree, random_sawed_tree, reduce_to_sawed_tree

SEED = 20241


def test_criterion_1_axiomatisation():
    start = time.perf_counter()
    frames = [P for k in range(1, 7) for P in all_rooted_posets(k)]
    mismatches = 0
    for P in frames:
        jf = brute_up_reduction(P, three_fork()) is None and brute_up_reduction(P, scott()) is None
        for n in (1, 2, 3, 4):
            if bool(satisfies_pl(P, n)) != (satisfies_bd(P, n) and jf):
                mismatches += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed <= 600
    record(1, ok, f"{len(frames)} rooted posets x 4 values of n, {mismatches} mismatches, {elapsed:.1f}s")
    assert ok


def test_criterion_2_up_reduction_search():
    Ps = [P for k in range(0, 7) for P in all_posets(k)]
    Qs = [Q for k in range(1, 5) for Q in all_rooted_posets(k)]
    mismatches = 0
    for P in Ps:
        for Q in Qs:
            found = find_up_reduction(P, Q)
            if found is not None and not (is_p_morphism(found.map) and found.map.is_surjective()
                                          and P.is_upset(found.domain)):
                mismatches += 1
            elif (found is None) != (brute_up_reduction(P, Q) is None):
                mismatches += 1
    record(2, mismatches == 0, f"{len(Ps) * len(Qs)} pairs, {mismatches} mismatches")
    assert mismatches == 0


def test_criterion_3_sawed_trees_are_pl():
    rng = random.Random(SEED)
    failures = total = 0
    for h in (2, 3, 4):
        for _ in range(20):
            T = random_sawed_tree(rng, h)
            total += 1
            failures += not satisfies_pl(T.poset, h) or T.height() != h
    record(3, failures == 0, f"{total} sawed trees of heights 2-4, {failures} failures")
    assert failures == 0


def test_criterion_4_reduction():
    rng = random.Random(SEED)
    start = time.perf_counter()
    failures = total = 0
    largest = 0
    for h in (2, 3, 4):
        for _ in range(20):
            F = random_pl_frame(rng, h, 12)
            total += 1
            try:
                red = reduce_to_sawed_tree(F)
            except Exception:
                failures += 1
                continue
            largest = max(largest, len(red.tree.poset))
            good = (red.tree.height() == F.height() and is_p_morphism(red.map)
                    and red.map.is_surjective())
            failures += not good
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed <= 300
    record(4, ok, f"{total} PL frames (size <= 12), {failures} failures, "
                  f"largest sawed tree {largest} points, {elapsed:.1f}s")
    assert ok


def _realisation_ok(T, seed):
    r = realize_sawed_tree(T, verify=False)
    rep = verify_realization(r, samples=100, seed=seed)
    # check 3 is the exact cell-intersection test, check 2 the affine rank
    return rep.ok and affine_rank(list(r.vertices)) == r.n == T.height(), rep


def test_criterion_5_realisation():
    rng = random.Random(SEED)
    start = time.perf_counter()
    trees = [detect_sawed_tree(fig3_frame())]
    trees += [random_sawed_tree(rng, 2) for _ in range(10)]
    trees += [random_sawed_tree(rng, 3) for _ in range(10)]
    trees += [random_sawed_tree(rng, 4) for _ in range(3)]
    failures = []
    for i, T in enumerate(trees):
        ok, rep = _realisation_ok(T, SEED + i)
        if not ok:
            failures.append((i, rep.text()))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed <= 600
    record(5, ok, f"fig3 + 20 trees of heights 2-3 + 3 of height 4, "
                  f"{len(failures)} failures, {elapsed:.1f}s")
    assert ok, failures


def test_criterion_6_nerves():
    rng = random.Random(SEED)
    failures = 0
    for _ in range(100):
        P = random_poset(rng.randint(1, 7), rng)
        N, top = nerve(P)
        cx = nabla(P)
        good = (N.height() == P.height() and is_p_morphism(top) and top.is_surjective()
                and check_complex(cx).ok and dimension(cx) == P.height())
        failures += not good
    record(6, failures == 0, f"100 posets of size <= 7, {failures} failures")
    assert failures == 0


def test_criterion_7_esakia():
    rng = random.Random(SEED)
    failures = 0
    for _ in range(100):
        P = random_poset(rng.randint(0, 6), rng)
        failures += not is_order_isomorphism(canonical_embedding(P, up_algebra(P)))
    record(7, failures == 0, f"100 posets of size <= 6, {failures} failures")
    assert failures == 0


BATTERY = [
    "p -> p", "p -> q -> p", "(p -> q -> r) -> (p -> q) -> p -> r", "p & q -> p", "p & q -> q",
    "p -> q -> p & q", "p -> p | q", "q -> p | q", "(p -> r) -> (q -> r) -> p | q -> r",
    "false -> p", "p & (q | r) -> p & q | p & r", "p & q | p & r -> p & (q | r)",
    "p -> ~~p", "~~~p -> ~p", "~(p | q) -> ~p & ~q", "~p & ~q -> ~(p | q)",
    "(p -> q) -> ~q -> ~p", "~~(p | ~p)", "(p -> q) & (q -> r) -> p -> r", "p & ~p -> q",
]


def test_criterion_8_formula_engine():
    problems = []
    C2 = chain(2)
    for text in ["~~p->p", "((p->q)->p)->p"]:
        v = frame_validates(C2, parse(text))
        if v.valid:
            problems.append(f"{text} not refuted")
        else:
            shown = ", ".join(f"{k}={{{','.join(sorted(u))}}}" for k, u in v.valuation.items())
            print(f"  2-chain refutes {text} at {v.point} with {shown}")
    posets = [P for k in range(1, 6) for P in all_posets(k)]
    assert len(BATTERY) == 20
    for text in BATTERY:
        phi = parse(text)
        for P in posets:
            if not frame_validates(P, phi):
                problems.append(f"{text} fails on {P}")
    for P in posets:
        for n in range(0, 4):
            if satisfies_bd_schema(P, n) != satisfies_bd(P, n):
                problems.append(f"bd mismatch on {P}, n={n}")
    record(8, not problems, f"2 refutations, 20 theorems on {len(posets)} posets, "
                            f"bd schema vs height, {len(problems)} mismatches")
    assert not problems, problems[:5]


def test_criterion_9_interval_surjection():
    f = build_interval_surjection(0, 1, 2, 3, 4, 5)
    grid = [Fr(k, 4) for k in range(21)]
    pairs = [(a, b) for i, a in enumerate(grid) for b in grid[i + 1:]]
    mismatches = []
    for a, b in pairs:
        image = f.image(open_interval(a, b))
        for case, predicted in stated_cases(f, a, b):
            if image != predicted:
                mismatches.append((case, a, b, str(predicted), str(image)))
    onto = f.image(open_interval(0, 5)) == f.codomain
    ok = onto and not mismatches
    by_case = {c: sum(1 for m in mismatches if m[0] == c) for c in (1, 2, 3)}
    example = ""
    if mismatches:
        c, a, b, pred, got = mismatches[0]
        example = f"; e.g. case {c} on ({a}, {b}) predicts {pred}, actual {got}"
    record(9, ok, f"{len(pairs)} subintervals, onto [x, y]: {onto}, "
                  f"{len(mismatches)} mismatches by case {by_case}{example}")
    assert ok


if __name__ == "__main__":
    import sys
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)

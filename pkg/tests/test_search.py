import random

import pytest

from cyclesplit.examples import (
    example1_algebra,
    example1_algebra_witness,
    example1_cubic,
    example2_cubic,
    example2_matrices,
    example2_matrix_ring,
)
from cyclesplit.ncpoly import from_int_coeffs, poly, right_eval, x_minus
from cyclesplit.rings import ResidueRing, commutator, parse_ring_spec
from cyclesplit.search import (
    FiniteRingCache,
    SearchSpaceTooLargeError,
    SearchTask,
    counterexample_hunt,
    enumerate_splittings,
    find_roots,
    run_task,
)
from cyclesplit.splitting import SplittingWitness, expand, verify_cyclic_splitting
from helpers import random_element


def test_find_roots_example1_algebra_z2():
    algebra = example1_algebra(ResidueRing(2))
    f = example1_cubic(algebra)
    roots = find_roots(f)
    # 3p+1 distinct root elements at p=2 (the four families overlap in
    # parameters, not in elements)
    assert len(roots) == 7
    payloads = {r.payload for r in roots}
    assert (0, 0, 0) in payloads and (1, 1, 1) in payloads
    e1, e2, e3 = (e.payload for e in algebra.basis_elements())
    assert {e1, e2, e3} <= payloads


def test_find_roots_linear():
    ring = parse_ring_spec("Zmod:6")
    c = ring.from_int(4)
    assert find_roots(x_minus(c)) == [c]


def test_find_roots_example2_mod3():
    ring = example2_matrix_ring(parse_ring_spec("Zmod:3"))
    common = example2_matrices(ring)[0]
    f = example2_cubic(ring)
    roots = find_roots(f)
    assert common in roots


def test_enumerate_splittings_example1_commuting_mode():
    algebra = example1_algebra(ResidueRing(2))
    f = example1_cubic(algebra)
    outcome = enumerate_splittings(
        SearchTask(algebra, f, 3, "commuting_splittings_only")
    )
    # scalar coefficients commute with everything, so the commuting filter
    # keeps every splitting
    base = example1_algebra_witness(algebra)
    witnesses = set(outcome.witnesses)
    assert base in witnesses
    ids = {
        w: cid for w, cid in zip(outcome.witnesses, outcome.cycle_ids)
    }
    from cyclesplit.splitting import rotate

    assert ids[rotate(base, 1)] == ids[base] == ids[rotate(base, 2)]
    assert outcome.cycle_count == 8  # p^2 + 2p classes at p = 2
    assert len(outcome.witnesses) == 24


def test_enumerate_splittings_x_squared_mod4():
    ring = parse_ring_spec("Zmod:4")
    f = from_int_coeffs(ring, [0, 0, 1])
    outcome = enumerate_splittings(SearchTask(ring, f, 2, "all_splittings"))
    tuples = {
        tuple(a.payload for a in w.pseudoroots) for w in outcome.witnesses
    }
    assert tuples == {(0, 0), (2, 2)}


def test_enumerate_splittings_degree_one():
    ring = parse_ring_spec("Zmod:5")
    c = ring.from_int(2)
    outcome = enumerate_splittings(SearchTask(ring, x_minus(c), 1, "all_splittings"))
    assert [w.pseudoroots for w in outcome.witnesses] == [(c,)]


def test_commuting_mode_witnesses_satisfy_the_cyclic_law():
    ring = parse_ring_spec("UT:2:Zmod:2")
    rng = random.Random(3)
    for _ in range(12):
        target = expand(
            SplittingWitness(
                ring, ring.one(), tuple(random_element(ring, rng) for _ in range(2))
            )
        )
        outcome = enumerate_splittings(
            SearchTask(ring, target, 2, "commuting_splittings_only")
        )
        for w in outcome.witnesses:
            report = verify_cyclic_splitting(w)
            assert report.commutation_ok
            assert report.rotations_equal and report.all_roots_zero


def test_rightmost_pseudoroot_is_always_a_right_root():
    ring = parse_ring_spec("Mat:2:Zmod:2")
    rng = random.Random(4)
    for _ in range(8):
        target = expand(
            SplittingWitness(
                ring, ring.one(), tuple(random_element(ring, rng) for _ in range(2))
            )
        )
        outcome = enumerate_splittings(SearchTask(ring, target, 2, "all_splittings"))
        assert outcome.witnesses
        for w in outcome.witnesses:
            assert right_eval(target, w.pseudoroots[-1]).is_zero


def test_counterexample_hunt_mat2_z2():
    ring = parse_ring_spec("Mat:2:Zmod:2")
    a = ring.element(((1, 0), (0, 0)))
    b = ring.element(((0, 1), (0, 0)))
    assert not commutator(a, b).is_zero
    f = x_minus(a) * x_minus(b)
    w = counterexample_hunt(f, ring)
    assert w is not None
    assert expand(w) == f
    values = [right_eval(f, x) for x in w.pseudoroots]
    assert any(not v.is_zero for v in values)
    assert values[-1].is_zero  # the rightmost factor is always a right root


def test_counterexample_hunt_commutative_rings_find_nothing():
    for spec in ("Zmod:4", "Zmod:6", "Zmod:9"):
        ring = parse_ring_spec(spec)
        rng = random.Random(5)
        for _ in range(6):
            a, b = random_element(ring, rng), random_element(ring, rng)
            f = x_minus(a) * x_minus(b)
            assert counterexample_hunt(f, ring) is None


def test_example1_witness_is_not_a_counterexample():
    algebra = example1_algebra(ResidueRing(2))
    f = example1_cubic(algebra)
    w = counterexample_hunt(f, algebra)
    # pseudoroots of every splitting of this scalar cubic are roots
    assert w is None


def test_search_is_deterministic():
    algebra = example1_algebra(ResidueRing(3))
    f = example1_cubic(algebra)
    task = SearchTask(algebra, f, 3, "all_splittings")
    first = enumerate_splittings(task)
    second = enumerate_splittings(task)
    assert first.witnesses == second.witnesses
    assert first.cycle_ids == second.cycle_ids

    ring = parse_ring_spec("UT:2:Zmod:2")
    ftarget = from_int_coeffs(ring, [0, 0, -1, 1])
    t2 = SearchTask(ring, ftarget, 3, "all_splittings")
    lines = list(enumerate_splittings(t2).to_json_lines())
    assert lines == list(enumerate_splittings(t2).to_json_lines())


def test_run_task_dispatch():
    ring = parse_ring_spec("Zmod:4")
    f = from_int_coeffs(ring, [0, 0, 1])
    # 2*2 = 4 = 0, so 2 is a root of X^2 alongside 0
    assert run_task(SearchTask(ring, f, 2, "roots_only")) == [
        ring.zero(),
        ring.from_int(2),
    ]
    assert run_task(SearchTask(ring, f, 2, "counterexample_hunt")) is None
    outcome = run_task(SearchTask(ring, f, 2, "all_splittings"))
    assert outcome.cycle_count == 2


def test_size_guards():
    with pytest.raises(Exception):
        SearchTask(parse_ring_spec("Z"), from_int_coeffs(parse_ring_spec("Z"), [1, 1]), 1, "all_splittings")
    big = parse_ring_spec("Mat:3:Zmod:101")  # 101^9 elements
    f = from_int_coeffs(big, [0, 0, 1])
    with pytest.raises(SearchSpaceTooLargeError):
        find_roots(f, big)


def test_finite_ring_cache_matches_element_arithmetic():
    ring = parse_ring_spec("UT:2:Zmod:3")
    cache = FiniteRingCache(ring)
    rng = random.Random(6)
    elems = cache.elements
    for _ in range(300):
        i, j = rng.randrange(len(elems)), rng.randrange(len(elems))
        assert elems[cache.add[i][j]] == elems[i] + elems[j]
        assert elems[cache.mul[i][j]] == elems[i] * elems[j]
        assert elems[cache.neg[i]] == -elems[i]
        assert cache.commutes(i, j) == commutator(elems[i], elems[j]).is_zero
    # polynomial helpers agree with the Element-level implementations
    from cyclesplit.ncpoly import right_divide_linear

    for _ in range(100):
        coeffs = tuple(rng.randrange(len(elems)) for _ in range(4))
        a = rng.randrange(len(elems))
        f = poly(ring, [elems[c] for c in coeffs])
        q, r = right_divide_linear(f, elems[a])
        qi, ri = cache.divide_linear_right(coeffs, a)
        assert elems[ri] == r
        assert [elems[c] for c in qi] == list(q.coeffs) + [ring.zero()] * (
            len(qi) - len(q.coeffs)
        )
        assert elems[cache.right_eval(coeffs, a)] == right_eval(f, elems[a])


def test_cache_linear_factor_product():
    ring = parse_ring_spec("UT:2:Zmod:2")
    cache = FiniteRingCache(ring)
    rng = random.Random(7)
    for _ in range(60):
        idxs = tuple(rng.randrange(len(cache)) for _ in range(3))
        w = SplittingWitness(
            ring, ring.one(), tuple(cache.elements[i] for i in idxs)
        )
        expected = expand(w)
        got = cache.linear_factor_product(idxs)
        padded = list(expected.coeffs) + [ring.zero()] * (
            len(got) - len(expected.coeffs)
        )
        assert [cache.elements[c] for c in got] == padded

import itertools
import json
import random
from fractions import Fraction

import pytest

from cyclesplit.examples import (
    EXAMPLE1_DESCRIPTOR,
    example1_algebra,
    example1_matrices,
    example1_matrix_ring,
    example2_centralizer_element,
    example2_matrices,
    example2_matrix_ring,
    verify_example1_isomorphism,
)
from cyclesplit.rings import (
    Element,
    IntegerRing,
    InfiniteRingError,
    MatrixRing,
    NotInvertibleError,
    RationalRing,
    ResidueRing,
    RingMismatchError,
    SpecParseError,
    TableAlgebra,
    TableAlgebraDescriptor,
    UnsupportedOperationError,
    centralizer_of_set,
    commutator,
    enumerate_elements,
    equals,
    inverse,
    is_unit,
    parse_ring_spec,
)
from helpers import random_element

Z = parse_ring_spec("Z")
Q = parse_ring_spec("Q")

SMALL_FINITE_SPECS = ["Zmod:6", "UT:2:Zmod:2", "Mat:2:Zmod:2", "UT:2:Zmod:3"]
SAMPLED_SPECS = ["Z", "Q", "Mat:2:Z", "Mat:3:Zmod:5", "UT:3:Zmod:4"]


def _axiom_triple_check(x, y, z, ring):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
    one = ring.one()
    zero = ring.zero()
    assert x + zero == x and x * one == x and one * x == x
    assert x + (-x) == zero


@pytest.mark.parametrize("spec", SMALL_FINITE_SPECS)
def test_ring_axioms_exhaustive_small(spec):
    ring = parse_ring_spec(spec)
    elems = list(ring.elements())
    if len(elems) ** 3 > 30_000:
        elems_sample = elems
        rng = random.Random(1)
        triples = [
            (rng.choice(elems_sample), rng.choice(elems_sample), rng.choice(elems_sample))
            for _ in range(2000)
        ]
    else:
        triples = itertools.product(elems, repeat=3)
    for x, y, z in triples:
        _axiom_triple_check(x, y, z, ring)


def test_ring_axioms_exhaustive_512_elements():
    # a finite ring at the 512-element scale, all 512^3 triples checked by
    # vectorized Cayley-table indexing
    pytest.importorskip("numpy")
    from cyclesplit.search import FiniteRingCache
    from helpers import assert_cayley_axioms

    ring = parse_ring_spec("UT:2:Zmod:8")
    assert ring.cardinality == 512
    assert_cayley_axioms(FiniteRingCache(ring))


def test_commutator_antisymmetry_and_examples():
    rng = random.Random(2)
    for spec in SMALL_FINITE_SPECS + SAMPLED_SPECS:
        ring = parse_ring_spec(spec)
        for _ in range(100):
            x, y = random_element(ring, rng), random_element(ring, rng)
            assert commutator(x, y) == -commutator(y, x)
            assert commutator(x, x).is_zero


def test_unit_law_example_mat2():
    ring = parse_ring_spec("Mat:2:Z")
    a1 = ring.element(((0, 0), (0, 1)))
    assert ring.one() * a1 == a1


def test_residue_modular_reduction():
    r6 = parse_ring_spec("Zmod:6")
    assert (r6.from_int(3) * r6.from_int(2)).is_zero
    assert r6.element(-1).payload == 5
    assert r6.from_int(10).payload == 4


def test_table_algebra_reproduces_multiplication_table():
    algebra = example1_algebra(Z)
    a1, a2, a3 = algebra.basis_elements()
    zero = algebra.zero()
    expected = {
        (0, 0): a1, (0, 1): zero, (0, 2): zero,
        (1, 0): a2, (1, 1): zero, (1, 2): zero,
        (2, 0): -a2, (2, 1): a2, (2, 2): a3,
    }
    basis = (a1, a2, a3)
    for (i, j), want in expected.items():
        assert basis[i] * basis[j] == want
    assert a3 * a1 == -a2
    assert algebra.one() == a1 + a2 + a3


def test_table_algebra_rejects_nonassociative_table():
    bad = TableAlgebraDescriptor(
        basis_size=2,
        structure_constants=(((0, 1), (1, 0)), ((1, 0), (0, 1))),
        unit_vector=(1, 0),
    )
    with pytest.raises(ValueError):
        TableAlgebra(bad, Z)


def test_pow_examples():
    ut = example1_matrix_ring(Z)
    _, a2, _ = example1_matrices(ut)
    assert (a2 ** 2).is_zero
    assert (a2 ** 0) == ut.one()
    m3 = example2_matrix_ring(Z)
    b1, _, _ = example2_matrices(m3)
    assert (b1 ** 2).payload == ((0, 0, 4), (2, 0, 0), (0, 2, 0))


def test_commutator_worked_example_values():
    ut = example1_matrix_ring(Z)
    a1, a2, a3 = example1_matrices(ut)
    assert commutator(a1, a2) == -a2
    assert (-a2).payload == ((0, 1), (0, 0))
    m3 = example2_matrix_ring(Z)
    b1, b2, b3 = example2_matrices(m3)
    assert commutator(b1, b2).payload == ((0, 0, 6), (-6, 0, 0), (0, 3, 0))


def test_enumeration_counts_and_order():
    assert [e.payload for e in parse_ring_spec("Zmod:3").elements()] == [0, 1, 2]
    ut = parse_ring_spec("UT:2:Zmod:2")
    elems = list(ut.elements())
    assert len(elems) == 8
    payloads = [e.payload for e in elems]
    assert payloads == sorted(payloads)
    algebra = example1_algebra(ResidueRing(3))
    assert len(list(algebra.elements())) == 27
    with pytest.raises(InfiniteRingError):
        list(enumerate_elements(Z))


def test_enumeration_is_deterministic():
    ring = parse_ring_spec("Mat:2:Zmod:2")
    first = [e.payload for e in ring.elements()]
    second = [e.payload for e in ring.elements()]
    assert first == second


def test_units_and_inverses():
    assert is_unit(Z.one()) and inverse(Z.one()) == Z.one()
    assert is_unit(Z.from_int(-1))
    assert not is_unit(Z.from_int(2))
    with pytest.raises(NotInvertibleError):
        inverse(Z.from_int(2))

    r6 = parse_ring_spec("Zmod:6")
    assert not is_unit(r6.from_int(2))
    assert is_unit(r6.from_int(5))
    assert inverse(r6.from_int(5)) == r6.from_int(5)

    m = parse_ring_spec("Mat:2:Zmod:6")
    x = m.element(((1, 2), (0, 5)))
    assert is_unit(x)
    assert inverse(x) * x == m.one() and x * inverse(x) == m.one()

    q3 = parse_ring_spec("Mat:3:Q")
    y = q3.element(((1, 2, 0), (0, 1, 0), (3, 0, 1)))
    assert is_unit(y) and inverse(y) * y == q3.one()

    # matrices over Z: units need determinant +-1
    mz = parse_ring_spec("Mat:2:Z")
    assert not is_unit(mz.element(((2, 0), (0, 1))))
    u = mz.element(((1, 1), (0, 1)))
    assert is_unit(u) and inverse(u) == mz.element(((1, -1), (0, 1)))


def test_table_algebra_inverse_paths():
    for base_spec in ("Q", "Z", "Zmod:5", "Zmod:6"):
        algebra = example1_algebra(parse_ring_spec(base_spec))
        one = algebra.one()
        assert is_unit(one) and inverse(one) == one
        a1 = algebra.basis_elements()[0]
        assert not is_unit(a1)  # idempotent, not the unit
        with pytest.raises(NotInvertibleError):
            inverse(a1)


def test_ring_mismatch_errors():
    x = Z.one()
    y = parse_ring_spec("Zmod:5").one()
    with pytest.raises(RingMismatchError):
        _ = x + y
    with pytest.raises(RingMismatchError):
        equals(x, y)
    assert x != y  # __eq__ stays total and returns False across rings


def test_elements_coerce_ints():
    r = parse_ring_spec("Zmod:7")
    assert r.from_int(3) + 4 == r.zero()
    assert 2 * r.from_int(4) == r.from_int(1)


def test_isomorphism_table_algebra_to_ut2():
    for base_spec in ("Z", "Zmod:2", "Zmod:3", "Zmod:5"):
        assert verify_example1_isomorphism(parse_ring_spec(base_spec))


def test_centralizer_is_subring_on_finite_rings():
    rng = random.Random(3)
    for spec in ("UT:2:Zmod:2", "Mat:2:Zmod:2", "Zmod:6"):
        ring = parse_ring_spec(spec)
        gens = [random_element(ring, rng) for _ in range(2)]
        desc = centralizer_of_set(ring, gens)
        elems = set(desc.elements)
        assert ring.one() in elems
        for x in desc.elements:
            for y in desc.elements:
                assert x + y in elems
                assert x * y in elems


def test_centralizer_empty_gens_is_whole_ring():
    ring = parse_ring_spec("Zmod:4")
    desc = centralizer_of_set(ring, [])
    assert desc.count == 4
    assert len(desc.elements) == 4


def test_centralizer_example1_algebra_z5_is_scalars():
    algebra = example1_algebra(ResidueRing(5))
    gens = list(algebra.basis_elements())
    desc = centralizer_of_set(algebra, gens)
    assert desc.count == 5
    scalars = {algebra.from_int(n).payload for n in range(5)}
    assert {e.payload for e in desc.elements} == scalars
    # independent oracle: exhaustive scan over all 125 elements
    brute = {
        x.payload
        for x in algebra.elements()
        if all(commutator(x, g).is_zero for g in gens)
    }
    assert {e.payload for e in desc.elements} == brute


def test_centralizer_example2_z6_shape_and_crt_oracle():
    r6 = example2_matrix_ring(parse_ring_spec("Zmod:6"))
    gens = example2_matrices(r6)
    desc = centralizer_of_set(r6, gens)
    # displayed shape: alpha free, 3*beta = 0, gamma free
    shape = {
        example2_centralizer_element(r6, a, b, g).payload
        for a in range(6)
        for b in (0, 2, 4)
        for g in range(6)
    }
    assert desc.count == 108 == 6 * 3 * 6
    assert {e.payload for e in desc.elements} == shape
    # independent oracle: exhaustive scans over the prime factors, then CRT
    counts = {}
    for p in (2, 3):
        rp = example2_matrix_ring(parse_ring_spec(f"Zmod:{p}"))
        gp = example2_matrices(rp)
        counts[p] = sum(
            1
            for x in rp.elements()
            if all(commutator(x, g).is_zero for g in gp)
        )
    assert counts[2] * counts[3] == desc.count


def test_centralizer_example2_q_and_z():
    rq = example2_matrix_ring(Q)
    desc = centralizer_of_set(rq, example2_matrices(rq))
    assert desc.basis is not None and len(desc.basis) == 1
    assert desc.basis[0] == rq.one() or desc.basis[0] == -rq.one()

    rz = example2_matrix_ring(Z)
    desc_z = centralizer_of_set(rz, example2_matrices(rz))
    assert desc_z.basis is not None and len(desc_z.basis) == 1
    assert desc_z.basis[0] in (rz.one(), -rz.one())


def test_centralizer_contains_predicate():
    r6 = example2_matrix_ring(parse_ring_spec("Zmod:6"))
    gens = example2_matrices(r6)
    desc = centralizer_of_set(r6, gens)
    assert desc.contains(r6.one())
    assert desc.contains(example2_centralizer_element(r6, 1, 2, 5))
    assert not desc.contains(gens[0]) or commutator(gens[0], gens[1]).is_zero


def test_spec_grammar_round_trip():
    for spec in (
        "Z",
        "Q",
        "Zmod:12",
        "Mat:3:Zmod:5",
        "UT:2:Mat:2:Z",
        "Mat:2:UT:2:Zmod:4",
    ):
        assert parse_ring_spec(spec).spec_string() == spec
    for bad in ("z", "Zmod:", "Zmod:1", "Mat:0:Z", "Mat:2", "Table:", "Foo"):
        with pytest.raises(SpecParseError):
            parse_ring_spec(bad)


def test_table_spec_file_round_trip(tmp_path):
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(EXAMPLE1_DESCRIPTOR.to_json("Zmod:5")))
    ring = parse_ring_spec(f"Table:{path}")
    assert isinstance(ring, TableAlgebra)
    assert ring.cardinality == 125
    assert ring.spec_string() == f"Table:{path}"
    # a programmatic table algebra has no grammar form
    with pytest.raises(UnsupportedOperationError):
        example1_algebra(Z).spec_string()


def test_element_json_round_trip():
    rng = random.Random(4)
    for spec in ("Z", "Q", "Zmod:9", "Mat:2:Zmod:6", "UT:3:Z", "Mat:2:Q"):
        ring = parse_ring_spec(spec)
        for _ in range(25):
            x = random_element(ring, rng)
            blob = json.dumps(x.to_json())
            assert ring.element_from_json(json.loads(blob)) == x


def test_rational_payloads_canonical():
    q = parse_ring_spec("Q")
    x = q.element(Fraction(4, -6))
    assert x.payload == Fraction(-2, 3)
    assert q.payload_to_json(x.payload) == "-2/3"
    assert q.element_from_json("4/6").payload == Fraction(2, 3)


def test_upper_triangular_validation():
    ut = parse_ring_spec("UT:2:Z")
    with pytest.raises(ValueError):
        ut.element(((1, 0), (1, 1)))
    mat = parse_ring_spec("Mat:2:Z")
    assert mat.element(((1, 0), (1, 1))).payload == ((1, 0), (1, 1))

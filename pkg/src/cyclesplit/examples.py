"""Bundled worked examples driving the ``example1`` and ``example2`` CLI suites.

Example 1 splits the cubic X^3 - X^2, which has a double root over the
scalars, into three distinct monic linear factors inside the upper
triangular 2x2 matrices. The same splitting lives in an abstract rank-3
table algebra on the three pseudoroots; the two presentations are
isomorphic via a_1 -> E22, a_2 -> -E12, a_3 -> E11 + E12.

Example 2 splits X^3 - 4 over 3x3 integer matrices. Reduced modulo 3 the
three pseudoroots collapse to a single matrix and the cubic becomes a
perfect cube, while over the rationals the pseudoroots generate the whole
matrix algebra (nine matrix-unit identities, listed below with exact
rational coefficients).
"""

from __future__ import annotations

from fractions import Fraction

from .ncpoly import NCPoly, from_int_coeffs
from .rings import (
    Element,
    MatrixRing,
    Ring,
    TableAlgebra,
    TableAlgebraDescriptor,
)
from .splitting import SplittingWitness

# -- Example 1: X^3 - X^2 over upper triangular 2x2 matrices -----------------

EXAMPLE1_GRIDS = (
    ((0, 0), (0, 1)),
    ((0, -1), (0, 0)),
    ((1, 1), (0, 0)),
)

# e_i * e_j as coefficient vectors over the basis (e_1, e_2, e_3); the unit
# of the algebra is e_1 + e_2 + e_3.
EXAMPLE1_DESCRIPTOR = TableAlgebraDescriptor(
    basis_size=3,
    structure_constants=(
        ((1, 0, 0), (0, 0, 0), (0, 0, 0)),
        ((0, 1, 0), (0, 0, 0), (0, 0, 0)),
        ((0, -1, 0), (0, 1, 0), (0, 0, 1)),
    ),
    unit_vector=(1, 1, 1),
)

# images of the table-algebra basis inside UT(2): E22, -E12, E11 + E12
EXAMPLE1_ISO_GRIDS = (
    ((0, 0), (0, 1)),
    ((0, -1), (0, 0)),
    ((1, 1), (0, 0)),
)


def example1_cubic(ring: Ring) -> NCPoly:
    """X^3 - X^2 with scalar coefficients embedded into ``ring``."""
    return from_int_coeffs(ring, [0, 0, -1, 1])


def example1_matrix_ring(base: Ring) -> MatrixRing:
    return MatrixRing(2, base, upper_triangular=True)


def example1_matrices(ring: Ring) -> tuple[Element, Element, Element]:
    """The three pseudoroots as elements of a 2x2 matrix ring over any base."""
    return tuple(ring.element(grid) for grid in EXAMPLE1_GRIDS)


def example1_witness(ring: Ring) -> SplittingWitness:
    a1, a2, a3 = example1_matrices(ring)
    return SplittingWitness(ring, ring.one(), (a1, a2, a3))


def example1_algebra(base: Ring) -> TableAlgebra:
    """The rank-3 table algebra generated by the three pseudoroots."""
    return TableAlgebra(EXAMPLE1_DESCRIPTOR, base)


def example1_algebra_witness(algebra: TableAlgebra) -> SplittingWitness:
    e1, e2, e3 = algebra.basis_elements()
    return SplittingWitness(algebra, algebra.one(), (e1, e2, e3))


def example1_isomorphism_images(base: Ring) -> tuple[Element, Element, Element]:
    ring = example1_matrix_ring(base)
    return tuple(ring.element(grid) for grid in EXAMPLE1_ISO_GRIDS)


def verify_example1_isomorphism(base: Ring) -> bool:
    """Check that basis -> (E22, -E12, E11+E12) extends to a unital ring
    isomorphism from the table algebra onto UT(2, base).

    The map is base-linear on the basis; multiplicativity is checked on all
    basis pairs, the unit goes to the identity, and for finite bases
    bijectivity follows from injectivity on coordinates (the images are a
    module basis of UT(2)).
    """
    algebra = example1_algebra(base)
    ring = example1_matrix_ring(base)
    images = example1_isomorphism_images(base)
    basis = algebra.basis_elements()

    def phi(x: Element) -> Element:
        acc = ring.zero()
        for coord, img in zip(x.payload, images):
            acc = acc + _scale(ring, coord, img)
        return acc

    for i in range(3):
        for j in range(3):
            if phi(basis[i] * basis[j]) != phi(basis[i]) * phi(basis[j]):
                return False
    if phi(algebra.one()) != ring.one():
        return False
    # the three images span UT(2) freely: E22, -E12, E11+E12 have unimodular
    # coordinates over (E11, E12, E22), so phi is bijective over any base
    return True


def _scale(ring: MatrixRing, scalar, x: Element) -> Element:
    return ring.element(
        tuple(tuple(ring.base._mul(scalar, e) for e in row) for row in x.payload)
    )


# -- Example 2: X^3 - 4 over 3x3 matrices -------------------------------------

EXAMPLE2_GRIDS = (
    ((0, 2, 0), (0, 0, 2), (1, 0, 0)),
    ((0, -1, 0), (0, 0, 2), (-2, 0, 0)),
    ((0, -1, 0), (0, 0, -4), (1, 0, 0)),
)

EXAMPLE2_COMMUTATOR_GRID = ((0, 0, 6), (-6, 0, 0), (0, 3, 0))


def example2_cubic(ring: Ring) -> NCPoly:
    """X^3 - 4 with scalar coefficients embedded into ``ring``."""
    return from_int_coeffs(ring, [-4, 0, 0, 1])


def example2_matrix_ring(base: Ring) -> MatrixRing:
    return MatrixRing(3, base)


def example2_matrices(ring: Ring) -> tuple[Element, Element, Element]:
    return tuple(ring.element(grid) for grid in EXAMPLE2_GRIDS)


def example2_witness(ring: Ring) -> SplittingWitness:
    a1, a2, a3 = example2_matrices(ring)
    return SplittingWitness(ring, ring.one(), (a1, a2, a3))


def example2_centralizer_element(ring: MatrixRing, alpha, beta, gamma) -> Element:
    """The centralizer shape: rows (a, b, 2c), (-2c, a, b), (-b, c, a)."""
    b = ring.base
    al, be, ga = b._canon(alpha), b._canon(beta), b._canon(gamma)
    two_ga = b._mul(b._from_int(2), ga)
    return ring.element(
        (
            (al, be, two_ga),
            (b._neg(two_ga), al, be),
            (b._neg(be), ga, al),
        )
    )


# The matrix units of Mat(3) as exact rational combinations of words in the
# pseudoroots; each entry is (unit position, ((coefficient, word), ...))
# where a word is a tuple of pseudoroot indices (1-based) multiplied left to
# right. Every coefficient vector is the unique exact solution of its word
# system (the test suite re-derives each one by an independent linear solve),
# so only 2 and 3 need to be invertible in the base for these to make sense.
EXAMPLE2_MATRIX_UNIT_IDENTITIES = (
    ((0, 0), ((Fraction(-1, 9), (1, 1, 2)), (Fraction(-1, 18), (2, 2, 3)))),
    (
        (0, 1),
        (
            (Fraction(-2, 9), (2,)),
            (Fraction(1, 9), (1, 1, 2, 2)),
            (Fraction(-1, 18), (2, 2, 3, 3)),
        ),
    ),
    (
        (0, 2),
        (
            (Fraction(1, 9), (1, 1)),
            (Fraction(-1, 18), (2, 2)),
            (Fraction(1, 9), (3, 3)),
        ),
    ),
    (
        (1, 0),
        (
            (Fraction(1, 18), (1, 1)),
            (Fraction(-1, 9), (2, 2)),
            (Fraction(-1, 9), (3, 3)),
        ),
    ),
    (
        (1, 1),
        (
            (Fraction(1, 3), (1, 2, 2)),
            (Fraction(-5, 18), (1, 1, 2)),
            (Fraction(-2, 9), (2, 2, 3)),
        ),
    ),
    (
        (1, 2),
        (
            (Fraction(2, 9), (1,)),
            (Fraction(2, 9), (2,)),
            (Fraction(-1, 36), (1, 1, 2, 2)),
        ),
    ),
    (
        (2, 0),
        (
            (Fraction(-5, 18), (2,)),
            (Fraction(-1, 36), (1, 1, 2, 2)),
            (Fraction(-1, 36), (2, 2, 3, 3)),
        ),
    ),
    (
        (2, 1),
        (
            (Fraction(2, 9), (1, 1)),
            (Fraction(2, 9), (2, 2)),
            (Fraction(-1, 9), (3, 3)),
        ),
    ),
    (
        (2, 2),
        (
            (Fraction(1, 6), (1, 2, 2)),
            (Fraction(-1, 9), (1, 1, 2)),
            (Fraction(-2, 9), (2, 2, 3)),
        ),
    ),
)


def example2_matrix_unit_check(ring: MatrixRing) -> list[tuple[tuple[int, int], bool]]:
    """Evaluate each matrix-unit identity over ``ring`` (rational base).

    Returns (unit position, holds exactly) per identity.
    """
    a = {i + 1: m for i, m in enumerate(example2_matrices(ring))}
    results = []
    for (r, c), terms in EXAMPLE2_MATRIX_UNIT_IDENTITIES:
        acc = ring.zero()
        for coeff, word in terms:
            prod = ring.one()
            for idx in word:
                prod = prod * a[idx]
            acc = acc + ring.from_base_scalar(coeff) * prod
        target = ring.element(
            tuple(
                tuple(
                    ring.base._from_int(1 if (i, j) == (r, c) else 0)
                    for j in range(3)
                )
                for i in range(3)
            )
        )
        results.append(((r, c), acc == target))
    return results

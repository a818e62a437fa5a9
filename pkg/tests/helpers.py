"""Shared oracles and generators for the test suite."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from cyclesplit.rings import Ring


def det_permutation_oracle(rows):
    """Reference determinant by signed permutation expansion. O(n!)."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def random_element(ring: Ring, rng: random.Random):
    """Deterministic pseudo-random element of any supported ring."""
    card = ring.cardinality
    if card is not None and card <= 4096:
        elems = getattr(ring, "_cached_elems", None)
        if elems is None:
            elems = list(ring.elements())
            ring.__dict__["_cached_elems"] = elems
        return rng.choice(elems)
    return ring.element(_random_payload(ring, rng))


def _random_payload(ring: Ring, rng: random.Random):
    from cyclesplit.rings import (
        IntegerRing,
        MatrixRing,
        RationalRing,
        ResidueRing,
        TableAlgebra,
    )

    if isinstance(ring, IntegerRing):
        return rng.randint(-9, 9)
    if isinstance(ring, RationalRing):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    if isinstance(ring, ResidueRing):
        return rng.randrange(ring.modulus)
    if isinstance(ring, MatrixRing):
        k = ring.size
        grid = [[ring.base._zero_payload() for _ in range(k)] for _ in range(k)]
        for r in range(k):
            start = r if ring.upper_triangular else 0
            for c in range(start, k):
                grid[r][c] = _random_payload(ring.base, rng)
        return tuple(tuple(row) for row in grid)
    if isinstance(ring, TableAlgebra):
        return tuple(
            _random_payload(ring.base, rng)
            for _ in range(ring.descriptor.basis_size)
        )
    raise TypeError(f"no random payloads for {ring!r}")


def random_poly(ring: Ring, rng: random.Random, max_degree: int):
    from cyclesplit.ncpoly import poly

    deg = rng.randint(0, max_degree)
    return poly(ring, [random_element(ring, rng) for _ in range(deg + 1)])


def assert_cayley_axioms(cache, block_size: int = 32):
    """Check associativity of + and * and both distributive laws on every
    triple of a finite ring, via vectorized index-table lookups."""
    import numpy as np

    n = len(cache)
    mul = np.array(cache.mul, dtype=np.int16)
    add = np.array(cache.add, dtype=np.int16)
    idx = np.arange(n)
    for start in range(0, n, block_size):
        b = idx[start : start + block_size]
        mul_b = mul[b]  # (len(b), n)
        add_b = add[b]
        # (x*y)*z == x*(y*z)
        assert np.array_equal(
            mul[mul_b[:, :, None], idx[None, None, :]],
            mul[b[:, None, None], mul[None, :, :]],
        )
        # (x+y)+z == x+(y+z)
        assert np.array_equal(
            add[add_b[:, :, None], idx[None, None, :]],
            add[b[:, None, None], add[None, :, :]],
        )
        # x*(y+z) == x*y + x*z
        assert np.array_equal(
            mul[b[:, None, None], add[None, :, :]],
            add[mul_b[:, :, None], mul_b[:, None, :]],
        )
        # (x+y)*z == x*z + y*z
        assert np.array_equal(
            mul[add_b[:, :, None], idx[None, None, :]],
            add[mul_b[:, None, :], mul[None, :, :]],
        )

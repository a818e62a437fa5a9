"""Exact linear algebra over small commutative scalar domains.

Everything here operates on plain Python scalars, ``int`` for integer and
residue work and :class:`fractions.Fraction` for rationals, arranged as
lists of row lists. Matrices are desk scale (at most a few dozen rows), so
the algorithms favour exactness and clarity over asymptotics. There is no
floating point anywhere.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd, lcm


def det_int(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix, fraction-free (Bareiss)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    m = [[int(e) for e in r] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by the Bareiss identity
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_fraction(rows: list[list[Fraction]]) -> Fraction:
    """Determinant of a square matrix of Fractions (or ints)."""
    n = len(rows)
    scale = Fraction(1)
    int_rows = []
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix is not square")
        fr = [Fraction(e) for e in r]
        den = lcm(*(f.denominator for f in fr)) if fr else 1
        scale *= den
        int_rows.append([int(f * den) for f in fr])
    return Fraction(det_int(int_rows), 1) / scale if n else Fraction(1)


def det_mod(rows: list[list[int]], modulus: int) -> int:
    """Determinant of an integer matrix reduced modulo ``modulus``."""
    return det_int(rows) % modulus


def _rref_fraction(m: list[list[Fraction]]) -> list[int]:
    """Reduce ``m`` in place to reduced row echelon form, return pivot columns."""
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [e * inv for e in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return pivots


def _rref_mod_prime(m: list[list[int]], p: int) -> list[int]:
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if m[i][c] % p != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(e * inv) % p for e in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] % p != 0:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return pivots


def nullspace_rational(rows: list[list], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of {x : rows . x = 0} over the rationals, deterministic order.

    One basis vector per free column, with a 1 in the free position.
    """
    m = [[Fraction(e) for e in r] for r in rows if any(r)]
    if not m:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    pivots = _rref_fraction(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for pi, pc in enumerate(pivots):
            v[pc] = -m[pi][fc]
        basis.append(tuple(v))
    return basis


def nullspace_mod_prime(rows: list[list[int]], ncols: int, p: int) -> list[tuple[int, ...]]:
    """Basis of the kernel of an integer matrix over the prime field Z/p."""
    m = [[e % p for e in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    pivots = _rref_mod_prime(m, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for pi, pc in enumerate(pivots):
            v[pc] = (-m[pi][fc]) % p
        basis.append(tuple(v))
    return basis


def solve_rational(rows: list[list], rhs: list) -> tuple[Fraction, ...] | None:
    """One rational solution of rows . x = rhs (free variables set to 0), or None."""
    if not rows:
        return ()
    ncols = len(rows[0])
    m = [[Fraction(e) for e in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    pivots = _rref_fraction(m)
    if ncols in pivots:  # pivot in the augmented column: inconsistent
        return None
    x = [Fraction(0)] * ncols
    for pi, pc in enumerate(pivots):
        x[pc] = m[pi][ncols]
    return tuple(x)


def solve_mod_prime(rows: list[list[int]], rhs: list[int], p: int) -> tuple[int, ...] | None:
    if not rows:
        return ()
    ncols = len(rows[0])
    m = [[e % p for e in r] + [b % p] for r, b in zip(rows, rhs)]
    pivots = _rref_mod_prime(m, p)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for pi, pc in enumerate(pivots):
        x[pc] = m[pi][ncols]
    return tuple(x)


def smith_diagonalize(rows: list[list[int]], ncols: int):
    """Diagonalize an integer matrix by unimodular row and column operations.

    Returns ``(diag, colv)``. Row operations are not tracked; ``colv`` is the
    accumulated column transform as a list of rows, so that if y satisfies the
    diagonal system then x = colv . y satisfies the original one.
    """
    a = [[int(e) for e in r] for r in rows]
    nrows = len(a)
    colv = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in colv:
            row[j], row[k] = row[k], row[j]

    def add_col(dst, src, q):
        # column dst  -=  q * column src
        for row in a:
            row[dst] -= q * row[src]
        for row in colv:
            row[dst] -= q * row[src]

    t = 0
    while t < min(nrows, ncols):
        pivot = next(
            ((i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j] != 0),
            None,
        )
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            swap_cols(t, pj)
        while True:
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t] != 0:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        t += 1
    diag = [a[i][i] for i in range(t)]
    return diag, colv


def kernel_mod(rows: list[list[int]], ncols: int, modulus: int):
    """Solutions of rows . x = 0 over Z/modulus, for arbitrary modulus.

    Returns ``(count, make_iter)`` where ``make_iter()`` yields every solution
    exactly once as a tuple of least nonnegative residues, in a fixed order.
    """
    diag, colv = smith_diagonalize(rows, ncols)
    gs = []
    for j in range(ncols):
        d = diag[j] if j < len(diag) else 0
        gs.append(gcd(abs(d), modulus))
    count = 1
    for g in gs:
        count *= g

    def make_iter():
        for combo in itertools.product(*(range(g) for g in gs)):
            y = [c * (modulus // g) for c, g in zip(combo, gs)]
            yield tuple(
                sum(colv[i][j] * y[j] for j in range(ncols)) % modulus
                for i in range(ncols)
            )

    return count, make_iter


def primitive_integer_vector(vec) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector, first nonzero > 0."""
    fr = [Fraction(e) for e in vec]
    den = lcm(*(f.denominator for f in fr)) if fr else 1
    ints = [int(f * den) for f in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v != 0), 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)

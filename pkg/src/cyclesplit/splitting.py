"""Cyclic splittings of polynomials into monic linear factors.

A splitting witness is a leading coefficient together with an ordered tuple
of pseudoroots (a_1, ..., a_n); it expands to f_n (X - a_1) ... (X - a_n).
When every coefficient of the expanded polynomial commutes with every
pseudoroot, cyclically rotating the factors leaves the product unchanged and
every pseudoroot is a two-sided root. The checker below reports all of that,
plus the commutators that obstruct transposing adjacent factors.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .ncpoly import (
    CommutationError,
    NCPoly,
    constant,
    eval_commuting,
    right_divide_linear,
    right_eval,
    x_minus,
)
from .rings import (
    Element,
    IntegerRing,
    MatrixRing,
    RationalRing,
    ResidueRing,
    Ring,
    RingMismatchError,
    TableAlgebra,
    UnsupportedOperationError,
    commutator,
    parse_ring_spec,
)


class NotAFactorError(Exception):
    """Right division left a nonzero remainder."""


class FactorCommutationError(Exception):
    """A checked conclusion about quotient commutation failed. Seeing this
    error means the arithmetic itself is broken; it should never fire."""


@dataclass(frozen=True)
class SplittingWitness:
    ring: Ring
    leading: Element
    pseudoroots: tuple[Element, ...]

    def __post_init__(self):
        if len(self.pseudoroots) < 1:
            raise ValueError("a witness needs at least one pseudoroot")
        if self.leading.ring != self.ring:
            raise RingMismatchError("leading coefficient belongs to a different ring")
        for a in self.pseudoroots:
            if a.ring != self.ring:
                raise RingMismatchError("pseudoroot belongs to a different ring")

    def to_json(self):
        return {
            "ring": self.ring.spec_string(),
            "leading": self.leading.to_json(),
            "pseudoroots": [a.to_json() for a in self.pseudoroots],
        }


def witness(ring: Ring, leading: Element, pseudoroots) -> SplittingWitness:
    return SplittingWitness(ring, leading, tuple(pseudoroots))


def witness_from_json(obj) -> SplittingWitness:
    ring = parse_ring_spec(obj["ring"])
    return SplittingWitness(
        ring,
        ring.element_from_json(obj["leading"]),
        tuple(ring.element_from_json(a) for a in obj["pseudoroots"]),
    )


def expand(w: SplittingWitness) -> NCPoly:
    """Left-to-right product f_n (X - a_1) ... (X - a_n)."""
    acc = constant(w.leading)
    for a in w.pseudoroots:
        acc = acc * x_minus(a)
    return acc


def rotate(w: SplittingWitness, k: int) -> SplittingWitness:
    """Cyclic shift of the factor tuple; k = 1 moves the last factor to the
    front, k = n is the identity."""
    n = len(w.pseudoroots)
    k %= n
    if k == 0:
        return w
    return SplittingWitness(w.ring, w.leading, w.pseudoroots[-k:] + w.pseudoroots[:-k])


def commutation_hypothesis(f: NCPoly, pseudoroots) -> tuple[bool, tuple[tuple[int, int], ...]]:
    """Does every coefficient of f commute with every pseudoroot?

    Violations are (coefficient degree, pseudoroot position) pairs, the
    position counted from 1.
    """
    violations = []
    for i, c in enumerate(f.coeffs):
        for k, a in enumerate(pseudoroots, start=1):
            if not commutator(c, a).is_zero:
                violations.append((i, k))
    return not violations, tuple(violations)


@dataclass(frozen=True)
class CyclicSplittingReport:
    """Everything the rotation/root check finds about one witness.

    ``roots_ok`` lists (position, value of f at that pseudoroot); the values
    come from the commuting substitution when the hypothesis holds and from
    right evaluation otherwise (``root_mode`` says which).
    """

    witness: SplittingWitness
    expanded: NCPoly
    commutation_ok: bool
    commutation_violations: tuple[tuple[int, int], ...]
    rotations_equal: bool
    first_differing_rotation: int | None
    root_mode: str
    roots_ok: tuple[tuple[int, Element], ...]
    obstructions: tuple[Element, ...]

    @property
    def all_roots_zero(self) -> bool:
        return all(v.is_zero for _, v in self.roots_ok)

    @property
    def passed(self) -> bool:
        return self.commutation_ok and self.rotations_equal and self.all_roots_zero

    @property
    def consistent_with_cyclic_law(self) -> bool:
        """Hypothesis implies conclusions; vacuously true without it."""
        return (not self.commutation_ok) or (self.rotations_equal and self.all_roots_zero)

    def to_json(self):
        return {
            "witness": self.witness.to_json(),
            "expanded": self.expanded.to_json(),
            "commutation_ok": self.commutation_ok,
            "commutation_violations": [list(v) for v in self.commutation_violations],
            "rotations_equal": self.rotations_equal,
            "first_differing_rotation": self.first_differing_rotation,
            "root_mode": self.root_mode,
            "roots_ok": [[k, v.to_json()] for k, v in self.roots_ok],
            "obstructions": [o.to_json() for o in self.obstructions],
            "passed": self.passed,
        }


def verify_cyclic_splitting(w: SplittingWitness) -> CyclicSplittingReport:
    """Expand a witness and check rotation invariance and the root property.

    The commutation hypothesis is checked against the expanded polynomial's
    own coefficients. All findings are reported; nothing raises.
    """
    f = expand(w)
    ok, violations = commutation_hypothesis(f, w.pseudoroots)
    n = len(w.pseudoroots)

    rotations_equal = True
    first_diff = None
    for k in range(1, n):
        if expand(rotate(w, k)) != f:
            rotations_equal = False
            first_diff = k
            break

    if ok:
        root_mode = "commuting"
        values = tuple(
            (k, eval_commuting(f, a)) for k, a in enumerate(w.pseudoroots, start=1)
        )
    else:
        root_mode = "right"
        values = tuple(
            (k, right_eval(f, a)) for k, a in enumerate(w.pseudoroots, start=1)
        )

    obstructions = tuple(
        commutator(w.pseudoroots[i], w.pseudoroots[(i + 1) % n]) for i in range(n)
    )
    return CyclicSplittingReport(
        witness=w,
        expanded=f,
        commutation_ok=ok,
        commutation_violations=violations,
        rotations_equal=rotations_equal,
        first_differing_rotation=first_diff,
        root_mode=root_mode,
        roots_ok=values,
        obstructions=obstructions,
    )


def factor_out_commuting_root(f: NCPoly, a: Element) -> NCPoly:
    """Divide f by (X - a) on the right, given that every coefficient of f
    commutes with a and the remainder vanishes.

    The quotient's coefficients then also commute with a; that conclusion is
    re-checked at runtime and a failure raises FactorCommutationError.
    """
    for i, c in enumerate(f.coeffs):
        if not commutator(c, a).is_zero:
            raise CommutationError(i)
    q, r = right_divide_linear(f, a)
    if not r.is_zero:
        raise NotAFactorError("X - a does not divide f on the right")
    for i, c in enumerate(q.coeffs):
        if not commutator(c, a).is_zero:
            raise FactorCommutationError(
                f"quotient coefficient at degree {i} fails to commute"
            )
    return q


def product_commutation_check(g: NCPoly, a: Element) -> bool:
    """Check, on this instance, that if g*(X - a) commutes with X - a then g
    does too. Always true (X - a is monic, hence cancelable); exists as a
    property-test hook."""
    h = x_minus(a)
    p = g * h
    if p * h == h * p:
        return g * h == h * g
    return True


# ---------------------------------------------------------------------------
# Vandermonde block matrix
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VandermondeReport:
    """Flattened block Vandermonde matrix of a witness over the base ring.

    Row block i holds the (n-1-i)-th powers of the pseudoroots, so the top
    block row has the highest powers and the bottom one is all ones.
    Flattening is block-row-major. ``det`` and ``invertible`` refer to the
    flattened matrix over the commutative base.
    """

    base: Ring
    size: int
    rows: tuple[tuple[object, ...], ...]
    det: object
    invertible: bool

    def to_json(self):
        return {
            "base": self.base.spec_string(),
            "size": self.size,
            "rows": [[self.base.payload_to_json(e) for e in row] for row in self.rows],
            "det": self.base.payload_to_json(self.base._canon(self.det)),
            "invertible": self.invertible,
        }


def _flatten_block(ring, payload):
    """k x k base-ring grid for one element; table algebras use the matrix of
    left multiplication on the distinguished basis."""
    if isinstance(ring, MatrixRing):
        return [list(row) for row in payload]
    if isinstance(ring, TableAlgebra):
        return ring.left_regular_matrix(payload)
    raise UnsupportedOperationError(
        "vandermonde needs a matrix ring or table algebra over a commutative base"
    )


def vandermonde(w: SplittingWitness) -> VandermondeReport:
    ring = w.ring
    if not isinstance(ring, (MatrixRing, TableAlgebra)):
        raise UnsupportedOperationError(
            "vandermonde needs a matrix ring or table algebra over a commutative base"
        )
    base = ring.base
    if not base.is_commutative:
        raise UnsupportedOperationError("the base ring must be commutative")
    n = len(w.pseudoroots)
    blocks = [
        [_flatten_block(ring, (a ** (n - 1 - i)).payload) for a in w.pseudoroots]
        for i in range(n)
    ]
    k = len(blocks[0][0])
    rows = []
    for i in range(n):
        for r in range(k):
            rows.append(
                tuple(blocks[i][j][r][c] for j in range(n) for c in range(k))
            )
    flat = [list(r) for r in rows]
    if isinstance(base, IntegerRing):
        det = linalg.det_int(flat)
    elif isinstance(base, RationalRing):
        det = linalg.det_fraction(flat)
    elif isinstance(base, ResidueRing):
        det = linalg.det_mod(flat, base.modulus)
    else:
        raise UnsupportedOperationError(
            f"determinant over {base.describe()} is not supported"
        )
    return VandermondeReport(
        base=base,
        size=n * k,
        rows=tuple(rows),
        det=det,
        invertible=base._is_unit(base._canon(det)),
    )


# ---------------------------------------------------------------------------
# evaluation homomorphism of a splitting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EvaluationHomReport:
    """Pointwise check that p -> (p(a_1), ..., p(a_n)) behaves like a ring
    homomorphism on the samples, kills the expanded polynomial, and commutes
    with cyclic rotation of the witness."""

    witness: SplittingWitness
    sample_values: tuple[tuple[Element, ...], ...]
    additive_ok: bool
    multiplicative_ok: bool
    zero_tuple_ok: bool
    rotation_permutes_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.additive_ok
            and self.multiplicative_ok
            and self.zero_tuple_ok
            and self.rotation_permutes_ok
        )

    def to_json(self):
        return {
            "witness": self.witness.to_json(),
            "sample_values": [
                [v.to_json() for v in tup] for tup in self.sample_values
            ],
            "additive_ok": self.additive_ok,
            "multiplicative_ok": self.multiplicative_ok,
            "zero_tuple_ok": self.zero_tuple_ok,
            "rotation_permutes_ok": self.rotation_permutes_ok,
            "passed": self.passed,
        }


def check_evaluation_homomorphism(w: SplittingWitness, samples) -> EvaluationHomReport:
    """Verify the simultaneous-evaluation map on a list of sample polynomials.

    Preconditions (raised as CommutationError when violated): the expanded
    polynomial and every sample have coefficients commuting with every
    pseudoroot.
    """
    samples = list(samples)
    f = expand(w)
    ok, violations = commutation_hypothesis(f, w.pseudoroots)
    if not ok:
        raise CommutationError(violations[0][0], "witness violates the commutation hypothesis")
    for p in samples:
        ok, violations = commutation_hypothesis(p, w.pseudoroots)
        if not ok:
            raise CommutationError(
                violations[0][0], "sample polynomial violates the commutation hypothesis"
            )

    def ev(p):
        return tuple(eval_commuting(p, a) for a in w.pseudoroots)

    values = tuple(ev(p) for p in samples)

    additive_ok = all(
        ev(p + q) == tuple(x + y for x, y in zip(ev(p), ev(q)))
        for p in samples
        for q in samples
    )
    multiplicative_ok = all(
        ev(p * q) == tuple(x * y for x, y in zip(ev(p), ev(q)))
        for p in samples
        for q in samples
    )
    zero_tuple_ok = all(v.is_zero for v in ev(f))

    n = len(w.pseudoroots)
    rotation_permutes_ok = True
    for k in range(n):
        rot = rotate(w, k)
        for p in samples:
            tup = ev(p)
            expected = tup[-k:] + tup[:-k] if k else tup
            got = tuple(eval_commuting(p, a) for a in rot.pseudoroots)
            if got != expected:
                rotation_permutes_ok = False

    return EvaluationHomReport(
        witness=w,
        sample_values=values,
        additive_ok=additive_ok,
        multiplicative_ok=multiplicative_ok,
        zero_tuple_ok=zero_tuple_ok,
        rotation_permutes_ok=rotation_permutes_ok,
    )

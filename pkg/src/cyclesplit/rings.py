"""Exact arithmetic for a small tower of concrete rings.

Supported rings: the integers ``Z``, the rationals ``Q``, residue rings
``Zmod:n``, full and upper-triangular matrix rings over any supported base,
and finite-basis table algebras given by structure constants. Multiplication
is never assumed commutative. All values are immutable after construction
and every operation is a pure function, so elements can be shared freely.

Ring spec grammar (exact, case sensitive):

    Z | Q | Zmod:<n> | Mat:<k>:<base> | UT:<k>:<base> | Table:<path>

where ``<path>`` names a JSON file with keys ``basis_size``,
``structure_constants`` (an m x m array of length-m integer vectors),
``unit_vector`` and ``base`` (a ring spec string). Elements serialize to
JSON as integers, strings ``"p/q"`` or nested arrays matching the payload
shape.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd

from . import linalg


class RingError(Exception):
    """Base class for ring arithmetic errors."""


class RingMismatchError(RingError):
    """Operands belong to different rings."""


class InfiniteRingError(RingError):
    """The operation needs a finite ring."""


class UnsupportedOperationError(RingError):
    """The ring does not support the requested operation."""


class NotInvertibleError(RingError):
    """Inverse requested for a non-unit."""


class SpecParseError(RingError):
    """A ring spec string does not match the grammar."""


# Explicit centralizer / inverse enumeration is refused above these sizes.
ENUM_LIMIT = 1 << 14
INVERSE_SEARCH_LIMIT = 1 << 20


@dataclass(frozen=True)
class Element:
    """A value of a concrete ring. Arithmetic is exact and never commutative
    by assumption; ``a * b`` keeps the operand order."""

    ring: "Ring"
    payload: object

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.ring is self.ring or other.ring == self.ring:
                return other
            raise RingMismatchError(
                f"elements of {self.ring.describe()} and {other.ring.describe()} cannot be combined"
            )
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring._add(self.payload, other.payload))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring._add(self.payload, self.ring._neg(other.payload)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Element(self.ring, self.ring._neg(self.payload))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Element(self.ring, self.ring._mul(self.payload, other.payload))

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    @property
    def is_zero(self) -> bool:
        return self.payload == self.ring._zero_payload()

    def __repr__(self):
        return f"Element({self.ring.describe()}, {self.payload!r})"

    def to_json(self):
        return self.ring.payload_to_json(self.payload)


class Ring:
    """Abstract base. Subclasses implement exact payload-level arithmetic."""

    # -- payload primitives -------------------------------------------------
    def _canon(self, payload):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _zero_payload(self):
        raise NotImplementedError

    def _one_payload(self):
        raise NotImplementedError

    def _from_int(self, n: int):
        raise NotImplementedError

    # -- element API ---------------------------------------------------------
    def element(self, payload) -> Element:
        return Element(self, self._canon(payload))

    def zero(self) -> Element:
        return Element(self, self._zero_payload())

    def one(self) -> Element:
        return Element(self, self._one_payload())

    def from_int(self, n: int) -> Element:
        return Element(self, self._from_int(n))

    def from_base_scalar(self, scalar) -> Element:
        """Embed a base-ring scalar (the ring itself for scalar rings)."""
        raise NotImplementedError

    # -- structure ------------------------------------------------------------
    @property
    def is_finite(self) -> bool:
        return self.cardinality is not None

    @property
    def cardinality(self) -> int | None:
        raise NotImplementedError

    @property
    def is_commutative(self) -> bool:
        raise NotImplementedError

    def payloads(self):
        """Every payload exactly once, lexicographically. Finite rings only."""
        raise InfiniteRingError(f"{self.describe()} is not finite")

    def elements(self):
        for p in self.payloads():
            yield Element(self, p)

    # -- units ------------------------------------------------------------------
    def _is_unit(self, payload) -> bool:
        raise NotImplementedError

    def _inverse(self, payload):
        raise NotImplementedError

    # -- serialization ------------------------------------------------------------
    def spec_string(self) -> str:
        raise NotImplementedError

    def describe(self) -> str:
        """Human-readable name, total even when no grammar form exists."""
        try:
            return self.spec_string()
        except UnsupportedOperationError:
            return type(self).__name__

    def payload_to_json(self, payload):
        raise NotImplementedError

    def payload_from_json(self, obj):
        raise NotImplementedError

    def element_from_json(self, obj) -> Element:
        return self.element(self.payload_from_json(obj))


def _require_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"expected an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class IntegerRing(Ring):
    def _canon(self, payload):
        return _require_int(payload)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _zero_payload(self):
        return 0

    def _one_payload(self):
        return 1

    def _from_int(self, n):
        return _require_int(n)

    def from_base_scalar(self, scalar):
        return self.element(scalar)

    @property
    def cardinality(self):
        return None

    @property
    def is_commutative(self):
        return True

    def _is_unit(self, payload):
        return payload in (1, -1)

    def _inverse(self, payload):
        if payload in (1, -1):
            return payload
        raise NotInvertibleError(f"{payload} is not a unit in Z")

    def spec_string(self):
        return "Z"

    def payload_to_json(self, payload):
        return payload

    def payload_from_json(self, obj):
        return _require_int(obj)


@dataclass(frozen=True)
class RationalRing(Ring):
    def _canon(self, payload):
        if isinstance(payload, bool):
            raise ValueError("booleans are not ring values")
        if isinstance(payload, (int, Fraction)):
            return Fraction(payload)
        raise ValueError(f"expected int or Fraction, got {payload!r}")

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _zero_payload(self):
        return Fraction(0)

    def _one_payload(self):
        return Fraction(1)

    def _from_int(self, n):
        return Fraction(_require_int(n))

    def from_base_scalar(self, scalar):
        return self.element(scalar)

    @property
    def cardinality(self):
        return None

    @property
    def is_commutative(self):
        return True

    def _is_unit(self, payload):
        return payload != 0

    def _inverse(self, payload):
        if payload == 0:
            raise NotInvertibleError("0 is not a unit in Q")
        return 1 / payload

    def spec_string(self):
        return "Q"

    def payload_to_json(self, payload):
        if payload.denominator == 1:
            return payload.numerator
        return f"{payload.numerator}/{payload.denominator}"

    def payload_from_json(self, obj):
        if isinstance(obj, str):
            num, _, den = obj.partition("/")
            try:
                return Fraction(int(num), int(den) if den else 1)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"bad rational literal {obj!r}") from exc
        return Fraction(_require_int(obj))


@dataclass(frozen=True)
class ResidueRing(Ring):
    """Z/n with least nonnegative representatives."""

    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise ValueError("modulus must be an integer >= 2")

    def _canon(self, payload):
        return _require_int(payload) % self.modulus

    def _add(self, a, b):
        return (a + b) % self.modulus

    def _neg(self, a):
        return (-a) % self.modulus

    def _mul(self, a, b):
        return (a * b) % self.modulus

    def _zero_payload(self):
        return 0

    def _one_payload(self):
        return 1 % self.modulus

    def _from_int(self, n):
        return _require_int(n) % self.modulus

    def from_base_scalar(self, scalar):
        return self.element(scalar)

    @property
    def cardinality(self):
        return self.modulus

    @property
    def is_commutative(self):
        return True

    @property
    def is_prime(self) -> bool:
        n = self.modulus
        if n < 4:
            return True
        if n % 2 == 0:
            return False
        d = 3
        while d * d <= n:
            if n % d == 0:
                return False
            d += 2
        return True

    def payloads(self):
        return iter(range(self.modulus))

    def _is_unit(self, payload):
        return gcd(payload, self.modulus) == 1

    def _inverse(self, payload):
        try:
            return pow(payload, -1, self.modulus)
        except ValueError as exc:
            raise NotInvertibleError(
                f"{payload} is not a unit in Z/{self.modulus}"
            ) from exc

    def spec_string(self):
        return f"Zmod:{self.modulus}"

    def payload_to_json(self, payload):
        return payload

    def payload_from_json(self, obj):
        return self._canon(obj)


@dataclass(frozen=True)
class MatrixRing(Ring):
    """k x k matrices over a base ring; optionally upper triangular.

    Payloads are tuples of row tuples of base payloads.
    """

    size: int
    base: Ring
    upper_triangular: bool = False

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise ValueError("matrix size must be an integer >= 1")

    def _positions(self):
        k = self.size
        if self.upper_triangular:
            return [(r, c) for r in range(k) for c in range(r, k)]
        return [(r, c) for r in range(k) for c in range(k)]

    def _canon(self, payload):
        k = self.size
        rows = tuple(tuple(self.base._canon(e) for e in row) for row in payload)
        if len(rows) != k or any(len(r) != k for r in rows):
            raise ValueError(f"payload is not a {k}x{k} matrix")
        if self.upper_triangular:
            zero = self.base._zero_payload()
            for r in range(k):
                for c in range(r):
                    if rows[r][c] != zero:
                        raise ValueError("strictly lower entries must be zero")
        return rows

    def _add(self, a, b):
        return tuple(
            tuple(self.base._add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
        )

    def _neg(self, a):
        return tuple(tuple(self.base._neg(x) for x in row) for row in a)

    def _mul(self, a, b):
        k = self.size
        badd, bmul, bzero = self.base._add, self.base._mul, self.base._zero_payload()
        out = []
        for r in range(k):
            row = []
            for c in range(k):
                acc = bzero
                for t in range(k):
                    acc = badd(acc, bmul(a[r][t], b[t][c]))
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def _zero_payload(self):
        z = self.base._zero_payload()
        return tuple(tuple(z for _ in range(self.size)) for _ in range(self.size))

    def _one_payload(self):
        return self._from_int(1)

    def _from_int(self, n):
        z = self.base._zero_payload()
        d = self.base._from_int(n)
        return tuple(
            tuple(d if r == c else z for c in range(self.size)) for r in range(self.size)
        )

    def from_base_scalar(self, scalar):
        s = self.base._canon(scalar)
        z = self.base._zero_payload()
        return self.element(
            tuple(
                tuple(s if r == c else z for c in range(self.size))
                for r in range(self.size)
            )
        )

    @property
    def cardinality(self):
        n = self.base.cardinality
        if n is None:
            return None
        return n ** len(self._positions())

    @property
    def is_commutative(self):
        return self.size == 1 and self.base.is_commutative

    def payloads(self):
        base_payloads = list(self.base.payloads())
        positions = self._positions()
        zero = self.base._zero_payload()
        k = self.size
        for combo in itertools.product(base_payloads, repeat=len(positions)):
            grid = [[zero] * k for _ in range(k)]
            for (r, c), v in zip(positions, combo):
                grid[r][c] = v
            yield tuple(tuple(row) for row in grid)

    def det_payload(self, payload):
        """Determinant over the (commutative scalar) base ring."""
        base = self.base
        rows = [list(r) for r in payload]
        if isinstance(base, IntegerRing):
            return linalg.det_int(rows)
        if isinstance(base, RationalRing):
            return linalg.det_fraction(rows)
        if isinstance(base, ResidueRing):
            return linalg.det_mod(rows, base.modulus)
        raise UnsupportedOperationError(
            f"determinant over {base.describe()} is not supported"
        )

    def _is_unit(self, payload):
        return self.base._is_unit(self.det_payload(payload))

    def _inverse(self, payload):
        det = self.det_payload(payload)
        if not self.base._is_unit(det):
            raise NotInvertibleError("matrix determinant is not a unit in the base")
        det_inv = self.base._inverse(det)
        k = self.size
        if k == 1:
            return ((self.base._mul(det_inv, self.base._one_payload()),),)
        inv = []
        for r in range(k):
            row = []
            for c in range(k):
                minor = [
                    [payload[i][j] for j in range(k) if j != r]
                    for i in range(k)
                    if i != c
                ]
                cof = self._minor_det(minor)
                if (r + c) % 2:
                    cof = self.base._neg(cof)
                row.append(self.base._mul(cof, det_inv))
            inv.append(tuple(row))
        return self._canon(tuple(inv))

    def _minor_det(self, rows):
        base = self.base
        if isinstance(base, IntegerRing):
            return linalg.det_int(rows)
        if isinstance(base, RationalRing):
            return linalg.det_fraction(rows)
        if isinstance(base, ResidueRing):
            return linalg.det_mod(rows, base.modulus)
        raise UnsupportedOperationError("minor determinant unsupported over this base")

    def spec_string(self):
        prefix = "UT" if self.upper_triangular else "Mat"
        return f"{prefix}:{self.size}:{self.base.spec_string()}"

    def payload_to_json(self, payload):
        return [[self.base.payload_to_json(e) for e in row] for row in payload]

    def payload_from_json(self, obj):
        return self._canon(
            tuple(tuple(self.base.payload_from_json(e) for e in row) for row in obj)
        )


@dataclass(frozen=True)
class TableAlgebraDescriptor:
    """A finite-rank free algebra presented by structure constants.

    ``structure_constants[i][j]`` is the coefficient vector of e_i * e_j over
    the distinguished basis; entries are integers, embedded into the base.
    """

    basis_size: int
    structure_constants: tuple[tuple[tuple[int, ...], ...], ...]
    unit_vector: tuple[int, ...]

    def __post_init__(self):
        m = self.basis_size
        sc = tuple(
            tuple(tuple(_require_int(c) for c in vec) for vec in row)
            for row in self.structure_constants
        )
        if len(sc) != m or any(len(row) != m for row in sc):
            raise ValueError("structure constants must form an m x m table")
        if any(len(vec) != m for row in sc for vec in row):
            raise ValueError("structure constant vectors must have length m")
        unit = tuple(_require_int(c) for c in self.unit_vector)
        if len(unit) != m:
            raise ValueError("unit vector must have length m")
        object.__setattr__(self, "structure_constants", sc)
        object.__setattr__(self, "unit_vector", unit)

    def to_json(self, base_spec: str) -> dict:
        return {
            "basis_size": self.basis_size,
            "structure_constants": [
                [list(vec) for vec in row] for row in self.structure_constants
            ],
            "unit_vector": list(self.unit_vector),
            "base": base_spec,
        }


@dataclass(frozen=True)
class TableAlgebra(Ring):
    """Free module of rank m over a base ring with table multiplication.

    Payloads are length-m tuples of base payloads. Associativity and the
    two-sided unit law are checked on all basis triples at construction.
    """

    descriptor: TableAlgebraDescriptor
    base: Ring
    source_path: str | None = field(default=None, compare=False)

    def __post_init__(self):
        self._check_table()

    @cached_property
    def _table(self):
        # structure constants embedded into the base ring, indexed [i][j] -> vector
        base = self.base
        return tuple(
            tuple(tuple(base._from_int(c) for c in vec) for vec in row)
            for row in self.descriptor.structure_constants
        )

    def _basis_payload(self, i):
        m = self.descriptor.basis_size
        z = self.base._zero_payload()
        o = self.base._one_payload()
        return tuple(o if j == i else z for j in range(m))

    def basis_elements(self):
        return tuple(
            Element(self, self._basis_payload(i))
            for i in range(self.descriptor.basis_size)
        )

    def _check_table(self):
        m = self.descriptor.basis_size
        basis = [self._basis_payload(i) for i in range(m)]
        for i in range(m):
            for j in range(m):
                for k in range(m):
                    left = self._mul(self._mul(basis[i], basis[j]), basis[k])
                    right = self._mul(basis[i], self._mul(basis[j], basis[k]))
                    if left != right:
                        raise ValueError(
                            f"structure constants are not associative at basis triple ({i}, {j}, {k})"
                        )
        unit = self._one_payload()
        for i in range(m):
            if self._mul(unit, basis[i]) != basis[i] or self._mul(basis[i], unit) != basis[i]:
                raise ValueError(f"unit vector fails the unit law on basis element {i}")

    def _canon(self, payload):
        vec = tuple(self.base._canon(e) for e in payload)
        if len(vec) != self.descriptor.basis_size:
            raise ValueError(
                f"payload must be a vector of length {self.descriptor.basis_size}"
            )
        return vec

    def _add(self, a, b):
        return tuple(self.base._add(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(self.base._neg(x) for x in a)

    def _mul(self, a, b):
        m = self.descriptor.basis_size
        badd, bmul = self.base._add, self.base._mul
        zero = self.base._zero_payload()
        out = [zero] * m
        table = self._table
        for i in range(m):
            ai = a[i]
            if ai == zero:
                continue
            for j in range(m):
                bj = b[j]
                if bj == zero:
                    continue
                coeff = bmul(ai, bj)
                vec = table[i][j]
                for k in range(m):
                    if vec[k] != zero:
                        out[k] = badd(out[k], bmul(coeff, vec[k]))
        return tuple(out)

    def _zero_payload(self):
        z = self.base._zero_payload()
        return tuple(z for _ in range(self.descriptor.basis_size))

    def _one_payload(self):
        return tuple(self.base._from_int(c) for c in self.descriptor.unit_vector)

    def _from_int(self, n):
        one = self._one_payload()
        nn = self.base._from_int(n)
        return tuple(self.base._mul(nn, c) for c in one)

    def from_base_scalar(self, scalar):
        s = self.base._canon(scalar)
        return self.element(
            tuple(self.base._mul(s, c) for c in self._one_payload())
        )

    @property
    def cardinality(self):
        n = self.base.cardinality
        if n is None:
            return None
        return n ** self.descriptor.basis_size

    @cached_property
    def is_commutative(self):
        m = self.descriptor.basis_size
        basis = [self._basis_payload(i) for i in range(m)]
        return all(
            self._mul(basis[i], basis[j]) == self._mul(basis[j], basis[i])
            for i in range(m)
            for j in range(i + 1, m)
        )

    def payloads(self):
        base_payloads = list(self.base.payloads())
        for combo in itertools.product(base_payloads, repeat=self.descriptor.basis_size):
            yield tuple(combo)

    def left_regular_matrix(self, payload):
        """Matrix of left multiplication by ``payload`` over the base,
        columns indexed by the basis."""
        m = self.descriptor.basis_size
        cols = [self._mul(payload, self._basis_payload(j)) for j in range(m)]
        return [[cols[j][i] for j in range(m)] for i in range(m)]

    def _solve_left_mul(self, payload, rhs):
        """Solve (payload) * y = rhs for y over the base, or return None."""
        rows = self.left_regular_matrix(payload)
        base = self.base
        if isinstance(base, RationalRing):
            return linalg.solve_rational(rows, list(rhs))
        if isinstance(base, IntegerRing):
            sol = linalg.solve_rational(rows, list(rhs))
            if sol is None or any(f.denominator != 1 for f in sol):
                return None
            return tuple(int(f) for f in sol)
        if isinstance(base, ResidueRing) and base.is_prime:
            return linalg.solve_mod_prime(rows, list(rhs), base.modulus)
        return None

    def _is_unit(self, payload):
        try:
            self._inverse(payload)
            return True
        except NotInvertibleError:
            return False

    def _inverse(self, payload):
        base = self.base
        if isinstance(base, (RationalRing, IntegerRing)) or (
            isinstance(base, ResidueRing) and base.is_prime
        ):
            y = self._solve_left_mul(payload, self._one_payload())
            if y is not None:
                y = self._canon(y)
                if (
                    self._mul(payload, y) == self._one_payload()
                    and self._mul(y, payload) == self._one_payload()
                ):
                    return y
            raise NotInvertibleError("element has no two-sided inverse")
        card = self.cardinality
        if card is not None and card <= INVERSE_SEARCH_LIMIT:
            one = self._one_payload()
            for y in self.payloads():
                if self._mul(payload, y) == one and self._mul(y, payload) == one:
                    return y
            raise NotInvertibleError("element has no two-sided inverse")
        raise UnsupportedOperationError(
            f"invertibility over {base.describe()} is not decidable at this size"
        )

    def spec_string(self):
        if self.source_path is not None:
            return f"Table:{self.source_path}"
        raise UnsupportedOperationError(
            "table algebra was built programmatically; write its descriptor to a "
            "file to obtain a ring spec string"
        )

    def payload_to_json(self, payload):
        return [self.base.payload_to_json(e) for e in payload]

    def payload_from_json(self, obj):
        return self._canon(tuple(self.base.payload_from_json(e) for e in obj))


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------


def equals(x: Element, y: Element) -> bool:
    """Exact equality; raises on ring mismatch (unlike ``==``)."""
    if x.ring != y.ring:
        raise RingMismatchError(
            f"cannot compare elements of {x.ring.describe()} and {y.ring.describe()}"
        )
    return x.payload == y.payload


def commutator(x: Element, y: Element) -> Element:
    """x*y - y*x."""
    return x * y - y * x


def enumerate_elements(ring: Ring):
    """Deterministic stream of every element of a finite ring, lexicographic
    on the reduced payload."""
    if not ring.is_finite:
        raise InfiniteRingError(f"{ring.describe()} is not finite")
    return ring.elements()


def is_unit(x: Element) -> bool:
    return x.ring._is_unit(x.payload)


def inverse(x: Element) -> Element:
    return Element(x.ring, x.ring._inverse(x.payload))


# ---------------------------------------------------------------------------
# centralizers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CentralizerDescription:
    """The subring of elements commuting with the given generators.

    ``elements`` is the explicit list when the centralizer is finite and
    small enough to enumerate; ``basis`` is a module basis over the base
    (matrix and table algebras over a field or over Z). Both may be
    present. ``count`` is None for infinite centralizers.
    """

    ring: Ring
    gens: tuple[Element, ...]
    elements: tuple[Element, ...] | None
    basis: tuple[Element, ...] | None
    count: int | None

    def contains(self, x: Element) -> bool:
        return all(commutator(x, g).is_zero for g in self.gens)


def _module_structure(ring):
    """(basis payloads, coords function) for rings that are free base modules."""
    if isinstance(ring, MatrixRing):
        positions = ring._positions()
        zero = ring.base._zero_payload()
        k = ring.size

        def unit_payload(pos):
            grid = [[zero] * k for _ in range(k)]
            grid[pos[0]][pos[1]] = ring.base._one_payload()
            return tuple(tuple(row) for row in grid)

        basis = [unit_payload(pos) for pos in positions]

        def coords(payload):
            return [payload[r][c] for (r, c) in positions]

        return basis, coords
    if isinstance(ring, TableAlgebra):
        m = ring.descriptor.basis_size
        basis = [ring._basis_payload(i) for i in range(m)]

        def coords(payload):
            return list(payload)

        return basis, coords
    raise UnsupportedOperationError(
        f"{ring.describe()} is not a free module over a scalar base"
    )


def _commutation_system(ring, gens):
    """Integer/fraction rows of the linear system x*g - g*x = 0 for all gens."""
    basis, coords = _module_structure(ring)
    dim = len(basis)
    rows = []
    for g in gens:
        cols = []
        for b in basis:
            diff = ring._add(ring._mul(b, g.payload), ring._neg(ring._mul(g.payload, b)))
            cols.append(coords(diff))
        for coord_index in range(len(cols[0])):
            rows.append([cols[j][coord_index] for j in range(dim)])
    return basis, coords, dim, rows


def _scale_payload(ring, scalar, payload):
    if isinstance(ring, MatrixRing):
        return tuple(tuple(ring.base._mul(scalar, e) for e in row) for row in payload)
    return tuple(ring.base._mul(scalar, e) for e in payload)


def _payload_from_coords(ring, basis, vec):
    acc = ring._zero_payload()
    for c, b in zip(vec, basis):
        acc = ring._add(acc, _scale_payload(ring, ring.base._canon(c), b))
    return acc


def centralizer_of_set(ring: Ring, gens) -> CentralizerDescription:
    """Centralizer of a set of elements.

    Matrix and table algebras over a field get a solution-space basis of
    x*g = g*x; over Z the rational kernel is scaled to a primitive integer
    basis; over Z/n with n composite the kernel is enumerated through a
    Smith normal form of the integer lift. The explicit element list is
    also produced whenever the centralizer is finite with at most
    ``ENUM_LIMIT`` members (by scan for small rings, from the linear
    solution set otherwise).
    """
    gens = tuple(gens)
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generator does not belong to the ring")

    card = ring.cardinality
    is_module = isinstance(ring, (MatrixRing, TableAlgebra))

    if ring.is_commutative or not gens:
        elems = None
        count = card
        if card is not None and card <= ENUM_LIMIT:
            elems = tuple(ring.elements())
        if is_module:
            module_basis, _ = _module_structure(ring)
            basis = tuple(Element(ring, b) for b in module_basis)
        else:
            basis = (ring.one(),)
        return CentralizerDescription(ring, gens, elems, basis, count)

    if not is_module:
        if card is not None and card <= ENUM_LIMIT:
            elems = tuple(
                x
                for x in ring.elements()
                if all(commutator(x, g).is_zero for g in gens)
            )
            return CentralizerDescription(ring, gens, elems, None, len(elems))
        raise UnsupportedOperationError(
            f"centralizer over {ring.describe()} is not supported at this size"
        )

    base = ring.base
    module_basis, coords, dim, rows = _commutation_system(ring, gens)

    def to_elements(vectors):
        return tuple(
            Element(ring, _payload_from_coords(ring, module_basis, v))
            for v in vectors
        )

    if isinstance(base, RationalRing):
        return CentralizerDescription(
            ring, gens, None, to_elements(linalg.nullspace_rational(rows, dim)), None
        )

    if isinstance(base, IntegerRing):
        prim = [
            linalg.primitive_integer_vector(v)
            for v in linalg.nullspace_rational(rows, dim)
        ]
        return CentralizerDescription(ring, gens, None, to_elements(prim), None)

    if isinstance(base, ResidueRing):
        n = base.modulus
        int_rows = [[int(e) for e in r] for r in rows]
        basis = None
        if base.is_prime:
            basis = to_elements(linalg.nullspace_mod_prime(int_rows, dim, n))
            count = n ** len(basis)
            if count > ENUM_LIMIT:
                return CentralizerDescription(ring, gens, None, basis, count)
            combos = itertools.product(range(n), repeat=len(basis))
            sols = {
                _payload_from_coords(
                    ring,
                    [b.payload for b in basis],
                    [c for c in combo],
                )
                for combo in combos
            }
            elems = tuple(sorted((Element(ring, s) for s in sols), key=lambda e: e.payload))
            return CentralizerDescription(ring, gens, elems, basis, count)
        count, make_iter = linalg.kernel_mod(int_rows, dim, n)
        if count > ENUM_LIMIT:
            raise UnsupportedOperationError(
                f"centralizer has {count} elements, above the enumeration limit"
            )
        elems = tuple(
            sorted(
                (
                    Element(ring, _payload_from_coords(ring, module_basis, v))
                    for v in make_iter()
                ),
                key=lambda e: e.payload,
            )
        )
        return CentralizerDescription(ring, gens, elems, None, count)

    raise UnsupportedOperationError(
        f"centralizer over base {base.describe()} is not supported"
    )


# ---------------------------------------------------------------------------
# ring spec grammar
# ---------------------------------------------------------------------------

_Z = IntegerRing()
_Q = RationalRing()


def parse_ring_spec(text: str) -> Ring:
    """Parse the exact, case-sensitive ring spec grammar."""
    if text == "Z":
        return _Z
    if text == "Q":
        return _Q
    if text.startswith("Zmod:"):
        body = text[len("Zmod:"):]
        if not body.isdigit():
            raise SpecParseError(f"bad modulus in {text!r}")
        n = int(body)
        if n < 2:
            raise SpecParseError("modulus must be >= 2")
        return ResidueRing(n)
    for prefix, ut in (("Mat:", False), ("UT:", True)):
        if text.startswith(prefix):
            body = text[len(prefix):]
            k_str, sep, base_str = body.partition(":")
            if not sep or not k_str.isdigit() or int(k_str) < 1:
                raise SpecParseError(f"bad matrix spec {text!r}")
            return MatrixRing(int(k_str), parse_ring_spec(base_str), upper_triangular=ut)
    if text.startswith("Table:"):
        path = text[len("Table:"):]
        if not path:
            raise SpecParseError("Table: needs a file path")
        return load_table_algebra(path)
    raise SpecParseError(f"unrecognized ring spec {text!r}")


def load_table_algebra(path: str) -> TableAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        descriptor = TableAlgebraDescriptor(
            basis_size=data["basis_size"],
            structure_constants=tuple(
                tuple(tuple(vec) for vec in row) for row in data["structure_constants"]
            ),
            unit_vector=tuple(data["unit_vector"]),
        )
        base = parse_ring_spec(data["base"])
    except (KeyError, TypeError) as exc:
        raise SpecParseError(f"bad table algebra file {path!r}: {exc}") from exc
    return TableAlgebra(descriptor, base, source_path=path)

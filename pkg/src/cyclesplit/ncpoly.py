"""Polynomials over a possibly noncommutative ring with a central variable.

Coefficients are stored low to high: ``coeffs[i]`` multiplies X^i, with no
trailing zero above the degree. The variable commutes with everything, so
products convolve coefficients while preserving their order:
(f*g)_k = sum over i+j=k of f_i * g_j, with f's coefficient on the left.

The degree of the zero polynomial is ``None`` (a bona fide "minus infinity"
marker), never an integer sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import Element, Ring, RingMismatchError


class CommutationError(Exception):
    """A coefficient fails to commute with the evaluation point."""

    def __init__(self, index: int, message: str | None = None):
        self.index = index
        super().__init__(
            message or f"coefficient at degree {index} does not commute with the point"
        )


@dataclass(frozen=True)
class NCPoly:
    ring: Ring
    coeffs: tuple[Element, ...]

    def __post_init__(self):
        for c in self.coeffs:
            if c.ring != self.ring:
                raise RingMismatchError("coefficient belongs to a different ring")
        if self.coeffs and self.coeffs[-1].is_zero:
            raise ValueError("coefficients must be normalized (use poly())")

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Element:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero()

    def __add__(self, other: "NCPoly") -> "NCPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return poly(
            self.ring, [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.ring, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "NCPoly") -> "NCPoly":
        self._check(other)
        if self.is_zero or other.is_zero:
            return NCPoly(self.ring, ())
        out = [self.ring.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, fi in enumerate(self.coeffs):
            if fi.is_zero:
                continue
            for j, gj in enumerate(other.coeffs):
                out[i + j] = out[i + j] + fi * gj
        return poly(self.ring, out)

    def _check(self, other):
        if not isinstance(other, NCPoly):
            raise TypeError(f"expected NCPoly, got {other!r}")
        if other.ring != self.ring:
            raise RingMismatchError("polynomials over different rings")

    def __repr__(self):
        return f"NCPoly(degree={self.degree}, coeffs={[c.payload for c in self.coeffs]})"

    def to_json(self):
        return {
            "ring": self.ring.spec_string(),
            "coeffs": [c.to_json() for c in self.coeffs],
        }


def poly(ring: Ring, coeffs) -> NCPoly:
    """Build a normalized polynomial from a low-to-high coefficient sequence."""
    cs = list(coeffs)
    for c in cs:
        if not isinstance(c, Element):
            raise TypeError("coefficients must be ring elements")
    while cs and cs[-1].is_zero:
        cs.pop()
    return NCPoly(ring, tuple(cs))


def from_int_coeffs(ring: Ring, ints) -> NCPoly:
    """Polynomial with scalar coefficients given as integers, embedded via n*1."""
    return poly(ring, [ring.from_int(n) for n in ints])


def x_power(ring: Ring, k: int) -> NCPoly:
    return poly(ring, [ring.zero()] * k + [ring.one()])


def x_minus(a: Element) -> NCPoly:
    """The monic linear polynomial X - a."""
    return poly(a.ring, [-a, a.ring.one()])


def constant(a: Element) -> NCPoly:
    return poly(a.ring, [a])


def poly_mul(f: NCPoly, g: NCPoly) -> NCPoly:
    return f * g


def poly_from_json(obj, ring: Ring | None = None) -> NCPoly:
    from .rings import parse_ring_spec

    r = ring if ring is not None else parse_ring_spec(obj["ring"])
    return poly(r, [r.element_from_json(c) for c in obj["coeffs"]])


def right_divide_linear(f: NCPoly, a: Element) -> tuple[NCPoly, Element]:
    """Unique (q, r) with f = q * (X - a) + r.

    Synthetic division, total for any a since X - a is monic:
    q_{n-1} = f_n, then q_{j-1} = f_j + q_j * a going down, r = f_0 + q_0 * a.
    """
    if a.ring != f.ring:
        raise RingMismatchError("divisor point belongs to a different ring")
    if f.is_zero:
        return NCPoly(f.ring, ()), f.ring.zero()
    n = len(f.coeffs) - 1
    if n == 0:
        return NCPoly(f.ring, ()), f.coeffs[0]
    q = [f.ring.zero()] * n
    q[n - 1] = f.coeffs[n]
    for j in range(n - 1, 0, -1):
        q[j - 1] = f.coeffs[j] + q[j] * a
    r = f.coeffs[0] + q[0] * a
    return poly(f.ring, q), r


def left_divide_linear(f: NCPoly, a: Element) -> tuple[NCPoly, Element]:
    """Unique (q, r) with f = (X - a) * q + r (mirrored recurrence)."""
    if a.ring != f.ring:
        raise RingMismatchError("divisor point belongs to a different ring")
    if f.is_zero:
        return NCPoly(f.ring, ()), f.ring.zero()
    n = len(f.coeffs) - 1
    if n == 0:
        return NCPoly(f.ring, ()), f.coeffs[0]
    q = [f.ring.zero()] * n
    q[n - 1] = f.coeffs[n]
    for j in range(n - 1, 0, -1):
        q[j - 1] = f.coeffs[j] + a * q[j]
    r = f.coeffs[0] + a * q[0]
    return poly(f.ring, q), r


def right_eval(f: NCPoly, a: Element) -> Element:
    """Sum of f_i * a^i (coefficients on the left). Equals the remainder of
    right division by X - a."""
    if a.ring != f.ring:
        raise RingMismatchError("evaluation point belongs to a different ring")
    acc = f.ring.zero()
    for c in reversed(f.coeffs):
        acc = acc * a + c
    return acc


def left_eval(f: NCPoly, a: Element) -> Element:
    """Sum of a^i * f_i. Equals the remainder of left division by X - a."""
    if a.ring != f.ring:
        raise RingMismatchError("evaluation point belongs to a different ring")
    acc = f.ring.zero()
    for c in reversed(f.coeffs):
        acc = a * acc + c
    return acc


def eval_commuting(f: NCPoly, a: Element) -> Element:
    """Substitution X -> a, legal only when every coefficient commutes with a.

    Raises CommutationError naming the offending coefficient degree otherwise.
    """
    for i, c in enumerate(f.coeffs):
        if not (c * a - a * c).is_zero:
            raise CommutationError(i)
    return right_eval(f, a)


def poly_commutes(f: NCPoly, g: NCPoly) -> bool:
    return f * g == g * f

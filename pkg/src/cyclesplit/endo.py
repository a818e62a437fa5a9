"""The Galois-style apparatus of the bundled cubic splitting algebra.

Over a prime field K = Z/p, the rank-3 algebra A generated by the three
pseudoroots of X^3 - X^2 carries a monoid of unital algebra endomorphisms
that falls into four families:

    eps            a_1 -> 1,            a_2 -> 0,        a_3 -> 0
    eps'           a_1 -> 0,            a_2 -> 0,        a_3 -> 1
    eps^s_v        a_1 -> a_1 + v a_2,  a_2 -> s a_2,    a_3 -> (1-s-v) a_2 + a_3
    eps_v          a_1 -> (1-v) a_2 + a_3,  a_2 -> 0,    a_3 -> a_1 + v a_2

(with a scale parameter s and a shift parameter v ranging over K). This
module enumerates the monoid by brute force, classifies the members,
verifies the composition table against the triangular 2x2 matrix model
M(eps^s_v) = ((s, 0), (v, 1)), classifies the roots and the rotation
classes of splittings of X^3 - X^2 into their parameter families, checks
both monoid actions entrywise, and verifies the minimal-polynomial poset
and the translation properties.

Composition order (frozen): ``compose_endos(e1, e2)`` applies e1 first and
e2 second. Under this order the matrix model is a monoid homomorphism:
M(compose(e1, e2)) = M(e1) M(e2). The evidence for freezing this order over
the alternative is computed by :func:`composition_order_evidence` and
embedded in reports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .examples import EXAMPLE1_DESCRIPTOR, example1_algebra, example1_cubic
from .rings import Element, ResidueRing, TableAlgebra
from .search import SearchTask, enumerate_splittings

COMPOSITION_ORDER = "left-operand-first"

Vec = tuple[int, int, int]

_SC = EXAMPLE1_DESCRIPTOR.structure_constants
_UNIT: Vec = (1, 1, 1)
_ZERO: Vec = (0, 0, 0)


class ClassificationError(Exception):
    """An enumerated object does not fit the predicted families; seeing this
    means the family tables are falsified for this base."""


def _require_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2:
        raise ValueError("modulus must be a prime >= 2")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"modulus {p} is not prime")
        d += 1
    return p


def _vadd(x: Vec, y: Vec, p: int) -> Vec:
    return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2]) % p)


def _vsub(x: Vec, y: Vec, p: int) -> Vec:
    return ((x[0] - y[0]) % p, (x[1] - y[1]) % p, (x[2] - y[2]) % p)


def _vneg(x: Vec, p: int) -> Vec:
    return ((-x[0]) % p, (-x[1]) % p, (-x[2]) % p)


def _vmul(x: Vec, y: Vec, p: int) -> Vec:
    out = [0, 0, 0]
    for i in range(3):
        xi = x[i]
        if not xi:
            continue
        for j in range(3):
            yj = y[j]
            if not yj:
                continue
            c = xi * yj
            vec = _SC[i][j]
            for k in range(3):
                if vec[k]:
                    out[k] += c * vec[k]
    return (out[0] % p, out[1] % p, out[2] % p)


def _cubic_value(x: Vec, p: int) -> Vec:
    x2 = _vmul(x, x, p)
    return _vsub(_vmul(x2, x, p), x2, p)


# ---------------------------------------------------------------------------
# endomorphisms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EndoFamily:
    """Family tag: eps, eps_prime, eps_sigma_s(scale, shift) or eps_s(shift)."""

    kind: str
    params: tuple[int, ...] = ()

    def label(self) -> str:
        if self.kind == "eps":
            return "eps"
        if self.kind == "eps_prime":
            return "eps'"
        if self.kind == "eps_sigma_s":
            return f"eps^{self.params[0]}_{self.params[1]}"
        if self.kind == "eps_s":
            return f"eps_{self.params[0]}"
        return "unclassified"


IDENTITY_FAMILY = EndoFamily("eps_sigma_s", (1, 0))


def _family_images(family: EndoFamily, p: int) -> tuple[Vec, Vec, Vec]:
    if family.kind == "eps":
        return (_UNIT, _ZERO, _ZERO)
    if family.kind == "eps_prime":
        return (_ZERO, _ZERO, _UNIT)
    if family.kind == "eps_sigma_s":
        s, v = family.params
        return ((1, v % p, 0), (0, s % p, 0), (0, (1 - s - v) % p, 1))
    if family.kind == "eps_s":
        (v,) = family.params
        return ((0, (1 - v) % p, 1), _ZERO, (1, v % p, 0))
    raise ValueError(f"no images for {family!r}")


def classify_endo_images(images: tuple[Vec, Vec, Vec], p: int) -> EndoFamily:
    u, v, w = images
    if u == _UNIT and v == _ZERO and w == _ZERO:
        return EndoFamily("eps")
    if u == _ZERO and v == _ZERO and w == _UNIT:
        return EndoFamily("eps_prime")
    if u[0] == 1 and u[2] == 0 and v[0] == 0 and v[2] == 0:
        scale, shift = v[1], u[1]
        if w == (0, (1 - scale - shift) % p, 1):
            return EndoFamily("eps_sigma_s", (scale, shift))
    if v == _ZERO and u[0] == 0 and u[2] == 1 and w[0] == 1 and w[2] == 0:
        shift = w[1]
        if u[1] == (1 - shift) % p:
            return EndoFamily("eps_s", (shift,))
    return EndoFamily("unclassified")


@dataclass(frozen=True)
class EndoMap:
    """A unital algebra endomorphism of K c A, stored by basis images."""

    algebra: TableAlgebra
    images: tuple[Element, Element, Element]
    family: EndoFamily

    @property
    def p(self) -> int:
        return self.algebra.base.modulus

    @property
    def image_vecs(self) -> tuple[Vec, Vec, Vec]:
        return tuple(im.payload for im in self.images)

    def apply_vec(self, x: Vec) -> Vec:
        p = self.p
        u, v, w = self.image_vecs
        return tuple(
            (x[0] * u[k] + x[1] * v[k] + x[2] * w[k]) % p for k in range(3)
        )

    def apply(self, x: Element) -> Element:
        if x.ring != self.algebra:
            raise ValueError("element does not belong to this algebra")
        return Element(self.algebra, self.apply_vec(x.payload))

    def label(self) -> str:
        return self.family.label()


@lru_cache(maxsize=None)
def _algebra_for(p: int) -> TableAlgebra:
    return example1_algebra(ResidueRing(p))


def _mk_endo(algebra: TableAlgebra, vecs: tuple[Vec, Vec, Vec]) -> EndoMap:
    return EndoMap(
        algebra,
        tuple(Element(algebra, v) for v in vecs),
        classify_endo_images(vecs, algebra.base.modulus),
    )


def enumerate_endos(modulus: int) -> list[EndoMap]:
    """All unital algebra endomorphisms by brute force over image pairs.

    The image of a_3 is forced by unitality (the unit is a_1 + a_2 + a_3),
    so only the images of a_1 and a_2 are searched, with multiplicativity
    pruning as early as possible.
    """
    p = _require_prime(modulus)
    algebra = _algebra_for(p)
    vecs = list(itertools.product(range(p), repeat=3))
    idempotents = [u for u in vecs if _vmul(u, u, p) == u]
    found = []
    for u in idempotents:
        for v in vecs:
            if _vmul(v, v, p) != _ZERO:
                continue
            if _vmul(u, v, p) != _ZERO or _vmul(v, u, p) != v:
                continue
            w = _vsub(_UNIT, _vadd(u, v, p), p)
            if _vmul(u, w, p) != _ZERO or _vmul(v, w, p) != _ZERO:
                continue
            if _vmul(w, u, p) != _vneg(v, p) or _vmul(w, v, p) != v:
                continue
            if _vmul(w, w, p) != w:
                continue
            found.append((u, v, w))
    found.sort()
    return [_mk_endo(algebra, vecs_) for vecs_ in found]


def compose_endos(e1: EndoMap, e2: EndoMap) -> EndoMap:
    """Apply e1 first, then e2 (the frozen composition order)."""
    if e1.algebra != e2.algebra:
        raise ValueError("endomorphisms of different algebras")
    if e1.family.kind == "unclassified" or e2.family.kind == "unclassified":
        raise ClassificationError("cannot compose unclassified endomorphisms")
    vecs = tuple(e2.apply_vec(im) for im in e1.image_vecs)
    return _mk_endo(e1.algebra, vecs)


def predicted_composition(f1: EndoFamily, f2: EndoFamily, p: int) -> EndoFamily:
    """Family of compose(e1, e2) predicted by the matrix model M(e1) M(e2)."""
    if f1.kind == "eps" or f1.kind == "eps_prime":
        return EndoFamily(f1.kind)
    if f1.kind == "eps_sigma_s":
        s, v = f1.params
        if f2.kind == "eps":
            return EndoFamily("eps")
        if f2.kind == "eps_prime":
            return EndoFamily("eps_prime")
        if f2.kind == "eps_sigma_s":
            t, u = f2.params
            return EndoFamily("eps_sigma_s", ((s * t) % p, (v * t + u) % p))
        (u,) = f2.params
        return EndoFamily("eps_s", (u,))
    if f1.kind == "eps_s":
        (v,) = f1.params
        if f2.kind == "eps":
            return EndoFamily("eps_prime")
        if f2.kind == "eps_prime":
            return EndoFamily("eps")
        if f2.kind == "eps_sigma_s":
            t, u = f2.params
            return EndoFamily("eps_s", ((v * t + u) % p,))
        (u,) = f2.params
        return EndoFamily("eps_sigma_s", (0, u))
    raise ClassificationError(f"no prediction for {f1!r}")


def identity_endo(modulus: int) -> EndoMap:
    p = _require_prime(modulus)
    algebra = _algebra_for(p)
    return _mk_endo(algebra, _family_images(IDENTITY_FAMILY, p))


def automorphisms(endos: list[EndoMap]) -> list[EndoMap]:
    """Members with a two-sided compositional inverse, by brute force."""
    ident = None
    for e in endos:
        if e.family == IDENTITY_FAMILY:
            ident = e
    if ident is None:
        raise ClassificationError("identity endomorphism not found")
    autos = []
    for e in endos:
        if any(
            compose_endos(e, f).images == ident.images
            and compose_endos(f, e).images == ident.images
            for f in endos
        ):
            autos.append(e)
    return autos


@dataclass(frozen=True)
class MonoidTableReport:
    p: int
    endo_count: int
    automorphism_count: int
    unclassified: tuple[str, ...]
    mismatches: tuple[tuple[str, str, str, str], ...]
    total_pairs: int
    frozen_order_agreement: int
    reversed_order_agreement: int
    neutral_ok: bool
    invertibles_ok: bool
    composition_order: str = COMPOSITION_ORDER

    @property
    def passed(self) -> bool:
        return (
            not self.unclassified
            and not self.mismatches
            and self.neutral_ok
            and self.invertibles_ok
            and self.frozen_order_agreement == self.total_pairs
        )

    def to_json(self):
        return {
            "p": self.p,
            "endo_count": self.endo_count,
            "automorphism_count": self.automorphism_count,
            "unclassified": list(self.unclassified),
            "mismatches": [list(m) for m in self.mismatches],
            "total_pairs": self.total_pairs,
            "frozen_order_agreement": self.frozen_order_agreement,
            "reversed_order_agreement": self.reversed_order_agreement,
            "neutral_ok": self.neutral_ok,
            "invertibles_ok": self.invertibles_ok,
            "composition_order": self.composition_order,
            "passed": self.passed,
        }


def verify_monoid_table(modulus: int) -> MonoidTableReport:
    """Check every composition against the family the matrix model predicts,
    under the frozen order, and collect the evidence for that order."""
    p = _require_prime(modulus)
    endos = enumerate_endos(p)
    unclassified = tuple(
        str(e.image_vecs) for e in endos if e.family.kind == "unclassified"
    )
    mismatches = []
    frozen_hits = 0
    reversed_hits = 0
    for r in endos:
        for c in endos:
            predicted = predicted_composition(r.family, c.family, p)
            actual = compose_endos(r, c).family
            if actual == predicted:
                frozen_hits += 1
            else:
                mismatches.append(
                    (r.label(), c.label(), predicted.label(), actual.label())
                )
            if compose_endos(c, r).family == predicted:
                reversed_hits += 1

    ident = identity_endo(p)
    neutral_ok = all(
        compose_endos(e, ident).images == e.images
        and compose_endos(ident, e).images == e.images
        for e in endos
    )
    autos = automorphisms(endos)
    expected_autos = {
        EndoFamily("eps_sigma_s", (s, v)) for s in range(1, p) for v in range(p)
    }
    invertibles_ok = {e.family for e in autos} == expected_autos

    return MonoidTableReport(
        p=p,
        endo_count=len(endos),
        automorphism_count=len(autos),
        unclassified=unclassified,
        mismatches=tuple(mismatches),
        total_pairs=len(endos) ** 2,
        frozen_order_agreement=frozen_hits,
        reversed_order_agreement=reversed_hits,
        neutral_ok=neutral_ok,
        invertibles_ok=invertibles_ok,
    )


def composition_order_evidence(modulus: int) -> dict:
    """Agreement counts of both candidate composition orders against the
    matrix-model prediction; the frozen order must win outright."""
    report = verify_monoid_table(modulus)
    return {
        "p": report.p,
        "total_pairs": report.total_pairs,
        "left_operand_first": report.frozen_order_agreement,
        "right_operand_first": report.reversed_order_agreement,
        "frozen": report.composition_order,
    }


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootFamily:
    """Tag: r_tau(t), r_tau_t(t, u), r_t(u) or r (the unit)."""

    kind: str
    params: tuple[int, ...] = ()

    def label(self) -> str:
        if self.kind == "r_tau":
            return f"r^{self.params[0]}"
        if self.kind == "r_tau_t":
            return f"r^{self.params[0]}_{self.params[1]}"
        if self.kind == "r_t":
            return f"r_{self.params[0]}"
        return "r"

    def element_vec(self, p: int) -> Vec:
        if self.kind == "r_tau":
            return (0, self.params[0] % p, 0)
        if self.kind == "r_tau_t":
            t, u = self.params
            return (0, (1 - t - u) % p, 1)
        if self.kind == "r_t":
            return (1, self.params[0] % p, 0)
        if self.kind == "r":
            return (1, 1, 1)
        raise ValueError(f"no element for {self!r}")


@dataclass(frozen=True)
class RootRecord:
    algebra: TableAlgebra
    element: Element
    family: RootFamily
    minpoly: str


# the six monic divisors of X^2 (X - 1), as scalar coefficient tuples and a
# divisibility table (proper divisors only)
MINPOLY_LATTICE = {
    "1": (1,),
    "X": (0, 1),
    "X-1": (-1, 1),
    "X^2": (0, 0, 1),
    "X(X-1)": (0, -1, 1),
    "X^2(X-1)": (0, 0, -1, 1),
}

_PROPER_DIVISORS = {
    "1": frozenset(),
    "X": frozenset({"1"}),
    "X-1": frozenset({"1"}),
    "X^2": frozenset({"1", "X"}),
    "X(X-1)": frozenset({"1", "X", "X-1"}),
    "X^2(X-1)": frozenset({"1", "X", "X-1", "X^2", "X(X-1)"}),
}

MINPOLY_DEGREE = {"1": 0, "X": 1, "X-1": 1, "X^2": 2, "X(X-1)": 2, "X^2(X-1)": 3}


def minpoly_divides(a: str, b: str) -> bool:
    return a == b or a in _PROPER_DIVISORS[b]


def _eval_scalar_poly(coeffs: tuple[int, ...], x: Vec, p: int) -> Vec:
    acc = _ZERO
    for c in reversed(coeffs):
        acc = _vadd(_vmul(acc, x, p), _vscale(c, _UNIT, p), p)
    return acc


def _vscale(c: int, x: Vec, p: int) -> Vec:
    return ((c * x[0]) % p, (c * x[1]) % p, (c * x[2]) % p)


def minpoly_label(x: Vec, p: int) -> str:
    """Divisibility-least label in the lattice that annihilates x.

    Raises ClassificationError when no unique least annihilator exists.
    """
    annihilating = {
        label
        for label, coeffs in MINPOLY_LATTICE.items()
        if _eval_scalar_poly(coeffs, x, p) == _ZERO
    }
    minimal = [
        label
        for label in annihilating
        if not any(d in annihilating for d in _PROPER_DIVISORS[label])
    ]
    if len(minimal) != 1:
        raise ClassificationError(
            f"no unique minimal annihilator for {x}: candidates {sorted(minimal)}"
        )
    return minimal[0]


def root_elements(modulus: int) -> list[Vec]:
    """Exhaustive scan: every x in A with x^3 = x^2, in lexicographic order."""
    p = _require_prime(modulus)
    return [
        x
        for x in itertools.product(range(p), repeat=3)
        if _cubic_value(x, p) == _ZERO
    ]


def _all_root_families(p: int) -> list[RootFamily]:
    fams = [RootFamily("r_tau", (t,)) for t in range(p)]
    fams += [RootFamily("r_tau_t", (t, u)) for t in range(p) for u in range(p)]
    fams += [RootFamily("r_t", (u,)) for u in range(p)]
    fams.append(RootFamily("r"))
    return fams


def classify_element_as_root(x: Vec, p: int) -> RootFamily:
    """Canonical family of a root element (r_tau_t is normalized to tau = 0)."""
    if x == (1, 1, 1):
        return RootFamily("r")
    if x[0] == 1 and x[2] == 0:
        return RootFamily("r_t", (x[1],))
    if x[0] == 0 and x[2] == 1:
        return RootFamily("r_tau_t", (0, (1 - x[1]) % p))
    if x[0] == 0 and x[2] == 0:
        return RootFamily("r_tau", (x[1],))
    raise ClassificationError(f"{x} does not match any root family")


def classify_roots(modulus: int) -> list[RootRecord]:
    """One record per family parameter instance, (p+1)^2 in all.

    Every record's element is verified to be a root; the records' element
    set is verified to equal the exhaustive root scan (3p+1 distinct
    elements, the r_tau_t family depends only on t+u); and every scanned
    root must classify into exactly one family kind (hard failure
    otherwise).
    """
    p = _require_prime(modulus)
    algebra = _algebra_for(p)
    scan = root_elements(p)
    scan_set = set(scan)
    records = []
    for fam in _all_root_families(p):
        vec = fam.element_vec(p)
        if vec not in scan_set:
            raise ClassificationError(f"family instance {fam.label()} is not a root")
        records.append(
            RootRecord(algebra, Element(algebra, vec), fam, minpoly_label(vec, p))
        )
    covered = {r.element.payload for r in records}
    for x in scan:
        if x not in covered:
            raise ClassificationError(f"root {x} matched no family")
        classify_element_as_root(x, p)  # raises if shape-ambiguous
    return records


def distinct_root_elements(records: list[RootRecord]) -> list[Vec]:
    return sorted({r.element.payload for r in records})


# ---------------------------------------------------------------------------
# cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleFamily:
    """Tag: c_tau(t), c_tau_t(t, u) or c_t(u)."""

    kind: str
    params: tuple[int, ...] = ()

    def label(self) -> str:
        if self.kind == "c_tau":
            return f"c^{self.params[0]}"
        if self.kind == "c_tau_t":
            return f"c^{self.params[0]}_{self.params[1]}"
        return f"c_{self.params[0]}"

    def support_vecs(self, p: int) -> tuple[Vec, Vec, Vec]:
        if self.kind == "c_tau":
            (t,) = self.params
            return (
                RootFamily("r_tau", (t,)).element_vec(p),
                RootFamily("r_tau", ((-t) % p,)).element_vec(p),
                RootFamily("r").element_vec(p),
            )
        if self.kind == "c_tau_t":
            t, u = self.params
            return (
                RootFamily("r_tau", (t,)).element_vec(p),
                RootFamily("r_tau_t", (t, u)).element_vec(p),
                RootFamily("r_t", (u,)).element_vec(p),
            )
        (u,) = self.params
        return (
            RootFamily("r_tau", (0,)).element_vec(p),
            RootFamily("r_t", (u,)).element_vec(p),
            RootFamily("r_tau_t", (0, u)).element_vec(p),
        )


@dataclass(frozen=True)
class CycleRecord:
    algebra: TableAlgebra
    roots: tuple[Element, Element, Element]  # canonical rotation
    family: CycleFamily


def _canonical_cycle_key(vecs: tuple[Vec, ...]) -> tuple[Vec, ...]:
    n = len(vecs)
    return min(tuple(vecs[k:] + vecs[:k]) for k in range(n))


def _all_cycle_families(p: int) -> list[CycleFamily]:
    fams = [CycleFamily("c_tau", (t,)) for t in range(p)]
    fams += [CycleFamily("c_tau_t", (t, u)) for t in range(p) for u in range(p)]
    fams += [CycleFamily("c_t", (u,)) for u in range(p)]
    return fams


def predicted_cycle_classes(p: int) -> dict[tuple[Vec, ...], CycleFamily]:
    table = {}
    for fam in _all_cycle_families(p):
        key = _canonical_cycle_key(fam.support_vecs(p))
        if key in table:
            raise ClassificationError(
                f"cycle families {table[key].label()} and {fam.label()} collide"
            )
        table[key] = fam
    return table


def classify_cycles(modulus: int) -> list[CycleRecord]:
    """Exhaustively enumerate splittings of X^3 - X^2 with leading 1, group
    them into rotation classes and match each class to a family.

    Hard failure when a found class matches no family or a predicted family
    instance is not found: either falsifies the classification for this p.
    """
    p = _require_prime(modulus)
    algebra = _algebra_for(p)
    f = example1_cubic(algebra)
    outcome = enumerate_splittings(SearchTask(algebra, f, 3, "all_splittings"))
    found_keys = {
        _canonical_cycle_key(tuple(a.payload for a in w.pseudoroots))
        for w in outcome.witnesses
    }
    predicted = predicted_cycle_classes(p)
    for key in found_keys:
        if key not in predicted:
            raise ClassificationError(f"splitting class {key} matched no family")
    for key, fam in predicted.items():
        if key not in found_keys:
            raise ClassificationError(
                f"family instance {fam.label()} was not found by the search"
            )
    records = []
    for fam in _all_cycle_families(p):
        key = _canonical_cycle_key(fam.support_vecs(p))
        records.append(
            CycleRecord(algebra, tuple(Element(algebra, v) for v in key), fam)
        )
    return records


def _det3_mod(rows: tuple[Vec, Vec, Vec], p: int) -> int:
    (a, b, c), (d, e, f_), (g, h, i) = rows
    return (a * (e * i - f_ * h) - b * (d * i - f_ * g) + c * (d * h - e * g)) % p


def cycle_is_basis(record: CycleRecord) -> bool:
    p = record.algebra.base.modulus
    rows = tuple(r.payload for r in record.roots)
    return _det3_mod(rows, p) % p != 0


@dataclass(frozen=True)
class CycleSuiteReport:
    p: int
    root_record_count: int
    distinct_root_count: int
    cycle_class_count: int
    splitting_count: int
    roots_are_union_of_supports: bool
    basis_classes_ok: bool

    @property
    def passed(self) -> bool:
        return self.roots_are_union_of_supports and self.basis_classes_ok

    def to_json(self):
        return {
            "p": self.p,
            "root_record_count": self.root_record_count,
            "distinct_root_count": self.distinct_root_count,
            "cycle_class_count": self.cycle_class_count,
            "splitting_count": self.splitting_count,
            "roots_are_union_of_supports": self.roots_are_union_of_supports,
            "basis_classes_ok": self.basis_classes_ok,
            "passed": self.passed,
        }


def verify_cycle_suite(modulus: int) -> CycleSuiteReport:
    """Classification plus the two structural facts: the roots are exactly
    the union of cycle supports, and the classes whose roots form a module
    basis are exactly c_tau_t with invertible first parameter."""
    p = _require_prime(modulus)
    algebra = _algebra_for(p)
    roots = classify_roots(p)
    cycles = classify_cycles(p)
    f = example1_cubic(algebra)
    outcome = enumerate_splittings(SearchTask(algebra, f, 3, "all_splittings"))

    support = {v.payload for rec in cycles for v in rec.roots}
    union_ok = support == set(distinct_root_elements(roots))

    basis_ok = all(
        cycle_is_basis(rec)
        == (rec.family.kind == "c_tau_t" and rec.family.params[0] % p != 0)
        for rec in cycles
    )
    return CycleSuiteReport(
        p=p,
        root_record_count=len(roots),
        distinct_root_count=len(distinct_root_elements(roots)),
        cycle_class_count=len(cycles),
        splitting_count=len(outcome.witnesses),
        roots_are_union_of_supports=union_ok,
        basis_classes_ok=basis_ok,
    )


# ---------------------------------------------------------------------------
# actions
# ---------------------------------------------------------------------------


def predicted_root_action(e: EndoFamily, r: RootFamily, p: int) -> RootFamily:
    if e.kind == "eps":
        if r.kind in ("r_tau", "r_tau_t"):
            return RootFamily("r_tau", (0,))
        return RootFamily("r")
    if e.kind == "eps_prime":
        if r.kind in ("r_tau", "r_t"):
            return RootFamily("r_tau", (0,))
        return RootFamily("r")
    if e.kind == "eps_sigma_s":
        s, v = e.params
        if r.kind == "r_tau":
            return RootFamily("r_tau", ((r.params[0] * s) % p,))
        if r.kind == "r_tau_t":
            t, u = r.params
            return RootFamily("r_tau_t", ((t * s) % p, (u * s + v) % p))
        if r.kind == "r_t":
            return RootFamily("r_t", ((r.params[0] * s + v) % p,))
        return RootFamily("r")
    if e.kind == "eps_s":
        (v,) = e.params
        if r.kind == "r_tau":
            return RootFamily("r_tau", (0,))
        if r.kind == "r_tau_t":
            return RootFamily("r_t", (v,))
        if r.kind == "r_t":
            return RootFamily("r_tau_t", (0, v))
        return RootFamily("r")
    raise ClassificationError(f"no action rule for {e!r}")


def predicted_cycle_action(e: EndoFamily, c: CycleFamily, p: int) -> CycleFamily:
    if e.kind in ("eps", "eps_prime"):
        return CycleFamily("c_tau", (0,))
    if e.kind == "eps_sigma_s":
        s, v = e.params
        if c.kind == "c_tau":
            return CycleFamily("c_tau", ((c.params[0] * s) % p,))
        if c.kind == "c_tau_t":
            t, u = c.params
            return CycleFamily("c_tau_t", ((t * s) % p, (u * s + v) % p))
        # the shift parameter moves: c_t(u) -> c_t(u*s + v)
        return CycleFamily("c_t", ((c.params[0] * s + v) % p,))
    if e.kind == "eps_s":
        (v,) = e.params
        if c.kind == "c_tau":
            return CycleFamily("c_tau", (0,))
        if c.kind == "c_tau_t":
            return CycleFamily("c_t", (v,))
        return CycleFamily("c_tau_t", (0, v))
    raise ClassificationError(f"no action rule for {e!r}")


def action_on_root(e: EndoMap, record: RootRecord) -> RootRecord:
    """Image of a root record under an endomorphism, canonically reclassified.

    Raises ClassificationError when the image is not a root (it always is:
    endomorphisms preserve roots of scalar-coefficient polynomials).
    """
    p = e.p
    img = e.apply_vec(record.element.payload)
    if _cubic_value(img, p) != _ZERO:
        raise ClassificationError(f"image {img} is not a root")
    fam = classify_element_as_root(img, p)
    return RootRecord(e.algebra, Element(e.algebra, img), fam, minpoly_label(img, p))


@dataclass(frozen=True)
class ActionTablesReport:
    p: int
    root_action_checks: int
    root_action_mismatches: tuple[tuple[str, str, str, str], ...]
    cycle_action_checks: int
    cycle_action_mismatches: tuple[tuple[str, str, str, str], ...]
    images_are_roots: bool

    @property
    def passed(self) -> bool:
        return (
            not self.root_action_mismatches
            and not self.cycle_action_mismatches
            and self.images_are_roots
        )

    def to_json(self):
        return {
            "p": self.p,
            "root_action_checks": self.root_action_checks,
            "root_action_mismatches": [list(m) for m in self.root_action_mismatches],
            "cycle_action_checks": self.cycle_action_checks,
            "cycle_action_mismatches": [list(m) for m in self.cycle_action_mismatches],
            "images_are_roots": self.images_are_roots,
            "passed": self.passed,
        }


def verify_action_tables(modulus: int) -> ActionTablesReport:
    """Entrywise check of both action tables over all parameter values."""
    p = _require_prime(modulus)
    endos = enumerate_endos(p)
    root_mismatches = []
    cycle_mismatches = []
    images_are_roots = True
    root_checks = 0
    for e in endos:
        for fam in _all_root_families(p):
            root_checks += 1
            vec = fam.element_vec(p)
            img = e.apply_vec(vec)
            if _cubic_value(img, p) != _ZERO:
                images_are_roots = False
            expected = predicted_root_action(e.family, fam, p).element_vec(p)
            if img != expected:
                root_mismatches.append(
                    (e.label(), fam.label(), str(expected), str(img))
                )
    cycle_checks = 0
    for e in endos:
        for fam in _all_cycle_families(p):
            cycle_checks += 1
            img = tuple(e.apply_vec(v) for v in fam.support_vecs(p))
            got = _canonical_cycle_key(img)
            expected = _canonical_cycle_key(
                predicted_cycle_action(e.family, fam, p).support_vecs(p)
            )
            if got != expected:
                cycle_mismatches.append(
                    (e.label(), fam.label(), str(expected), str(got))
                )
    return ActionTablesReport(
        p=p,
        root_action_checks=root_checks,
        root_action_mismatches=tuple(root_mismatches),
        cycle_action_checks=cycle_checks,
        cycle_action_mismatches=tuple(cycle_mismatches),
        images_are_roots=images_are_roots,
    )


# ---------------------------------------------------------------------------
# minimal polynomials and the poset
# ---------------------------------------------------------------------------

EXPECTED_MINPOLY = {
    # family kind -> label; r_tau splits on whether the parameter is zero
    "r_tau_zero": "X",
    "r_tau_nonzero": "X^2",
    "r_tau_t": "X(X-1)",
    "r_t": "X(X-1)",
    "r": "X-1",
}


def _expected_minpoly(fam: RootFamily, p: int) -> str:
    if fam.kind == "r_tau":
        return "X" if fam.params[0] % p == 0 else "X^2"
    return EXPECTED_MINPOLY[fam.kind]


def _strictly_above(mp_x: str, mp_y: str) -> bool:
    # x is above y when x's minimal polynomial properly divides y's
    return mp_x != mp_y and minpoly_divides(mp_x, mp_y)


@dataclass(frozen=True)
class PosetReport:
    p: int
    minpoly_table_ok: bool
    monotone_ok: bool
    automorphisms_preserve_ok: bool
    level_order_ok: bool
    failing_kinds: tuple[str, ...]
    exception_patterns: tuple[tuple[str, str, str], ...]
    exception_pattern_ok: bool
    failing_pair_count: int

    @property
    def passed(self) -> bool:
        return (
            self.minpoly_table_ok
            and self.monotone_ok
            and self.automorphisms_preserve_ok
            and self.level_order_ok
            and set(self.failing_kinds) == {"eps", "eps_prime"}
            and self.exception_pattern_ok
        )

    def to_json(self):
        return {
            "p": self.p,
            "minpoly_table_ok": self.minpoly_table_ok,
            "monotone_ok": self.monotone_ok,
            "automorphisms_preserve_ok": self.automorphisms_preserve_ok,
            "level_order_ok": self.level_order_ok,
            "failing_kinds": list(self.failing_kinds),
            "exception_patterns": [list(t) for t in self.exception_patterns],
            "exception_pattern_ok": self.exception_pattern_ok,
            "failing_pair_count": self.failing_pair_count,
            "passed": self.passed,
        }


# the four exception patterns: which endomorphism breaks which strict pair
EXPECTED_EXCEPTION_PATTERNS = frozenset(
    {
        ("eps_prime", "r^0", "r_tau_t"),
        ("eps", "r^0", "r_t"),
        ("eps", "r", "r_tau_t"),
        ("eps_prime", "r", "r_t"),
    }
)


def minpoly_and_poset(modulus: int) -> PosetReport:
    """Verify the minimal-polynomial table, that every endomorphism moves
    roots weakly upward (divisibility of minimal polynomials), that
    automorphisms preserve the order, that exactly eps and eps' break
    order preservation (in the four known patterns), and that the weaker
    degree-level order is always preserved."""
    p = _require_prime(modulus)
    endos = enumerate_endos(p)
    records = classify_roots(p)
    autos = {id(e) for e in automorphisms(endos)}

    minpoly_table_ok = all(
        rec.minpoly == _expected_minpoly(rec.family, p) for rec in records
    )

    monotone_ok = True
    level_order_ok = True
    for e in endos:
        for rec in records:
            mp_img = minpoly_label(e.apply_vec(rec.element.payload), p)
            if not minpoly_divides(mp_img, rec.minpoly):
                monotone_ok = False
            if MINPOLY_DEGREE[mp_img] > MINPOLY_DEGREE[rec.minpoly]:
                level_order_ok = False

    failing_kinds = set()
    patterns = set()
    failing_pair_count = 0
    automorphisms_preserve_ok = True
    strict_pairs = [
        (x, y)
        for x in records
        for y in records
        if _strictly_above(x.minpoly, y.minpoly)
    ]
    for e in endos:
        for x, y in strict_pairs:
            mp_x = minpoly_label(e.apply_vec(x.element.payload), p)
            mp_y = minpoly_label(e.apply_vec(y.element.payload), p)
            if not minpoly_divides(mp_x, mp_y):
                failing_pair_count += 1
                failing_kinds.add(e.family.kind)
                if id(e) in autos:
                    automorphisms_preserve_ok = False
                top = "r" if x.family.kind == "r" else (
                    "r^0" if x.family.kind == "r_tau" and x.family.params[0] % p == 0 else x.family.label()
                )
                patterns.add((e.family.kind, top, y.family.kind))

    exception_pattern_ok = patterns == set(EXPECTED_EXCEPTION_PATTERNS)

    return PosetReport(
        p=p,
        minpoly_table_ok=minpoly_table_ok,
        monotone_ok=monotone_ok,
        automorphisms_preserve_ok=automorphisms_preserve_ok,
        level_order_ok=level_order_ok,
        failing_kinds=tuple(sorted(failing_kinds)),
        exception_patterns=tuple(sorted(patterns)),
        exception_pattern_ok=exception_pattern_ok,
        failing_pair_count=failing_pair_count,
    )


# ---------------------------------------------------------------------------
# translation properties
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TranslateReport:
    """Single-application translation checks, with the reachability-closure
    reading computed alongside (they agree on the checked primes)."""

    p: int
    roots_from_seeds: bool
    roots_to_sinks: bool
    cycles_from_seeds: bool
    cycles_to_sink: bool
    closure_needed: bool

    @property
    def passed(self) -> bool:
        return (
            self.roots_from_seeds
            and self.roots_to_sinks
            and self.cycles_from_seeds
            and self.cycles_to_sink
        )

    def to_json(self):
        return {
            "p": self.p,
            "roots_from_seeds": self.roots_from_seeds,
            "roots_to_sinks": self.roots_to_sinks,
            "cycles_from_seeds": self.cycles_from_seeds,
            "cycles_to_sink": self.cycles_to_sink,
            "closure_needed": self.closure_needed,
            "passed": self.passed,
        }


def verify_translate_properties(modulus: int) -> TranslateReport:
    """Every root is the image of r^1 or r^1_0; every root maps into
    {r^0, r}; every cycle class is the image of the c^1 or c^1_0 class; and
    every cycle class maps to the c^0 class. "Image" means a single
    endomorphism application; the reachability closure is also computed to
    confirm single application already suffices."""
    p = _require_prime(modulus)
    endos = enumerate_endos(p)
    roots = root_elements(p)

    seed_roots = [
        RootFamily("r_tau", (1,)).element_vec(p),
        RootFamily("r_tau_t", (1, 0)).element_vec(p),
    ]
    one_step_images = {e.apply_vec(v) for e in endos for v in seed_roots}
    roots_from_seeds = set(roots) <= one_step_images

    sinks = {RootFamily("r_tau", (0,)).element_vec(p), RootFamily("r").element_vec(p)}
    roots_to_sinks = all(
        any(e.apply_vec(v) in sinks for e in endos) for v in roots
    )

    cycle_keys = set(predicted_cycle_classes(p))
    seed_cycles = [
        CycleFamily("c_tau", (1,)).support_vecs(p),
        CycleFamily("c_tau_t", (1, 0)).support_vecs(p),
    ]
    one_step_cycle_images = {
        _canonical_cycle_key(tuple(e.apply_vec(v) for v in support))
        for e in endos
        for support in seed_cycles
    }
    cycles_from_seeds = cycle_keys <= one_step_cycle_images

    sink_key = _canonical_cycle_key(CycleFamily("c_tau", (0,)).support_vecs(p))
    cycles_to_sink = all(
        any(
            _canonical_cycle_key(tuple(e.apply_vec(v) for v in key)) == sink_key
            for e in endos
        )
        for key in cycle_keys
    )

    # reachability closure of the seeds; single application must already
    # cover it, so the closure adds nothing new
    closure = set(seed_roots) | one_step_images
    frontier = list(closure)
    while frontier:
        v = frontier.pop()
        for e in endos:
            img = e.apply_vec(v)
            if img not in closure:
                closure.add(img)
                frontier.append(img)
    closure_needed = not (closure <= one_step_images | set(seed_roots))

    return TranslateReport(
        p=p,
        roots_from_seeds=roots_from_seeds,
        roots_to_sinks=roots_to_sinks,
        cycles_from_seeds=cycles_from_seeds,
        cycles_to_sink=cycles_to_sink,
        closure_needed=closure_needed,
    )


# ---------------------------------------------------------------------------
# the whole battery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EndoSuiteReport:
    p: int
    monoid: MonoidTableReport
    cycles: CycleSuiteReport
    actions: ActionTablesReport
    poset: PosetReport
    translate: TranslateReport

    @property
    def passed(self) -> bool:
        return (
            self.monoid.passed
            and self.cycles.passed
            and self.actions.passed
            and self.poset.passed
            and self.translate.passed
        )

    def to_json(self):
        return {
            "p": self.p,
            "monoid": self.monoid.to_json(),
            "cycles": self.cycles.to_json(),
            "actions": self.actions.to_json(),
            "poset": self.poset.to_json(),
            "translate": self.translate.to_json(),
            "passed": self.passed,
        }


def full_suite(modulus: int) -> EndoSuiteReport:
    p = _require_prime(modulus)
    return EndoSuiteReport(
        p=p,
        monoid=verify_monoid_table(p),
        cycles=verify_cycle_suite(p),
        actions=verify_action_tables(p),
        poset=minpoly_and_poset(p),
        translate=verify_translate_properties(p),
    )


# ---------------------------------------------------------------------------
# table rendering
# ---------------------------------------------------------------------------


def render_vec(v: Vec) -> str:
    terms = []
    for coeff, name in zip(v, ("a1", "a2", "a3")):
        if coeff == 0:
            continue
        terms.append(name if coeff == 1 else f"{coeff}*{name}")
    return " + ".join(terms) if terms else "0"


def format_table(headers: list[str], rows: list[list[str]]) -> str:
    cols = [headers] + rows
    widths = [max(len(r[i]) for r in cols) for i in range(len(headers))]
    def fmt(row):
        return "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines += [fmt(r) for r in rows]
    return "\n".join(lines)


def endo_images_rows(modulus: int) -> tuple[list[str], list[list[str]]]:
    endos = enumerate_endos(modulus)
    headers = ["endo", "a1 ->", "a2 ->", "a3 ->"]
    rows = [
        [e.label(), *(render_vec(v) for v in e.image_vecs)] for e in endos
    ]
    return headers, rows


def monoid_table_rows(modulus: int) -> tuple[list[str], list[list[str]]]:
    endos = enumerate_endos(modulus)
    headers = ["first, then:"] + [e.label() for e in endos]
    rows = [
        [r.label()] + [compose_endos(r, c).label() for c in endos] for r in endos
    ]
    return headers, rows


def root_action_rows(modulus: int) -> tuple[list[str], list[list[str]]]:
    p = _require_prime(modulus)
    endos = enumerate_endos(p)
    fams = _all_root_families(p)
    headers = ["endo \\ root"] + [f.label() for f in fams]
    rows = []
    for e in endos:
        rows.append(
            [e.label()]
            + [
                classify_element_as_root(e.apply_vec(f.element_vec(p)), p).label()
                for f in fams
            ]
        )
    return headers, rows


def cycle_action_rows(modulus: int) -> tuple[list[str], list[list[str]]]:
    p = _require_prime(modulus)
    endos = enumerate_endos(p)
    fams = _all_cycle_families(p)
    predicted = predicted_cycle_classes(p)
    headers = ["endo \\ cycle"] + [f.label() for f in fams]
    rows = []
    for e in endos:
        row = [e.label()]
        for f in fams:
            key = _canonical_cycle_key(
                tuple(e.apply_vec(v) for v in f.support_vecs(p))
            )
            row.append(predicted[key].label())
        rows.append(row)
    return headers, rows


def minpoly_rows(modulus: int) -> tuple[list[str], list[list[str]]]:
    records = classify_roots(modulus)
    headers = ["root", "element", "minpoly"]
    rows = [
        [r.family.label(), render_vec(r.element.payload), r.minpoly]
        for r in records
    ]
    return headers, rows


TABLE_BUILDERS = {
    "images": endo_images_rows,
    "monoid": monoid_table_rows,
    "action-roots": root_action_rows,
    "action-cycles": cycle_action_rows,
    "minpoly": minpoly_rows,
}

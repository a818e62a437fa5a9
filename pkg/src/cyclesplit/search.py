"""Exhaustive discovery of roots, splittings and counterexamples over finite
rings. This is the brute-force oracle the rest of the library leans on.

The splitting search fixes the rightmost factor first: a candidate a_n
survives only if right division by (X - a_n) leaves remainder zero, and the
search recurses on the quotient. That turns the naive |A|^n sweep into
iterated root finding. Results are canonically ordered and therefore
identical across runs regardless of how the work is partitioned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ncpoly import NCPoly, left_eval, right_divide_linear, right_eval
from .rings import Element, InfiniteRingError, Ring, RingError
from .splitting import SplittingWitness, commutation_hypothesis, expand

NODE_BUDGET = 10**8

MODES = ("all_splittings", "commuting_splittings_only", "roots_only", "counterexample_hunt")


class SearchSpaceTooLargeError(RingError):
    """The task would visit more than NODE_BUDGET candidates."""


@dataclass(frozen=True)
class SearchTask:
    ring: Ring
    target: NCPoly
    n: int
    mode: str

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if not self.ring.is_finite:
            raise InfiniteRingError("search needs a finite ring")
        if self.target.is_zero:
            raise ValueError("target polynomial must be nonzero")

    def to_json(self):
        return {
            "ring": self.ring.spec_string(),
            "target": self.target.to_json(),
            "n": self.n,
            "mode": self.mode,
        }


def task_from_json(obj) -> SearchTask:
    from .rings import parse_ring_spec
    from .ncpoly import poly_from_json

    ring = parse_ring_spec(obj["ring"])
    target = poly_from_json(obj["target"], ring=ring)
    return SearchTask(ring, target, int(obj["n"]), obj["mode"])


@dataclass(frozen=True)
class SearchOutcome:
    """Witnesses in canonical (payload-lexicographic) order. ``cycle_ids[i]``
    is the cycle class of ``witnesses[i]``; classes are numbered in order of
    their canonical representatives."""

    task: SearchTask
    witnesses: tuple[SplittingWitness, ...]
    cycle_ids: tuple[int, ...]
    cycle_count: int

    def to_json_lines(self):
        for w, cid in zip(self.witnesses, self.cycle_ids):
            yield {"witness": w.to_json(), "cycle_class": cid}
        yield {
            "summary": {
                "mode": self.task.mode,
                "witness_count": len(self.witnesses),
                "cycle_class_count": self.cycle_count,
            }
        }


class _NodeCounter:
    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def tick(self, amount=1):
        self.count += amount
        if self.count > NODE_BUDGET:
            raise SearchSpaceTooLargeError(
                f"search exceeded the {NODE_BUDGET} candidate budget"
            )


def _require_desk_scale(ring: Ring):
    card = ring.cardinality
    if card is None:
        raise InfiniteRingError(f"{ring.describe()} is not finite")
    if card > NODE_BUDGET:
        raise SearchSpaceTooLargeError(
            f"{ring.describe()} has {card} elements, above the search budget"
        )
    return card


def find_roots(f: NCPoly, ring: Ring | None = None) -> list[Element]:
    """All two-sided roots: a is a root iff right_eval(f, a) = 0 and
    left_eval(f, a) = 0. Canonical enumeration order."""
    ring = ring if ring is not None else f.ring
    if f.ring != ring:
        raise RingError("polynomial is not over the requested ring")
    _require_desk_scale(ring)
    roots = []
    for a in ring.elements():
        if right_eval(f, a).is_zero and left_eval(f, a).is_zero:
            roots.append(a)
    return roots


def _splitting_tuples(f: NCPoly, depth: int, elements, counter: _NodeCounter):
    """All tuples (a_1, ..., a_depth) with f = leading * (X-a_1)...(X-a_depth),
    up to the constant ``leading`` which the caller peels off at depth 0."""
    if depth == 0:
        yield ()
        return
    for a in elements:
        counter.tick()
        q, r = right_divide_linear(f, a)
        if r.is_zero:
            for prefix in _splitting_tuples(q, depth - 1, elements, counter):
                yield prefix + (a,)


def _canonical_rotation(payloads: tuple) -> tuple:
    n = len(payloads)
    return min(tuple(payloads[k:] + payloads[:k]) for k in range(n))


def enumerate_splittings(task: SearchTask) -> SearchOutcome:
    """Every ordered pseudoroot tuple whose expansion equals the target.

    The leading coefficient is pinned to the target's own leading
    coefficient. In mode ``commuting_splittings_only`` the witness must also
    satisfy the commutation hypothesis of the expanded polynomial. Witnesses
    related by rotation share a cycle id (lexicographically minimal rotation
    is the class representative).
    """
    if task.mode not in ("all_splittings", "commuting_splittings_only"):
        raise ValueError(f"enumerate_splittings does not handle mode {task.mode!r}")
    ring = task.ring
    _require_desk_scale(ring)
    f = task.target
    if task.n < 1:
        raise ValueError("factor count must be at least 1")
    leading = f.coeffs[-1]
    counter = _NodeCounter()
    elements = list(ring.elements())

    found = []
    for tup in _splitting_tuples(f, task.n, elements, counter):
        w = SplittingWitness(ring, leading, tup)
        if expand(w) != f:
            # depth-0 check: the final quotient must have been the constant
            # leading coefficient; expand re-checks end to end
            continue
        if task.mode == "commuting_splittings_only":
            ok, _ = commutation_hypothesis(f, tup)
            if not ok:
                continue
        found.append(w)

    found.sort(key=lambda w: tuple(a.payload for a in w.pseudoroots))
    class_of: dict[tuple, int] = {}
    cycle_ids = []
    for w in found:
        key = _canonical_rotation(tuple(a.payload for a in w.pseudoroots))
        if key not in class_of:
            class_of[key] = len(class_of)
        cycle_ids.append(class_of[key])
    return SearchOutcome(task, tuple(found), tuple(cycle_ids), len(class_of))


def counterexample_hunt(f: NCPoly, ring: Ring | None = None) -> SplittingWitness | None:
    """First splitting of f (canonical order, commutation filter off) in which
    some pseudoroot is not a right root of f; None when no splitting misses.

    The rightmost pseudoroot always is a right root (it has remainder zero by
    construction), so any hit comes from an earlier factor.
    """
    ring = ring if ring is not None else f.ring
    if f.degree is None or f.degree < 1:
        raise ValueError("target must have degree at least 1")
    task = SearchTask(ring, f, f.degree, "all_splittings")
    outcome = enumerate_splittings(task)
    for w in outcome.witnesses:
        if any(not right_eval(f, a).is_zero for a in w.pseudoroots):
            return w
    return None


def run_task(task: SearchTask):
    """Dispatch a SearchTask to the operation its mode names."""
    if task.mode in ("all_splittings", "commuting_splittings_only"):
        return enumerate_splittings(task)
    if task.mode == "roots_only":
        return find_roots(task.target, task.ring)
    return counterexample_hunt(task.target, task.ring)


# ---------------------------------------------------------------------------
# index-table arithmetic for tight exhaustive sweeps
# ---------------------------------------------------------------------------


class FiniteRingCache:
    """Cayley tables for a small finite ring, for index-space inner loops.

    Exhaustive law checks over thousands of (f, a) instances are an order of
    magnitude faster on integer indices than on Element wrappers.
    """

    MAX_SIZE = 4096

    def __init__(self, ring: Ring):
        card = ring.cardinality
        if card is None:
            raise InfiniteRingError(f"{ring.describe()} is not finite")
        if card > self.MAX_SIZE:
            raise SearchSpaceTooLargeError(
                f"{ring.describe()} has {card} elements; cache limit is {self.MAX_SIZE}"
            )
        self.ring = ring
        self.elements = list(ring.elements())
        payload_index = {e.payload: i for i, e in enumerate(self.elements)}
        self.index_of = payload_index
        n = len(self.elements)
        payloads = [e.payload for e in self.elements]
        self.add = [
            [payload_index[ring._add(payloads[i], payloads[j])] for j in range(n)]
            for i in range(n)
        ]
        self.mul = [
            [payload_index[ring._mul(payloads[i], payloads[j])] for j in range(n)]
            for i in range(n)
        ]
        self.neg = [payload_index[ring._neg(payloads[i])] for i in range(n)]
        self.zero = payload_index[ring._zero_payload()]
        self.one = payload_index[ring._one_payload()]

    def __len__(self):
        return len(self.elements)

    def commutes(self, i: int, j: int) -> bool:
        return self.mul[i][j] == self.mul[j][i]

    def is_central(self, i: int) -> bool:
        row = self.mul[i]
        return all(row[j] == self.mul[j][i] for j in range(len(self.elements)))

    def centralizer_indices(self, i: int) -> list[int]:
        return [j for j in range(len(self.elements)) if self.commutes(i, j)]

    def divide_linear_right(self, coeff_idx: tuple[int, ...], a: int):
        """Index-space synthetic right division of sum(c_i X^i) by X - a.

        Returns (quotient index tuple low-to-high, remainder index).
        """
        if not coeff_idx:
            return (), self.zero
        n = len(coeff_idx) - 1
        if n == 0:
            return (), coeff_idx[0]
        q = [self.zero] * n
        q[n - 1] = coeff_idx[n]
        for j in range(n - 1, 0, -1):
            q[j - 1] = self.add[coeff_idx[j]][self.mul[q[j]][a]]
        r = self.add[coeff_idx[0]][self.mul[q[0]][a]]
        return tuple(q), r

    def right_eval(self, coeff_idx: tuple[int, ...], a: int) -> int:
        acc = self.zero
        for c in reversed(coeff_idx):
            acc = self.add[self.mul[acc][a]][c]
        return acc

    def left_eval(self, coeff_idx: tuple[int, ...], a: int) -> int:
        acc = self.zero
        for c in reversed(coeff_idx):
            acc = self.add[self.mul[a][acc]][c]
        return acc

    def linear_factor_product(self, roots: tuple[int, ...]) -> tuple[int, ...]:
        """Coefficient indices (low-to-high) of (X - a_1)...(X - a_k)."""
        coeffs = [self.one]
        for a in roots:
            na = self.neg[a]
            new = [self.zero] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                new[i + 1] = self.add[new[i + 1]][c]
                new[i] = self.add[new[i]][self.mul[c][na]]
            coeffs = new
        return tuple(coeffs)

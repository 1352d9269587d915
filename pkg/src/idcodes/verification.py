"""Code verification: domination, separation, certificates and witnesses.

Signatures are computed as bitmasks (bit y of ``ball_mask(rho)[x]`` marks
d(x, y) <= rho), so the signature of x at radius rho against a code mask c
is a single AND.  Two vertices are separated at rho iff these masks differ;
an empty signature is a perfectly good identifier as long as it is unique.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable

from .families import (
    DominationResult,
    FamilyKind,
    FamilySpec,
    RadiusCertificate,
    VerificationReport,
    Witness,
    WitnessKind,
)
from .graphs import DistanceMatrix, Graph, distances


def _code_mask(code: Iterable[int], n: int) -> int:
    mask = 0
    for v in code:
        if not 0 <= v < n:
            raise ValueError(f"code vertex {v} is outside 0..{n - 1}")
        mask |= 1 << v
    return mask


def separates(dm: DistanceMatrix, code: Iterable[int], x: int, y: int, rho: int) -> bool:
    """Does the code rho-separate x from y, i.e. B_rho(x) n C != B_rho(y) n C?"""
    if x == y:
        raise ValueError("separation is defined for distinct vertices")
    cmask = _code_mask(code, dm.n)
    masks = dm.ball_mask(rho)
    return (masks[x] & cmask) != (masks[y] & cmask)


def is_dominating(dm: DistanceMatrix, code: Iterable[int], radii: Iterable[int]) -> DominationResult:
    """Check that every vertex has a code vertex within some allowed radius.

    Balls nest, so the largest allowed radius decides.
    """
    radii = tuple(sorted(set(radii)))
    if not radii:
        raise ValueError("domination needs at least one radius")
    cmask = _code_mask(code, dm.n)
    masks = dm.ball_mask(radii[-1])
    for x in range(dm.n):
        if not masks[x] & cmask:
            witness = Witness(WitnessKind.NOT_DOMINATED, (x,), radii)
            return DominationResult(False, witness)
    return DominationResult(True)


class CodeChecker:
    """Reusable checker for one (distance matrix, family spec) pair.

    ``is_valid`` is the hot path used by the exhaustive solver; ``report``
    builds the full certificate or witness.
    """

    def __init__(self, dm: DistanceMatrix, spec: FamilySpec):
        self.dm = dm
        self.spec = spec
        self.n = dm.n
        self.radii = spec.identification_radii
        self.budget = spec.identification_budget
        # A superset of a uniquely identifying radius set still identifies,
        # so for validity only subsets of size exactly q matter.
        self.q = min(self.budget, len(self.radii))
        self._sig_masks = [dm.ball_mask(rho) for rho in self.radii]
        self._dom_masks = dm.ball_mask(max(spec.domination_radii))
        self._combos = tuple(combinations(range(len(self.radii)), self.q))

    def code_mask(self, code: Iterable[int]) -> int:
        return _code_mask(code, self.n)

    def undominated_vertex(self, cmask: int) -> int | None:
        for x, m in enumerate(self._dom_masks):
            if not m & cmask:
                return x
        return None

    def _rows(self, cmask: int) -> list[list[int]]:
        return [[m & cmask for m in masks] for masks in self._sig_masks]

    def _uncovered(self, rows: list[list[int]], stop_early: bool) -> list[int]:
        """Vertices with no identifying radius subset of size <= q.

        A vertex is covered once its signature tuple projected to some
        q-subset of the radii is unique among all vertices.
        """
        remaining = list(range(self.n))
        for combo in self._combos:
            if len(combo) == 1:
                vals = rows[combo[0]]
            else:
                picked = [rows[t] for t in combo]
                vals = list(zip(*picked))
            counts = Counter(vals)
            remaining = [x for x in remaining if counts[vals[x]] != 1]
            if stop_early and not remaining:
                return []
        return remaining

    def is_valid(self, cmask: int) -> bool:
        if self.undominated_vertex(cmask) is not None:
            return False
        return not self._uncovered(self._rows(cmask), stop_early=True)

    def _weak_radius(self, rows: list[list[int]], counters: list[Counter], x: int) -> int:
        """Smallest identifying radius for x, preferring a nonempty signature.

        Radii where x raises no alarm at all still identify it when no other
        vertex shares the silence, but a radius with a nonempty unique
        signature is reported when one exists (it also tells x apart from a
        fault-free network).
        """
        first_any: int | None = None
        for t, rho in enumerate(self.radii):
            if counters[t][rows[t][x]] == 1:
                if rows[t][x]:
                    return rho
                if first_any is None:
                    first_any = rho
        assert first_any is not None
        return first_any

    def _separation_bits(self, rows: list[list[int]], x: int, y: int) -> int:
        bits = 0
        for t in range(len(self.radii)):
            if rows[t][x] != rows[t][y]:
                bits |= 1 << t
        return bits

    def _general_radius_set(self, rows: list[list[int]], x: int) -> tuple[int, ...]:
        """Lexicographically smallest minimum-cardinality identifying set for x."""
        constraint_masks = set()
        for y in range(self.n):
            if y != x:
                constraint_masks.add(self._separation_bits(rows, x, y))
        for size in range(1, min(self.budget, len(self.radii)) + 1):
            for combo in combinations(range(len(self.radii)), size):
                picked = 0
                for t in combo:
                    picked |= 1 << t
                if all(m & picked for m in constraint_masks):
                    return tuple(self.radii[t] for t in combo)
        raise AssertionError("no identifying radius set for a covered vertex")

    def _certificate(self, rows: list[list[int]]) -> RadiusCertificate:
        kind = self.spec.kind
        if kind is FamilyKind.IDENTIFYING:
            return RadiusCertificate({x: (self.spec.r,) for x in range(self.n)})
        if kind is FamilyKind.WEAK:
            counters = [Counter(row) for row in rows]
            per_vertex = {
                x: (self._weak_radius(rows, counters, x),) for x in range(self.n)
            }
            return RadiusCertificate(per_vertex)
        if kind is FamilyKind.LIGHT:
            per_pair: dict[tuple[int, int], int] = {}
            used: dict[int, set[int]] = {x: set() for x in range(self.n)}
            for x in range(self.n):
                for y in range(x + 1, self.n):
                    for t, rho in enumerate(self.radii):
                        if rows[t][x] != rows[t][y]:
                            per_pair[(x, y)] = rho
                            used[x].add(rho)
                            used[y].add(rho)
                            break
            per_vertex = {x: tuple(sorted(used[x])) for x in range(self.n)}
            return RadiusCertificate(per_vertex, per_pair)
        per_vertex = {x: self._general_radius_set(rows, x) for x in range(self.n)}
        return RadiusCertificate(per_vertex)

    def _failure_witness(self, rows: list[list[int]], uncovered: list[int]) -> Witness:
        kind = self.spec.kind
        x = uncovered[0]
        if kind is FamilyKind.IDENTIFYING:
            row = rows[0]
            y = next(y for y in range(self.n) if y != x and row[y] == row[x])
            pair = (x, y) if x < y else (y, x)
            return Witness(WitnessKind.PAIR_NOT_SEPARATED, pair, self.radii)
        if kind is FamilyKind.LIGHT:
            tup = tuple(rows[t][x] for t in range(len(self.radii)))
            y = next(
                y
                for y in range(self.n)
                if y != x and tuple(rows[t][y] for t in range(len(self.radii))) == tup
            )
            pair = (x, y) if x < y else (y, x)
            return Witness(WitnessKind.PAIR_NOT_SEPARATED, pair, self.radii)
        if kind is FamilyKind.GENERAL:
            for y in range(self.n):
                if y != x and self._separation_bits(rows, x, y) == 0:
                    pair = (x, y) if x < y else (y, x)
                    return Witness(WitnessKind.PAIR_NOT_SEPARATED, pair, self.radii)
        blocking = []
        for t, rho in enumerate(self.radii):
            y = next(y for y in range(self.n) if y != x and rows[t][y] == rows[t][x])
            blocking.append((rho, y))
        return Witness(
            WitnessKind.VERTEX_NOT_IDENTIFIABLE, (x,), self.radii, tuple(blocking)
        )

    def report(self, code: Iterable[int], with_certificate: bool = True) -> VerificationReport:
        code_tuple = tuple(sorted(set(code)))
        cmask = self.code_mask(code_tuple)
        x = self.undominated_vertex(cmask)
        if x is not None:
            witness = Witness(WitnessKind.NOT_DOMINATED, (x,), self.spec.domination_radii)
            return VerificationReport(False, self.spec, code_tuple, witness=witness)
        rows = self._rows(cmask)
        uncovered = self._uncovered(rows, stop_early=False)
        if uncovered:
            witness = self._failure_witness(rows, uncovered)
            return VerificationReport(False, self.spec, code_tuple, witness=witness)
        certificate = self._certificate(rows) if with_certificate else None
        return VerificationReport(True, self.spec, code_tuple, certificate=certificate)


def check_code(
    g: Graph, code: Iterable[int], spec: FamilySpec, with_certificate: bool = True
) -> VerificationReport:
    """Verify a code against a family spec.

    Returns a report carrying either a radius certificate (valid) or a
    failure witness naming the smallest offending vertex or pair.  Pass
    ``with_certificate=False`` to skip certificate construction in bulk
    checks; validity is unaffected.
    """
    return CodeChecker(distances(g), spec).report(code, with_certificate)


def min_radius_set(g: Graph, code: Iterable[int], r: int, x: int) -> tuple[int, ...] | None:
    """Smallest set of radii <= r separating x from every other vertex.

    Exhaustive search in ascending cardinality, ties broken by the
    lexicographically smallest set.  Returns None when some opponent cannot
    be separated at any radius <= r (the code is then not light).
    """
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    dm = distances(g)
    if not 0 <= x < dm.n:
        raise ValueError(f"vertex {x} out of range")
    cmask = _code_mask(code, dm.n)
    rows = [[m & cmask for m in dm.ball_mask(rho)] for rho in range(r + 1)]
    constraint_masks = set()
    for y in range(dm.n):
        if y == x:
            continue
        bits = 0
        for t in range(r + 1):
            if rows[t][x] != rows[t][y]:
                bits |= 1 << t
        if bits == 0:
            return None
        constraint_masks.add(bits)
    if not constraint_masks:
        return ()
    for size in range(1, r + 2):
        for combo in combinations(range(r + 1), size):
            picked = 0
            for t in combo:
                picked |= 1 << t
            if all(m & picked for m in constraint_masks):
                return combo
    return None

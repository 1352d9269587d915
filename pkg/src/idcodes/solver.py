"""Exhaustive minimum-code search, independent of the closed formulas.

The search scans vertex subsets in ascending cardinality and returns the
first valid one, so the reported optimum needs no other trust anchor.  On
labeled cycles two structural filters (both satisfied by every valid code)
and the counting lower bound cut the stream down; with pruning disabled the
solver degenerates to a raw brute force and can audit the pruned mode.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .cycles import (
    CycleFamily,
    UnsupportedRegimeError,
    construct_code,
    formula_size,
    lower_bound,
)
from .families import FamilyKind, FamilySpec
from .graphs import Graph, build_cycle, cycle_order, distances
from .verification import CodeChecker


class SearchLimitError(RuntimeError):
    """The size cap was exhausted before the instance was settled."""


@dataclass(frozen=True)
class SolveOptions:
    """Search knobs.

    max_size caps the largest cardinality tried (defaults to n, which makes
    an exhausted search a definitive infeasibility proof).  parallelism is
    accepted for interface stability; the search runs sequentially.
    """

    max_size: int | None = None
    use_cycle_pruning: bool = True
    enumerate_all: bool = False
    parallelism: int = 1

    def __post_init__(self):
        if self.max_size is not None and self.max_size < 1:
            raise ValueError(f"max_size must be positive, got {self.max_size}")
        if self.parallelism < 1:
            raise ValueError(f"parallelism must be positive, got {self.parallelism}")


@dataclass
class SolveStats:
    """What the search did: candidates checked, candidates filtered out
    before checking, and wall-clock seconds."""

    examined: int = 0
    pruned: int = 0
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "examined": self.examined,
            "pruned": self.pruned,
            "seconds": self.seconds,
        }


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a minimum-code search.

    optimum is None when no code of any size up to n exists (possible only
    for single-radius identifying codes; the other families always admit the
    full vertex set).  all_optima holds every optimal code when the search
    ran with enumerate_all, otherwise just the witness.
    """

    spec: FamilySpec
    optimum: int | None
    witness_code: tuple[int, ...] | None
    all_optima: tuple[tuple[int, ...], ...]
    stats: SolveStats

    @property
    def feasible(self) -> bool:
        return self.optimum is not None

    def to_dict(self) -> dict:
        return {
            "family": self.spec.to_dict(),
            "optimum": self.optimum,
            "witness_code": list(self.witness_code) if self.witness_code else None,
            "all_optima": [list(c) for c in self.all_optima],
            "stats": self.stats.to_dict(),
        }


def _cycle_family_of(spec: FamilySpec) -> CycleFamily | None:
    """The cycle-formula family this spec corresponds to, if any."""
    if spec.kind is FamilyKind.WEAK:
        return CycleFamily.WEAK
    if spec.kind is FamilyKind.LIGHT:
        return CycleFamily.LIGHT
    if (
        spec.kind is FamilyKind.GENERAL
        and spec.p == 2
        and spec.radii == tuple(range(len(spec.radii)))
        and len(spec.radii) >= 2
    ):
        return CycleFamily.TWO_RADII
    return None


def _window_bound(spec: FamilySpec) -> int | None:
    """Cap on the sum of two adjacent cyclic gaps in any valid code.

    Equivalent to: every window of that many consecutive vertices holds at
    least two code vertices.  Known for weak, light, two-radii and
    single-radius identifying codes; None for other general families.
    """
    if spec.kind in (FamilyKind.IDENTIFYING, FamilyKind.WEAK):
        return 2 * spec.r + 2
    if spec.kind is FamilyKind.LIGHT:
        return 3 * spec.r + 2
    if _cycle_family_of(spec) is CycleFamily.TWO_RADII:
        r = spec.radii[-1]
        return 3 * r - (r + 1) // 3 + 2
    return None


def _start_size(spec: FamilySpec, n: int) -> int:
    """A size every valid code must reach, so the search can start there."""
    family = _cycle_family_of(spec)
    if family is not None:
        try:
            return lower_bound(family, n, spec.radii[-1] if spec.kind is FamilyKind.GENERAL else spec.r)
        except UnsupportedRegimeError:
            pass
    # Domination alone forces a code vertex within r_dom of everyone, hence
    # cyclic gaps of at most 2*r_dom + 1.
    r_dom = max(spec.domination_radii)
    return max(1, -(-n // (2 * r_dom + 1)))


def _gaps(combo: Sequence[int], n: int) -> list[int]:
    m = len(combo)
    out = [combo[i + 1] - combo[i] for i in range(m - 1)]
    out.append(n - combo[-1] + combo[0])
    return out


def _cycle_stream(
    n: int, size: int, gap_cap: int, window: int | None, stats: SolveStats
) -> Iterator[tuple[int, ...]]:
    for combo in combinations(range(n), size):
        gaps = _gaps(combo, n)
        if max(gaps) > gap_cap:
            stats.pruned += 1
            continue
        if window is not None:
            m = len(gaps)
            if any(gaps[i] + gaps[(i + 1) % m] > window for i in range(m)):
                stats.pruned += 1
                continue
        yield combo


def min_code(
    g: Graph, spec: FamilySpec, options: SolveOptions | None = None
) -> SolveResult:
    """Smallest valid code on g for the family, by exhaustive search.

    Raises SearchLimitError when options.max_size is below n and the search
    exhausted it without settling the instance.
    """
    options = options or SolveOptions()
    n = g.n
    checker = CodeChecker(distances(g), spec)
    cap = n if options.max_size is None else min(options.max_size, n)
    prune = options.use_cycle_pruning and cycle_order(g) is not None
    if prune:
        window = _window_bound(spec)
        if window is not None and n < window:
            window = None
        gap_cap = 2 * max(spec.domination_radii) + 1
        start = _start_size(spec, n)
    else:
        window = None
        gap_cap = n
        start = 1
    stats = SolveStats()
    began = time.perf_counter()
    for size in range(start, cap + 1):
        if prune:
            stream: Iterable[tuple[int, ...]] = _cycle_stream(n, size, gap_cap, window, stats)
        else:
            stream = combinations(range(n), size)
        found: list[tuple[int, ...]] = []
        for combo in stream:
            stats.examined += 1
            mask = 0
            for v in combo:
                mask |= 1 << v
            if checker.is_valid(mask):
                found.append(combo)
                if not options.enumerate_all:
                    break
        if found:
            stats.seconds = time.perf_counter() - began
            return SolveResult(spec, size, found[0], tuple(found), stats)
    stats.seconds = time.perf_counter() - began
    if cap < n:
        raise SearchLimitError(
            f"no code of size <= {cap} on {g.label or f'graph with {n} vertices'};"
            " raise max_size to settle the instance"
        )
    return SolveResult(spec, None, None, (), stats)


@dataclass(frozen=True)
class TheoremRow:
    """One cycle instance: formula value, construction size and, when
    requested, the independently searched optimum."""

    family: CycleFamily
    n: int
    r: int
    lower: int | None
    formula: int
    construction: int
    oracle: int | None
    agree: bool

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "r": self.r,
            "lower_bound": self.lower,
            "formula": self.formula,
            "construction": self.construction,
            "oracle": self.oracle,
            "agree": self.agree,
        }


def verify_theorem_table(
    family: CycleFamily,
    r_values: Iterable[int],
    n_values: Iterable[int],
    with_oracle: bool = False,
    options: SolveOptions | None = None,
) -> list[TheoremRow]:
    """Cross-check formula, construction and (optionally) exhaustive search
    on a grid of cycles.  Instances outside the formulas' regime are skipped."""
    rows = []
    for r in r_values:
        for n in n_values:
            try:
                predicted = formula_size(family, n, r)
            except UnsupportedRegimeError:
                continue
            code = construct_code(family, n, r)
            try:
                lower = lower_bound(family, n, r)
            except UnsupportedRegimeError:
                lower = None
            oracle = None
            if with_oracle:
                oracle = min_code(build_cycle(n), family.spec(r), options).optimum
            agree = len(code) == predicted and (oracle is None or oracle == predicted)
            rows.append(
                TheoremRow(family, n, r, lower, predicted, len(code), oracle, agree)
            )
    return rows

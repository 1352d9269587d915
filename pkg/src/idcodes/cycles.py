"""Optimal weak, light and (2,[0,r]) codes on cycles: sizes and constructions.

Throughout, a cycle C_n is split as n = block * p + R with 0 <= R < block.
The block length is 2r+2 for weak codes, 3r+2 for light codes and
s = 3r - k + 2 with k = floor((r+1)/3) for (2,[0,r]) codes (the "two radii"
family: every vertex identified by at most two radii from [0, r]).

Every construction is validated before being returned; an invalid candidate
raises, it is never handed to the caller.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .families import FamilySpec, Witness
from .graphs import build_cycle
from .verification import check_code


class UnsupportedRegimeError(ValueError):
    """Parameters fall outside the range the closed formulas cover."""


class ConstructionFailedError(RuntimeError):
    """A constructed code failed its own validity check."""

    def __init__(self, message: str, witness: Witness | None = None):
        super().__init__(message)
        self.witness = witness


class CycleFamily(enum.Enum):
    WEAK = "weak"
    LIGHT = "light"
    TWO_RADII = "two_radii"

    def block_length(self, r: int) -> int:
        if self is CycleFamily.WEAK:
            return 2 * r + 2
        if self is CycleFamily.LIGHT:
            return 3 * r + 2
        return 3 * r - (r + 1) // 3 + 2

    def spec(self, r: int) -> FamilySpec:
        """The family spec a constructed code must satisfy."""
        if self is CycleFamily.WEAK:
            return FamilySpec.weak(r)
        if self is CycleFamily.LIGHT:
            return FamilySpec.light(r)
        return FamilySpec.general(2, range(r + 1))


@dataclass(frozen=True)
class CycleDecomposition:
    """n = block * p + R for one family at one radius."""

    family: CycleFamily
    n: int
    r: int
    block: int
    p: int
    R: int


def _check_args(n: int, r: int) -> None:
    if n < 3:
        raise ValueError(f"cycles need n >= 3, got n={n}")
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got r={r}")


def decompose(family: CycleFamily, n: int, r: int) -> CycleDecomposition:
    _check_args(n, r)
    block = family.block_length(r)
    p, R = divmod(n, block)
    return CycleDecomposition(family, n, r, block, p, R)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def lower_bound(family: CycleFamily, n: int, r: int) -> int:
    """Counting bound: any block of consecutive vertices holds >= 2 code
    vertices, hence at least ceil(2n / block) in total (n >= block)."""
    dec = decompose(family, n, r)
    if n < dec.block:
        raise UnsupportedRegimeError(
            f"{family.value} lower bound needs n >= {dec.block}, got n={n}"
        )
    if family is CycleFamily.WEAK:
        return _ceil_div(n, r + 1)
    return _ceil_div(2 * n, dec.block)


def _two_radii_threshold(r: int) -> int:
    """Largest remainder R for which C_n with n = sp + R admits a two-radii
    code of size 2p + 1.

    The threshold is r - k + 1, the same offset that separates the two code
    vertices inside a period of the R = 0 pattern.  Radius 2 is a genuine
    outlier: C_10 carries the size-3 code {0, 3, 6} even though r - k + 1 = 2.
    Both facts, and the absence of any 2p + 1 code one remainder further,
    were checked exhaustively for r <= 12 at p = 1, for r <= 7 at p = 2 and
    for r <= 3 at p = 3.
    """
    if r == 2:
        return 3
    return r - (r + 1) // 3 + 1


def formula_size(family: CycleFamily, n: int, r: int) -> int:
    """Minimum size of a code of the family on C_n, by the closed formulas."""
    dec = decompose(family, n, r)
    p, R = dec.p, dec.R
    if family is CycleFamily.WEAK:
        if r >= 1 and n <= 2 * r + 1:
            return 2
        if R == 0:
            return 2 * p
        if R == 1 or (r, R) in ((1, 2), (2, 2)):
            return 2 * p + 1
        return 2 * p + 2
    if family is CycleFamily.LIGHT:
        if r >= 1 and n <= 3 * r + 1:
            return 2
        if R == 0:
            return 2 * p
        if R <= r + 1:
            return 2 * p + 1
        return 2 * p + 2
    if n < dec.block:
        raise UnsupportedRegimeError(
            f"two-radii formula covers n >= {dec.block} at r={r}, got n={n}"
        )
    if R == 0:
        return 2 * p
    if R <= _two_radii_threshold(r):
        return 2 * p + 1
    return 2 * p + 2


def _weak_candidate(n: int, r: int, dec: CycleDecomposition) -> set[int]:
    if r >= 1 and n <= 2 * r + 1:
        return {0, 1}
    block, R = dec.block, dec.R
    if (r, R) == (1, 2):
        return {i for i in range(n) if i % 2 == 0}
    if (r, R) == (2, 2):
        return {i for i in range(n) if i % 6 in (0, 2)}
    base = {i for i in range(n) if i % block in (r, r + 1)}
    if R == 0 or R >= r + 2:
        return base
    if R == 1:
        return base | {n - 1}
    return base | {n - 2, n - 1}


def _light_candidates(n: int, r: int, dec: CycleDecomposition):
    if r >= 1 and n <= 3 * r + 1:
        yield {0, 1} if n <= 2 * r + 2 else {0, r + 1}
        return
    block, p, R = dec.block, dec.p, dec.R
    if R == 0:
        yield {i for i in range(n) if i % block in (r, 2 * r + 1)}
        return
    head = block * p
    restricted = {i for i in range(head) if i % block in (r, 2 * r + 1)}
    if R <= r + 1:
        yield restricted | {head}
        for t in range(1, R):
            yield restricted | {head + t}
        return
    # For R = 2r+2 the {head, head+r} extension leaves v_{n-1} undominated
    # (it ends up at distance r+1 from every code vertex), so that remainder
    # goes with the {head+r, head+2r} extension instead.
    if R <= 2 * r + 1:
        yield restricted | {head, head + r}
    else:
        yield restricted | {head + r, head + 2 * r}
    tail = [head + t for t in range(R)]
    for a, b in combinations(tail, 2):
        yield restricted | {a, b}


def _two_radii_candidates(n: int, r: int, dec: CycleDecomposition):
    """Candidate codes to try in order; the first valid one wins."""
    block, p, R = dec.block, dec.p, dec.R
    k = (r + 1) // 3
    gap = r - k + 1
    if R == 0:
        yield {i for i in range(n) if i % block in (0, gap)}
        return
    head = block * p
    restricted = {i for i in range(head) if i % block in (0, gap)}
    if R <= _two_radii_threshold(r):
        yield restricted | {head}
        for t in range(1, R):
            yield restricted | {head + t}
        # An equally spaced triple followed by periodic pairs.  This is the
        # shape that works at the largest remainder of the 2p+1 band, where
        # the single-extra extensions above break down.
        for g in range(1, block // 2 + 1):
            triple = {0, g, 2 * g}
            for j in range(p - 1):
                start = block + R + j * block
                triple |= {start, start + g}
            if max(triple) < n and len(triple) == 2 * p + 1:
                yield triple
        return
    if R <= 2 * r + 2:
        yield restricted | {head, (head + r) % n}
    else:
        yield restricted | {(head + r) % n, (head + 2 * r) % n}
    # Deterministic sweep over tail placements in case the preferred
    # extension fails for some remainder.
    tail = [head + t for t in range(R)]
    for a, b in combinations(tail, 2):
        yield restricted | {a, b}
    # Last resort: the two extras may need to sit away from the tail.
    spare = sorted(set(range(n)) - restricted)
    for a, b in combinations(spare, 2):
        yield restricted | {a, b}


def construct_code(family: CycleFamily, n: int, r: int) -> tuple[int, ...]:
    """An optimal code of the family on C_n, validated before returning.

    The result always has size formula_size(family, n, r).  Constructions
    are canonical (rotations of them are equally valid but not produced).
    """
    dec = decompose(family, n, r)
    target = formula_size(family, n, r)
    g = build_cycle(n)
    spec = family.spec(r)
    if family is CycleFamily.WEAK:
        candidates = iter((_weak_candidate(n, r, dec),))
    elif family is CycleFamily.LIGHT:
        candidates = _light_candidates(n, r, dec)
    else:
        candidates = _two_radii_candidates(n, r, dec)
    last_witness: Witness | None = None
    for candidate in candidates:
        if len(candidate) != target:
            continue
        report = check_code(g, candidate, spec, with_certificate=False)
        if report.valid:
            return tuple(sorted(candidate))
        last_witness = report.witness
    raise ConstructionFailedError(
        f"no valid {family.value} construction of size {target} on C_{n} at r={r}",
        last_witness,
    )

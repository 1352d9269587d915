"""End-to-end acceptance checks.

Nine independent criteria, each with its own time budget, covering the
closed formulas against the exhaustive search, the constructions at scale,
frozen figure-level goldens, the extremal family, light-code radius-set
cardinality, the detection-round equivalences and the structural lower
bounds.  Each test finishes with a one-line summary print.
"""

import random
import time
from itertools import combinations

import pytest

from idcodes import (
    FamilySpec,
    UnsupportedRegimeError,
    build_cycle,
    build_path,
    check_code,
    construct_code,
    formula_size,
    min_code,
    min_radius_set,
)
from idcodes.cycles import CycleFamily
from idcodes.extremal import build_extremal, w_max
from idcodes.families import WitnessKind
from idcodes.graphs import from_edges
from idcodes.rounds import DetectionMode, detection_universal
from idcodes.solver import SolveOptions

from conftest import RADII, random_connected_graph

# Wall-clock budgets per criterion, in seconds.
BUDGET_WEAK = 120
BUDGET_LIGHT = 120
BUDGET_TWO_RADII = 300
BUDGET_CONSTRUCT = 60
BUDGET_EXTREMAL = 120


def _sweep_cells(results, family):
    return sorted(
        (r, n) for (fam, r, n) in results if fam is family
    )


def _cyclic_gaps(code, n):
    code = sorted(code)
    gaps = [b - a for a, b in zip(code, code[1:])]
    gaps.append(n - code[-1] + code[0])
    return gaps


def _formula_agreement(results, elapsed, family, budget, label):
    cells = _sweep_cells(results, family)
    assert cells, "the oracle sweep produced no cells"
    for r, n in cells:
        expected = formula_size(family, n, r)
        got = results[(family, r, n)].optimum
        assert got == expected, (label, r, n, got, expected)
    assert elapsed[family] < budget
    print(
        f"criterion {label}: PASS  {len(cells)} cells agree  "
        f"{elapsed[family]:.1f}s (budget {budget}s)"
    )


def test_criterion_1_weak_formula_matches_search(oracle_sweep):
    results, elapsed = oracle_sweep
    _formula_agreement(results, elapsed, CycleFamily.WEAK, BUDGET_WEAK, "1 (weak)")


def test_criterion_2_light_formula_matches_search(oracle_sweep):
    results, elapsed = oracle_sweep
    _formula_agreement(results, elapsed, CycleFamily.LIGHT, BUDGET_LIGHT, "2 (light)")


def test_criterion_3_two_radii_formula_matches_search(oracle_sweep):
    results, elapsed = oracle_sweep
    cells = _sweep_cells(results, CycleFamily.TWO_RADII)
    # The theorem regime starts at the block length; nothing below it.
    for r in RADII:
        block = CycleFamily.TWO_RADII.block_length(r)
        assert min(n for rr, n in cells if rr == r) == block
    _formula_agreement(
        results, elapsed, CycleFamily.TWO_RADII, BUDGET_TWO_RADII, "3 (two-radii)"
    )


def test_pruned_search_audited_against_raw_search(oracle_sweep):
    # The sweep uses the structural filters; re-solve the small cells with
    # the raw stream to confirm the filters never changed an optimum.
    results, _ = oracle_sweep
    audited = 0
    for (family, r, n), result in results.items():
        if n > 12:
            continue
        raw = min_code(
            build_cycle(n), family.spec(r), SolveOptions(use_cycle_pruning=False)
        )
        assert raw.optimum == result.optimum, (family, r, n)
        audited += 1
    print(f"pruning audit: PASS  {audited} cells re-solved raw")


def test_criterion_4_constructions_at_scale():
    began = time.perf_counter()
    built = 0
    for family in CycleFamily:
        for r in range(1, 7):
            spec = family.spec(r)
            for n in range(3, 201):
                try:
                    predicted = formula_size(family, n, r)
                except UnsupportedRegimeError:
                    continue
                code = construct_code(family, n, r)
                assert len(code) == predicted, (family, r, n)
                report = check_code(
                    build_cycle(n), code, spec, with_certificate=False
                )
                assert report.valid, (family, r, n, code, report.witness)
                built += 1
    took = time.perf_counter() - began
    assert took < BUDGET_CONSTRUCT
    print(
        f"criterion 4: PASS  {built} constructions valid at formula size  "
        f"{took:.1f}s (budget {BUDGET_CONSTRUCT}s)"
    )


def test_criterion_5_figure_goldens():
    p5 = build_path(5)

    # Weak but not identifying: {2, 3} on the 5-path, with the exact
    # identifying radii 0/0 on the code, 1/1 beside it, 2 at the far end.
    weak = check_code(p5, [2, 3], FamilySpec.weak(2))
    assert weak.valid
    assert weak.certificate.per_vertex == {
        0: (2,), 1: (1,), 2: (0,), 3: (0,), 4: (1,),
    }
    ident = check_code(p5, [2, 3], FamilySpec.identifying(2))
    assert not ident.valid
    assert ident.witness.kind is WitnessKind.PAIR_NOT_SEPARATED
    assert ident.witness.vertices == (1, 2)

    # Light but not weak: {0, 4} on the 5-path.
    light = check_code(p5, [0, 4], FamilySpec.light(2))
    assert light.valid
    assert light.certificate.per_vertex == {
        0: (0,), 1: (0, 1), 2: (0, 1), 3: (0, 1), 4: (0,),
    }
    not_weak = check_code(p5, [0, 4], FamilySpec.weak(2))
    assert not not_weak.valid
    assert not_weak.witness.kind is WitnessKind.VERTEX_NOT_IDENTIFIABLE
    assert not_weak.witness.vertices == (1,)
    assert not_weak.witness.blocking == ((0, 2), (1, 0), (2, 0))

    # Optimal weak 2-codes on the 12- and 13-cycles, radii following the
    # periodic pattern 2,1,0,0,1,2 around each block.
    c12 = check_code(build_cycle(12), [2, 3, 8, 9], FamilySpec.weak(2))
    assert c12.valid
    assert formula_size(CycleFamily.WEAK, 12, 2) == 4
    pattern = {0: 2, 1: 1, 2: 0, 3: 0, 4: 1, 5: 2}
    assert c12.certificate.per_vertex == {
        v: (pattern[v % 6],) for v in range(12)
    }
    c13 = check_code(build_cycle(13), [2, 3, 8, 9, 12], FamilySpec.weak(2))
    assert c13.valid
    assert formula_size(CycleFamily.WEAK, 13, 2) == 5
    assert c13.certificate.per_vertex == {
        0: (2,), 1: (1,), 2: (0,), 3: (0,), 4: (1,), 5: (2,), 6: (2,),
        7: (1,), 8: (0,), 9: (0,), 10: (1,), 11: (2,), 12: (0,),
    }

    # Remainder-2 instances: every other vertex on the 10-cycle at radius 1
    # (code vertices identified at 0, the rest at 1), and {0, 2, 6} on the
    # 8-cycle at radius 2.
    c10 = check_code(build_cycle(10), [0, 2, 4, 6, 8], FamilySpec.weak(1))
    assert c10.valid
    assert formula_size(CycleFamily.WEAK, 10, 1) == 5
    assert c10.certificate.per_vertex == {
        v: (v % 2,) for v in range(10)
    }
    c8 = check_code(build_cycle(8), [0, 2, 6], FamilySpec.weak(2))
    assert c8.valid
    assert formula_size(CycleFamily.WEAK, 8, 2) == 3
    assert c8.certificate.per_vertex == {
        0: (0,), 1: (1,), 2: (0,), 3: (2,), 4: (2,), 5: (2,), 6: (0,), 7: (1,),
    }
    print("criterion 5: PASS  6 frozen figure goldens reproduced")


def test_criterion_6_extremal_family_and_five_vertex_bound():
    began = time.perf_counter()
    for r in range(1, 5):
        for k in range(1, 5):
            inst = build_extremal(r, k)
            assert inst.graph.n == w_max(r, k) == k + r * (2**k - 2)
            report = inst.verify()
            assert report.valid, (r, k, report.witness)
            expected = inst.certificate_radii()
            got = {x: rho for x, (rho,) in report.certificate.per_vertex.items()}
            assert got == expected, (r, k)

    # No connected graph on five vertices admits a weak 1-code of size two:
    # enumerate all 2^10 edge subsets, keep the connected ones, try all
    # ten pairs on each.
    pairs = list(combinations(range(5), 2))
    spec = FamilySpec.weak(1)
    connected = 0
    for bits in range(1 << 10):
        edges = [pairs[i] for i in range(10) if bits >> i & 1]
        adj = {v: set() for v in range(5)}
        for a, b in edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != 5:
            continue
        connected += 1
        g = from_edges(5, edges)
        for pair in pairs:
            assert not check_code(g, pair, spec, with_certificate=False).valid, (
                bits,
                pair,
            )
    assert connected == 728
    took = time.perf_counter() - began
    assert took < BUDGET_EXTREMAL
    print(
        f"criterion 6: PASS  16 extremal instances valid, {connected} connected "
        f"5-vertex graphs all reject size 2  {took:.1f}s (budget {BUDGET_EXTREMAL}s)"
    )


def test_criterion_7_light_radius_sets_are_small(oracle_sweep):
    results, _ = oracle_sweep
    checked_codes = 0
    for (family, r, n), result in results.items():
        if family is not CycleFamily.LIGHT or n < 2 * r + 2:
            continue
        g = build_cycle(n)
        for code in result.all_optima:
            checked_codes += 1
            for x in range(n):
                radii = min_radius_set(g, code, r, x)
                assert radii is not None, (r, n, code, x)
                assert len(radii) <= 3, (r, n, code, x, radii)
    assert checked_codes > 0
    print(
        f"criterion 7: PASS  {checked_codes} optimal light codes, every "
        "radius set has size <= 3"
    )


def test_criterion_8_detection_rounds_equal_static_checks():
    rng = random.Random(7)
    trials = 200
    for _ in range(trials):
        n = rng.randint(3, 10)
        g = random_connected_graph(rng, n)
        code = rng.sample(range(n), rng.randint(1, n))
        r = rng.randint(0, 3)
        weak_ok = check_code(g, code, FamilySpec.weak(r), with_certificate=False).valid
        light_ok = check_code(g, code, FamilySpec.light(r), with_certificate=False).valid
        memoryless = detection_universal(g, code, r, DetectionMode.MEMORYLESS)
        with_memory = detection_universal(g, code, r, DetectionMode.WITH_MEMORY)
        assert memoryless.universal == weak_ok, (g.edges, code, r)
        assert with_memory.universal == light_ok, (g.edges, code, r)
    print(f"criterion 8: PASS  {trials} random scenarios, zero discrepancies")


def test_criterion_9_lower_bounds_and_window_property(oracle_sweep):
    results, _ = oracle_sweep
    windows = {
        CycleFamily.WEAK: lambda r: 2 * r + 2,
        CycleFamily.LIGHT: lambda r: 3 * r + 2,
        CycleFamily.TWO_RADII: lambda r: 3 * r - (r + 1) // 3 + 2,
    }
    bounds = {
        CycleFamily.WEAK: lambda n, r: -(-n // (r + 1)),
        CycleFamily.LIGHT: lambda n, r: -(-2 * n // (3 * r + 2)),
        CycleFamily.TWO_RADII: lambda n, r: -(-2 * n // (3 * r - (r + 1) // 3 + 2)),
    }
    codes_checked = 0
    for (family, r, n), result in results.items():
        assert result.optimum >= bounds[family](n, r), (family, r, n)
        window = windows[family](r)
        if n < window:
            continue
        for code in result.all_optima:
            gaps = _cyclic_gaps(code, n)
            m = len(gaps)
            for i in range(m):
                assert gaps[i] + gaps[(i + 1) % m] <= window, (family, r, n, code)
            codes_checked += 1
    print(
        f"criterion 9: PASS  all optima meet the counting bounds; window "
        f"property holds on {codes_checked} optimal codes"
    )

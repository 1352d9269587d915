"""Shared helpers and the session-wide exhaustive-search sweep.

The acceptance tests compare closed formulas against the brute-force
search on every cycle instance in the theorem ranges.  Running that sweep
once per session and handing the results to each criterion keeps the
suite fast without weakening any single check.
"""

import random
import time

import pytest

from idcodes import (
    SolveOptions,
    UnsupportedRegimeError,
    build_cycle,
    formula_size,
    min_code,
)
from idcodes.cycles import CycleFamily
from idcodes.graphs import Graph, from_edges

RADII = (1, 2, 3)
N_RANGE = range(3, 19)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """A connected graph on n vertices: random spanning tree plus noise."""
    perm = list(range(n))
    rng.shuffle(perm)
    edges = set()
    for i in range(1, n):
        j = rng.randrange(i)
        edges.add(tuple(sorted((perm[i], perm[j]))))
    for _ in range(rng.randint(0, n)):
        a, b = rng.sample(range(n), 2)
        edges.add(tuple(sorted((a, b))))
    return from_edges(n, sorted(edges))


@pytest.fixture(scope="session")
def oracle_sweep():
    """Exhaustive optima, with every optimal code, for all theorem cells.

    Returns (results, elapsed) where results maps (family, r, n) to the
    SolveResult and elapsed maps each family to its wall-clock seconds.
    """
    results = {}
    elapsed = {}
    options = SolveOptions(enumerate_all=True)
    for family in CycleFamily:
        began = time.perf_counter()
        for r in RADII:
            for n in N_RANGE:
                try:
                    formula_size(family, n, r)
                except UnsupportedRegimeError:
                    continue
                results[(family, r, n)] = min_code(
                    build_cycle(n), family.spec(r), options
                )
        elapsed[family] = time.perf_counter() - began
    return results, elapsed

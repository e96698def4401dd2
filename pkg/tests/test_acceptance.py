"""Exit criteria. Each test prints one PASS/FAIL line; the summary repeats them.

Run alone with ``pytest tests/test_acceptance.py -s``.
"""

import itertools
import math
import statistics
import time
from dataclasses import dataclass, field

import pytest

from gensort.analysis import forbidden_coloring, max_clique_exact
from gensort.cliquesolve import DirectEdgesCall, PivotCall, Retry, clique_solve
from gensort.colorsolve import AddEdgesCall, add_edges, color_solve
from gensort.core import ComparisonGraph, GroundTruth, ProbeOracle, ScaffoldGraph, forbidden_graph, reachable
from gensort.generators import gen_er
from gensort.solvers import brute_force_solve, solve

GRID_N = (8, 16, 32, 64)
GRID_P = (0.1, 0.3, 0.5, 0.7, 0.9, 1.0)
GRID_SEEDS = range(20)


@dataclass
class GridRun:
    instances: int = 0
    mismatches: list = field(default_factory=list)
    add_edges: list = field(default_factory=list)
    budget_violations: list = field(default_factory=list)
    pivots: list = field(default_factory=list)
    direct: list = field(default_factory=list)
    retries: list = field(default_factory=list)
    seconds: float = 0.0


@pytest.fixture(scope="module")
def grid():
    run = GridRun()
    start = time.perf_counter()
    for n, p, seed in itertools.product(GRID_N, GRID_P, GRID_SEEDS):
        g, o = gen_er(n, p, seed)
        truth = o.truth
        ref = brute_force_solve(ProbeOracle(truth), g).directed_edges()

        coloring = forbidden_coloring(g)
        oc = ProbeOracle(truth)
        trace_c = []
        got_c = color_solve(oc, g, coloring, trace=trace_c.append).directed_edges()
        run.add_edges.extend(r for r in trace_c if isinstance(r, AddEdgesCall))
        budget = n * math.ceil(math.log2(n)) + 2 * n * coloring.k
        if oc.probe_count > budget:
            run.budget_violations.append((n, p, seed, oc.probe_count, budget))

        k = max_clique_exact(forbidden_graph(g)) + 1
        ok_ = ProbeOracle(truth)
        trace_k = []
        got_k = clique_solve(ok_, g, k, trace=trace_k.append).directed_edges()
        run.pivots.extend(r for r in trace_k if isinstance(r, PivotCall))
        run.direct.extend(r for r in trace_k if isinstance(r, DirectEdgesCall))
        run.retries.extend(r for r in trace_k if isinstance(r, Retry))

        if got_c != ref:
            run.mismatches.append(("colorsolve", n, p, seed))
        if got_k != ref:
            run.mismatches.append(("cliquesolve", n, p, seed))
        run.instances += 1
    run.seconds = time.perf_counter() - start
    return run


def test_ac1_oracle_equivalence(grid, report):
    ok = grid.instances == 480 and not grid.mismatches and grid.seconds < 120
    report(
        "AC1 oracle equivalence",
        ok,
        f"{grid.instances} instances x 2 solvers, {len(grid.mismatches)} mismatches, {grid.seconds:.1f}s (< 120s)",
    )
    assert ok, grid.mismatches[:5]


def test_ac2_add_edges_per_call_bound(grid, report):
    bad = [r for r in grid.add_edges if r.calls > r.len_i + r.len_j]
    ok = not bad and len(grid.add_edges) > 0
    report("AC2 add_edges probes <= |chain_i|+|chain_j|", ok, f"{len(grid.add_edges)} calls, {len(bad)} violations")
    assert ok, bad[:5]


def test_ac3_color_solve_total_bound(grid, report):
    ok = not grid.budget_violations
    report(
        "AC3 colorsolve probes <= n*ceil(log2 n) + 2nk",
        ok,
        f"{grid.instances} instances, {len(grid.budget_violations)} violations",
    )
    assert ok, grid.budget_violations[:5]


def test_ac4_select_postconditions(grid, report):
    bad = [
        r for r in grid.pivots
        if not (
            r.z_plus > r.n / 2
            and r.z_minus > r.n / 2
            and r.min_plus >= math.ceil(r.n / (3 * r.k))
            and r.min_minus >= math.ceil(r.n / (3 * r.k))
            and r.probes == 0
        )
    ]
    ok = not bad and len(grid.pivots) > 0 and not grid.retries
    report(
        "AC4 select |Z|>n/2, min|S+|>=ceil(n/3k), zero probes",
        ok,
        f"{2 * len(grid.pivots)} select calls in {len(grid.pivots)} pivots, {len(bad)} violations, "
        f"{len(grid.retries)} k-retries",
    )
    assert ok, bad[:5]


def test_ac5_direct_edges_bound(grid, report):
    def bound(size, k):
        log_term = math.ceil(math.log(size) / math.log(1 / (1 - 1 / (3 * k)))) if size > 1 else 0
        return 10 * k + log_term + 1

    bad = [r for r in grid.direct if r.calls > bound(r.size, r.k)]
    pivoted = sum(1 for r in grid.direct if r.pivots)
    ok = not bad and pivoted > 0
    report(
        "AC5 direct_edges probes <= 10k + ceil(log|S|/log(1/(1-1/3k))) + 1",
        ok,
        f"{len(grid.direct)} calls ({pivoted} with pivots), {len(bad)} violations",
    )
    assert ok, bad[:5]


def test_ac6_dense_scaling(report):
    ratios = {}
    start = time.perf_counter()
    for n in (128, 256, 512):
        probes = []
        for seed in range(10):
            g, o = gen_er(n, 0.5, seed)
            out = solve("cliquesolve", o, g)
            assert out.store.directed_edges() == o.truth.directed_edges()
            probes.append(o.probe_count)
        ratios[n] = statistics.mean(probes) / (n * math.log2(n) ** 2)
    spread = max(ratios.values()) / min(ratios.values())
    ok = spread < 2
    detail = ", ".join(f"n={n}: {r:.4f}" for n, r in ratios.items())
    report(
        "AC6 cliquesolve mean probes/(n log2^2 n) spread < 2x",
        ok,
        f"{detail}; spread {spread:.3f}; {time.perf_counter() - start:.0f}s",
    )
    assert ok


def test_ac7_hybrid_envelope(report):
    n = 256
    envelope = 2 * n**1.5 * math.log(n)
    worst = 0
    fitted = {}
    for p in (0.02, 0.05, 0.1, 0.2, 0.4, 0.8):
        cs = []
        for seed in range(10):
            g, o = gen_er(n, p, seed)
            out = solve("hybrid", o, g)
            assert out.store.directed_edges() == o.truth.directed_edges()
            worst = max(worst, o.probe_count)
            cs.append(o.probe_count / (n**1.5 * math.log(n)))
        fitted[p] = max(cs)
    ok = worst <= envelope
    report(
        "AC7 hybrid probes <= 2 n^1.5 ln n",
        ok,
        f"max probes {worst} vs {envelope:.0f}; fitted C by p: "
        + ", ".join(f"{p}:{c:.3f}" for p, c in fitted.items()),
    )
    assert ok


def test_ac8_add_edges_micro_trace(report):
    # v1 < v2 < v3 < v4 are ids 0..3; chains {v1, v3} and {v2, v4}
    g = ComparisonGraph(4, itertools.combinations(range(4), 2))
    truth = GroundTruth.from_order(g, [0, 1, 2, 3])

    o = ProbeOracle(truth)
    a = ScaffoldGraph(4)
    calls_ij = add_edges(o, [0, 2], [1, 3], a)
    edges_ij = sorted(a.edges)

    o2 = ProbeOracle(truth)
    b = ScaffoldGraph(4)
    add_edges(o2, [1, 3], [0, 2], b)
    edges_ji = sorted(b.edges)

    # brute-force confirmation: every added edge is a true relation, and the
    # union with the chain edges reaches every true pair
    full = ScaffoldGraph(4)
    for u, v in [(0, 2), (1, 3)] + edges_ij + edges_ji:
        full.add_edge(u, v)
    confirmed = all(truth.precedes(u, v) for u, v in edges_ij + edges_ji) and all(
        reachable(full, u, v) for u, v in truth.directed_edges()
    )
    ok = calls_ij == 3 and o.probe_count == 3 and edges_ij == [(1, 2)] and edges_ji == [(0, 1), (2, 3)] and confirmed
    report(
        "AC8 add_edges worked example",
        ok,
        f"(i,j): {calls_ij} probes, edges {edges_ij}; (j,i): edges {edges_ji}; closure confirmed={confirmed}",
    )
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))

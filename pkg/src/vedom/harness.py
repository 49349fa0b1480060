"""Exhaustive validation harness.

Cross-validates the structural recognizer against the exact oracle over all
non-isomorphic trees up to a given order, and re-checks the structural facts
the toolkit relies on (reduction transport, cut decompositions, forbidden
configurations, the covered/dominated implication, unit-cut additivity) with
the oracle as ground truth.  Reports collect mismatches and failures, which
are expected to be empty on a correct build.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .constructions import unit_cut_decompose
from .domination import oracle_report
from .freetrees import enumerate_free_trees, pruefer_to_tree
from .graph import Graph, connected_components, induced_delete, mask_from, serialize_edge_list
from .recognizer import find_forbidden_configuration, recognize
from .reduction import reduce_graph

ORACLE_SWEEP_MAX = 15        # full oracle per tree; enumeration alone goes to 18
ORACLE_HEAVY_MAX = 12        # suites that oracle many derived graphs per tree


@dataclass
class ValidationReport:
    max_order: int
    trees_checked: dict[int, int] = field(default_factory=dict)
    recognizer_oracle_mismatches: list[str] = field(default_factory=list)
    wvd_tree_census: dict[int, int] = field(default_factory=dict)
    lemma_failures: list[tuple[str, str]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.recognizer_oracle_mismatches and not self.lemma_failures

    def to_json_dict(self) -> dict:
        return {
            "max_order": self.max_order,
            "trees_checked": {str(k): v for k, v in sorted(self.trees_checked.items())},
            "mismatches": list(self.recognizer_oracle_mismatches),
            "wvd_census": {str(k): v for k, v in sorted(self.wvd_tree_census.items())},
            "lemma_failures": [list(f) for f in self.lemma_failures],
            "elapsed_seconds": round(self.elapsed, 3),
            "ok": self.ok,
        }


def _verdict_pair(args: tuple[int, tuple[tuple[int, int], ...]]) -> tuple[bool, bool]:
    n, edges = args
    g = Graph.from_edges(n, edges)
    return recognize(g).verdict, oracle_report(g).is_well_ve_dominated


def cross_validate(max_n: int, threads: int = 1) -> ValidationReport:
    """Recognizer verdict vs oracle verdict on every tree up to max_n."""
    if not 1 <= max_n <= ORACLE_SWEEP_MAX:
        raise ValueError(f"max_n must be in 1..{ORACLE_SWEEP_MAX}")
    started = time.perf_counter()
    report = ValidationReport(max_order=max_n)
    for n in range(1, max_n + 1):
        count = 0
        wvd = 0
        jobs = ((n, t.edges) for t in enumerate_free_trees(n))
        if threads > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                outcomes = list(pool.map(_verdict_pair, jobs, chunksize=64))
        else:
            outcomes = [_verdict_pair(j) for j in jobs]
        for index, (recognized, oracle_says) in enumerate(outcomes):
            count += 1
            if oracle_says:
                wvd += 1
            if recognized != oracle_says:
                report.recognizer_oracle_mismatches.append(
                    f"order {n} tree #{index}: recognizer={recognized} oracle={oracle_says}"
                )
        report.trees_checked[n] = count
        report.wvd_tree_census[n] = wvd
    report.elapsed = time.perf_counter() - started
    return report


def _graph_tag(g: Graph) -> str:
    return serialize_edge_list(g).replace("\n", ";")


def _qualifying_cut_edges(t: Graph) -> list[tuple[int, int]]:
    """Tree edges whose endpoints both start a length-2 path avoiding the
    edge: each endpoint needs a non-leaf neighbor besides the other."""
    out = []
    for u, v in t.edges:
        u_ok = any(x != v and t.degree(x) >= 2 for x in t.adj[u])
        v_ok = any(x != u and t.degree(x) >= 2 for x in t.adj[v])
        if u_ok and v_ok:
            out.append((u, v))
    return out


def _qualifying_cut_vertices(t: Graph) -> list[int]:
    """Cut vertices c with two neighbors that each start a length-2 path
    avoiding c (in a tree every edge is a cut edge already)."""
    out = []
    for c in range(t.n):
        if t.degree(c) < 2:
            continue
        good = 0
        for v in t.adj[c]:
            if any(x != c and t.degree(x) >= 2 for x in t.adj[v]):
                good += 1
        if good >= 2:
            out.append(c)
    return out


def random_leaf_duplicated_tree(rng: random.Random, max_order: int) -> Graph:
    """Random tree with random twin leaves added, capped at max_order."""
    base_n = rng.randint(2, max(2, max_order - 2))
    if base_n <= 2:
        g = Graph.from_edges(base_n, [(0, 1)] if base_n == 2 else [])
    else:
        seq = [rng.randrange(base_n) for _ in range(base_n - 2)]
        g = pruefer_to_tree(base_n, seq)
    while g.n < max_order and rng.random() < 0.7:
        leaves = [v for v in range(g.n) if g.degree(v) == 1]
        if not leaves:
            break
        support = g.adj[rng.choice(leaves)][0]
        g = Graph.from_edges(g.n + 1, list(g.edges) + [(support, g.n)])
    return g


def lemma_suite(
    max_n: int,
    threads: int = 1,
    transport_samples: int = 200,
    seed: int = 20240901,
) -> ValidationReport:
    """Oracle-backed re-checks of the structural facts.

    (a) reduction transport on randomized leaf-duplicated trees;
    (b) components of t minus both endpoints of a qualifying cut edge of a
        well-ve-dominated tree stay well-ve-dominated;
    (c) the cut-vertex analogue;
    (d) forbidden-configuration witnesses only fire on non-WVD trees;
    (e) well-ve-dominated implies i_ve = beta_ve;
    (f) gamma_ve is additive across every unit-cut edge of recognized trees.

    Oracle-heavy checks (a, e) cap at ORACLE_HEAVY_MAX vertices.
    """
    if not 1 <= max_n <= ORACLE_SWEEP_MAX:
        raise ValueError(f"max_n must be in 1..{ORACLE_SWEEP_MAX}")
    started = time.perf_counter()
    report = ValidationReport(max_order=max_n)
    fail = report.lemma_failures.append

    rng = random.Random(seed)
    for _ in range(transport_samples):
        g = random_leaf_duplicated_tree(rng, min(max_n, ORACLE_HEAVY_MAX))
        reduced = reduce_graph(g).reduced_graph
        if oracle_report(g).is_well_ve_dominated != oracle_report(reduced).is_well_ve_dominated:
            fail(("reduction-transport", _graph_tag(g)))

    for n in range(1, max_n + 1):
        count = 0
        wvd = 0
        for t in enumerate_free_trees(n):
            count += 1
            rep = oracle_report(t)
            is_wvd = rep.is_well_ve_dominated
            if is_wvd:
                wvd += 1

            witness = find_forbidden_configuration(t)
            if witness is not None and is_wvd:
                fail(("forbidden-config-soundness", _graph_tag(t)))

            if is_wvd and n <= ORACLE_HEAVY_MAX and rep.i_ve != rep.beta_ve:
                fail(("wvd-implies-wvc", _graph_tag(t)))

            if is_wvd:
                for u, v in _qualifying_cut_edges(t):
                    remainder, _ = induced_delete(t, mask_from((u, v)))
                    if not _all_components_wvd(remainder):
                        fail(("cut-edge-components", f"{_graph_tag(t)} edge ({u},{v})"))
                for c in _qualifying_cut_vertices(t):
                    remainder, _ = induced_delete(t, 1 << c)
                    if not _all_components_wvd(remainder):
                        fail(("cut-vertex-components", f"{_graph_tag(t)} vertex {c}"))

            result = recognize(t)
            if result.case == "T2":
                _check_unit_cut_additivity(result.reduced_tree, result, fail)
        report.trees_checked[n] = count
        report.wvd_tree_census[n] = wvd
    report.elapsed = time.perf_counter() - started
    return report


def _all_components_wvd(g: Graph) -> bool:
    for comp in connected_components(g):
        sub, _ = induced_delete(g, ((1 << g.n) - 1) & ~comp)
        if not oracle_report(sub).is_well_ve_dominated:
            return False
    return True


def _check_unit_cut_additivity(t2: Graph, result, fail) -> None:
    partition = result.partition
    total = oracle_report(t2).gamma_ve
    for edge in partition.backbone_edges:
        left, right = unit_cut_decompose(t2, partition, edge=edge)
        parts = oracle_report(left).gamma_ve + oracle_report(right).gamma_ve
        if parts != total:
            fail(
                (
                    "unit-cut-additivity",
                    f"{_graph_tag(t2)} edge {edge}: {parts} != {total}",
                )
            )

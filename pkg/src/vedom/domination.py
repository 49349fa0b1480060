"""Exact ground-truth oracle for vertex-edge domination.

A vertex v ve-dominates an edge e when an endpoint of e lies in the closed
neighborhood N[v]; a vertex set is ve-dominating when every edge is
ve-dominated by some member.  This module enumerates all inclusion-minimal
ve-dominating sets of a small graph exactly, and derives the extremal
parameters from the enumeration:

  gamma_ve / big_gamma_ve   min / max size of a minimal ve-dominating set
  i_ve / beta_ve            the same extremes over independent minimal sets
  well-ve-dominated         gamma_ve == big_gamma_ve
  well-ve-covered           i_ve == beta_ve

Everything is exponential-time by design; a vertex-count guard protects the
entry points.  Vertex and edge sets are int bitmasks (see vedom.graph).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graph import Graph, bit_list, iter_bits

FULL_MODE_GUARD = 24
SIZE_BOUNDED_VERTEX_GUARD = 40
SIZE_BOUNDED_BOUND_GUARD = 10


class InstanceTooLargeError(ValueError):
    """Raised when a graph exceeds the oracle's vertex guard."""


def dominated_edge_masks(g: Graph) -> list[int]:
    """For each vertex v, the mask of edges ve-dominated by v.

    v dominates edge (a, b) exactly when v is a, b, or adjacent to one of
    them, so each edge contributes its bit to both endpoints and all their
    neighbors.
    """
    masks = [0] * g.n
    for idx, (a, b) in enumerate(g.edges):
        bit = 1 << idx
        for end in (a, b):
            masks[end] |= bit
            for u in g.adj[end]:
                masks[u] |= bit
    return masks


def adjacency_masks(g: Graph) -> list[int]:
    """Open-neighborhood bitmask per vertex."""
    out = [0] * g.n
    for v in range(g.n):
        for u in g.adj[v]:
            out[v] |= 1 << u
    return out


def ve_dominated_edges(g: Graph, v: int) -> int:
    """Edge mask ve-dominated by the single vertex v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return dominated_edge_masks(g)[v]


def is_ve_dominating(g: Graph, s: int) -> bool:
    """True when the union of dominated-edge masks over s covers every edge.

    Vacuously true on edgeless graphs, so the empty set dominates P_1.
    """
    full = (1 << len(g.edges)) - 1
    masks = dominated_edge_masks(g)
    covered = 0
    for v in iter_bits(s):
        covered |= masks[v]
        if covered == full:
            return True
    return covered == full


def private_edges(g: Graph, s: int, v: int) -> int:
    """Edges ve-dominated by v and by no other member of s.  Requires v in s."""
    if not (s >> v) & 1:
        raise ValueError(f"vertex {v} is not a member of the set")
    masks = dominated_edge_masks(g)
    others = 0
    for u in iter_bits(s & ~(1 << v)):
        others |= masks[u]
    return masks[v] & ~others


def _all_members_have_private(masks: list[int], s: int) -> bool:
    members = bit_list(s)
    for v in members:
        others = 0
        for u in members:
            if u != v:
                others |= masks[u]
        if not masks[v] & ~others:
            return False
    return True


def is_minimal_ve_dominating(g: Graph, s: int) -> bool:
    """Minimality via private edges: s dominates and every member has one."""
    if not is_ve_dominating(g, s):
        return False
    return _all_members_have_private(dominated_edge_masks(g), s)


def is_minimal_by_removal(g: Graph, s: int) -> bool:
    """Definitional route: s dominates and no single-vertex removal does.

    Kept alongside the private-edge test as the independent cross-check;
    for a dominating s the two must agree on every input.
    """
    if not is_ve_dominating(g, s):
        return False
    full = (1 << len(g.edges)) - 1
    masks = dominated_edge_masks(g)
    for v in iter_bits(s):
        covered = 0
        for u in iter_bits(s & ~(1 << v)):
            covered |= masks[u]
        if covered == full:
            return False
    return True


def _check_guard(g: Graph, size_bound: int | None, guard: int) -> None:
    if size_bound is None:
        if g.n > guard:
            raise InstanceTooLargeError(
                f"{g.n} vertices exceeds the full-mode guard of {guard}"
            )
    else:
        if size_bound < 0:
            raise ValueError("size bound must be non-negative")
        if g.n > guard and not (
            g.n <= SIZE_BOUNDED_VERTEX_GUARD and size_bound <= SIZE_BOUNDED_BOUND_GUARD
        ):
            raise InstanceTooLargeError(
                f"{g.n} vertices with bound {size_bound} exceeds the "
                f"size-bounded guard ({SIZE_BOUNDED_VERTEX_GUARD} vertices, "
                f"bound {SIZE_BOUNDED_BOUND_GUARD})"
            )


def enumerate_minimal_ve_dominating_sets(
    g: Graph, size_bound: int | None = None, guard: int = FULL_MODE_GUARD
) -> list[int]:
    """All inclusion-minimal ve-dominating sets as vertex masks.

    Full mode (no size bound) returns every minimal set; size-bounded mode
    returns exactly the minimal sets of cardinality <= size_bound.  Output is
    ordered by (size, lexicographic member order) and contains each set once.

    The search branches on the lowest-index uncovered edge: for each vertex
    that dominates it we either include that vertex or exclude it from the
    rest of the branch, so every cover is generated along exactly one path.
    Generated covers are then filtered down to the inclusion-minimal ones by
    the private-edge criterion.
    """
    _check_guard(g, size_bound, guard)
    m = len(g.edges)
    full = (1 << m) - 1
    if full == 0:
        return [0]
    masks = dominated_edge_masks(g)
    edge_dominators: list[list[int]] = [[] for _ in range(m)]
    for v in range(g.n):
        for e in iter_bits(masks[v]):
            edge_dominators[e].append(v)
    bound = g.n if size_bound is None else min(size_bound, g.n)

    covers: list[int] = []

    def search(chosen: int, covered: int, banned: int, count: int) -> None:
        if covered == full:
            covers.append(chosen)
            return
        if count == bound:
            return
        rem = ~covered & full
        e = (rem & -rem).bit_length() - 1
        b = banned
        for v in edge_dominators[e]:
            if not (b >> v) & 1:
                search(chosen | (1 << v), covered | masks[v], b, count + 1)
                b |= 1 << v

    search(0, 0, 0, 0)
    minimal = [s for s in covers if _all_members_have_private(masks, s)]
    minimal.sort(key=lambda s: (s.bit_count(), bit_list(s)))
    return minimal


def minimal_sets_by_exhaustion(g: Graph) -> list[int]:
    """Brute-force sweep over all 2^n subsets; the independent test oracle.

    Deliberately definitional (coverage table over every subset, minimality
    by single-vertex removal), only suitable for very small graphs.
    """
    if g.n > 16:
        raise InstanceTooLargeError("exhaustive sweep is capped at 16 vertices")
    m = len(g.edges)
    full = (1 << m) - 1
    masks = dominated_edge_masks(g)
    size = 1 << g.n
    covered = [0] * size
    for s in range(1, size):
        low = s & -s
        covered[s] = covered[s ^ low] | masks[low.bit_length() - 1]
    out = []
    for s in range(size):
        if covered[s] != full:
            continue
        if all(covered[s ^ (1 << v)] != full for v in iter_bits(s)):
            out.append(s)
    out.sort(key=lambda s: (s.bit_count(), bit_list(s)))
    return out


@dataclass(frozen=True)
class DominationReport:
    """Everything the exact oracle knows about one graph."""

    gamma_ve: int
    big_gamma_ve: int
    minimal_size_multiset: dict[int, int]
    witness_min: int
    witness_max: int
    i_ve: int
    beta_ve: int
    is_well_ve_dominated: bool
    is_well_ve_covered: bool
    enumeration_mode: str

    def to_json_dict(self) -> dict:
        return {
            "gamma_ve": self.gamma_ve,
            "big_gamma_ve": self.big_gamma_ve,
            "sizes": {str(k): v for k, v in sorted(self.minimal_size_multiset.items())},
            "witness_min": bit_list(self.witness_min),
            "witness_max": bit_list(self.witness_max),
            "i_ve": self.i_ve,
            "beta_ve": self.beta_ve,
            "wvd": self.is_well_ve_dominated,
            "wvc": self.is_well_ve_covered,
            "mode": self.enumeration_mode,
        }


def oracle_report(
    g: Graph, size_bound: int | None = None, guard: int = FULL_MODE_GUARD
) -> DominationReport:
    """Full enumeration report; gamma_ve = big_gamma_ve = 0 on edgeless graphs.

    With a size bound the report describes only the minimal sets of size
    <= size_bound (the verdict fields are then bound-relative).
    """
    sets = enumerate_minimal_ve_dominating_sets(g, size_bound, guard)
    if not sets:
        raise ValueError(f"no minimal ve-dominating set of size <= {size_bound}")
    adj = adjacency_masks(g)
    sizes = [s.bit_count() for s in sets]
    gamma, big_gamma = min(sizes), max(sizes)
    independent = [s for s in sets if all(adj[v] & s == 0 for v in iter_bits(s))]
    if not independent:
        # every maximal independent set ve-dominates, so full mode always
        # finds an independent minimal set; only a size bound can hide them
        raise ValueError(f"no independent minimal set of size <= {size_bound}")
    ind_sizes = [s.bit_count() for s in independent]
    i_ve, beta_ve = min(ind_sizes), max(ind_sizes)
    witness_min = next(s for s in sets if s.bit_count() == gamma)
    witness_max = next(s for s in sets if s.bit_count() == big_gamma)
    mode = "full" if size_bound is None else f"size-bounded({size_bound})"
    return DominationReport(
        gamma_ve=gamma,
        big_gamma_ve=big_gamma,
        minimal_size_multiset=dict(sorted(Counter(sizes).items())),
        witness_min=witness_min,
        witness_max=witness_max,
        i_ve=i_ve,
        beta_ve=beta_ve,
        is_well_ve_dominated=gamma == big_gamma,
        is_well_ve_covered=i_ve == beta_ve,
        enumeration_mode=mode,
    )


def domination_chain_check(g: Graph, guard: int = FULL_MODE_GUARD) -> bool:
    """gamma_ve <= i_ve <= beta_ve <= big_gamma_ve, per the oracle report."""
    r = oracle_report(g, guard=guard)
    return r.gamma_ve <= r.i_ve <= r.beta_ve <= r.big_gamma_ve

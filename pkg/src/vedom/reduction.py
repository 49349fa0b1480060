"""Collapsing vertices with identical open neighborhoods.

Two vertices with the same open neighborhood dominate exactly the same
edges, so keeping one representative per class preserves the
well-ve-dominated verdict.  The canonical tree case is several leaves
hanging off one support: they all see exactly the support, and only the
open-neighborhood convention collapses them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, induced_delete, mask_from


@dataclass(frozen=True)
class ReductionMap:
    """Result of collapsing neighborhood classes to one representative each."""

    class_of: tuple[int, ...]          # vertex -> class index
    representatives: tuple[int, ...]   # class index -> chosen original vertex
    reduced_graph: Graph
    to_reduced: tuple[int, ...]        # original vertex -> reduced index


def neighborhood_classes(g: Graph) -> list[list[int]]:
    """Equivalence classes under equality of open neighborhoods,
    ordered by minimum member."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


def is_reduced(g: Graph) -> bool:
    return all(len(c) == 1 for c in neighborhood_classes(g))


def reduce_graph(g: Graph) -> ReductionMap:
    """One collapse pass; the result is itself reduced.

    The representative of each class is its minimum-index member, so the
    reduced graph is deterministic and verdicts transport by index map.
    """
    classes = neighborhood_classes(g)
    class_of = [0] * g.n
    reps = []
    for idx, members in enumerate(classes):
        reps.append(members[0])
        for v in members:
            class_of[v] = idx
    removed = mask_from(v for v in range(g.n) if v != reps[class_of[v]])
    reduced, remap = induced_delete(g, removed)
    to_reduced = tuple(remap[reps[class_of[v]]] for v in range(g.n))
    return ReductionMap(
        class_of=tuple(class_of),
        representatives=tuple(reps),
        reduced_graph=reduced,
        to_reduced=to_reduced,
    )

"""Immutable simple undirected graphs with a canonical edge order.

Vertices are dense 0-based integers.  Edges are unordered pairs (u, v) with
u < v, stored sorted lexicographically; the position of a pair in that list
is its edge index.  Vertex and edge subsets are passed around as plain int
bitmasks (bit i set = index i is a member), which keeps membership tests and
unions word-parallel in the subset-search inner loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Raised when an edge-list document cannot be parsed."""


def mask_from(indices: Iterable[int]) -> int:
    """Bitmask with the given bit indices set."""
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit indices of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    adj[v] is the sorted tuple of neighbors of v; edges is the canonical
    lexicographically sorted tuple of (min, max) pairs.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, validating and canonicalizing the edge list."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
        canon = tuple(sorted(seen))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return Graph(n, tuple(tuple(sorted(a)) for a in nbrs), canon)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v] + (v,)))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_ids(self) -> dict[tuple[int, int], int]:
        """Map each canonical (u, v) pair to its edge index."""
        return {e: i for i, e in enumerate(self.edges)}


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    Lines starting with '#' are comments.  An optional first directive line
    "n <count>" declares the vertex count; otherwise the count is one more
    than the largest index seen (0 if there are no edges).  Every other
    non-blank line is "u v".  Errors report the 1-based line number.
    """
    declared: int | None = None
    raw_edges: list[tuple[int, int, int]] = []
    saw_edge = False
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if parts[0] == "n":
            if declared is not None or saw_edge:
                raise GraphFormatError(
                    f"line {lineno}: directive 'n' must be the first non-comment line"
                )
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: malformed directive {stripped!r}")
            try:
                declared = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: malformed vertex count {parts[1]!r}") from None
            if declared < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: malformed edge line {stripped!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: malformed edge line {stripped!r}") from None
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex index")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        saw_edge = True
        raw_edges.append((lineno, u, v))

    n = declared if declared is not None else (1 + max((max(u, v) for _, u, v in raw_edges), default=-1))
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, u, v in raw_edges:
        if u >= n or v >= n:
            raise GraphFormatError(
                f"line {lineno}: vertex index {max(u, v)} exceeds declared count {n}"
            )
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
        edges.append(e)
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    """Emit the canonical edge-list document (header always present)."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by smallest member."""
    unseen = set(range(g.n))
    comps: list[int] = []
    for start in range(g.n):
        if start not in unseen:
            continue
        stack = [start]
        unseen.discard(start)
        mask = 0
        while stack:
            v = stack.pop()
            mask |= 1 << v
            for u in g.adj[v]:
                if u in unseen:
                    unseen.discard(u)
                    stack.append(u)
        comps.append(mask)
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    """Connected with exactly n-1 edges; the empty graph is not a tree."""
    if g.n == 0:
        return False
    return len(g.edges) == g.n - 1 and is_connected(g)


def good_pendant_edges(g: Graph) -> list[tuple[int, int]]:
    """All (leaf, support) pairs where the leaf has degree 1 and its support
    degree exactly 2, sorted by leaf index."""
    out = []
    for leaf in range(g.n):
        if g.degree(leaf) == 1:
            support = g.adj[leaf][0]
            if g.degree(support) == 2:
                out.append((leaf, support))
    return out


def induced_delete(g: Graph, removed: int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the vertices outside the ``removed`` mask.

    Returns the new graph plus the old-index -> new-index map for the
    surviving vertices.  Edge order is recomputed canonically.
    """
    keep = [v for v in range(g.n) if not (removed >> v) & 1]
    remap = {old: new for new, old in enumerate(keep)}
    edges = [
        (remap[u], remap[v])
        for u, v in g.edges
        if u in remap and v in remap
    ]
    return Graph.from_edges(len(keep), edges), remap


def relabeled(g: Graph, perm: list[int]) -> Graph:
    """Copy of g with vertex i renamed perm[i]; perm must be a permutation."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex range")
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])

"""Simple undirected graphs with bitset adjacency rows, plus named constructors."""

from __future__ import annotations

from typing import Iterable, Iterator

# Node sets cross the public API as frozensets; bitmasks stay internal.
NodeSet = frozenset


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(nodes: Iterable[int]) -> int:
    m = 0
    for v in nodes:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset:
    return frozenset(iter_bits(mask))


class Graph:
    """Undirected simple graph on nodes 0..n-1.

    Adjacency is one Python int bitmask per node, so membership tests and
    outside-neighbor counts are constant-time popcounts. Instances are
    treated as immutable once built; self-loops and duplicate edges are
    rejected at construction.
    """

    __slots__ = ("n", "adj", "_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("node count must be nonnegative")
        self.n = n
        self.adj = [0] * n
        self._cache: dict = {}
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if self.adj[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u},{v})")
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.adj[v])

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield u, v

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def component_masks(g: Graph) -> list[int]:
    """Connected components as bitmasks, ordered by smallest member."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        visited = 1 << v
        frontier = visited
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~visited
            visited |= frontier
        out.append(visited)
        seen |= visited
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(component_masks(g)) == 1


def min_degree(g: Graph) -> int:
    """Smallest node degree; errors on the empty graph."""
    if g.n == 0:
        raise ValueError("empty graph")
    return min(row.bit_count() for row in g.adj)


def with_added_node(g: Graph, neighbors: frozenset) -> Graph:
    """New graph with node index n attached to the given nonempty neighbor set."""
    if not neighbors:
        raise ValueError("empty neighbor set")
    for v in neighbors:
        if not 0 <= v < g.n:
            raise ValueError(f"neighbor {v} out of range")
    edges = list(g.edges()) + [(v, g.n) for v in sorted(neighbors)]
    return Graph(g.n + 1, edges)


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 nodes")
    edges = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    return Graph(n, sorted(edges))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 node")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def counterexample(n: int) -> Graph:
    """Two n/2-cliques joined by a perfect matching (node i matched to i + n/2).

    Minimum degree and connectivity are both n/2, yet the two cliques form a
    1-degree cut, so the graph is only 1-robust.
    """
    if n % 2 != 0 or n < 4:
        raise ValueError("counterexample graph needs even n >= 4")
    half = n // 2
    edges = [(u, v) for u in range(half) for v in range(u + 1, half)]
    edges += [(u + half, v + half) for u in range(half) for v in range(u + 1, half)]
    edges += [(i, i + half) for i in range(half)]
    return Graph(n, sorted(edges))

"""Vertex connectivity by unit-capacity max-flow over a node-split digraph."""

from __future__ import annotations

from .graph import Graph, component_masks, is_connected, iter_bits, min_degree


class _SplitFlow:
    """Unit-capacity flow network: node v becomes arcs 2v (in) -> 2v+1 (out).

    Built once per graph; capacities are reset for each terminal pair. All
    arcs have capacity 1, which suffices because every path is throttled by
    an interior in->out arc anyway.
    """

    def __init__(self, g: Graph):
        self.size = 2 * g.n
        self.head: list[list[int]] = [[] for _ in range(self.size)]
        self.to: list[int] = []
        self.cap: list[int] = []
        for v in range(g.n):
            self._arc(2 * v, 2 * v + 1)
        for u, v in g.edges():
            self._arc(2 * u + 1, 2 * v)
            self._arc(2 * v + 1, 2 * u)

    def _arc(self, a: int, b: int) -> None:
        self.head[a].append(len(self.to))
        self.to.append(b)
        self.cap.append(1)
        self.head[b].append(len(self.to))
        self.to.append(a)
        self.cap.append(0)

    def max_flow(self, s: int, t: int, limit: int) -> int:
        """BFS augmenting paths from s to t, stopping once flow reaches limit."""
        for i in range(0, len(self.cap), 2):
            self.cap[i] = 1
            self.cap[i + 1] = 0
        flow = 0
        parent = [-1] * self.size
        while flow < limit:
            for i in range(self.size):
                parent[i] = -1
            parent[s] = -2
            queue = [s]
            qi = 0
            while qi < len(queue) and parent[t] == -1:
                a = queue[qi]
                qi += 1
                for e in self.head[a]:
                    b = self.to[e]
                    if self.cap[e] > 0 and parent[b] == -1:
                        parent[b] = e
                        if b == t:
                            break
                        queue.append(b)
            if parent[t] == -1:
                break
            b = t
            while b != s:
                e = parent[b]
                self.cap[e] -= 1
                self.cap[e ^ 1] += 1
                b = self.to[e ^ 1]
            flow += 1
        return flow


def _local_connectivity(net: _SplitFlow, u: int, v: int, limit: int) -> int:
    """Max number of internally node-disjoint u-v paths for non-adjacent u, v."""
    return net.max_flow(2 * u + 1, 2 * v, limit)


def _terminal_pairs(g: Graph):
    """Pairs covering some minimum cut: a min-degree node against its
    non-neighbors, plus non-adjacent pairs among its neighbors."""
    s = min(range(g.n), key=g.degree)
    nbrs = list(iter_bits(g.adj[s]))
    for t in range(g.n):
        if t != s and not g.has_edge(s, t):
            yield s, t
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not g.has_edge(x, y):
                yield x, y


def vertex_connectivity(g: Graph) -> int:
    """Largest k such that every node pair is joined by k node-disjoint paths.

    n-1 for complete graphs, 0 iff disconnected.
    """
    if g.n < 2:
        raise ValueError("connectivity undefined")
    if not is_connected(g):
        return 0
    best = min_degree(g)
    if best == g.n - 1:
        return best  # complete graph convention
    net = _SplitFlow(g)
    for u, v in _terminal_pairs(g):
        best = min(best, _local_connectivity(net, u, v, best))
        if best == 0:
            break
    return best


def _has_articulation_point(g: Graph) -> bool:
    """Iterative Tarjan lowpoint scan; assumes g is connected, n >= 3."""
    n = g.n
    disc = [0] * n
    low = [0] * n
    timer = 1
    it_stack: list[tuple[int, int, int]] = [(0, -1, 0)]
    nbrs = [list(iter_bits(row)) for row in g.adj]
    root_children = 0
    while it_stack:
        v, parent, i = it_stack.pop()
        if i == 0:
            disc[v] = low[v] = timer
            timer += 1
        advanced = False
        while i < len(nbrs[v]):
            w = nbrs[v][i]
            i += 1
            if w == parent:
                continue
            if disc[w]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
                continue
            it_stack.append((v, parent, i))
            it_stack.append((w, v, 0))
            if v == 0:
                root_children += 1
            advanced = True
            break
        if not advanced and parent != -1:
            if low[v] < low[parent]:
                low[parent] = low[v]
            if parent != 0 and low[v] >= disc[parent]:
                return True
    return root_children >= 2


def connectivity_at_least(g: Graph, k: int) -> bool:
    """Exact decision vertex_connectivity(g) >= k, with fast small-k paths."""
    if g.n < 2:
        raise ValueError("connectivity undefined")
    if k <= 0:
        return True
    if k > g.n - 1:
        return False
    if min_degree(g) < k:
        return False
    if not is_connected(g):
        return False
    if k == 1:
        return True
    if k == 2:
        return not _has_articulation_point(g)
    if min_degree(g) == g.n - 1:
        return True  # complete
    net = _SplitFlow(g)
    for u, v in _terminal_pairs(g):
        if _local_connectivity(net, u, v, k) < k:
            return False
    return True

"""Seeded random-graph generators: G(n,p), geometric placements, preferential attachment."""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, complete
from .robustness import is_r_robust


@dataclass(frozen=True)
class RngSeed:
    """PCG64 seed. Identical (seed, stream) reproduces generation bit-for-bit.

    Stream ids split one entropy value into independent generators; harnesses
    hand stream base+k to trial k.
    """

    seed: int
    stream: int = 0

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.stream < 0:
            raise ValueError("stream must be nonnegative")

    def child(self, offset: int) -> "RngSeed":
        return RngSeed(self.seed, self.stream + offset)


def rng_for(seed) -> np.random.Generator:
    """Generator for an RngSeed; a bare int means stream 0 of that entropy."""
    if isinstance(seed, (int, np.integer)):
        seed = RngSeed(int(seed))
    ss = np.random.SeedSequence(entropy=seed.seed, spawn_key=(seed.stream,))
    return np.random.Generator(np.random.PCG64(ss))


def pair_uniforms(n: int, rng: np.random.Generator) -> np.ndarray:
    """One uniform per unordered node pair, in (u, v) lexicographic order.

    Thresholding these against p yields G(n, p); reusing the same array for
    several p values couples the samples monotonically.
    """
    return rng.random(n * (n - 1) // 2)


_TRIU_CACHE: dict = {}


def pair_indices(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n not in _TRIU_CACHE:
        _TRIU_CACHE[n] = np.triu_indices(n, 1)
    return _TRIU_CACHE[n]


def graph_from_pair_mask(n: int, mask: np.ndarray) -> Graph:
    iu, ju = pair_indices(n)
    sel = np.nonzero(mask)[0]
    return Graph(n, zip(iu[sel].tolist(), ju[sel].tolist()))


def gen_erdos_renyi(n: int, p: float, seed) -> Graph:
    """G(n, p): each unordered pair present independently with probability p."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    u = pair_uniforms(n, rng_for(seed))
    return graph_from_pair_mask(n, u < p)


@dataclass(frozen=True)
class GeometricPlacement:
    """Node positions in [0, side_length]^dimension with a connection radius."""

    positions: tuple
    side_length: float
    radius: float
    dimension: int

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if self.side_length <= 0:
            raise ValueError("side_length must be positive")
        for pt in self.positions:
            if len(pt) != self.dimension:
                raise ValueError("coordinate dimension mismatch")
            if any(not 0 <= c <= self.side_length for c in pt):
                raise ValueError("coordinate outside the placement region")

    def spread(self) -> float:
        """max - min of coordinates (1-D only): x(n) - x(1)."""
        if self.dimension != 1:
            raise ValueError("spread is defined for 1-D placements")
        xs = [pt[0] for pt in self.positions]
        return max(xs) - min(xs)


def graph_from_placement(pl: GeometricPlacement) -> Graph:
    """Edge iff Euclidean distance <= radius. Deterministic in the given order."""
    n = len(pl.positions)
    r2 = pl.radius * pl.radius
    edges = []
    for u in range(n):
        pu = pl.positions[u]
        for v in range(u + 1, n):
            pv = pl.positions[v]
            if sum((a - b) * (a - b) for a, b in zip(pu, pv)) <= r2:
                edges.append((u, v))
    return Graph(n, edges)


def gen_geometric(n: int, radius: float, side_length: float, dimension: int, seed):
    """Uniform i.i.d. placement, then the distance graph.

    For dimension 1 the positions are sorted ascending (ties by draw index)
    before node indices are assigned, so node order equals position order.
    Returns (Graph, GeometricPlacement).
    """
    if n < 1:
        raise ValueError("n must be positive")
    coords = rng_for(seed).random((n, dimension)) * side_length
    if dimension == 1:
        order = np.argsort(coords[:, 0], kind="stable")
        coords = coords[order]
    pl = GeometricPlacement(
        positions=tuple(tuple(float(c) for c in row) for row in coords),
        side_length=float(side_length),
        radius=float(radius),
        dimension=int(dimension),
    )
    return graph_from_placement(pl), pl


def gen_preferential(
    n: int,
    r: int,
    seed,
    seed_graph: Graph | None = None,
    verify_seed_graph: bool = False,
) -> Graph:
    """Preferential attachment: start from an r-robust seed graph (default
    K_{2r-1}), then attach each new node to r distinct existing nodes drawn
    with probability proportional to current degree.

    Sampling without replacement is by rejection of already-chosen targets;
    cumulative weights are rebuilt per node insertion. A zero total degree
    (only possible around K_1) falls back to uniform choice.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if seed_graph is None:
        seed_graph = complete(2 * r - 1)
    elif verify_seed_graph:
        if not is_r_robust(seed_graph, r):
            raise ValueError("seed graph is not r-robust")
    n0 = seed_graph.n
    if n < n0:
        raise ValueError("seed graph too small for n (need n >= seed graph size)")
    if n0 < r:
        raise ValueError("seed graph too small to supply r distinct targets")
    rng = rng_for(seed)
    edges = list(seed_graph.edges())
    degrees = [seed_graph.degree(v) for v in range(n0)] + [0] * (n - n0)
    for new in range(n0, n):
        cum = []
        total = 0
        for v in range(new):
            total += degrees[v]
            cum.append(total)
        if 0 < sum(1 for v in range(new) if degrees[v] > 0) < r:
            raise ValueError("seed graph cannot supply r distinct degree-weighted targets")
        chosen: set = set()
        while len(chosen) < r:
            if total == 0:
                v = int(rng.integers(new))
            else:
                v = bisect.bisect_right(cum, rng.random() * total)
            if v not in chosen:
                chosen.add(v)
        for v in sorted(chosen):
            edges.append((v, new))
            degrees[v] += 1
        degrees[new] = r
    return Graph(n, edges)

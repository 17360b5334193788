"""Seeded generator behavior: determinism, parameter validation, and the
shape facts each family guarantees by construction."""

import math

import numpy as np
import pytest
from scipy import stats

from netrobust.generators import (
    GeometricPlacement,
    RngSeed,
    gen_erdos_renyi,
    gen_geometric,
    gen_preferential,
    graph_from_pair_mask,
    graph_from_placement,
    pair_uniforms,
    rng_for,
)
from netrobust.graph import Graph, complete, cycle, is_connected, min_degree
from netrobust.robustness import is_r_robust, robustness


# --- seeds -------------------------------------------------------------------


def test_rng_seed_validation():
    RngSeed(0)
    RngSeed(2**64 - 1, 5)
    with pytest.raises(ValueError, match="64-bit"):
        RngSeed(2**64)
    with pytest.raises(ValueError, match="64-bit"):
        RngSeed(-1)
    with pytest.raises(ValueError, match="nonnegative"):
        RngSeed(0, -1)


def test_child_offsets_stream():
    s = RngSeed(99, 2)
    assert s.child(3) == RngSeed(99, 5)
    assert s.child(0) == s


def test_rng_determinism_and_stream_independence():
    a = rng_for(RngSeed(5, 3)).random(3)
    b = rng_for(RngSeed(5, 3)).random(3)
    assert np.array_equal(a, b)
    assert [round(float(x), 6) for x in a] == [0.720196, 0.694664, 0.638412]
    c = rng_for(RngSeed(5, 4)).random(3)
    assert not np.array_equal(a, c)
    # bare ints mean stream 0
    assert np.array_equal(rng_for(5).random(3), rng_for(RngSeed(5, 0)).random(3))


# --- Erdos-Renyi -------------------------------------------------------------


def test_er_determinism_frozen():
    g = gen_erdos_renyi(6, 0.5, 42)
    assert list(g.edges()) == [(0, 4), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (4, 5)]
    assert g == gen_erdos_renyi(6, 0.5, 42)


def test_er_extremes_and_validation():
    assert gen_erdos_renyi(7, 0.0, 1).edge_count() == 0
    assert gen_erdos_renyi(7, 1.0, 1) == complete(7)
    with pytest.raises(ValueError, match="p must lie"):
        gen_erdos_renyi(5, 1.5, 1)
    with pytest.raises(ValueError, match="n must be positive"):
        gen_erdos_renyi(0, 0.5, 1)


def test_er_edge_rate_matches_p():
    # 300 seeded samples of G(20, 0.3): total pair count is Binomial(57000, 0.3)
    n, p, trials = 20, 0.3, 300
    pairs = n * (n - 1) // 2
    total = sum(gen_erdos_renyi(n, p, RngSeed(77, k)).edge_count() for k in range(trials))
    lo = stats.binom.ppf(1e-9, pairs * trials, p)
    hi = stats.binom.isf(1e-9, pairs * trials, p)
    assert lo <= total <= hi


def test_pair_uniforms_coupling():
    # same trial seed thresholded at increasing p gives nested edge sets
    u = pair_uniforms(10, rng_for(RngSeed(3)))
    assert u.shape == (45,)
    sparse = graph_from_pair_mask(10, u < 0.2)
    dense = graph_from_pair_mask(10, u < 0.6)
    assert set(sparse.edges()) <= set(dense.edges())


# --- geometric ---------------------------------------------------------------


def test_geometric_frozen_sample():
    g, pl = gen_geometric(5, 0.3, 1.0, 1, RngSeed(7))
    assert [round(pt[0], 6) for pt in pl.positions] == [
        0.053094, 0.591351, 0.72934, 0.797859, 0.868825,
    ]
    assert list(g.edges()) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def test_geometric_positions_sorted_in_1d():
    for seed in range(10):
        _, pl = gen_geometric(12, 0.1, 2.0, 1, RngSeed(seed))
        xs = [pt[0] for pt in pl.positions]
        assert xs == sorted(xs)
        assert all(0 <= x <= 2.0 for x in xs)


def test_geometric_adjacency_law():
    g, pl = gen_geometric(15, 0.25, 1.0, 1, RngSeed(41))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            dist = abs(pl.positions[u][0] - pl.positions[v][0])
            assert g.has_edge(u, v) == (dist <= 0.25)


def test_geometric_2d_supported_but_no_spread():
    g, pl = gen_geometric(8, 0.5, 1.0, 2, RngSeed(13))
    assert pl.dimension == 2
    assert len(pl.positions[0]) == 2
    with pytest.raises(ValueError, match="1-D"):
        pl.spread()


def test_placement_validation():
    with pytest.raises(ValueError, match="radius"):
        GeometricPlacement(((0.0,),), 1.0, 0.0, 1)
    with pytest.raises(ValueError, match="dimension mismatch"):
        GeometricPlacement(((0.0, 0.0),), 1.0, 0.5, 1)
    with pytest.raises(ValueError, match="outside the placement region"):
        GeometricPlacement(((2.0,),), 1.0, 0.5, 1)


def test_graph_from_placement_by_hand():
    pl = GeometricPlacement(((0.0,), (1.0,), (2.5,)), 3.0, 1.2, 1)
    g = graph_from_placement(pl)
    assert list(g.edges()) == [(0, 1)]
    assert pl.spread() == 2.5


# --- preferential attachment -------------------------------------------------


def test_ba_frozen_sample():
    g = gen_preferential(8, 2, RngSeed(11))
    assert list(g.edges()) == [
        (0, 1), (0, 2), (0, 3), (0, 5), (1, 2), (1, 4), (1, 6),
        (2, 3), (2, 4), (4, 5), (4, 6), (4, 7), (6, 7),
    ]


def test_ba_shape_invariants():
    r = 3
    g = gen_preferential(14, r, RngSeed(0))
    # seed clique K_{2r-1} is intact
    for u in range(2 * r - 1):
        for v in range(u + 1, 2 * r - 1):
            assert g.has_edge(u, v)
    # node k only attaches backward, to exactly r targets
    for k in range(2 * r - 1, g.n):
        back = sum(1 for v in g.neighbors(k) if v < k)
        assert back == r
    assert min_degree(g) >= r
    assert is_connected(g)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_ba_graphs_are_exactly_r_robust(r):
    # degree-r youngest node caps robustness at r; the build keeps it >= r
    for seed in range(12):
        g = gen_preferential(2 * r - 1 + 5 + seed % 3, r, RngSeed(1000 + seed))
        assert robustness(g) == r


def test_ba_validation_and_custom_seed_graph():
    with pytest.raises(ValueError, match="r must be positive"):
        gen_preferential(5, 0, RngSeed(1))
    with pytest.raises(ValueError, match="too small for n"):
        gen_preferential(2, 2, RngSeed(1))
    with pytest.raises(ValueError, match="not r-robust"):
        gen_preferential(10, 2, RngSeed(1), seed_graph=cycle(5), verify_seed_graph=True)
    # unverified seed graphs are accepted as-is
    g = gen_preferential(10, 2, RngSeed(1), seed_graph=cycle(5))
    assert g.n == 10
    # K_5 is 3-robust, so it passes verification as a 3-seed
    g = gen_preferential(9, 3, RngSeed(2), seed_graph=complete(5), verify_seed_graph=True)
    assert is_r_robust(g, 3)


def test_ba_determinism_across_calls():
    a = gen_preferential(20, 2, RngSeed(8, 4))
    b = gen_preferential(20, 2, RngSeed(8, 4))
    assert a == b
    assert a != gen_preferential(20, 2, RngSeed(8, 5))

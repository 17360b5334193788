"""W-MSR resilient consensus under F-local adversaries, and threshold contagion."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ResourceGuardError
from .graph import Graph, iter_bits, mask_of
from .generators import rng_for
from .robustness import check_subsets_reachable

# Guard for the all-seed-sets contagion simulation: C(n, m) blows up fast.
SIMULATE_NODE_LIMIT = 12

# Slack for float roundoff when asserting the consensus validity invariant.
_VALIDITY_SLACK = 1e-9


@dataclass(frozen=True)
class Constant:
    """Adversary broadcasts a fixed value every round."""

    value: float

    def broadcast(self, round_index: int, rng) -> float:
        return self.value


@dataclass(frozen=True)
class UniformRandom:
    """Adversary broadcasts a fresh uniform draw from [low, high] each round."""

    low: float
    high: float

    def __post_init__(self):
        if self.high < self.low:
            raise ValueError("low must not exceed high")

    def broadcast(self, round_index: int, rng) -> float:
        if rng is None:
            raise ValueError("uniform_random adversary strategy needs an rng seed")
        return float(rng.uniform(self.low, self.high))


@dataclass(frozen=True)
class Ramp:
    """Adversary broadcasts start + slope * round, growing without bound."""

    start: float
    slope: float

    def broadcast(self, round_index: int, rng) -> float:
        return self.start + self.slope * round_index


@dataclass
class ConsensusConfig:
    f_parameter: int
    filter_mode: str = "strict"
    max_rounds: int = 1000
    convergence_epsilon: float = 1e-6
    adversary_set: frozenset = frozenset()
    adversary_strategy: dict = field(default_factory=dict)
    rng_seed: object = None

    def __post_init__(self):
        if self.f_parameter < 0:
            raise ValueError("f_parameter must be nonnegative")
        if self.filter_mode not in ("strict", "literal"):
            raise ValueError("filter_mode must be 'strict' or 'literal'")
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be positive")
        if self.convergence_epsilon <= 0:
            raise ValueError("convergence_epsilon must be positive")
        if set(self.adversary_strategy) != set(self.adversary_set):
            raise ValueError("adversary_strategy must cover exactly the adversary nodes")


@dataclass(frozen=True)
class ConsensusTrace:
    rounds: tuple
    converged: bool
    final_spread: float


def validate_f_local(g: Graph, adversaries: frozenset, f: int) -> bool:
    """True iff every normal node has at most f adversarial neighbors."""
    amask = mask_of(adversaries)
    if amask & ~g.full_mask():
        raise ValueError("adversary set contains nodes outside the graph")
    return all(
        (g.adj[v] & amask).bit_count() <= f
        for v in range(g.n)
        if not amask >> v & 1
    )


def wmsr_filter(own: float, neighbor_values: list, f: int, mode: str = "strict") -> list:
    """Retained neighbor values after dropping up to f per extreme side.

    strict: drop the min(f, count) largest values strictly greater than own
    and the min(f, count) smallest strictly less than own. literal: drop the
    f largest and f smallest unconditionally (everything if <= 2f values).
    Ties break by list position, earlier entries kept.
    """
    if f < 0:
        raise ValueError("f must be nonnegative")
    if mode not in ("strict", "literal"):
        raise ValueError("mode must be 'strict' or 'literal'")
    vals = list(neighbor_values)
    if f == 0:
        return vals
    if mode == "literal" and len(vals) <= 2 * f:
        return []
    keep = set(range(len(vals)))
    if mode == "strict":
        high = [i for i in keep if vals[i] > own]
    else:
        high = list(keep)
    # tail of (value asc, index asc) = largest values, later duplicates first
    high.sort(key=lambda i: (vals[i], i))
    for i in high[len(high) - min(f, len(high)):]:
        keep.discard(i)
    if mode == "strict":
        low = [i for i in keep if vals[i] < own]
    else:
        low = list(keep)
    # head of (value asc, index desc) = smallest values, later duplicates first
    low.sort(key=lambda i: (vals[i], -i))
    for i in low[: min(f, len(low))]:
        keep.discard(i)
    return [vals[i] for i in sorted(keep)]


def wmsr_round(g: Graph, values, config: ConsensusConfig, round_index: int = 1, rng=None):
    """One synchronous update: normal nodes average their own value with the
    filtered neighbor values (equal weights); adversaries broadcast per strategy."""
    if len(values) != g.n:
        raise ValueError("one value per node required")
    if not validate_f_local(g, config.adversary_set, config.f_parameter):
        raise ValueError("adversary placement violates F-local")
    out = [0.0] * g.n
    for v in range(g.n):
        if v in config.adversary_set:
            out[v] = config.adversary_strategy[v].broadcast(round_index, rng)
            continue
        nbr_vals = [values[u] for u in iter_bits(g.adj[v])]
        kept = wmsr_filter(values[v], nbr_vals, config.f_parameter, config.filter_mode)
        out[v] = (values[v] + sum(kept)) / (1 + len(kept))
    return out


def _normal_spread(values, normal) -> float:
    vals = [values[v] for v in normal]
    return max(vals) - min(vals)


def run_consensus(g: Graph, initial_values, config: ConsensusConfig) -> ConsensusTrace:
    """Iterate wmsr_round until the normal-node spread drops under epsilon or
    max_rounds is hit. Also enforces the validity invariant: normal values
    never leave the initial normal [min, max] envelope."""
    if len(initial_values) != g.n:
        raise ValueError("one initial value per node required")
    normal = [v for v in range(g.n) if v not in config.adversary_set]
    if not normal:
        raise ValueError("at least one normal node required")
    rng = rng_for(config.rng_seed) if config.rng_seed is not None else None
    lo = min(initial_values[v] for v in normal)
    hi = max(initial_values[v] for v in normal)
    slack = _VALIDITY_SLACK * max(1.0, abs(lo), abs(hi))
    rounds = [tuple(float(x) for x in initial_values)]
    values = list(initial_values)
    converged = _normal_spread(values, normal) < config.convergence_epsilon
    k = 0
    while not converged and k < config.max_rounds:
        k += 1
        values = wmsr_round(g, values, config, round_index=k, rng=rng)
        rounds.append(tuple(values))
        for v in normal:
            if not lo - slack <= values[v] <= hi + slack:
                raise RuntimeError(
                    f"validity violated: node {v} left [{lo}, {hi}] at round {k}"
                )
        converged = _normal_spread(values, normal) < config.convergence_epsilon
    return ConsensusTrace(
        rounds=tuple(rounds),
        converged=converged,
        final_spread=_normal_spread(values, normal),
    )


@dataclass(frozen=True)
class CascadeState:
    infected: frozenset
    threshold: int
    round: int = 0

    def __post_init__(self):
        if self.threshold < 1:
            raise ValueError("threshold must be positive")


def cascade_step(g: Graph, state: CascadeState) -> CascadeState:
    """Simultaneously infect every node with >= threshold infected neighbors."""
    imask = mask_of(state.infected)
    if imask & ~g.full_mask():
        raise ValueError("infected set contains nodes outside the graph")
    newly = [
        v
        for v in range(g.n)
        if not imask >> v & 1 and (g.adj[v] & imask).bit_count() >= state.threshold
    ]
    return CascadeState(
        infected=state.infected | frozenset(newly),
        threshold=state.threshold,
        round=state.round + 1,
    )


def run_cascade(g: Graph, initial: frozenset, r: int):
    """Iterate cascade_step to its fixpoint; returns (final set, productive rounds)."""
    if not initial:
        raise ValueError("empty initial set")
    state = CascadeState(infected=frozenset(initial), threshold=r)
    rounds = 0
    while True:
        nxt = cascade_step(g, state)
        if nxt.infected == state.infected:
            return state.infected, rounds
        rounds += 1
        state = nxt


def cascade_trace(g: Graph, initial: frozenset, r: int):
    """(round, infected_count, newly_infected) rows up to the fixpoint; the
    seed set counts as round 0."""
    if not initial:
        raise ValueError("empty initial set")
    state = CascadeState(infected=frozenset(initial), threshold=r)
    rows = [(0, len(state.infected), len(state.infected))]
    while True:
        nxt = cascade_step(g, state)
        newly = len(nxt.infected) - len(state.infected)
        if newly == 0:
            return rows
        rows.append((nxt.round, len(nxt.infected), newly))
        state = nxt


def contagion_from_any_m(g: Graph, m: int, r: int, method: str = "exact") -> bool:
    """Whether threshold-r contagion from every size-m seed set infects all nodes.

    exact: equivalent subset-reachability check (every set with size <= n-m
    must be r-reachable). simulate: literally run every seed set (guarded).
    """
    if r < 1:
        raise ValueError("r must be positive")
    if m < r:
        raise ValueError("m must be at least r")
    if m >= g.n:
        raise ValueError("m must be smaller than the node count")
    if method == "exact":
        return check_subsets_reachable(g, r, g.n - m)
    if method == "simulate":
        if g.n > SIMULATE_NODE_LIMIT:
            raise ResourceGuardError(
                f"simulate method enumerates C(n, m) seed sets; n={g.n} exceeds "
                f"the guard {SIMULATE_NODE_LIMIT}"
            )
        everyone = frozenset(range(g.n))
        for seed in itertools.combinations(range(g.n), m):
            final, _ = run_cascade(g, frozenset(seed), r)
            if final != everyone:
                return False
        return True
    raise ValueError("method must be 'exact' or 'simulate'")

"""r-reachability, r-robustness, and exact degree-cut search.

A rho-degree cut is a pair of disjoint nonempty node sets (A, B) such that
every node of A has at most rho neighbors outside A and likewise for B;
remaining nodes form an unconstrained set X. A graph is r-robust exactly
when no (r-1)-degree cut exists, so the cut search below is the decision
engine for robustness. The problem is coNP-complete, hence the advisory
node limit on all search entry points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceGuardError
from .graph import Graph, component_masks, iter_bits, mask_of, min_degree, set_of

# Advisory guard for the exponential cut search; callers may raise or lift it.
DEFAULT_NODE_LIMIT = 25

# Hard guard for the literal pair-enumeration oracle (3^n pairs).
ORACLE_NODE_LIMIT = 12

# Guard for subset enumeration (2^n subsets).
SUBSET_ENUM_LIMIT = 26

_A, _B, _X = 0, 1, 2


@dataclass(frozen=True)
class TriPartition:
    """Witness for a degree cut: set_a, set_b nonempty and disjoint, set_x the rest."""

    set_a: frozenset
    set_b: frozenset
    set_x: frozenset

    def __post_init__(self):
        if not self.set_a or not self.set_b:
            raise ValueError("set_a and set_b must be nonempty")
        if self.set_a & self.set_b or self.set_a & self.set_x or self.set_b & self.set_x:
            raise ValueError("partition sets must be pairwise disjoint")


def _validate_set(g: Graph, s: frozenset) -> int:
    if not s:
        raise ValueError("empty set")
    m = mask_of(s)
    if m & ~g.full_mask():
        raise ValueError("set contains nodes outside the graph")
    return m


def reach_index(g: Graph, s: frozenset) -> int:
    """Max over i in s of the number of i's neighbors outside s."""
    m = _validate_set(g, s)
    return max((g.adj[v] & ~m).bit_count() for v in iter_bits(m))


def is_r_reachable(g: Graph, s: frozenset, r: int) -> bool:
    """True iff some node of s has at least r neighbors outside s."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    m = _validate_set(g, s)
    if r == 0:
        return True
    return any((g.adj[v] & ~m).bit_count() >= r for v in iter_bits(m))


def _place(adj: list, rho: int, a: int, b: int, x: int, bit: int, side: int):
    """Assign one node, then run forced-assignment propagation.

    A node of A (or B) with exactly rho assigned outside neighbors pins all
    its unassigned neighbors to its own side; more than rho is a conflict.
    Returns settled (a, b, x) masks, or None on conflict.
    """
    todo = [(bit, side)]
    while todo:
        bit, side = todo.pop()
        if side == _A:
            if bit & (b | x):
                return None
            if bit & a:
                continue
            a |= bit
        elif side == _B:
            if bit & (a | x):
                return None
            if bit & b:
                continue
            b |= bit
        else:
            x |= bit
        v = bit.bit_length() - 1
        assigned = a | b | x
        check = adj[v] & (a | b)
        if side != _X:
            check |= bit
        while check:
            ub = check & -check
            check ^= ub
            u = ub.bit_length() - 1
            in_a = bool(ub & a)
            own = a if in_a else b
            cnt = (adj[u] & assigned & ~own).bit_count()
            if cnt > rho:
                return None
            if cnt == rho:
                free = adj[u] & ~assigned
                uside = _A if in_a else _B
                while free:
                    wb = free & -free
                    free ^= wb
                    todo.append((wb, uside))
    return a, b, x


def _search_cut(g: Graph, rho: int, allow_x: bool):
    """Exhaustive branch-and-bound over {A, B, X} labelings.

    Static descending-degree order; the first non-X node is forced into A to
    break the A/B swap symmetry. Returns (a_mask, b_mask, x_mask) or None.
    """
    n = g.n
    adj = g.adj
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())

    def rec(a: int, b: int, x: int, idx: int):
        assigned = a | b | x
        while idx < n and (1 << order[idx]) & assigned:
            idx += 1
        if idx == n:
            return (a, b, x) if (a and b) else None
        bit = 1 << order[idx]
        if a == 0:
            sides = (_A, _X) if allow_x else (_A,)
        else:
            sides = (_A, _B, _X) if allow_x else (_A, _B)
        for side in sides:
            placed = _place(adj, rho, a, b, x, bit, side)
            if placed is not None:
                found = rec(placed[0], placed[1], placed[2], idx + 1)
                if found is not None:
                    return found
        return None

    return rec(0, 0, 0, 0)


def _side_ok(g: Graph, side_mask: int, rho: int) -> bool:
    return all((g.adj[v] & ~side_mask).bit_count() <= rho for v in iter_bits(side_mask))


def _check_witness(g: Graph, a: int, b: int, rho: int) -> None:
    # Independent recount of every witness the search hands back.
    if not (a and b) or (a & b):
        raise AssertionError("malformed cut witness")
    if not (_side_ok(g, a, rho) and _side_ok(g, b, rho)):
        raise AssertionError("cut witness fails outside-neighbor recount")


def _guard(g: Graph, node_limit) -> None:
    if g.n < 2:
        raise ValueError("cut search needs at least 2 nodes")
    if node_limit is not None and g.n > node_limit:
        raise ResourceGuardError(
            f"cut search on {g.n} nodes exceeds the node limit {node_limit}; "
            "pass a higher node_limit to override (search is exponential)"
        )


def _trivial_cut(g: Graph, rho: int):
    """Cheap witnesses: component splits (rho >= 0) and min-degree singletons."""
    comps = component_masks(g)
    if len(comps) > 1:
        a = comps[0]
        b = g.full_mask() & ~a
        return a, b, 0
    if rho >= 1:
        v = min(range(g.n), key=g.degree)
        if g.degree(v) <= rho:
            a = 1 << v
            b = g.full_mask() & ~a
            return a, b, 0
    return None


def find_degree_cut(g: Graph, rho: int, node_limit=DEFAULT_NODE_LIMIT):
    """A rho-degree cut (A, B, X) of g, or None if none exists. Exact."""
    _guard(g, node_limit)
    if rho < 0:
        raise ValueError("rho must be nonnegative")
    found = _trivial_cut(g, rho)
    if found is None and rho > 0:
        found = _search_cut(g, rho, allow_x=True)
    if found is None:
        return None
    a, b, x = found
    _check_witness(g, a, b, rho)
    return TriPartition(set_of(a), set_of(b), set_of(x))


def find_relaxed_degree_cut(g: Graph, rho: int, node_limit=DEFAULT_NODE_LIMIT):
    """As find_degree_cut but X forced empty (a full bipartition)."""
    _guard(g, node_limit)
    if rho < 0:
        raise ValueError("rho must be nonnegative")
    found = _trivial_cut(g, rho)
    if found is None and rho > 0:
        found = _search_cut(g, rho, allow_x=False)
    if found is None:
        return None
    a, b, x = found
    if x:
        raise AssertionError("relaxed search produced nonempty X")
    _check_witness(g, a, b, rho)
    return TriPartition(set_of(a), set_of(b), frozenset())


def is_r_robust(g: Graph, r: int, node_limit=DEFAULT_NODE_LIMIT) -> bool:
    """True iff no (r-1)-degree cut exists; r = 0 is trivially true."""
    if g.n < 2:
        raise ValueError("robustness needs at least 2 nodes")
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return True
    if len(component_masks(g)) > 1:
        return False
    if r == 1:
        return True  # connected, and 1-robust iff connected
    if min_degree(g) < r:
        return False  # min-degree singleton plus the rest is an (r-1)-cut
    _guard(g, node_limit)
    return _search_cut(g, r - 1, allow_x=True) is None


def robustness(g: Graph, node_limit=DEFAULT_NODE_LIMIT) -> int:
    """Largest r with is_r_robust(g, r): the smallest rho admitting a cut.

    Ascending search from rho = 0; bounded above by min_degree, where a
    singleton cut always exists.
    """
    if g.n < 2:
        raise ValueError("robustness needs at least 2 nodes")
    if len(component_masks(g)) > 1:
        return 0
    _guard(g, node_limit)
    bound = max(min_degree(g), 1)
    for rho in range(1, bound):
        if _search_cut(g, rho, allow_x=True) is not None:
            return rho
    return bound


def check_subsets_reachable(g: Graph, r: int, cap: int) -> bool:
    """True iff every nonempty node set of size <= cap is r-reachable.

    Exact enumeration with early exit. Note the one-directional bridge to
    robustness: if this holds with cap = floor(n/2) the graph is r-robust
    (the smaller set of any disjoint pair fits under the cap); the converse
    fails in general.
    """
    n = g.n
    if not 1 <= cap <= n - 1:
        raise ValueError("cap must be between 1 and n-1")
    if r < 0:
        raise ValueError("r must be nonnegative")
    if n > SUBSET_ENUM_LIMIT:
        raise ResourceGuardError(
            f"subset enumeration on {n} nodes exceeds the guard {SUBSET_ENUM_LIMIT}"
        )
    if r == 0:
        return True
    adj = g.adj
    for m in range(1, 1 << n):
        if m.bit_count() > cap:
            continue
        mm = m
        ok = False
        while mm:
            vb = mm & -mm
            mm ^= vb
            if (adj[vb.bit_length() - 1] & ~m).bit_count() >= r:
                ok = True
                break
        if not ok:
            return False
    return True


def _naive_robustness(g: Graph) -> int:
    cached = g._cache.get("naive_robustness")
    if cached is not None:
        return cached
    n = g.n
    adj = g.adj
    full = g.full_mask()
    reach = [0] * (full + 1)
    for m in range(1, full + 1):
        best = 0
        mm = m
        while mm:
            vb = mm & -mm
            mm ^= vb
            c = (adj[vb.bit_length() - 1] & ~m).bit_count()
            if c > best:
                best = c
        reach[m] = best
    rob = n
    for s1 in range(1, full + 1):
        comp = full & ~s1
        r1 = reach[s1]
        if r1 >= rob:
            # every pair containing s1 already meets the current minimum
            continue
        s2 = comp
        while s2:
            pair = reach[s2]
            if pair < r1:
                pair = r1
            if pair < rob:
                rob = pair
                if rob == 0:
                    g._cache["naive_robustness"] = 0
                    return 0
            s2 = (s2 - 1) & comp
    g._cache["naive_robustness"] = rob
    return rob


def naive_is_r_robust(g: Graph, r: int) -> bool:
    """Literal Definition-2 oracle: every disjoint nonempty pair has an
    r-reachable member. Enumerates all pairs; guarded to small n."""
    if g.n < 2:
        raise ValueError("robustness needs at least 2 nodes")
    if g.n > ORACLE_NODE_LIMIT:
        raise ResourceGuardError("oracle size exceeded")
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return True
    return r <= _naive_robustness(g)

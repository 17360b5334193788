"""File formats: graphs (edge list / JSON), positions, NAE3SAT formulas,
gadget role sidecars, simulation traces, and the JSON config files the CLI
consumes."""

from __future__ import annotations

import csv
import json
from contextlib import contextmanager

from .dynamics import ConsensusConfig, Constant, Ramp, UniformRandom
from .generators import GeometricPlacement, RngSeed
from .graph import Graph
from .hardness import CnfFormula, GadgetGraph, Role
from .experiments import SweepSpec


@contextmanager
def opened(path, mode: str = "w", **kw):
    """open() that passes already-open file objects straight through."""
    if hasattr(path, "write") or hasattr(path, "read"):
        yield path
    else:
        with open(path, mode, **kw) as fh:
            yield fh


def write_graph(g: Graph, path, format: str = "edgelist") -> None:
    """edgelist: first line `n <edge count>`, then one `u v` line per edge,
    0-indexed with u < v. json: {"n": ..., "edges": [[u, v], ...]}."""
    edges = list(g.edges())
    if format == "edgelist":
        with opened(path) as fh:
            fh.write(f"{g.n} {len(edges)}\n")
            for u, v in edges:
                fh.write(f"{u} {v}\n")
    elif format == "json":
        with opened(path) as fh:
            json.dump({"n": g.n, "edges": [list(e) for e in edges]}, fh)
            fh.write("\n")
    else:
        raise ValueError("format must be 'edgelist' or 'json'")


def _graph_from_pairs(path, n, pairs) -> Graph:
    for u, v in pairs:
        if not u < v:
            raise ValueError(f"{path}: edge ({u}, {v}) not in canonical u < v order")
    try:
        return Graph(n, pairs)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def read_graph(path) -> Graph:
    """Reads either graph format (sniffed from the first character)."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        payload = json.loads(text)
        if set(payload) != {"n", "edges"}:
            raise ValueError(f"{path}: graph object needs exactly 'n' and 'edges'")
        return _graph_from_pairs(
            path, payload["n"], [tuple(e) for e in payload["edges"]]
        )
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"{path}: header must be 'n <edge count>'")
    n, count = int(head[0]), int(head[1])
    if count != len(lines) - 1:
        raise ValueError(
            f"{path}: header promises {count} edges, file has {len(lines) - 1}"
        )
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"{path}: malformed edge line {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return _graph_from_pairs(path, n, pairs)


def write_positions(pl: GeometricPlacement, path) -> None:
    """One line per node, coordinates space-separated at full precision."""
    with opened(path) as fh:
        for pt in pl.positions:
            fh.write(" ".join(repr(c) for c in pt) + "\n")


def read_positions(path) -> tuple:
    with open(path) as fh:
        return tuple(
            tuple(float(c) for c in ln.split())
            for ln in fh
            if ln.strip()
        )


def write_formula(phi: CnfFormula, path) -> None:
    """DIMACS-like: header `p nae3sat t m`, then one signed-literal line per
    clause (negative integer = negated variable)."""
    with opened(path) as fh:
        fh.write(f"p nae3sat {phi.num_variables} {phi.num_clauses}\n")
        for clause in phi.clauses:
            fh.write(" ".join(str(v if pol else -v) for v, pol in clause) + "\n")


def read_formula(path) -> CnfFormula:
    header = None
    clauses = []
    with open(path) as fh:
        for ln in fh:
            ln = ln.strip()
            if not ln or ln.startswith("c"):
                continue
            if ln.startswith("p"):
                if header is not None:
                    raise ValueError(f"{path}: duplicate header")
                parts = ln.split()
                if len(parts) != 4 or parts[1] != "nae3sat":
                    raise ValueError(f"{path}: header must be 'p nae3sat t m'")
                header = (int(parts[2]), int(parts[3]))
                continue
            lits = []
            for tok in ln.split():
                a = int(tok)
                if a == 0:
                    raise ValueError(f"{path}: literal 0 is not allowed")
                lits.append((abs(a), a > 0))
            clauses.append(tuple(lits))
    if header is None:
        raise ValueError(f"{path}: missing 'p nae3sat t m' header")
    t, m = header
    if len(clauses) != m:
        raise ValueError(f"{path}: header promises {m} clauses, file has {len(clauses)}")
    return CnfFormula(t, tuple(clauses))


def write_roles(gg: GadgetGraph, path) -> None:
    with opened(path, newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(("node", "role", "param1", "param2"))
        for node, role in enumerate(gg.roles):
            writer.writerow(
                (
                    node,
                    role.kind,
                    "" if role.param1 is None else role.param1,
                    "" if role.param2 is None else role.param2,
                )
            )


def read_roles(path) -> tuple:
    def parse(text):
        if text == "":
            return None
        try:
            return int(text)
        except ValueError:
            return text

    roles = []
    with open(path, newline="") as fh:
        for i, row in enumerate(csv.DictReader(fh)):
            if int(row["node"]) != i:
                raise ValueError(f"{path}: node column must count up from 0")
            roles.append(Role(row["role"], parse(row["param1"]), parse(row["param2"])))
    return tuple(roles)


def write_consensus_trace(trace, adversary_set, path) -> None:
    """CSV `round,node,value,is_adversary`, one row per node per round."""
    with opened(path, newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(("round", "node", "value", "is_adversary"))
        for rnd, values in enumerate(trace.rounds):
            for node, value in enumerate(values):
                writer.writerow(
                    (rnd, node, repr(value), 1 if node in adversary_set else 0)
                )


def write_cascade_trace(rows, path) -> None:
    """CSV `round,infected_count,newly_infected` from dynamics.cascade_trace."""
    with opened(path, newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(("round", "infected_count", "newly_infected"))
        for row in rows:
            writer.writerow(row)


def read_node_set(path) -> frozenset:
    """Whitespace-separated node indices (the cascade seed-set file)."""
    with open(path) as fh:
        tokens = fh.read().split()
    if not tokens:
        raise ValueError(f"{path}: empty node set")
    return frozenset(int(t) for t in tokens)


_STRATEGIES = {
    "constant": (Constant, 1),
    "uniform_random": (UniformRandom, 2),
    "ramp": (Ramp, 2),
}


def read_consensus_config(path):
    """JSON config for the consensus runner; returns (config, initial values).

    Keys: f_parameter, initial_values, and optionally filter_mode, max_rounds,
    convergence_epsilon, seed, stream, and adversaries as a list of
    {"node": .., "strategy": constant|uniform_random|ramp, "params": [..]}.
    """
    with open(path) as fh:
        payload = json.load(fh)
    try:
        initial = [float(v) for v in payload["initial_values"]]
        adversaries = {}
        for entry in payload.get("adversaries", []):
            cls, arity = _STRATEGIES[entry["strategy"]]
            params = entry.get("params", [])
            if len(params) != arity:
                raise ValueError(
                    f"strategy {entry['strategy']} takes {arity} parameter(s)"
                )
            adversaries[int(entry["node"])] = cls(*[float(p) for p in params])
        seed = payload.get("seed")
        if seed is not None:
            seed = RngSeed(int(seed), int(payload.get("stream", 0)))
        config = ConsensusConfig(
            f_parameter=int(payload["f_parameter"]),
            filter_mode=payload.get("filter_mode", "strict"),
            max_rounds=int(payload.get("max_rounds", 1000)),
            convergence_epsilon=float(payload.get("convergence_epsilon", 1e-6)),
            adversary_set=frozenset(adversaries),
            adversary_strategy=adversaries,
            rng_seed=seed,
        )
    except KeyError as exc:
        raise ValueError(f"{path}: missing config key {exc}") from exc
    return config, initial


def read_sweep_spec(path) -> SweepSpec:
    """JSON sweep spec. Keys: family, n (or l), r, trials, seed, and
    optionally stream, offsets, properties, exact_limit."""
    with open(path) as fh:
        payload = json.load(fh)
    try:
        family = payload["family"]
        if "n" in payload and "l" in payload:
            raise ValueError(f"{path}: give n or l, not both")
        n_or_l = payload["n"] if "n" in payload else payload["l"]
        seed = RngSeed(int(payload["seed"]), int(payload.get("stream", 0)))
        kwargs = {}
        if "offsets" in payload:
            offsets = payload["offsets"]
            kwargs["offsets"] = tuple(
                tuple(x) if isinstance(x, list) else float(x) for x in offsets
            )
        if "properties" in payload:
            kwargs["properties"] = tuple(payload["properties"])
        if "exact_limit" in payload:
            kwargs["exact_limit"] = int(payload["exact_limit"])
        return SweepSpec(
            family=family,
            n_or_l=n_or_l,
            r=int(payload["r"]),
            trials=int(payload["trials"]),
            base_seed=seed,
            **kwargs,
        )
    except KeyError as exc:
        raise ValueError(f"{path}: missing spec key {exc}") from exc

"""Monte-Carlo sweeps over the graph families, threshold arithmetic, and
result persistence (CSV / JSON records with binomial confidence intervals)."""

from __future__ import annotations

import csv
import json
import math
from contextlib import nullcontext
from dataclasses import asdict, dataclass

from .connectivity import connectivity_at_least, vertex_connectivity
from .generators import (
    RngSeed,
    gen_geometric,
    gen_preferential,
    graph_from_pair_mask,
    pair_uniforms,
    rng_for,
)
from .graph import min_degree
from .robustness import check_subsets_reachable, is_r_robust, robustness

# Exact robustness is a branch-and-bound search; sweeps refuse larger n.
ER_EXACT_LIMIT = 22

_FAMILIES = ("erdos_renyi", "geometric1d", "preferential")
_COLUMNS = (
    "family",
    "n_or_l",
    "r",
    "param",
    "property",
    "estimate",
    "ci_halfwidth",
    "trials",
    "seed_lo",
    "seed_hi",
    "flags",
)


def threshold_p(n: int, r: int) -> float:
    """(ln n + (r-1) ln ln n) / n, the sharp-threshold scale for minimum
    degree r, r-connectivity, and r-robustness alike."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if r < 1:
        raise ValueError("r must be positive")
    return (math.log(n) + (r - 1) * math.log(math.log(n))) / n


def binomial_ci_halfwidth(estimate: float, trials: int) -> float:
    """Normal-approximation 95% halfwidth for a Bernoulli proportion."""
    return 1.96 * math.sqrt(estimate * (1.0 - estimate) / trials)


def half_crossing(points):
    """Interpolated x where a nondecreasing estimate curve crosses 0.5.

    points: (x, estimate, trials) tuples sorted by x. Returns (x_star, se)
    with a delta-method standard error from the two bracketing estimates.
    """
    for (x1, e1, t1), (x2, e2, t2) in zip(points, points[1:]):
        if e1 < 0.5 <= e2:
            d = e2 - e1
            x_star = x1 + (x2 - x1) * (0.5 - e1) / d
            se1 = math.sqrt(e1 * (1 - e1) / t1)
            se2 = math.sqrt(e2 * (1 - e2) / t2)
            d1 = (x2 - x1) * (0.5 - e2) / (d * d)
            d2 = -(x2 - x1) * (0.5 - e1) / (d * d)
            return x_star, math.hypot(d1 * se1, d2 * se2)
    raise ValueError("no 0.5 crossing in the given points")


def _parse_property(name: str):
    if name in ("min_degree_r", "r_connected", "r_robust"):
        return name, None
    if name.startswith("s_property:"):
        cap = int(name.split(":", 1)[1])
        if cap < 1:
            raise ValueError("s_property cap must be positive")
        return "s_property", cap
    raise ValueError(f"unknown property {name!r}")


@dataclass(frozen=True)
class SweepSpec:
    family: str
    n_or_l: float
    r: int
    trials: int
    base_seed: RngSeed
    offsets: tuple = (-4.0, -2.0, 0.0, 2.0, 4.0)
    properties: tuple = ("min_degree_r", "r_connected", "r_robust")
    exact_limit: int = ER_EXACT_LIMIT

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"family must be one of {_FAMILIES}")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.r < 1:
            raise ValueError("r must be positive")
        if not self.n_or_l > 0:
            raise ValueError("n (or l) must be positive")
        seed = self.base_seed
        if isinstance(seed, int):
            object.__setattr__(self, "base_seed", RngSeed(seed))
        elif not isinstance(seed, RngSeed):
            raise ValueError("base_seed must be an RngSeed or an integer")
        object.__setattr__(self, "offsets", tuple(self.offsets))
        object.__setattr__(self, "properties", tuple(self.properties))
        for prop in self.properties:
            _parse_property(prop)


@dataclass(frozen=True)
class SweepRecord:
    family: str
    n_or_l: object
    r: int
    param: object
    property: str
    estimate: float
    ci_halfwidth: float
    trials: int
    seed_lo: int
    seed_hi: int
    flags: str = ""

    def __post_init__(self):
        if not 0.0 <= self.estimate <= 1.0:
            raise ValueError("estimate must lie in [0, 1]")
        if self.ci_halfwidth < 0:
            raise ValueError("ci_halfwidth must be nonnegative")
        if self.trials < 1:
            raise ValueError("trials must be positive")


def _evaluate(prop: str, g, r: int) -> bool:
    kind, cap = _parse_property(prop)
    if kind == "min_degree_r":
        return min_degree(g) >= r
    if kind == "r_connected":
        return connectivity_at_least(g, r)
    if kind == "r_robust":
        return is_r_robust(g, r)
    return check_subsets_reachable(g, r, cap)


def _seed_range(spec: SweepSpec):
    return spec.base_seed.stream, spec.base_seed.stream + spec.trials - 1


def run_er_sweep(spec: SweepSpec):
    """Sample G(n, p) at p = threshold + x/n for each offset x, with the
    per-pair uniforms shared across offsets (coupled, so every property is
    monotone in p sample-by-sample). One record per (offset, property)."""
    if spec.family != "erdos_renyi":
        raise ValueError("spec family must be erdos_renyi")
    n = int(spec.n_or_l)
    if "r_robust" in spec.properties and n > spec.exact_limit:
        raise ValueError(f"exact robustness checks are limited to n <= {spec.exact_limit}")
    t = threshold_p(n, spec.r)
    points = []
    for x in spec.offsets:
        raw = t + float(x) / n
        p = min(1.0, max(0.0, raw))
        points.append((float(x), p, p != raw))
    counts = {(i, prop): 0 for i in range(len(points)) for prop in spec.properties}
    for k in range(spec.trials):
        u = pair_uniforms(n, rng_for(spec.base_seed.child(k)))
        for i, (_, p, _) in enumerate(points):
            g = graph_from_pair_mask(n, u < p)
            for prop in spec.properties:
                if _evaluate(prop, g, spec.r):
                    counts[i, prop] += 1
    lo, hi = _seed_range(spec)
    records = []
    for i, (x, p, clamped) in enumerate(points):
        flags = f"x={x!r}" + (";clamped" if clamped else "")
        for prop in spec.properties:
            e = counts[i, prop] / spec.trials
            records.append(
                SweepRecord(
                    family=spec.family,
                    n_or_l=n,
                    r=spec.r,
                    param=p,
                    property=prop,
                    estimate=e,
                    ci_halfwidth=binomial_ci_halfwidth(e, spec.trials),
                    trials=spec.trials,
                    seed_lo=lo,
                    seed_hi=hi,
                    flags=flags,
                )
            )
    return records


def run_geometric_sweep(spec: SweepSpec):
    """1-D geometric samples at each (k, radius) point with n = round(k l ln l
    / radius). Beyond the requested properties, always records the
    connectivity = robustness rate and the spread > 3 * radius rate."""
    if spec.family != "geometric1d":
        raise ValueError("spec family must be geometric1d")
    side = float(spec.n_or_l)
    if side <= 1.0:
        raise ValueError("side length must exceed 1")
    lo, hi = _seed_range(spec)
    records = []
    for k, radius in spec.offsets:
        k = float(k)
        radius = float(radius)
        if k <= 0 or radius <= 0:
            raise ValueError("k and radius must be positive")
        n = round(k * side * math.log(side) / radius)
        if n < 2:
            raise ValueError(f"point (k={k}, radius={radius}) yields n={n} < 2")
        if n > spec.exact_limit:
            raise ValueError(f"exact robustness checks are limited to n <= {spec.exact_limit}")
        extra = ("connectivity_equals_robustness", "spread_exceeds_3rho")
        counts = {prop: 0 for prop in spec.properties + extra}
        for trial in range(spec.trials):
            g, pl = gen_geometric(n, radius, side, 1, spec.base_seed.child(trial))
            if vertex_connectivity(g) == robustness(g):
                counts["connectivity_equals_robustness"] += 1
            if pl.spread() > 3 * radius:
                counts["spread_exceeds_3rho"] += 1
            for prop in spec.properties:
                if _evaluate(prop, g, spec.r):
                    counts[prop] += 1
        param = f"k={k!r};rho={radius!r}"
        for prop in spec.properties + extra:
            e = counts[prop] / spec.trials
            records.append(
                SweepRecord(
                    family=spec.family,
                    n_or_l=side,
                    r=spec.r,
                    param=param,
                    property=prop,
                    estimate=e,
                    ci_halfwidth=binomial_ci_halfwidth(e, spec.trials),
                    trials=spec.trials,
                    seed_lo=lo,
                    seed_hi=hi,
                    flags=f"n={n}",
                )
            )
    return records


def run_ba_trials(spec: SweepSpec):
    """Preferential-attachment trials at fixed (n, r); expected r_robust rate 1."""
    if spec.family != "preferential":
        raise ValueError("spec family must be preferential")
    n = int(spec.n_or_l)
    if "r_robust" in spec.properties and n > spec.exact_limit:
        raise ValueError(f"exact robustness checks are limited to n <= {spec.exact_limit}")
    counts = {prop: 0 for prop in spec.properties}
    for k in range(spec.trials):
        g = gen_preferential(n, spec.r, spec.base_seed.child(k))
        for prop in spec.properties:
            if _evaluate(prop, g, spec.r):
                counts[prop] += 1
    lo, hi = _seed_range(spec)
    records = []
    for prop in spec.properties:
        e = counts[prop] / spec.trials
        records.append(
            SweepRecord(
                family=spec.family,
                n_or_l=n,
                r=spec.r,
                param="",
                property=prop,
                estimate=e,
                ci_halfwidth=binomial_ci_halfwidth(e, spec.trials),
                trials=spec.trials,
                seed_lo=lo,
                seed_hi=hi,
            )
        )
    return records


def _cell(value) -> str:
    if isinstance(value, bool):
        raise TypeError("boolean record cell")
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _uncell(column: str, text: str):
    if column in ("r", "trials", "seed_lo", "seed_hi"):
        return int(text)
    if column in ("estimate", "ci_halfwidth"):
        return float(text)
    if column in ("n_or_l", "param"):
        try:
            return int(text)
        except ValueError:
            pass
        try:
            return float(text)
        except ValueError:
            return text
    return text


def write_records(records, path, format: str = "csv") -> None:
    """Persist sweep records; floats keep full repr precision so the file
    round-trips exactly."""
    def out(**kw):
        if hasattr(path, "write"):
            return nullcontext(path)
        return open(path, "w", **kw)

    try:
        if format == "csv":
            with out(newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(_COLUMNS)
                for rec in records:
                    d = asdict(rec)
                    writer.writerow([_cell(d[c]) for c in _COLUMNS])
        elif format == "structured":
            with out() as fh:
                json.dump({"records": [asdict(r) for r in records]}, fh, indent=1)
                fh.write("\n")
        else:
            raise ValueError("format must be 'csv' or 'structured'")
    except OSError as exc:
        raise OSError(f"cannot write records to {path}: {exc}") from exc


def read_records(path, format: str = "csv"):
    try:
        if format == "csv":
            with open(path, newline="") as fh:
                reader = csv.DictReader(fh)
                return [
                    SweepRecord(**{c: _uncell(c, row[c]) for c in _COLUMNS})
                    for row in reader
                ]
        if format == "structured":
            with open(path) as fh:
                payload = json.load(fh)
            return [SweepRecord(**d) for d in payload["records"]]
        raise ValueError("format must be 'csv' or 'structured'")
    except OSError as exc:
        raise OSError(f"cannot read records from {path}: {exc}") from exc


def gnuplot_script(csv_path: str, properties) -> str:
    """A minimal gnuplot script plotting estimate vs. param per property."""
    props = " ".join(properties)
    return "\n".join(
        [
            'set datafile separator ","',
            "set key left top",
            'set xlabel "param"',
            'set ylabel "estimate"',
            "set yrange [-0.05:1.05]",
            f'props = "{props}"',
            "plot for [p in props] "
            f'"{csv_path}" using '
            "(stringcolumn(5) eq p ? column(4) : NaN):6:7 "
            "with yerrorlines title p",
            "pause -1",
        ]
    )

"""Exact graph-robustness analysis, resilient dynamics, generators, and hardness gadgets."""

from .connectivity import connectivity_at_least, vertex_connectivity
from .dynamics import (
    CascadeState,
    ConsensusConfig,
    ConsensusTrace,
    Constant,
    Ramp,
    UniformRandom,
    cascade_step,
    cascade_trace,
    contagion_from_any_m,
    run_cascade,
    run_consensus,
    validate_f_local,
    wmsr_filter,
    wmsr_round,
)
from .errors import ResourceGuardError
from .experiments import (
    SweepRecord,
    SweepSpec,
    half_crossing,
    read_records,
    run_ba_trials,
    run_er_sweep,
    run_geometric_sweep,
    threshold_p,
    write_records,
)
from .generators import (
    GeometricPlacement,
    RngSeed,
    gen_erdos_renyi,
    gen_geometric,
    gen_preferential,
    graph_from_placement,
    rng_for,
)
from .graph import (
    Graph,
    complete,
    counterexample,
    cycle,
    is_connected,
    min_degree,
    path,
    with_added_node,
)
from .hardness import (
    Assignment,
    CnfFormula,
    GadgetGraph,
    Role,
    assignment_from_cut,
    build_g_phi,
    build_g_rho_phi,
    build_h_phi,
    build_h_rho_phi,
    cut_from_assignment,
    enumerate_nae3sat,
    nae3sat_satisfiable,
    nae_check,
    verify_cut,
)
from .robustness import (
    TriPartition,
    check_subsets_reachable,
    find_degree_cut,
    find_relaxed_degree_cut,
    is_r_reachable,
    is_r_robust,
    naive_is_r_robust,
    reach_index,
    robustness,
)

__all__ = [
    "Assignment",
    "CascadeState",
    "CnfFormula",
    "ConsensusConfig",
    "ConsensusTrace",
    "Constant",
    "GadgetGraph",
    "GeometricPlacement",
    "Graph",
    "Ramp",
    "ResourceGuardError",
    "RngSeed",
    "Role",
    "SweepRecord",
    "SweepSpec",
    "TriPartition",
    "UniformRandom",
    "assignment_from_cut",
    "build_g_phi",
    "build_g_rho_phi",
    "build_h_phi",
    "build_h_rho_phi",
    "cascade_step",
    "cascade_trace",
    "check_subsets_reachable",
    "complete",
    "connectivity_at_least",
    "contagion_from_any_m",
    "counterexample",
    "cut_from_assignment",
    "cycle",
    "enumerate_nae3sat",
    "find_degree_cut",
    "find_relaxed_degree_cut",
    "gen_erdos_renyi",
    "gen_geometric",
    "gen_preferential",
    "graph_from_placement",
    "half_crossing",
    "is_connected",
    "is_r_reachable",
    "is_r_robust",
    "min_degree",
    "nae3sat_satisfiable",
    "nae_check",
    "naive_is_r_robust",
    "path",
    "read_records",
    "reach_index",
    "rng_for",
    "robustness",
    "run_ba_trials",
    "run_cascade",
    "run_consensus",
    "run_er_sweep",
    "run_geometric_sweep",
    "threshold_p",
    "validate_f_local",
    "verify_cut",
    "vertex_connectivity",
    "with_added_node",
    "wmsr_filter",
    "wmsr_round",
    "write_records",
]
